#include "elax/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "elax/errors.hpp"
#include "elax/operators.hpp"

namespace elax {

namespace {

double max_speed(const FlowState& flow) {
  return std::max(flow.u_r.max_abs_interior(), flow.u_z.max_abs_interior());
}

}  // namespace

double stable_dt_bound(const MeridianGrid& grid, const RunParameters& params, double max_u) {
  double h = std::min(grid.h_r, grid.h_z);
  double bound = h * h / 8.0;
  if (params.mode == RunParameters::Mode::gl)
    bound = std::min(bound, params.epsilon * params.epsilon / 4.0);
  if (max_u > 0.0) bound = std::min(bound, 0.5 * h / max_u);
  return bound;
}

FlowState flow_from_streamfunction(const Field& psi0, const MeridianGrid& grid) {
  FlowState flow;
  flow.psi = psi0;
  // Mirror (Neumann) ghosts: at a no-slip wall psi and dpsi/dn both vanish,
  // so psi is locally quadratic and the mirror value is second-order accurate.
  // The linear Dirichlet extrapolation 2*0 - psi_1 has the wrong sign there
  // and degrades the recovered velocity to first order.
  GhostSpec spec;
  spec.parity = Parity::even;
  spec.outer = OuterBc::neumann;
  fill_ghosts(flow.psi, grid, spec);
  auto [ur, uz] = velocity_from_streamfunction(flow.psi, grid);
  flow.u_r = std::move(ur);
  flow.u_z = std::move(uz);
  flow.omega = vorticity_from_velocity(flow.u_r, flow.u_z, grid);
  return flow;
}

Stepper::Stepper(const MeridianGrid& grid, const RunParameters& params, DirectorBc bc)
    : grid_(grid),
      params_(params),
      bc_(std::move(bc)),
      dir_r_solver_(grid, 1.0, params.dt, 1.0, Parity::odd),
      dir_z_solver_(grid, 1.0, params.dt, 0.0, Parity::even),
      phi_solver_(grid, 1.0, params.dt, 0.0, Parity::odd),
      omega_solver_(grid, 1.0, params.dt, 1.0, Parity::odd),
      poisson_(grid) {
  if (params.dt <= 0.0) throw ConfigError("Stepper: dt must be positive");
  if (params.mode == RunParameters::Mode::gl && params.epsilon <= 0.0)
    throw ConfigError("Stepper: epsilon must be positive in GL mode");
}

GhostSpec Stepper::spec_d_r() const {
  GhostSpec s;
  s.parity = Parity::odd;
  s.axis_value = 0.0;
  s.outer = OuterBc::dirichlet;
  s.trace = &bc_.d_r;
  return s;
}

GhostSpec Stepper::spec_d_z() const {
  GhostSpec s;
  s.parity = Parity::even;
  s.outer = OuterBc::dirichlet;
  s.trace = &bc_.d_z;
  return s;
}

GhostSpec Stepper::spec_phi(const std::vector<double>& branch) const {
  GhostSpec s;
  s.parity = Parity::odd;
  s.axis_values = &branch;
  s.outer = OuterBc::dirichlet;
  s.trace = &bc_.phi;
  return s;
}

ForceField Stepper::ericksen_force(const DirectorState& director) const {
  const int nr = grid_.n_r, nz = grid_.n_z;
  ForceField f{Field(nr, nz), Field(nr, nz)};

  if (director.rep == DirectorState::Rep::sphere) {
    Field phi = director.phi;
    auto branch = axis_branch_values(phi);
    fill_ghosts(phi, grid_, spec_phi(branch));
    for (int i = 0; i < nr; ++i) {
      double r = grid_.r(i);
      for (int j = 0; j < nz; ++j) {
        double tension = lap_axisym(phi, i, j, grid_) - std::sin(2.0 * phi(i, j)) / (2.0 * r * r);
        f.f_r(i, j) = tension * diff_r(phi, i, j, grid_);
        f.f_z(i, j) = tension * diff_z(phi, i, j, grid_);
      }
    }
  } else {
    if (params_.epsilon <= 0.0) throw SolverError("ericksen_force: epsilon <= 0 in GL mode");
    Field dr = director.d_r, dz = director.d_z;
    fill_ghosts(dr, grid_, spec_d_r());
    fill_ghosts(dz, grid_, spec_d_z());
    double inv_eps2 = 1.0 / (params_.epsilon * params_.epsilon);
    for (int i = 0; i < nr; ++i) {
      double r = grid_.r(i);
      for (int j = 0; j < nz; ++j) {
        double pen = (1.0 - dr(i, j) * dr(i, j) - dz(i, j) * dz(i, j)) * inv_eps2;
        double Gr = lap_axisym(dr, i, j, grid_) - dr(i, j) / (r * r) + pen * dr(i, j);
        double Gz = lap_axisym(dz, i, j, grid_) + pen * dz(i, j);
        f.f_r(i, j) = diff_r(dr, i, j, grid_) * Gr + diff_r(dz, i, j, grid_) * Gz;
        f.f_z(i, j) = diff_z(dr, i, j, grid_) * Gr + diff_z(dz, i, j, grid_) * Gz;
      }
    }
  }

  GhostSpec sr;
  sr.parity = Parity::odd;
  sr.outer = OuterBc::neumann;
  fill_ghosts(f.f_r, grid_, sr);
  GhostSpec sz;
  sz.parity = Parity::even;
  sz.outer = OuterBc::neumann;
  fill_ghosts(f.f_z, grid_, sz);
  return f;
}

Field Stepper::director_rhs_gl(const SystemState& state, const Field& comp, bool radial) const {
  (void)radial;
  const int nr = grid_.n_r, nz = grid_.n_z;
  const Field& dr = state.director.d_r;
  const Field& dz = state.director.d_z;
  double inv_eps2 = 1.0 / (params_.epsilon * params_.epsilon);
  Field rhs(nr, nz);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nz; ++j) {
      double pen = (1.0 - dr(i, j) * dr(i, j) - dz(i, j) * dz(i, j)) * inv_eps2;
      double adv = 0.0;
      if (params_.advection)
        adv = advect_upwind2(comp, state.flow.u_r(i, j), state.flow.u_z(i, j), i, j, grid_);
      rhs(i, j) = comp(i, j) + params_.dt * (pen * comp(i, j) - adv);
    }
  return rhs;
}

DirectorState Stepper::gl_director_step(const SystemState& state) const {
  double bound = stable_dt_bound(grid_, params_, max_speed(state.flow));
  if (params_.dt > bound * (1.0 + 1e-12))
    throw SolverError("gl_director_step: dt " + std::to_string(params_.dt) +
                      " exceeds stability bound " + std::to_string(bound));

  Field dr = state.director.d_r, dz = state.director.d_z;
  fill_ghosts(dr, grid_, spec_d_r());
  fill_ghosts(dz, grid_, spec_d_z());
  SystemState ghosted = state;
  ghosted.director.d_r = dr;
  ghosted.director.d_z = dz;

  DirectorState out;
  out.rep = DirectorState::Rep::gl;
  out.d_r = dir_r_solver_.solve(director_rhs_gl(ghosted, dr, true), spec_d_r());
  out.d_z = dir_z_solver_.solve(director_rhs_gl(ghosted, dz, false), spec_d_z());
  return out;
}

DirectorState Stepper::sharp_director_step(const SystemState& state) const {
  RunParameters sphere_params = params_;
  sphere_params.mode = RunParameters::Mode::sphere;
  double bound = stable_dt_bound(grid_, sphere_params, max_speed(state.flow));
  if (params_.dt > bound * (1.0 + 1e-12))
    throw SolverError("sharp_director_step: dt exceeds stability bound");

  const int nr = grid_.n_r, nz = grid_.n_z;
  Field phi = state.director.phi;
  auto branch = axis_branch_values(phi);
  fill_ghosts(phi, grid_, spec_phi(branch));

  Field rhs(nr, nz);
  for (int i = 0; i < nr; ++i) {
    double r = grid_.r(i);
    for (int j = 0; j < nz; ++j) {
      double adv = 0.0;
      if (params_.advection)
        adv = advect_upwind2(phi, state.flow.u_r(i, j), state.flow.u_z(i, j), i, j, grid_);
      rhs(i, j) =
          phi(i, j) + params_.dt * (-std::sin(2.0 * phi(i, j)) / (2.0 * r * r) - adv);
    }
  }

  DirectorState out;
  out.rep = DirectorState::Rep::sphere;
  out.phi = phi_solver_.solve(rhs, spec_phi(branch));
  sync_sphere_components(out);
  return out;
}

FlowState Stepper::flow_from_vorticity(const Field& omega) const {
  FlowState flow;
  flow.omega = omega;
  flow.psi = poisson_.solve(omega);
  // Mirror ghosts for the wall-clamped streamfunction (see
  // flow_from_streamfunction).
  GhostSpec spec;
  spec.parity = Parity::even;
  spec.outer = OuterBc::neumann;
  fill_ghosts(flow.psi, grid_, spec);
  auto [ur, uz] = velocity_from_streamfunction(flow.psi, grid_);
  flow.u_r = std::move(ur);
  flow.u_z = std::move(uz);
  return flow;
}

FlowState Stepper::flow_step(const SystemState& state, const ForceField& force,
                             const Field* extra_vorticity_source) const {
  const int nr = grid_.n_r, nz = grid_.n_z;
  if (!params_.advection) {
    FlowState zero;
    zero.psi = Field(nr, nz);
    zero.omega = Field(nr, nz);
    zero.u_r = Field(nr, nz);
    zero.u_z = Field(nr, nz);
    return zero;
  }

  Field psi = state.flow.psi;
  GhostSpec psi_spec;
  psi_spec.parity = Parity::even;
  psi_spec.outer = OuterBc::dirichlet;
  fill_ghosts(psi, grid_, psi_spec);

  // Thom-type wall vorticity from psi = 0, dpsi/dn = 0 at the no-slip walls,
  // using the first two cells off the wall (samples at h/2 and 3h/2):
  //   w_wall = -(4/9) (27 psi_1 - psi_2) / (h_n^2 r_wall).
  // The formula divides wall-cell psi values by h^2, so it is only as good as
  // the stream-function solve is at the wall cells; the quadratic Dirichlet
  // ghosts in fill_ghosts/HelmholtzSolver keep that error O(h^3) and the
  // closure second order. With linear ghosts the same formula (and Woods- or
  // higher-order variants) degrades the coupled velocities to first order.
  auto wall_omega = [](double p1, double p2, double h, double r_wall) {
    return -(4.0 / 9.0) * (27.0 * p1 - p2) / (h * h * r_wall);
  };
  BoundaryTrace thom;
  thom.outer_r.resize(nz);
  thom.z_lo.resize(nr);
  thom.z_hi.resize(nr);
  for (int j = 0; j < nz; ++j)
    thom.outer_r[j] = wall_omega(psi(nr - 1, j), psi(nr - 2, j), grid_.h_r, grid_.r_max);
  for (int i = 0; i < nr; ++i) {
    thom.z_lo[i] = wall_omega(psi(i, 0), psi(i, 1), grid_.h_z, grid_.r(i));
    thom.z_hi[i] = wall_omega(psi(i, nz - 1), psi(i, nz - 2), grid_.h_z, grid_.r(i));
  }
  GhostSpec omega_spec;
  omega_spec.parity = Parity::odd;
  omega_spec.outer = OuterBc::dirichlet;
  omega_spec.trace = &thom;

  Field omega = state.flow.omega;
  fill_ghosts(omega, grid_, omega_spec);

  Field rhs(nr, nz);
  for (int i = 0; i < nr; ++i) {
    double r = grid_.r(i);
    for (int j = 0; j < nz; ++j) {
      double ur = state.flow.u_r(i, j), uz = state.flow.u_z(i, j);
      double adv = advect_upwind2(omega, ur, uz, i, j, grid_);
      double stretch = ur / r * omega(i, j);
      double curl = -(diff_z(force.f_r, i, j, grid_) - diff_r(force.f_z, i, j, grid_));
      if (extra_vorticity_source) curl += (*extra_vorticity_source)(i, j);
      rhs(i, j) = omega(i, j) + params_.dt * (-adv + stretch + curl);
    }
  }

  FlowState out = flow_from_vorticity(omega_solver_.solve(rhs, omega_spec));
  return out;
}

void Stepper::step(SystemState& state, const Field* extra_vorticity_source) const {
  ForceField force = ericksen_force(state.director);
  state.flow = flow_step(state, force, extra_vorticity_source);
  if (params_.mode == RunParameters::Mode::gl)
    state.director = gl_director_step(state);
  else
    state.director = sharp_director_step(state);
  state.time += params_.dt;
}

}  // namespace elax
