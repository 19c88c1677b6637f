#pragma once

#include <optional>
#include <utility>

#include "elax/field.hpp"
#include "elax/grid.hpp"
#include "elax/linsolve.hpp"
#include "elax/state.hpp"

namespace elax {

// Time-integration parameters. The physical constants mu (viscosity), lambda
// (stress coupling) and gamma (relaxation) are fixed to 1 throughout.
struct RunParameters {
  enum class Mode { gl, sphere };

  Mode mode = Mode::gl;
  double epsilon = 0.1;  // GL penalization length; unused in sphere mode
  double dt = 0.0;
  double t_end = 0.1;
  bool advection = true;  // false: pure heat flow, u forced to 0
};

// Stability bound for the explicit pieces: dt <= min(eps^2/4, h^2/8,
// 0.5 h / max|u|); the eps^2 term is dropped in sphere mode.
double stable_dt_bound(const MeridianGrid& grid, const RunParameters& params, double max_u);

struct SystemState {
  FlowState flow;
  DirectorState director;
  double time = 0.0;
};

// Dirichlet wall data for the director (d = d0 on the outer boundary).
struct DirectorBc {
  BoundaryTrace d_r, d_z;  // gl mode
  BoundaryTrace phi;       // sphere mode
};

struct ForceField {
  Field f_r, f_z;  // halos filled
};

// One-step integrator for the coupled streamfunction-vorticity / director
// system. Owns the factorized implicit operators, so dt and the grid are fixed
// at construction.
class Stepper {
 public:
  Stepper(const MeridianGrid& grid, const RunParameters& params, DirectorBc bc);

  const MeridianGrid& grid() const { return grid_; }
  const RunParameters& params() const { return params_; }
  const DirectorBc& bc() const { return bc_; }

  // div(grad d (.) grad d - e_eps(d) I) = (grad d)^T (Delta d + penalty d),
  // the Ericksen stress divergence f = f_r e_r + f_z e_z. In sphere mode the
  // penalty term is replaced by |grad d|^2 d.
  ForceField ericksen_force(const DirectorState& director) const;

  // IMEX director update, GL representation: diffusion implicit, advection and
  // penalty explicit, Dirichlet boundary re-imposed.
  DirectorState gl_director_step(const SystemState& state) const;

  // IMEX update of the angle phi: L implicit, advection and -sin(2phi)/(2r^2)
  // explicit; axis branch values in pi*Z preserved by the parity rule.
  DirectorState sharp_director_step(const SystemState& state) const;

  // Vorticity advance (diffusion implicit, advection/stretching/stress source
  // explicit), stream-function solve, velocity recovery. Wall vorticity by a
  // Thom-type one-sided formula from the no-slip condition.
  // extra_vorticity_source (optional) is added to the explicit right side --
  // used by manufactured-solution runs.
  FlowState flow_step(const SystemState& state, const ForceField& force,
                      const Field* extra_vorticity_source = nullptr) const;

  Field solve_stream_poisson(const Field& omega) const { return poisson_.solve(omega); }

  // Lie splitting: flow advance with the current director's stress, then
  // director advance with the new velocity. Advances state.time by dt.
  void step(SystemState& state, const Field* extra_vorticity_source = nullptr) const;

  // Ghost specs for the evolved fields (shared with diagnostics).
  GhostSpec spec_d_r() const;
  GhostSpec spec_d_z() const;
  GhostSpec spec_phi(const std::vector<double>& branch) const;

  // Builds a flow state (psi, u) consistent with a given vorticity field.
  FlowState flow_from_vorticity(const Field& omega) const;

 private:
  Field director_rhs_gl(const SystemState& state, const Field& comp, bool radial) const;

  MeridianGrid grid_;
  RunParameters params_;
  DirectorBc bc_;
  HelmholtzSolver dir_r_solver_, dir_z_solver_, phi_solver_, omega_solver_;
  StreamPoissonSolver poisson_;
};

// Initial flow state from an initial stream function sampled on the grid.
FlowState flow_from_streamfunction(const Field& psi0, const MeridianGrid& grid);

}  // namespace elax
