#include "elax/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "elax/errors.hpp"
#include "elax/operators.hpp"

namespace elax {

namespace {

GhostSpec director_spec_r(const DirectorBc* bc) {
  GhostSpec s;
  s.parity = Parity::odd;
  s.axis_value = 0.0;
  if (bc) {
    s.outer = OuterBc::dirichlet;
    s.trace = &bc->d_r;
  } else {
    s.outer = OuterBc::neumann;
  }
  return s;
}

GhostSpec director_spec_z(const DirectorBc* bc) {
  GhostSpec s;
  s.parity = Parity::even;
  if (bc) {
    s.outer = OuterBc::dirichlet;
    s.trace = &bc->d_z;
  } else {
    s.outer = OuterBc::neumann;
  }
  return s;
}

}  // namespace

void fill_director_ghosts(DirectorState& director, const MeridianGrid& grid,
                          const DirectorBc* bc) {
  if (director.rep == DirectorState::Rep::sphere) {
    GhostSpec s;
    s.parity = Parity::odd;
    auto branch = axis_branch_values(director.phi);
    s.axis_values = &branch;
    if (bc) {
      s.outer = OuterBc::dirichlet;
      s.trace = &bc->phi;
    } else {
      s.outer = OuterBc::neumann;
    }
    fill_ghosts(director.phi, grid, s);
  } else {
    fill_ghosts(director.d_r, grid, director_spec_r(bc));
    fill_ghosts(director.d_z, grid, director_spec_z(bc));
  }
}

void cartesian_with_halos(const DirectorState& director, const MeridianGrid& grid,
                          const DirectorBc* bc, Field* d_r, Field* d_z) {
  DirectorState dir = director;
  fill_director_ghosts(dir, grid, bc);
  *d_r = Field(grid.n_r, grid.n_z);
  *d_z = Field(grid.n_r, grid.n_z);
  for (int i = -Field::HALO; i < grid.n_r + Field::HALO; ++i)
    for (int j = -Field::HALO; j < grid.n_z + Field::HALO; ++j) {
      if (dir.rep == DirectorState::Rep::sphere) {
        (*d_r)(i, j) = std::sin(dir.phi(i, j));
        (*d_z)(i, j) = std::cos(dir.phi(i, j));
      } else {
        (*d_r)(i, j) = dir.d_r(i, j);
        (*d_z)(i, j) = dir.d_z(i, j);
      }
    }
}

Field energy_density(const DirectorState& director, const MeridianGrid& grid, double epsilon,
                     const DirectorBc* bc) {
  const int nr = grid.n_r, nz = grid.n_z;
  DirectorState dir = director;
  fill_director_ghosts(dir, grid, bc);
  Field e(nr, nz);
  if (dir.rep == DirectorState::Rep::sphere) {
    for (int i = 0; i < nr; ++i) {
      double r = grid.r(i);
      for (int j = 0; j < nz; ++j) {
        double pr = diff_r(dir.phi, i, j, grid), pz = diff_z(dir.phi, i, j, grid);
        double s = std::sin(dir.phi(i, j));
        e(i, j) = 0.5 * (pr * pr + pz * pz + s * s / (r * r));
      }
    }
  } else {
    double inv_eps2 = 1.0 / (epsilon * epsilon);
    for (int i = 0; i < nr; ++i) {
      double r = grid.r(i);
      for (int j = 0; j < nz; ++j) {
        double arr = diff_r(dir.d_r, i, j, grid), arz = diff_z(dir.d_r, i, j, grid);
        double azr = diff_r(dir.d_z, i, j, grid), azz = diff_z(dir.d_z, i, j, grid);
        double dr = dir.d_r(i, j), dz = dir.d_z(i, j);
        double pen = 1.0 - dr * dr - dz * dz;
        e(i, j) = 0.5 * (arr * arr + arz * arz + azr * azr + azz * azz + dr * dr / (r * r)) +
                  pen * pen * 0.25 * inv_eps2;
      }
    }
  }
  return e;
}

EnergySplit energy_split(const DirectorState& director, const MeridianGrid& grid, double epsilon,
                         const DirectorBc* bc) {
  const int nr = grid.n_r, nz = grid.n_z;
  DirectorState dir = director;
  fill_director_ghosts(dir, grid, bc);
  EnergySplit out;
  if (dir.rep == DirectorState::Rep::sphere) {
    for (int i = 0; i < nr; ++i) {
      double r = grid.r(i), w = grid.cell_weight(i);
      for (int j = 0; j < nz; ++j) {
        double pr = diff_r(dir.phi, i, j, grid), pz = diff_z(dir.phi, i, j, grid);
        double s = std::sin(dir.phi(i, j));
        out.elastic += w * 0.5 * (pr * pr + pz * pz + s * s / (r * r));
      }
    }
  } else {
    double inv_eps2 = 1.0 / (epsilon * epsilon);
    for (int i = 0; i < nr; ++i) {
      double r = grid.r(i), w = grid.cell_weight(i);
      for (int j = 0; j < nz; ++j) {
        double arr = diff_r(dir.d_r, i, j, grid), arz = diff_z(dir.d_r, i, j, grid);
        double azr = diff_r(dir.d_z, i, j, grid), azz = diff_z(dir.d_z, i, j, grid);
        double dr = dir.d_r(i, j), dz = dir.d_z(i, j);
        double pen = 1.0 - dr * dr - dz * dz;
        out.elastic +=
            w * 0.5 * (arr * arr + arz * arz + azr * azr + azz * azz + dr * dr / (r * r));
        out.penalty += w * pen * pen * 0.25 * inv_eps2;
      }
    }
  }
  return out;
}

TensionPair tension_field(const DirectorState& prev, const DirectorState& next,
                          const FlowState& flow, const MeridianGrid& grid, double dt,
                          const DirectorBc* bc) {
  const int nr = grid.n_r, nz = grid.n_z;
  DirectorState p = prev;
  fill_director_ghosts(p, grid, bc);
  TensionPair out{Field(nr, nz), Field(nr, nz)};
  if (prev.rep == DirectorState::Rep::sphere) {
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nz; ++j) {
        double adv = flow.u_r(i, j) * diff_r(p.phi, i, j, grid) +
                     flow.u_z(i, j) * diff_z(p.phi, i, j, grid);
        double dphi = (next.phi(i, j) - prev.phi(i, j)) / dt + adv;
        out.tau_r(i, j) = dphi * std::cos(p.phi(i, j));
        out.tau_z(i, j) = -dphi * std::sin(p.phi(i, j));
      }
  } else {
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nz; ++j) {
        double ur = flow.u_r(i, j), uz = flow.u_z(i, j);
        out.tau_r(i, j) = (next.d_r(i, j) - prev.d_r(i, j)) / dt +
                          ur * diff_r(p.d_r, i, j, grid) + uz * diff_z(p.d_r, i, j, grid);
        out.tau_z(i, j) = (next.d_z(i, j) - prev.d_z(i, j)) / dt +
                          ur * diff_r(p.d_z, i, j, grid) + uz * diff_z(p.d_z, i, j, grid);
      }
  }
  return out;
}

namespace {

void flow_diagnostics(const SystemState& state, const MeridianGrid& grid, double* e_kin,
                      double* d_visc) {
  const int nr = grid.n_r, nz = grid.n_z;
  Field ur = state.flow.u_r, uz = state.flow.u_z;
  GhostSpec sr;
  sr.parity = Parity::odd;
  sr.outer = OuterBc::dirichlet;
  fill_ghosts(ur, grid, sr);
  GhostSpec sz;
  sz.parity = Parity::even;
  sz.outer = OuterBc::dirichlet;
  fill_ghosts(uz, grid, sz);
  *e_kin = 0.0;
  *d_visc = 0.0;
  for (int i = 0; i < nr; ++i) {
    double r = grid.r(i), w = grid.cell_weight(i);
    for (int j = 0; j < nz; ++j) {
      double a = ur(i, j), b = uz(i, j);
      *e_kin += w * 0.5 * (a * a + b * b);
      double grr = diff_r(ur, i, j, grid), grz = diff_z(ur, i, j, grid);
      double gzr = diff_r(uz, i, j, grid), gzz = diff_z(uz, i, j, grid);
      *d_visc += w * (grr * grr + grz * grz + gzr * gzr + gzz * gzz + a * a / (r * r));
    }
  }
}

double max_director_norm(const DirectorState& director, const MeridianGrid& grid) {
  if (director.rep == DirectorState::Rep::sphere) return 1.0;
  double m = 0.0;
  for (int i = 0; i < grid.n_r; ++i)
    for (int j = 0; j < grid.n_z; ++j) {
      double dr = director.d_r(i, j), dz = director.d_z(i, j);
      m = std::max(m, std::sqrt(dr * dr + dz * dz));
    }
  return m;
}

}  // namespace

DiagnosticsRecord record_initial(const SystemState& state, const MeridianGrid& grid,
                                 const RunParameters& params, const DirectorBc* bc) {
  DiagnosticsRecord rec;
  rec.time = state.time;
  flow_diagnostics(state, grid, &rec.e_kin, &rec.d_visc);
  EnergySplit es = energy_split(state.director, grid, params.epsilon, bc);
  rec.e_el = es.elastic;
  rec.e_pen = es.penalty;
  rec.max_d = max_director_norm(state.director, grid);
  return rec;
}

DiagnosticsRecord record_step(const SystemState& state, const DirectorState& prev_director,
                              const MeridianGrid& grid, const RunParameters& params,
                              const DirectorBc* bc) {
  DiagnosticsRecord rec = record_initial(state, grid, params, bc);
  TensionPair t = tension_field(prev_director, state.director, state.flow, grid, params.dt, bc);
  double norm = 0.0;
  for (int i = 0; i < grid.n_r; ++i) {
    double w = grid.cell_weight(i);
    for (int j = 0; j < grid.n_z; ++j)
      norm += w * (t.tau_r(i, j) * t.tau_r(i, j) + t.tau_z(i, j) * t.tau_z(i, j));
  }
  rec.d_tension = norm;
  rec.lambda_t = norm;
  return rec;
}

EnergyReport check_energy_inequality(const std::vector<DiagnosticsRecord>& records) {
  if (records.size() < 2)
    throw AnalysisError("check_energy_inequality: need at least 2 records");
  EnergyReport rep;
  double e0 = records.front().total_energy();
  rep.tolerance = 1e-3 * e0;
  double cum = 0.0;
  rep.residuals.reserve(records.size());
  for (std::size_t n = 0; n < records.size(); ++n) {
    if (n > 0) {
      double dt = records[n].time - records[n - 1].time;
      cum += dt * records[n].dissipation();
    }
    double res = records[n].total_energy() + cum - e0;
    rep.residuals.push_back(res);
    if (res > rep.tolerance + 1e-14) {
      rep.flagged.push_back(static_cast<int>(n));
      rep.ok = false;
    }
  }
  return rep;
}

GoodTimeReport classify_good_times(const std::vector<DiagnosticsRecord>& records, double lambda) {
  if (lambda <= 0.0) throw AnalysisError("classify_good_times: lambda must be positive");
  if (records.empty()) throw AnalysisError("classify_good_times: empty trajectory");
  GoodTimeReport rep;
  rep.lambda = lambda;
  double T = records.back().time - records.front().time;
  double e0 = records.front().total_energy();
  double bad_measure = 0.0, max_dt = 0.0;
  for (std::size_t n = 0; n < records.size(); ++n) {
    if (records[n].lambda_t <= lambda) {
      rep.good_times.push_back(records[n].time);
    } else {
      rep.bad_times.push_back(records[n].time);
      if (n > 0) bad_measure += records[n].time - records[n - 1].time;
    }
    if (n > 0) max_dt = std::max(max_dt, records[n].time - records[n - 1].time);
  }
  if (T > 0.0) {
    rep.bad_fraction = bad_measure / T;
    rep.bound = e0 / (lambda * T);
    rep.bound_holds = rep.bad_fraction <= std::min(1.0, rep.bound) + max_dt / T + 1e-12;
  } else {
    rep.bad_fraction = rep.bad_times.empty() ? 0.0 : 1.0;
    rep.bound = e0 / lambda;
    rep.bound_holds = rep.bad_times.empty();
  }
  return rep;
}

MonotonicityReport almost_monotonicity(const DirectorState& director, const TensionPair& tension,
                                       const MeridianGrid& grid, double r0, double z0,
                                       double r_small, double r_large, const DirectorBc* bc) {
  if (!(r_small > 0.0 && r_small <= r_large))
    throw AnalysisError("almost_monotonicity: need 0 < r <= R");
  if (r_large >= r0) throw AnalysisError("almost_monotonicity: ball touches the axis");
  if (r0 + r_large >= grid.r_max || z0 - r_large <= grid.z_min || z0 + r_large >= grid.z_max)
    throw AnalysisError("almost_monotonicity: ball exits the domain");

  const int nr = grid.n_r, nz = grid.n_z;
  Field dr, dz;
  cartesian_with_halos(director, grid, bc, &dr, &dz);

  double lambda_tot = 0.0;
  for (int i = 0; i < nr; ++i) {
    double w = grid.cell_weight(i);
    for (int j = 0; j < nz; ++j)
      lambda_tot += w * (tension.tau_r(i, j) * tension.tau_r(i, j) +
                         tension.tau_z(i, j) * tension.tau_z(i, j));
  }

  constexpr int kThetaSamples = 32;
  // Returns (Psi integrand pieces, int_{B} |grad d|^2) for one ball radius.
  auto ball = [&](double R, double* psi, double* gd2_int) {
    double grad_term = 0.0, cross_term = 0.0, tau_term = 0.0, gd2_acc = 0.0;
    for (int i = 0; i < nr; ++i) {
      double r = grid.r(i);
      for (int j = 0; j < nz; ++j) {
        double z = grid.z(j);
        double wz = z - z0;
        double cos_tm = (r * r + r0 * r0 + wz * wz - R * R) / (2.0 * r * r0);
        if (cos_tm >= 1.0) continue;
        double theta_max = cos_tm <= -1.0 ? M_PI : std::acos(cos_tm);

        double arr = diff_r(dr, i, j, grid), arz = diff_z(dr, i, j, grid);
        double azr = diff_r(dz, i, j, grid), azz = diff_z(dz, i, j, grid);
        double gd2 = arr * arr + arz * arz + azr * azr + azz * azz +
                     dr(i, j) * dr(i, j) / (r * r);
        double tr = tension.tau_r(i, j), tz = tension.tau_z(i, j);
        double ar = arr * tr + azr * tz;  // d_r d . tau
        double az = arz * tr + azz * tz;  // d_z d . tau
        double tau2 = tr * tr + tz * tz;

        double dtheta = theta_max / kThetaSamples;
        double wcell = 2.0 * r * grid.h_r * grid.h_z * dtheta;  // both theta signs
        for (int q = 0; q < kThetaSamples; ++q) {
          double theta = (q + 0.5) * dtheta;
          double ct = std::cos(theta);
          double w_r = r - r0 * ct;
          double dist2 = r * r + r0 * r0 - 2.0 * r * r0 * ct + wz * wz;
          double dist = std::sqrt(std::max(dist2, 0.0));
          grad_term += wcell * 0.5 * gd2;
          cross_term += wcell * (w_r * ar + wz * az);
          tau_term += wcell * 0.5 * dist * tau2;
          gd2_acc += wcell * gd2;
        }
      }
    }
    *psi = (grad_term - cross_term) / R + tau_term;
    *gd2_int = gd2_acc;
  };

  MonotonicityReport rep;
  double gd2_small = 0.0, gd2_large = 0.0;
  ball(r_small, &rep.psi_small, &gd2_small);
  ball(r_large, &rep.psi_large, &gd2_large);
  rep.holds = rep.psi_small <= rep.psi_large + 0.05 * std::abs(rep.psi_large) + 1e-12;
  rep.weak_lhs = gd2_small / r_small;
  rep.weak_rhs = 2.0 * gd2_large / r_large + 4.0 * lambda_tot * r_large;
  rep.weak_holds = rep.weak_lhs <= rep.weak_rhs * 1.05 + 1e-12;
  return rep;
}

}  // namespace elax
