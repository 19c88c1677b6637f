#include "elax/weakform.hpp"

#include <cmath>

#include "elax/errors.hpp"
#include "elax/operators.hpp"

namespace elax {

double Bump1D::val(double x) const {
  if (x <= a || x >= b) return 0.0;
  double u = (x - a) * (b - x), w = b - a;
  return 16.0 * u * u / (w * w * w * w);
}

double Bump1D::dval(double x) const {
  if (x <= a || x >= b) return 0.0;
  double w = b - a;
  return 32.0 * (x - a) * (b - x) * (a + b - 2.0 * x) / (w * w * w * w);
}

double Bump1D::d2val(double x) const {
  if (x <= a || x >= b) return 0.0;
  double w = b - a, v = a + b - 2.0 * x;
  return 32.0 * (v * v - 2.0 * (x - a) * (b - x)) / (w * w * w * w);
}

PoloidalTestFunction::PoloidalTestFunction(int id, Bump1D p, Bump1D q, Bump1D s, double amplitude)
    : id_(id), p_(p), q_(q), s_(s), amp_(amplitude) {
  if (p.a < 0.0 || p.b <= p.a || q.b <= q.a || s.b <= s.a || s.a < 0.0)
    throw ConfigError("PoloidalTestFunction: degenerate bump support");
}

double PoloidalTestFunction::psi(double r, double z, double t) const {
  return amp_ * r * r * p_.val(r) * q_.val(z) * s_.val(t);
}
double PoloidalTestFunction::psi_r(double r, double z, double t) const {
  return amp_ * (2.0 * r * p_.val(r) + r * r * p_.dval(r)) * q_.val(z) * s_.val(t);
}
double PoloidalTestFunction::psi_rz(double r, double z, double t) const {
  return amp_ * (2.0 * r * p_.val(r) + r * r * p_.dval(r)) * q_.dval(z) * s_.val(t);
}
double PoloidalTestFunction::phi_r(double r, double z, double t) const {
  return -amp_ * r * p_.val(r) * q_.dval(z) * s_.val(t);
}
double PoloidalTestFunction::phi_z(double r, double z, double t) const {
  return amp_ * (2.0 * p_.val(r) + r * p_.dval(r)) * q_.val(z) * s_.val(t);
}
double PoloidalTestFunction::dt_phi_r(double r, double z, double t) const {
  return -amp_ * r * p_.val(r) * q_.dval(z) * s_.dval(t);
}
double PoloidalTestFunction::dt_phi_z(double r, double z, double t) const {
  return amp_ * (2.0 * p_.val(r) + r * p_.dval(r)) * q_.val(z) * s_.dval(t);
}
double PoloidalTestFunction::dr_phi_r(double r, double z, double t) const {
  return -amp_ * (p_.val(r) + r * p_.dval(r)) * q_.dval(z) * s_.val(t);
}
double PoloidalTestFunction::dz_phi_r(double r, double z, double t) const {
  return -amp_ * r * p_.val(r) * q_.d2val(z) * s_.val(t);
}
double PoloidalTestFunction::dr_phi_z(double r, double z, double t) const {
  return amp_ * (3.0 * p_.dval(r) + r * p_.d2val(r)) * q_.val(z) * s_.val(t);
}
double PoloidalTestFunction::dz_phi_z(double r, double z, double t) const {
  return amp_ * (2.0 * p_.val(r) + r * p_.dval(r)) * q_.dval(z) * s_.val(t);
}

std::pair<Field, Field> sample_test_function(const PoloidalTestFunction& fn,
                                             const MeridianGrid& grid, double t) {
  // The axis is interior to the solid cylinder, so r-support may start at 0,
  // but the outer walls must not be touched.
  Field pr(grid.n_r, grid.n_z), pz(grid.n_r, grid.n_z);
  for (int i = 0; i < grid.n_r; ++i)
    for (int j = 0; j < grid.n_z; ++j) {
      pr(i, j) = fn.phi_r(grid.r(i), grid.z(j), t);
      pz(i, j) = fn.phi_z(grid.r(i), grid.z(j), t);
    }
  for (int j = 0; j < grid.n_z; ++j)
    if (pr(grid.n_r - 1, j) != 0.0 || pz(grid.n_r - 1, j) != 0.0)
      throw AnalysisError("sample_test_function: support touches the outer wall");
  for (int i = 0; i < grid.n_r; ++i)
    if (pr(i, 0) != 0.0 || pz(i, 0) != 0.0 || pr(i, grid.n_z - 1) != 0.0 ||
        pz(i, grid.n_z - 1) != 0.0)
      throw AnalysisError("sample_test_function: support touches a z wall");
  return {std::move(pr), std::move(pz)};
}

std::vector<PoloidalTestFunction> test_function_library(const MeridianGrid& grid, double t_end) {
  double R = grid.r_max, L = grid.z_max - grid.z_min, z0 = grid.z_min;
  std::vector<PoloidalTestFunction> lib;
  lib.emplace_back(1, Bump1D{0.0, 0.8 * R}, Bump1D{z0 + 0.1 * L, z0 + 0.9 * L},
                   Bump1D{0.0, 0.95 * t_end});
  lib.emplace_back(2, Bump1D{0.0, 0.5 * R}, Bump1D{z0 + 0.2 * L, z0 + 0.6 * L},
                   Bump1D{0.0, 0.6 * t_end});
  lib.emplace_back(3, Bump1D{0.2 * R, 0.9 * R}, Bump1D{z0 + 0.3 * L, z0 + 0.8 * L},
                   Bump1D{0.2 * t_end, 0.9 * t_end});
  lib.emplace_back(4, Bump1D{0.1 * R, 0.6 * R}, Bump1D{z0 + 0.4 * L, z0 + 0.95 * L},
                   Bump1D{0.0, 0.8 * t_end}, -1.0);
  lib.emplace_back(5, Bump1D{0.0, 0.7 * R}, Bump1D{z0 + 0.05 * L, z0 + 0.5 * L},
                   Bump1D{0.1 * t_end, 0.7 * t_end}, 0.5);
  return lib;
}

double CutoffProfile::eta(double r) const {
  double rk = 1.0 / k, rs = 1.0 / std::sqrt(k);
  if (r <= rk) return 1.0;
  if (r >= rs) return 0.0;
  return -std::log(std::sqrt(k) * r) / std::log(std::sqrt(k));
}

double CutoffProfile::deta(double r) const {
  double rk = 1.0 / k, rs = 1.0 / std::sqrt(k);
  if (r <= rk || r >= rs) return 0.0;
  return -1.0 / (r * std::log(std::sqrt(k)));
}

double CutoffProfile::grad_norm_sq_exact() const { return 4.0 * M_PI / std::log(k); }

CutoffProfile cutoff_eta(double k) {
  if (k <= 1.0) throw AnalysisError("cutoff_eta: k must exceed 1");
  return CutoffProfile{k};
}

std::pair<Field, Field> sample_cutoff_stream(const PoloidalTestFunction& fn, double k,
                                             const MeridianGrid& grid, double t) {
  CutoffProfile eta = cutoff_eta(k);
  Field pr(grid.n_r, grid.n_z), pz(grid.n_r, grid.n_z);
  constexpr int kSub = 8;  // radial subsamples per cell for the cumulative integral
  double ds = grid.h_r / kSub;
  for (int j = 0; j < grid.n_z; ++j) {
    double z = grid.z(j);
    double cum = 0.0;  // int_0^r (1 - eta) psi_rz ds
    int m = 0;
    for (int i = 0; i < grid.n_r; ++i) {
      // advance the cumulative integral to the cell center r_i
      int target = i * kSub + kSub / 2;
      for (; m < target; ++m) {
        double s = (m + 0.5) * ds;
        cum += (1.0 - eta.eta(s)) * fn.psi_rz(s, z, t) * ds;
      }
      double r = grid.r(i);
      pr(i, j) = -cum / r;
      pz(i, j) = (1.0 - eta.eta(r)) * fn.psi_r(r, z, t) / r;
    }
  }
  return {std::move(pr), std::move(pz)};
}

namespace {

// Spatial part of the Definition-1.1 momentum integrand at one snapshot.
double momentum_integrand(const Snapshot& snap, const Trajectory& traj,
                          const PoloidalTestFunction& fn) {
  const MeridianGrid& grid = traj.grid;
  Field ur = snap.state.flow.u_r, uz = snap.state.flow.u_z;
  GhostSpec sr;
  sr.parity = Parity::odd;
  sr.outer = OuterBc::dirichlet;
  fill_ghosts(ur, grid, sr);
  GhostSpec sz;
  sz.parity = Parity::even;
  sz.outer = OuterBc::dirichlet;
  fill_ghosts(uz, grid, sz);
  Field dr, dz;
  cartesian_with_halos(snap.state.director, grid, &traj.bc, &dr, &dz);

  double t = snap.time;
  double acc = 0.0;
  for (int i = 0; i < grid.n_r; ++i) {
    double r = grid.r(i), w = grid.cell_weight(i);
    for (int j = 0; j < grid.n_z; ++j) {
      double z = grid.z(j);
      double a = ur(i, j), b = uz(i, j);
      double prr = fn.dr_phi_r(r, z, t), prz = fn.dz_phi_r(r, z, t);
      double pzr = fn.dr_phi_z(r, z, t), pzz = fn.dz_phi_z(r, z, t);
      double ptt = fn.phi_r(r, z, t) / r;

      double term = -(a * fn.dt_phi_r(r, z, t) + b * fn.dt_phi_z(r, z, t));
      term -= a * a * prr + a * b * (prz + pzr) + b * b * pzz;
      double urr = diff_r(ur, i, j, grid), urz = diff_z(ur, i, j, grid);
      double uzr = diff_r(uz, i, j, grid), uzz = diff_z(uz, i, j, grid);
      term += urr * prr + urz * prz + uzr * pzr + uzz * pzz + (a / r) * ptt;
      double drr = diff_r(dr, i, j, grid), drz = diff_z(dr, i, j, grid);
      double dzr = diff_r(dz, i, j, grid), dzz = diff_z(dz, i, j, grid);
      double Arr = drr * drr + dzr * dzr;
      double Arz = drr * drz + dzr * dzz;
      double Azz = drz * drz + dzz * dzz;
      double Att = dr(i, j) * dr(i, j) / (r * r);
      term -= Arr * prr + Arz * (prz + pzr) + Azz * pzz + Att * ptt;
      acc += w * term;
    }
  }
  return acc;
}

}  // namespace

double weak_momentum_residual(const Trajectory& traj, const PoloidalTestFunction& fn) {
  if (traj.snapshots.size() < 2)
    throw AnalysisError("weak_momentum_residual: need at least 2 snapshots");
  if (fn.time_profile().b > traj.snapshots.back().time + 1e-12)
    throw AnalysisError("weak_momentum_residual: test support exceeds the stored horizon");
  const MeridianGrid& grid = traj.grid;

  double acc = 0.0;
  std::size_t n = traj.snapshots.size();
  for (std::size_t kk = 0; kk < n; ++kk) {
    double wt;
    if (kk == 0)
      wt = 0.5 * (traj.snapshots[1].time - traj.snapshots[0].time);
    else if (kk + 1 == n)
      wt = 0.5 * (traj.snapshots[kk].time - traj.snapshots[kk - 1].time);
    else
      wt = 0.5 * (traj.snapshots[kk + 1].time - traj.snapshots[kk - 1].time);
    acc += wt * momentum_integrand(traj.snapshots[kk], traj, fn);
  }

  // initial-data pairing
  const Snapshot& s0 = traj.snapshots.front();
  for (int i = 0; i < grid.n_r; ++i) {
    double r = grid.r(i), w = grid.cell_weight(i);
    for (int j = 0; j < grid.n_z; ++j) {
      double z = grid.z(j);
      acc -= w * (s0.state.flow.u_r(i, j) * fn.phi_r(r, z, s0.time) +
                  s0.state.flow.u_z(i, j) * fn.phi_z(r, z, s0.time));
    }
  }
  return acc;
}

double DirectorTestFunction::xi_r(double r, double z, double t) const {
  return a_r * r * p.val(r) * q.val(z) * s.val(t);
}
double DirectorTestFunction::xi_z(double r, double z, double t) const {
  return a_z * p.val(r) * q.val(z) * s.val(t);
}
double DirectorTestFunction::dt_xi_r(double r, double z, double t) const {
  return a_r * r * p.val(r) * q.val(z) * s.dval(t);
}
double DirectorTestFunction::dt_xi_z(double r, double z, double t) const {
  return a_z * p.val(r) * q.val(z) * s.dval(t);
}
double DirectorTestFunction::dr_xi_r(double r, double z, double t) const {
  return a_r * (p.val(r) + r * p.dval(r)) * q.val(z) * s.val(t);
}
double DirectorTestFunction::dz_xi_r(double r, double z, double t) const {
  return a_r * r * p.val(r) * q.dval(z) * s.val(t);
}
double DirectorTestFunction::dr_xi_z(double r, double z, double t) const {
  return a_z * p.dval(r) * q.val(z) * s.val(t);
}
double DirectorTestFunction::dz_xi_z(double r, double z, double t) const {
  return a_z * p.val(r) * q.dval(z) * s.val(t);
}

double weak_director_residual(const Trajectory& traj, const DirectorTestFunction& xi) {
  if (traj.params.mode != RunParameters::Mode::sphere)
    throw AnalysisError("weak_director_residual: sharp form requires |d| = 1 (sphere mode)");
  if (traj.snapshots.size() < 2)
    throw AnalysisError("weak_director_residual: need at least 2 snapshots");
  const MeridianGrid& grid = traj.grid;

  double acc = 0.0;
  std::size_t n = traj.snapshots.size();
  for (std::size_t kk = 0; kk < n; ++kk) {
    double wt;
    if (kk == 0)
      wt = 0.5 * (traj.snapshots[1].time - traj.snapshots[0].time);
    else if (kk + 1 == n)
      wt = 0.5 * (traj.snapshots[kk].time - traj.snapshots[kk - 1].time);
    else
      wt = 0.5 * (traj.snapshots[kk + 1].time - traj.snapshots[kk - 1].time);

    const Snapshot& snap = traj.snapshots[kk];
    Field dr, dz;
    cartesian_with_halos(snap.state.director, grid, &traj.bc, &dr, &dz);
    double t = snap.time;
    double spatial = 0.0;
    for (int i = 0; i < grid.n_r; ++i) {
      double r = grid.r(i), w = grid.cell_weight(i);
      for (int j = 0; j < grid.n_z; ++j) {
        double z = grid.z(j);
        double xr = xi.xi_r(r, z, t), xz = xi.xi_z(r, z, t);
        double drr = diff_r(dr, i, j, grid), drz = diff_z(dr, i, j, grid);
        double dzr = diff_r(dz, i, j, grid), dzz = diff_z(dz, i, j, grid);
        double gd2 = drr * drr + drz * drz + dzr * dzr + dzz * dzz +
                     dr(i, j) * dr(i, j) / (r * r);
        double term = snap.tau_r(i, j) * xr + snap.tau_z(i, j) * xz;
        term += drr * xi.dr_xi_r(r, z, t) + drz * xi.dz_xi_r(r, z, t) +
                dzr * xi.dr_xi_z(r, z, t) + dzz * xi.dz_xi_z(r, z, t) +
                (dr(i, j) / r) * (xr / r);
        term -= gd2 * (dr(i, j) * xr + dz(i, j) * xz);
        spatial += w * term;
      }
    }
    acc += wt * spatial;
  }
  return acc;
}

std::vector<double> initial_attainment(const Trajectory& traj, const PoloidalTestFunction& fn) {
  if (traj.snapshots.empty()) throw AnalysisError("initial_attainment: empty trajectory");
  const MeridianGrid& grid = traj.grid;
  const Snapshot& s0 = traj.snapshots.front();
  std::vector<double> out;
  out.reserve(traj.snapshots.size());
  for (const Snapshot& snap : traj.snapshots) {
    double diff = 0.0;
    for (int i = 0; i < grid.n_r; ++i) {
      double r = grid.r(i), w = grid.cell_weight(i);
      for (int j = 0; j < grid.n_z; ++j) {
        double z = grid.z(j);
        diff += w * ((snap.state.flow.u_r(i, j) - s0.state.flow.u_r(i, j)) * fn.phi_r(r, z, snap.time) +
                     (snap.state.flow.u_z(i, j) - s0.state.flow.u_z(i, j)) * fn.phi_z(r, z, snap.time));
      }
    }
    out.push_back(diff);
  }
  return out;
}

Field axis_concentrating_force(const MeridianGrid& grid, double eps) {
  if (eps <= 0.0) throw AnalysisError("axis_concentrating_force: eps must be positive");
  double L = grid.z_max - grid.z_min;
  Bump1D g{grid.z_min + 0.25 * L, grid.z_min + 0.75 * L};
  Field f(grid.n_r, grid.n_z);
  for (int i = 0; i < grid.n_r; ++i) {
    double s = grid.r(i) / eps;
    if (s >= 1.0) continue;
    double bump = (1.0 - s * s) * (1.0 - s * s);
    for (int j = 0; j < grid.n_z; ++j) f(i, j) = bump / (eps * eps) * g.val(grid.z(j));
  }
  return f;
}

CancellationReport cancellation_experiment(const std::vector<Field>& f_r,
                                           const std::vector<Field>& f_z,
                                           const std::vector<double>& epsilons,
                                           const MeridianGrid& grid,
                                           const PoloidalTestFunction& fn,
                                           const std::vector<double>& k_list, double t) {
  if (f_r.size() != epsilons.size() || f_z.size() != epsilons.size() || epsilons.empty())
    throw AnalysisError("cancellation_experiment: need one force pair per epsilon");
  CancellationReport rep;
  rep.epsilons = epsilons;
  rep.k_list = k_list;

  auto [phi_r, phi_z] = sample_test_function(fn, grid, t);
  std::vector<std::pair<Field, Field>> cut;
  cut.reserve(k_list.size());
  for (double k : k_list) cut.push_back(sample_cutoff_stream(fn, k, grid, t));

  for (std::size_t e = 0; e < epsilons.size(); ++e) {
    if (!f_r[e].same_shape(phi_r) || !f_z[e].same_shape(phi_r))
      throw AnalysisError("cancellation_experiment: force grid mismatch");
    double mass = 0.0, pair_r = 0.0;
    std::vector<double> pz(k_list.size(), 0.0);
    for (int i = 0; i < grid.n_r; ++i) {
      double w = grid.cell_weight(i);
      double wm = grid.r(i) * grid.h_r * grid.h_z;
      for (int j = 0; j < grid.n_z; ++j) {
        mass += wm * std::abs(f_r[e](i, j));
        pair_r += w * f_r[e](i, j) * phi_r(i, j);
        for (std::size_t kk = 0; kk < k_list.size(); ++kk)
          pz[kk] += w * f_z[e](i, j) * cut[kk].second(i, j);
      }
    }
    rep.mass_r.push_back(mass);
    rep.pairing_r.push_back(pair_r);
    rep.pairing_z.push_back(std::move(pz));
  }
  return rep;
}

}  // namespace elax
