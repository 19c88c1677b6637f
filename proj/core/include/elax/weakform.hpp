#pragma once

#include <utility>
#include <vector>

#include "elax/diagnostics.hpp"
#include "elax/field.hpp"
#include "elax/grid.hpp"

namespace elax {

// C^1 polynomial bump on [a,b]: 16 (x-a)^2 (b-x)^2 / (b-a)^4, max 1 at the
// midpoint, zero with zero slope at the endpoints.
struct Bump1D {
  double a = 0.0, b = 1.0;
  double val(double x) const;
  double dval(double x) const;
  double d2val(double x) const;
};

// Poloidal test function generated by the stream profile
//   psi(r,z,t) = amplitude * r^2 * p(r) * q(z) * s(t),
// Phi = -(psi_z / r) e_r + (psi_r / r) e_z. The r^2 prefactor makes Phi^r
// vanish linearly at the axis. Support must stay inside the open meridian
// rectangle and inside [0, t_end).
class PoloidalTestFunction {
 public:
  PoloidalTestFunction(int id, Bump1D p, Bump1D q, Bump1D s, double amplitude = 1.0);

  int id() const { return id_; }
  const Bump1D& time_profile() const { return s_; }

  double psi(double r, double z, double t) const;
  double phi_r(double r, double z, double t) const;   // -psi_z / r
  double phi_z(double r, double z, double t) const;   // psi_r / r
  double dt_phi_r(double r, double z, double t) const;
  double dt_phi_z(double r, double z, double t) const;
  // Velocity-gradient components of Phi (cylindrical, no-swirl).
  double dr_phi_r(double r, double z, double t) const;
  double dz_phi_r(double r, double z, double t) const;
  double dr_phi_z(double r, double z, double t) const;
  double dz_phi_z(double r, double z, double t) const;

  // Raw stream derivatives (used by the cutoff construction).
  double psi_r(double r, double z, double t) const;
  double psi_rz(double r, double z, double t) const;

 private:
  int id_;
  Bump1D p_, q_, s_;
  double amp_;
};

// Validates support against the grid and samples Phi at one time; throws when
// the support touches the boundary of the meridian rectangle.
std::pair<Field, Field> sample_test_function(const PoloidalTestFunction& fn,
                                             const MeridianGrid& grid, double t);

// Default library of 5 poloidal test functions for a given domain/horizon.
std::vector<PoloidalTestFunction> test_function_library(const MeridianGrid& grid, double t_end);

// Logarithmic capacity cutoff of scale k > 1: 1 on r <= 1/k,
// -log(sqrt(k) r)/log sqrt(k) on [1/k, 1/sqrt(k)], 0 beyond.
struct CutoffProfile {
  double k = 0.0;
  double eta(double r) const;
  double deta(double r) const;
  double grad_norm_sq_exact() const;  // ||grad eta||^2_{L^2(R^2)} = 4 pi / log k
};
CutoffProfile cutoff_eta(double k);

// Phi_k from the cut-off stream psi_k = int_0^r (1 - eta_k) d_s psi ds:
// Phi_k = -(d_z psi_k / r) e_r + (1 - eta_k)(d_r psi / r) e_z, sampled on the
// grid at time t (radial cumulative integral by composite midpoint).
std::pair<Field, Field> sample_cutoff_stream(const PoloidalTestFunction& fn, double k,
                                             const MeridianGrid& grid, double t);

// Definition-1.1 momentum residual over stored snapshots: space-time
// quadrature of -u.dtPhi - (u x u):grad Phi + grad u:grad Phi
// - (grad d o grad d):grad Phi, minus the initial pairing int u0.Phi(.,0).
double weak_momentum_residual(const Trajectory& traj, const PoloidalTestFunction& fn);

// Director test field xi = (r a_r, a_z) * p(r) q(z) s(t) with constant
// weights (a_r, a_z); the r factor keeps xi^r admissible at the axis.
struct DirectorTestFunction {
  Bump1D p, q, s;
  double a_r = 1.0, a_z = 1.0;
  double xi_r(double r, double z, double t) const;
  double xi_z(double r, double z, double t) const;
  double dt_xi_r(double r, double z, double t) const;
  double dt_xi_z(double r, double z, double t) const;
  double dr_xi_r(double r, double z, double t) const;
  double dz_xi_r(double r, double z, double t) const;
  double dr_xi_z(double r, double z, double t) const;
  double dz_xi_z(double r, double z, double t) const;
};

// Sharp-system director residual (requires |d| = 1, i.e. sphere-mode
// trajectories; GL input is rejected):
// int int [tau.xi + grad d:grad xi - |grad d|^2 d.xi].
double weak_director_residual(const Trajectory& traj, const DirectorTestFunction& xi);

// Weak attainment of the initial velocity: pairings int u(t).Phi(t) - int
// u0.Phi(t) for each snapshot time (expected to vanish as t -> 0).
std::vector<double> initial_attainment(const Trajectory& traj, const PoloidalTestFunction& fn);

// Synthetic axis-concentrating radial force: f(r,z) = eps^-2 bump(r/eps) g(z)
// with bump(s) = (1-s^2)^2 on [0,1); meridian mass int |f| r dr dz is
// eps-independent up to quadrature error.
Field axis_concentrating_force(const MeridianGrid& grid, double eps);

struct CancellationReport {
  std::vector<double> epsilons;
  std::vector<double> k_list;
  std::vector<double> mass_r;                  // int |f_r| r dr dz per eps
  std::vector<double> pairing_r;               // <f_r, Phi^r> per eps
  std::vector<std::vector<double>> pairing_z;  // [eps][k], <f_z, Phi_k^z>
};

// Pairing table across an epsilon-indexed family of meridian force fields.
// Pairings use the full 2 pi r dr dz weight.
CancellationReport cancellation_experiment(const std::vector<Field>& f_r,
                                           const std::vector<Field>& f_z,
                                           const std::vector<double>& epsilons,
                                           const MeridianGrid& grid,
                                           const PoloidalTestFunction& fn,
                                           const std::vector<double>& k_list, double t);

}  // namespace elax
