#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elax/field.hpp"
#include "elax/grid.hpp"
#include "elax/state.hpp"

namespace elax {

// Scaled local energy R^-1 int_{B_R(r0,0,z0)} e dx over the 3-D ball of the
// axisymmetric extension (theta-arc done analytically per cell). The ball may
// cross the axis but not the outer boundary.
double local_scaled_energy(const Field& density, const MeridianGrid& grid, double r0, double z0,
                           double radius);
double local_scaled_energy(const DirectorState& director, const MeridianGrid& grid,
                           double epsilon, double r0, double z0, double radius);

// int of e * r dr dz over the poly-disc |r-r0|<=delta, |z-z0|<=delta
// (meridian box, no 2*pi factor).
double poly_disc_energy(const Field& density, const MeridianGrid& grid, double r0, double z0,
                        double delta);
double poly_disc_energy(const DirectorState& director, const MeridianGrid& grid, double epsilon,
                        double r0, double z0, double delta);

struct SearchBox {
  double r_lo = 0.0, r_hi = 0.0, z_lo = 0.0, z_hi = 0.0;
};

// Maximum concentration function: max over cell centers (r*,z*) in the box of
// the poly-disc energy at radius lambda. Ties broken lexicographically
// (smaller r first, then smaller z).
struct ThetaResult {
  double value = 0.0;
  double r = 0.0, z = 0.0;
};
ThetaResult theta_max(const Field& density, const MeridianGrid& grid, const SearchBox& box,
                      double lambda);

// Solves Theta(lambda_e) = eps0_sq / c_star by bisection (relative tolerance
// 1e-3 on lambda). Empty result: the threshold is never reached at the
// largest admissible lambda (no concentration).
struct BlowupScale {
  double lambda_e = 0.0;
  double r = 0.0, z = 0.0;
  double theta = 0.0;
};
std::optional<BlowupScale> extract_blowup_scale(const Field& density, const MeridianGrid& grid,
                                                const SearchBox& box, double eps0_sq,
                                                double c_star);

// (q, psi_angle)(x,y) = (rho, phi)(r0 + lambda x, z0 + lambda y) bilinearly
// resampled onto a (2n+1)^2 uniform window, |x|,|y| <= window_radius in
// rescaled units.
struct RescaledWindow {
  int n = 0;  // samples per axis = 2n+1
  double window_radius = 0.0;
  double lambda_e = 0.0;
  double r0 = 0.0, z0 = 0.0;
  std::vector<double> q;          // row-major, x fastest
  std::vector<double> psi_angle;
  int index(int ix, int iy) const { return iy * (2 * n + 1) + ix; }
};
RescaledWindow rescale_fields(const DirectorState& director, const MeridianGrid& grid,
                              double lambda_e, double r0, double z0, double window_radius,
                              int n_samples);

enum class Regime { penalty_dominant, balanced, diffusion_dominant };
struct RegimeLabel {
  Regime regime = Regime::balanced;
  double ratio = 0.0;  // lambda_e / epsilon
  std::string name() const;
};
RegimeLabel classify_regime(double lambda_e, double epsilon);

struct ProbePoint {
  double r = 0.0, z = 0.0, radius = 0.0;
};

// Scaled energies at fixed probes across a decreasing epsilon list. A probe is
// off-axis when its ball stays away from the axis (r > radius); such probes
// are flagged when the scaled energy grows by a factor >= 2 at every step of
// the list. On-axis growth is reported but permitted.
struct AxisOffaxisReport {
  std::vector<double> epsilons;
  std::vector<ProbePoint> probes;
  std::vector<std::vector<double>> values;  // [probe][epsilon]
  std::vector<int> offaxis_flags;
  std::vector<int> onaxis_growth;
  bool ok = true;  // no off-axis flags
};
AxisOffaxisReport axis_vs_offaxis_report(const std::vector<DirectorState>& directors,
                                         const std::vector<double>& epsilons,
                                         const MeridianGrid& grid,
                                         const std::vector<ProbePoint>& probes);

}  // namespace elax
