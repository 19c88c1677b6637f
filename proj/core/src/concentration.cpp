#include "elax/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "elax/diagnostics.hpp"
#include "elax/errors.hpp"

namespace elax {

namespace {

// Arc half-angle of the theta-interval of cell (r, z) inside the ball of
// radius R centered at (r0, 0, z0); 0 when disjoint, pi when the full circle
// is inside.
double arc_half_angle(double r, double z, double r0, double z0, double R) {
  double wz = z - z0;
  double denom = 2.0 * r * r0;
  if (denom < 1e-300) return (r * r + r0 * r0 + wz * wz <= R * R) ? M_PI : 0.0;
  double c = (r * r + r0 * r0 + wz * wz - R * R) / denom;
  if (c >= 1.0) return 0.0;
  if (c <= -1.0) return M_PI;
  return std::acos(c);
}

void check_ball(const MeridianGrid& grid, double r0, double z0, double radius) {
  if (radius <= 0.0) throw AnalysisError("scaled energy: radius must be positive");
  if (r0 < 0.0 || r0 + radius > grid.r_max || z0 - radius < grid.z_min ||
      z0 + radius > grid.z_max)
    throw AnalysisError("scaled energy: ball exits the domain");
}

}  // namespace

double local_scaled_energy(const Field& density, const MeridianGrid& grid, double r0, double z0,
                           double radius) {
  check_ball(grid, r0, z0, radius);
  double acc = 0.0;
  for (int i = 0; i < grid.n_r; ++i) {
    double r = grid.r(i);
    for (int j = 0; j < grid.n_z; ++j) {
      double th = arc_half_angle(r, grid.z(j), r0, z0, radius);
      if (th > 0.0) acc += 2.0 * th * r * grid.h_r * grid.h_z * density(i, j);
    }
  }
  return acc / radius;
}

double local_scaled_energy(const DirectorState& director, const MeridianGrid& grid,
                           double epsilon, double r0, double z0, double radius) {
  return local_scaled_energy(energy_density(director, grid, epsilon), grid, r0, z0, radius);
}

double poly_disc_energy(const Field& density, const MeridianGrid& grid, double r0, double z0,
                        double delta) {
  if (delta <= 0.0) throw AnalysisError("poly_disc_energy: delta must be positive");
  if (r0 - delta < -1e-12 || r0 + delta > grid.r_max + 1e-12 || z0 - delta < grid.z_min - 1e-12 ||
      z0 + delta > grid.z_max + 1e-12)
    throw AnalysisError("poly_disc_energy: box exits the domain");
  auto lo_r = static_cast<int>(std::ceil((r0 - delta) / grid.h_r - 0.5 - 1e-9));
  auto hi_r = static_cast<int>(std::floor((r0 + delta) / grid.h_r - 0.5 + 1e-9));
  auto lo_z = static_cast<int>(std::ceil((z0 - delta - grid.z_min) / grid.h_z - 0.5 - 1e-9));
  auto hi_z = static_cast<int>(std::floor((z0 + delta - grid.z_min) / grid.h_z - 0.5 + 1e-9));
  lo_r = std::max(lo_r, 0);
  hi_r = std::min(hi_r, grid.n_r - 1);
  lo_z = std::max(lo_z, 0);
  hi_z = std::min(hi_z, grid.n_z - 1);
  double acc = 0.0;
  for (int i = lo_r; i <= hi_r; ++i) {
    double w = grid.r(i) * grid.h_r * grid.h_z;
    for (int j = lo_z; j <= hi_z; ++j) acc += w * density(i, j);
  }
  return acc;
}

double poly_disc_energy(const DirectorState& director, const MeridianGrid& grid, double epsilon,
                        double r0, double z0, double delta) {
  return poly_disc_energy(energy_density(director, grid, epsilon), grid, r0, z0, delta);
}

ThetaResult theta_max(const Field& density, const MeridianGrid& grid, const SearchBox& box,
                      double lambda) {
  if (lambda <= 0.0) throw AnalysisError("theta_max: lambda must be positive");
  const int nr = grid.n_r, nz = grid.n_z;
  // Prefix sums of e * r * h_r * h_z for O(1) box sums.
  std::vector<double> pre((nr + 1) * (nz + 1), 0.0);
  auto P = [&](int i, int j) -> double& { return pre[i * (nz + 1) + j]; };
  for (int i = 0; i < nr; ++i) {
    double w = grid.r(i) * grid.h_r * grid.h_z;
    for (int j = 0; j < nz; ++j)
      P(i + 1, j + 1) = P(i, j + 1) + P(i + 1, j) - P(i, j) + w * density(i, j);
  }
  auto box_sum = [&](int i0, int i1, int j0, int j1) {
    i0 = std::max(i0, 0);
    j0 = std::max(j0, 0);
    i1 = std::min(i1, nr - 1);
    j1 = std::min(j1, nz - 1);
    if (i0 > i1 || j0 > j1) return 0.0;
    return P(i1 + 1, j1 + 1) - P(i0, j1 + 1) - P(i1 + 1, j0) + P(i0, j0);
  };

  ThetaResult best;
  bool found = false;
  for (int ic = 0; ic < nr; ++ic) {
    double rc = grid.r(ic);
    if (rc < box.r_lo - 1e-12 || rc > box.r_hi + 1e-12) continue;
    int i0 = static_cast<int>(std::ceil((rc - lambda) / grid.h_r - 0.5 - 1e-9));
    int i1 = static_cast<int>(std::floor((rc + lambda) / grid.h_r - 0.5 + 1e-9));
    for (int jc = 0; jc < nz; ++jc) {
      double zc = grid.z(jc);
      if (zc < box.z_lo - 1e-12 || zc > box.z_hi + 1e-12) continue;
      int j0 = static_cast<int>(std::ceil((zc - lambda - grid.z_min) / grid.h_z - 0.5 - 1e-9));
      int j1 = static_cast<int>(std::floor((zc + lambda - grid.z_min) / grid.h_z - 0.5 + 1e-9));
      double v = box_sum(i0, i1, j0, j1);
      if (!found || v > best.value) {
        best = {v, rc, zc};
        found = true;
      }
    }
  }
  if (!found) throw AnalysisError("theta_max: search box contains no cell centers");
  return best;
}

std::optional<BlowupScale> extract_blowup_scale(const Field& density, const MeridianGrid& grid,
                                                const SearchBox& box, double eps0_sq,
                                                double c_star) {
  if (eps0_sq <= 0.0 || c_star <= 0.0)
    throw AnalysisError("extract_blowup_scale: thresholds must be positive");
  double threshold = eps0_sq / c_star;
  double lambda_max = 0.5 * std::min(box.r_hi - box.r_lo, box.z_hi - box.z_lo);
  if (lambda_max <= 0.0) throw AnalysisError("extract_blowup_scale: degenerate search box");
  ThetaResult top = theta_max(density, grid, box, lambda_max);
  if (top.value < threshold) return std::nullopt;

  double lo = 0.0, hi = lambda_max;
  ThetaResult at_hi = top;
  // Absolute tolerance: a relative one never terminates when the threshold is
  // already met by a single cell (lo pinned at 0 while hi halves forever).
  while (hi - lo > 1e-3 * lambda_max) {
    double mid = 0.5 * (lo + hi);
    ThetaResult t = theta_max(density, grid, box, mid);
    if (t.value >= threshold) {
      hi = mid;
      at_hi = t;
    } else {
      lo = mid;
    }
  }
  return BlowupScale{hi, at_hi.r, at_hi.z, at_hi.value};
}

RescaledWindow rescale_fields(const DirectorState& director, const MeridianGrid& grid,
                              double lambda_e, double r0, double z0, double window_radius,
                              int n_samples) {
  if (lambda_e <= 0.0 || window_radius <= 0.0 || n_samples < 1)
    throw AnalysisError("rescale_fields: invalid window parameters");
  double W = lambda_e * window_radius;
  if (r0 - W < -1e-12 || r0 + W > grid.r_max + 1e-12 || z0 - W < grid.z_min - 1e-12 ||
      z0 + W > grid.z_max + 1e-12)
    throw AnalysisError("rescale_fields: window exits the domain");

  Field rho(grid.n_r, grid.n_z, 1.0), phi(grid.n_r, grid.n_z);
  if (director.rep == DirectorState::Rep::sphere) {
    phi = director.phi;
  } else {
    auto [rr, pp] = cartesian_to_polar(director);
    rho = rr;
    phi = pp;
  }
  GhostSpec rho_spec;
  rho_spec.parity = Parity::even;
  rho_spec.outer = OuterBc::neumann;
  fill_ghosts(rho, grid, rho_spec);
  GhostSpec phi_spec;
  phi_spec.parity = Parity::odd;
  auto branch = axis_branch_values(phi);
  phi_spec.axis_values = &branch;
  phi_spec.outer = OuterBc::neumann;
  fill_ghosts(phi, grid, phi_spec);

  auto sample = [&](const Field& f, double rp, double zp) {
    double xi = rp / grid.h_r - 0.5;
    double yj = (zp - grid.z_min) / grid.h_z - 0.5;
    int i = static_cast<int>(std::floor(xi));
    int j = static_cast<int>(std::floor(yj));
    i = std::clamp(i, -1, grid.n_r - 1);
    j = std::clamp(j, -1, grid.n_z - 1);
    double fx = xi - i, fy = yj - j;
    return (1 - fx) * (1 - fy) * f(i, j) + fx * (1 - fy) * f(i + 1, j) +
           (1 - fx) * fy * f(i, j + 1) + fx * fy * f(i + 1, j + 1);
  };

  RescaledWindow out;
  out.n = n_samples;
  out.window_radius = window_radius;
  out.lambda_e = lambda_e;
  out.r0 = r0;
  out.z0 = z0;
  int m = 2 * n_samples + 1;
  out.q.resize(m * m);
  out.psi_angle.resize(m * m);
  double hw = window_radius / n_samples;
  for (int iy = 0; iy < m; ++iy) {
    double y = (iy - n_samples) * hw;
    for (int ix = 0; ix < m; ++ix) {
      double x = (ix - n_samples) * hw;
      double rp = r0 + lambda_e * x, zp = z0 + lambda_e * y;
      out.q[out.index(ix, iy)] = sample(rho, rp, zp);
      out.psi_angle[out.index(ix, iy)] = sample(phi, rp, zp);
    }
  }
  return out;
}

std::string RegimeLabel::name() const {
  switch (regime) {
    case Regime::penalty_dominant:
      return "penalty_dominant";
    case Regime::diffusion_dominant:
      return "diffusion_dominant";
    default: {
      char buf[48];
      std::snprintf(buf, sizeof(buf), "balanced(%.6g)", ratio);
      return buf;
    }
  }
}

RegimeLabel classify_regime(double lambda_e, double epsilon) {
  if (lambda_e <= 0.0 || epsilon <= 0.0)
    throw AnalysisError("classify_regime: scales must be positive");
  RegimeLabel out;
  out.ratio = lambda_e / epsilon;
  if (out.ratio >= 10.0)
    out.regime = Regime::penalty_dominant;
  else if (out.ratio <= 0.1)
    out.regime = Regime::diffusion_dominant;
  else
    out.regime = Regime::balanced;
  return out;
}

AxisOffaxisReport axis_vs_offaxis_report(const std::vector<DirectorState>& directors,
                                         const std::vector<double>& epsilons,
                                         const MeridianGrid& grid,
                                         const std::vector<ProbePoint>& probes) {
  if (directors.size() != epsilons.size() || directors.empty())
    throw AnalysisError("axis_vs_offaxis_report: need one director per epsilon");
  for (std::size_t k = 1; k < epsilons.size(); ++k)
    if (epsilons[k] >= epsilons[k - 1])
      throw AnalysisError("axis_vs_offaxis_report: epsilon list must decrease");

  AxisOffaxisReport rep;
  rep.epsilons = epsilons;
  rep.probes = probes;
  rep.values.assign(probes.size(), std::vector<double>(epsilons.size(), 0.0));
  for (std::size_t k = 0; k < epsilons.size(); ++k) {
    Field density = energy_density(directors[k], grid, epsilons[k]);
    for (std::size_t p = 0; p < probes.size(); ++p)
      rep.values[p][k] =
          local_scaled_energy(density, grid, probes[p].r, probes[p].z, probes[p].radius);
  }
  for (std::size_t p = 0; p < probes.size(); ++p) {
    bool growing = epsilons.size() >= 2;
    for (std::size_t k = 1; k < epsilons.size(); ++k)
      if (!(rep.values[p][k] >= 2.0 * rep.values[p][k - 1] && rep.values[p][k] > 0.0))
        growing = false;
    if (!growing) continue;
    bool off_axis = probes[p].r > probes[p].radius;
    if (off_axis) {
      rep.offaxis_flags.push_back(static_cast<int>(p));
      rep.ok = false;
    } else {
      rep.onaxis_growth.push_back(static_cast<int>(p));
    }
  }
  return rep;
}

}  // namespace elax
