#include "elax/scenario.hpp"

#include <cmath>

#include "elax/errors.hpp"
#include "elax/mms.hpp"

namespace elax {

namespace {

double bump01(double x, double a, double b) {
  if (x <= a || x >= b) return 0.0;
  double u = (x - a) * (b - x), w = b - a;
  return 16.0 * u * u / (w * w * w * w);
}

Field sample_angle(const std::function<double(double, double)>& phi, const MeridianGrid& grid) {
  Field f(grid.n_r, grid.n_z);
  for (int i = 0; i < grid.n_r; ++i)
    for (int j = 0; j < grid.n_z; ++j) f(i, j) = phi(grid.r(i), grid.z(j));
  return f;
}

}  // namespace

DirectorBc director_bc_from_angle(const std::function<double(double, double)>& phi,
                                  const MeridianGrid& grid) {
  DirectorBc bc;
  bc.phi.outer_r.resize(grid.n_z);
  bc.d_r.outer_r.resize(grid.n_z);
  bc.d_z.outer_r.resize(grid.n_z);
  for (int j = 0; j < grid.n_z; ++j) {
    double a = phi(grid.r_max, grid.z(j));
    bc.phi.outer_r[j] = a;
    bc.d_r.outer_r[j] = std::sin(a);
    bc.d_z.outer_r[j] = std::cos(a);
  }
  bc.phi.z_lo.resize(grid.n_r);
  bc.phi.z_hi.resize(grid.n_r);
  bc.d_r.z_lo.resize(grid.n_r);
  bc.d_r.z_hi.resize(grid.n_r);
  bc.d_z.z_lo.resize(grid.n_r);
  bc.d_z.z_hi.resize(grid.n_r);
  for (int i = 0; i < grid.n_r; ++i) {
    double lo = phi(grid.r(i), grid.z_min), hi = phi(grid.r(i), grid.z_max);
    bc.phi.z_lo[i] = lo;
    bc.phi.z_hi[i] = hi;
    bc.d_r.z_lo[i] = std::sin(lo);
    bc.d_r.z_hi[i] = std::sin(hi);
    bc.d_z.z_lo[i] = std::cos(lo);
    bc.d_z.z_hi[i] = std::cos(hi);
  }
  return bc;
}

Scenario make_scenario(const std::string& id, const ScenarioParams& params,
                       const MeridianGrid& grid) {
  Scenario sc;
  sc.id = id;
  sc.psi0 = Field(grid.n_r, grid.n_z);
  double L = grid.z_max - grid.z_min;
  double zmid = 0.5 * (grid.z_min + grid.z_max);

  std::function<double(double, double)> phi0;
  if (id == "uniform") {
    phi0 = [](double, double) { return 0.0; };
  } else if (id == "hedgehog") {
    if (params.lambda_core <= 0.0) throw ConfigError("hedgehog: lambda_core must be positive");
    double a = grid.z_min + 0.15 * L, b = grid.z_max - 0.15 * L;
    double lc = params.lambda_core;
    phi0 = [lc, a, b](double r, double z) {
      return 2.0 * std::atan(r / lc) * bump01(z, a, b);
    };
  } else if (id == "hedgehog_pair") {
    if (params.lambda_core <= 0.0)
      throw ConfigError("hedgehog_pair: lambda_core must be positive");
    double lc = params.lambda_core;
    double a1 = grid.z_min + 0.1 * L, b1 = zmid - 0.05 * L;
    double a2 = zmid + 0.05 * L, b2 = grid.z_max - 0.1 * L;
    phi0 = [lc, a1, b1, a2, b2](double r, double z) {
      return 2.0 * std::atan(r / lc) * (bump01(z, a1, b1) - bump01(z, a2, b2));
    };
  } else if (id == "axis_defect") {
    if (params.sign != 1.0 && params.sign != -1.0)
      throw ConfigError("axis_defect: sign must be +1 or -1");
    double s = params.sign;
    // Point defect on the axis at z = zmid: the angle winds through pi along
    // the axis (phi(0,z) jumps between the branches 0 and pi).
    phi0 = [s, zmid](double r, double z) { return s * std::atan2(r, -(z - zmid)); };
  } else if (id == "vortex_ring") {
    if (params.amplitude == 0.0 || params.radius <= 0.0)
      throw ConfigError("vortex_ring: need nonzero amplitude and positive radius");
    double rc = 0.5 * grid.r_max, w = params.radius;
    double ra = std::max(0.0, rc - w), rb = std::min(grid.r_max, rc + w);
    double za = std::max(grid.z_min, zmid - w), zb = std::min(grid.z_max, zmid + w);
    for (int i = 0; i < grid.n_r; ++i) {
      double r = grid.r(i);
      for (int j = 0; j < grid.n_z; ++j)
        sc.psi0(i, j) =
            params.amplitude * r * r * bump01(r, ra, rb) * bump01(grid.z(j), za, zb);
    }
    phi0 = [](double, double) { return 0.0; };
  } else if (id == "manufactured") {
    Field src(grid.n_r, grid.n_z);
    for (int i = 0; i < grid.n_r; ++i)
      for (int j = 0; j < grid.n_z; ++j)
        src(i, j) = mms_source(grid.r(i), grid.z(j), params.amplitude, grid.r_max, grid.z_min,
                               grid.z_max);
    sc.vorticity_source = std::move(src);
    phi0 = [](double, double) { return 0.0; };
  } else {
    throw ConfigError("unknown scenario id: " + id);
  }

  sc.phi0 = sample_angle(phi0, grid);
  sc.bc = director_bc_from_angle(phi0, grid);
  return sc;
}

}  // namespace elax
