#include "elax/grid.hpp"

#include <algorithm>
#include <string>

#include "elax/errors.hpp"

namespace elax {

MeridianGrid build_grid(double r_max, double z_min, double z_max, int n_r, int n_z) {
  if (r_max <= 0.0) throw ConfigError("build_grid: r_max must be positive");
  if (z_max <= z_min) throw ConfigError("build_grid: z_max must exceed z_min");
  if (n_r < 4 || n_z < 4)
    throw ConfigError("build_grid: n_r and n_z must be at least 4, got " + std::to_string(n_r) +
                      "x" + std::to_string(n_z));
  MeridianGrid g;
  g.r_max = r_max;
  g.z_min = z_min;
  g.z_max = z_max;
  g.n_r = n_r;
  g.n_z = n_z;
  g.h_r = r_max / n_r;
  g.h_z = (z_max - z_min) / n_z;
  return g;
}

double integrate_meridian(const Field& f, const MeridianGrid& grid) {
  if (f.nr() != grid.n_r || f.nz() != grid.n_z)
    throw AnalysisError("integrate_meridian: field dimensions do not match grid");
  double total = 0.0;
  for (int i = 0; i < grid.n_r; ++i) {
    double w = grid.cell_weight(i);
    double row = 0.0;
    for (int j = 0; j < grid.n_z; ++j) row += f(i, j);
    total += w * row;
  }
  return total;
}

namespace {

double axis_value_for_row(const GhostSpec& spec, int j, int nz) {
  if (spec.axis_values) {
    int jc = std::clamp(j, 0, nz - 1);
    return (*spec.axis_values)[jc];
  }
  return spec.axis_value;
}

double trace_at(const std::vector<double>& v, int i, int n) {
  return v[std::clamp(i, 0, n - 1)];
}

}  // namespace

void fill_ghosts(Field& f, const MeridianGrid& grid, const GhostSpec& spec) {
  const int nr = grid.n_r, nz = grid.n_z;
  if (f.nr() != nr || f.nz() != nz)
    throw AnalysisError("fill_ghosts: field dimensions do not match grid");
  if (spec.outer == OuterBc::dirichlet && spec.trace) {
    if (static_cast<int>(spec.trace->outer_r.size()) != nz ||
        static_cast<int>(spec.trace->z_lo.size()) != nr ||
        static_cast<int>(spec.trace->z_hi.size()) != nr)
      throw AnalysisError("fill_ghosts: boundary trace sizes do not match grid");
  }

  // Dirichlet ghosts come from the quadratic through the wall value and the
  // first two interior cells. A linear (2g - interior) ghost leaves a generic
  // O(h^2) error in the wall cells of an elliptic solve; wall-vorticity
  // formulas divide such errors by h^2, so the extra order here is what keeps
  // the coupled stream-function/vorticity scheme second order.
  //   ghost1 = (8g - 6 f0 + f1)/3,   ghost2 = 8g - 9 f0 + 2 f1.
  static_assert(Field::HALO == 2, "Dirichlet ghost fill assumes a halo of two");

  // z walls first (interior columns), then the r direction across the full
  // extended j range so corner ghosts get consistent values.
  for (int i = 0; i < nr; ++i) {
    if (spec.outer == OuterBc::dirichlet) {
      double glo = spec.trace ? trace_at(spec.trace->z_lo, i, nr) : spec.outer_value;
      double ghi = spec.trace ? trace_at(spec.trace->z_hi, i, nr) : spec.outer_value;
      f(i, -1) = (8.0 * glo - 6.0 * f(i, 0) + f(i, 1)) / 3.0;
      f(i, -2) = 8.0 * glo - 9.0 * f(i, 0) + 2.0 * f(i, 1);
      f(i, nz) = (8.0 * ghi - 6.0 * f(i, nz - 1) + f(i, nz - 2)) / 3.0;
      f(i, nz + 1) = 8.0 * ghi - 9.0 * f(i, nz - 1) + 2.0 * f(i, nz - 2);
    } else {
      for (int k = 1; k <= Field::HALO; ++k) {
        f(i, -k) = f(i, k - 1);
        f(i, nz - 1 + k) = f(i, nz - k);
      }
    }
  }
  for (int j = -Field::HALO; j < nz + Field::HALO; ++j) {
    for (int k = 1; k <= Field::HALO; ++k) {
      if (spec.parity == Parity::even) {
        f(-k, j) = f(k - 1, j);
      } else {
        f(-k, j) = 2.0 * axis_value_for_row(spec, j, nz) - f(k - 1, j);
      }
    }
    if (spec.outer == OuterBc::dirichlet) {
      double g = spec.trace ? trace_at(spec.trace->outer_r, j, nz) : spec.outer_value;
      f(nr, j) = (8.0 * g - 6.0 * f(nr - 1, j) + f(nr - 2, j)) / 3.0;
      f(nr + 1, j) = 8.0 * g - 9.0 * f(nr - 1, j) + 2.0 * f(nr - 2, j);
    } else {
      for (int k = 1; k <= Field::HALO; ++k) f(nr - 1 + k, j) = f(nr - k, j);
    }
  }
}

}  // namespace elax
