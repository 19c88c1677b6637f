#include <cmath>

#include "doctest.h"
#include "elax/grid.hpp"

using namespace elax;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("meridian quadrature reproduces solid-of-revolution integrals") {
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, 64, 64);
  CHECK(grid.h_r == doctest::Approx(1.0 / 64).epsilon(1e-14));
  CHECK(grid.r(0) == doctest::Approx(0.5 / 64).epsilon(1e-14));

  // Unit cylinder volume: 2 pi int_0^1 int_0^1 r dr dz = pi. Midpoint rule is
  // exact for linear integrands.
  Field one = grid.make_field(1.0);
  CHECK(integrate_meridian(one, grid) == doctest::Approx(kPi).epsilon(1e-13));

  // f = r: 2 pi int r^2 dr dz = 2 pi / 3, midpoint error O(h^2).
  Field f = grid.make_field();
  for (int i = 0; i < grid.n_r; ++i)
    for (int j = 0; j < grid.n_z; ++j) f(i, j) = grid.r(i);
  CHECK(integrate_meridian(f, grid) == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-4));
}

TEST_CASE("ghost fill respects axis parity and wall conditions") {
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, 16, 16);
  Field f = grid.make_field();
  for (int i = 0; i < grid.n_r; ++i)
    for (int j = 0; j < grid.n_z; ++j) f(i, j) = grid.r(i) + 2.0;

  GhostSpec even{Parity::even, 0.0, nullptr, OuterBc::neumann, 0.0, nullptr};
  fill_ghosts(f, grid, even);
  for (int j = 0; j < grid.n_z; ++j) {
    CHECK(f(-1, j) == doctest::Approx(f(0, j)).epsilon(1e-14));
    CHECK(f(-2, j) == doctest::Approx(f(1, j)).epsilon(1e-14));
    CHECK(f(grid.n_r, j) == doctest::Approx(f(grid.n_r - 1, j)).epsilon(1e-14));
  }

  GhostSpec odd{Parity::odd, 0.25, nullptr, OuterBc::dirichlet, 1.5, nullptr};
  fill_ghosts(f, grid, odd);
  for (int j = 0; j < grid.n_z; ++j) {
    CHECK(f(-1, j) == doctest::Approx(2.0 * 0.25 - f(0, j)).epsilon(1e-14));
    // Dirichlet walls use the quadratic through the wall value and the first
    // two interior cells; on a field linear in r that quadratic is exact up
    // to the extrapolated slope.
    int nr = grid.n_r;
    CHECK(f(nr, j) ==
          doctest::Approx((8.0 * 1.5 - 6.0 * f(nr - 1, j) + f(nr - 2, j)) / 3.0).epsilon(1e-14));
    CHECK(f(nr + 1, j) ==
          doctest::Approx(8.0 * 1.5 - 9.0 * f(nr - 1, j) + 2.0 * f(nr - 2, j)).epsilon(1e-14));
  }
}

TEST_CASE("ghost fill takes per-row axis branch values and wall traces") {
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, 8, 8);
  Field f = grid.make_field(0.3);
  std::vector<double> branch(grid.n_z);
  for (int j = 0; j < grid.n_z; ++j) branch[j] = (j % 2) * kPi;
  BoundaryTrace trace;
  trace.outer_r.assign(grid.n_z, 0.7);
  trace.z_lo.assign(grid.n_r, -0.1);
  trace.z_hi.assign(grid.n_r, 0.4);
  GhostSpec spec{Parity::odd, 0.0, &branch, OuterBc::dirichlet, 0.0, &trace};
  fill_ghosts(f, grid, spec);
  for (int j = 0; j < grid.n_z; ++j)
    CHECK(f(-1, j) == doctest::Approx(2.0 * branch[j] - f(0, j)).epsilon(1e-14));
  for (int i = 0; i < grid.n_r; ++i) {
    int nz = grid.n_z;
    CHECK(f(i, -1) == doctest::Approx((8.0 * (-0.1) - 6.0 * f(i, 0) + f(i, 1)) / 3.0).epsilon(1e-14));
    CHECK(f(i, nz) ==
          doctest::Approx((8.0 * 0.4 - 6.0 * f(i, nz - 1) + f(i, nz - 2)) / 3.0).epsilon(1e-14));
  }
}
