#include <cmath>

#include "doctest.h"
#include "elax/concentration.hpp"

using namespace elax;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("poly-disc energy of a constant density is exact on aligned boxes") {
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, 64, 64);
  Field one = grid.make_field(1.0);
  double r0 = grid.r(31), z0 = grid.z(31);
  // delta = (m + 1/2) h captures exactly (2m+1)^2 cells; the midpoint sum then
  // equals the continuum integral 4 r0 delta^2.
  for (int m : {2, 5, 9}) {
    double delta = (m + 0.5) * grid.h_r;
    double exact = 4.0 * r0 * delta * delta;
    CHECK(poly_disc_energy(one, grid, r0, z0, delta) == doctest::Approx(exact).epsilon(1e-12));
  }
}

TEST_CASE("scaled ball energy of a constant density matches the ball volume") {
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, 96, 96);
  Field one = grid.make_field(1.0);
  double R = 0.2;
  // R^-1 * vol(B_R) = (4/3) pi R^2, for balls fully inside the domain.
  double exact = 4.0 / 3.0 * kPi * R * R;
  CHECK(local_scaled_energy(one, grid, 0.5, 0.5, R) == doctest::Approx(exact).epsilon(0.01));
  // Axis-centered ball: same closed form (the ball may cross r = 0).
  CHECK(local_scaled_energy(one, grid, 0.0, 0.5, R) == doctest::Approx(exact).epsilon(0.01));
}

TEST_CASE("theta max locates an isolated hot cell") {
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, 32, 32);
  Field f = grid.make_field(0.01);
  f(20, 11) = 50.0;
  SearchBox box{0.1, 0.9, 0.1, 0.9};
  // Half-width below h/2: each candidate box holds exactly one cell.
  ThetaResult res = theta_max(f, grid, box, 0.4 * grid.h_r);
  CHECK(res.r == doctest::Approx(grid.r(20)));
  CHECK(res.z == doctest::Approx(grid.z(11)));
}

TEST_CASE("theta max is monotone in the box half-width") {
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, 32, 32);
  Field f = grid.make_field();
  for (int i = 0; i < 32; ++i)
    for (int j = 0; j < 32; ++j) f(i, j) = std::sin(3.0 * i) * std::sin(3.0 * i) + 0.1 * j;
  SearchBox box{0.2, 0.8, 0.2, 0.8};
  double prev = -1.0;
  for (double lam : {0.05, 0.1, 0.15, 0.2}) {
    double v = theta_max(f, grid, box, lam).value;
    CHECK(v >= prev - 1e-12);
    prev = v;
  }
}

TEST_CASE("blow-up scale matches the half-mass oracle for a synthetic bump") {
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, 96, 96);
  // Narrow bump at moderately large r: keeps the r-weighted maximizer within
  // one cell of the bump center while the extraction scale stays resolved.
  double r0 = grid.r(67), z0 = grid.z(48), sigma = 5.0 * grid.h_r;
  Field density = grid.make_field();
  for (int i = 0; i < grid.n_r; ++i)
    for (int j = 0; j < grid.n_z; ++j) {
      double dr = grid.r(i) - r0, dz = grid.z(j) - z0;
      density(i, j) = std::exp(-(dr * dr + dz * dz) / (2.0 * sigma * sigma));
    }
  auto mass = [&](double lam) {
    double e = std::erf(lam / (sigma * std::sqrt(2.0)));
    return 2.0 * kPi * sigma * sigma * r0 * e * e;
  };
  double target = mass(1.2 * sigma);
  SearchBox box{0.3, 0.95, 0.2, 0.8};
  auto scale = extract_blowup_scale(density, grid, box, target * 40.0, 40.0);
  REQUIRE(scale.has_value());
  CHECK(std::abs(scale->r - r0) <= grid.h_r * 1.001);
  CHECK(std::abs(scale->z - z0) <= grid.h_z * 1.001);
  CHECK(scale->lambda_e == doctest::Approx(1.2 * sigma).epsilon(0.15));
}

TEST_CASE("no concentration scale on a flat weak field") {
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, 32, 32);
  Field f = grid.make_field(1e-8);
  SearchBox box{0.2, 0.8, 0.2, 0.8};
  CHECK_FALSE(extract_blowup_scale(f, grid, box, 1.0, 40.0).has_value());
}

TEST_CASE("regime classification thresholds") {
  CHECK(classify_regime(2.0, 0.1).name() == "penalty_dominant");
  CHECK(classify_regime(0.005, 0.1).name() == "diffusion_dominant");
  CHECK(classify_regime(0.1, 0.1).name().rfind("balanced", 0) == 0);
  CHECK(classify_regime(0.1, 0.1).ratio == doctest::Approx(1.0));
}

TEST_CASE("rescaled window of a constant director is flat") {
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, 32, 32);
  DirectorState d;
  d.rep = DirectorState::Rep::gl;
  d.d_r = grid.make_field(0.0);
  d.d_z = grid.make_field(1.0);
  RescaledWindow w = rescale_fields(d, grid, 0.05, 0.5, 0.5, 2.0, 8);
  for (int iy = 0; iy <= 2 * w.n; ++iy)
    for (int ix = 0; ix <= 2 * w.n; ++ix)
      CHECK(w.q[w.index(ix, iy)] == doctest::Approx(1.0).epsilon(1e-12));
}
