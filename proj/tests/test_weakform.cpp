#include <cmath>

#include "doctest.h"
#include "elax/errors.hpp"
#include "elax/scenario.hpp"
#include "elax/weakform.hpp"

using namespace elax;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("bump derivatives agree with central differences") {
  Bump1D b{0.3, 1.1};
  double h = 1e-6;
  for (double x : {0.35, 0.6, 0.9, 1.05}) {
    double d_fd = (b.val(x + h) - b.val(x - h)) / (2 * h);
    double d2_fd = (b.val(x + h) - 2 * b.val(x) + b.val(x - h)) / (h * h);
    CHECK(b.dval(x) == doctest::Approx(d_fd).epsilon(1e-7));
    CHECK(b.d2val(x) == doctest::Approx(d2_fd).epsilon(1e-3));
  }
  CHECK(b.val(0.3) == 0.0);
  CHECK(b.val(1.1) == 0.0);
  CHECK(b.val(0.7) == doctest::Approx(1.0));
  CHECK(b.val(0.2) == 0.0);
}

TEST_CASE("test functions are admissible at the axis and reject wall support") {
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, 32, 32);
  auto lib = test_function_library(grid, 1.0);
  REQUIRE(lib.size() == 5);
  for (const auto& fn : lib) {
    double t = 0.5 * (fn.time_profile().a + fn.time_profile().b);
    // Phi^r = -psi_z / r vanishes linearly at the axis thanks to the r^2
    // prefactor of the stream profile.
    CHECK(std::abs(fn.phi_r(1e-9, 0.5, t)) <= 1e-6);
    auto [phi_r, phi_z] = sample_test_function(fn, grid, t);
    (void)phi_r;
    (void)phi_z;
  }
  PoloidalTestFunction bad(99, Bump1D{0.5, 1.2}, Bump1D{0.3, 0.7}, Bump1D{0.1, 0.9});
  CHECK_THROWS_AS(sample_test_function(bad, grid, 0.5), AnalysisError);
}

TEST_CASE("cutoff profile has the logarithmic capacity") {
  for (double k : {1e2, 1e4, 1e6}) {
    CutoffProfile eta = cutoff_eta(k);
    CHECK(eta.eta(0.5 / k) == doctest::Approx(1.0));
    CHECK(eta.eta(2.0 / std::sqrt(k)) == 0.0);
    CHECK(eta.grad_norm_sq_exact() == doctest::Approx(4.0 * kPi / std::log(k)).epsilon(1e-12));
    // Midpoint quadrature in log r across the transition annulus.
    const int N = 4000;
    double s_lo = std::log(1.0 / k), s_hi = -0.5 * std::log(k);
    double ds = (s_hi - s_lo) / N, acc = 0.0;
    for (int q = 0; q < N; ++q) {
      double r = std::exp(s_lo + (q + 0.5) * ds);
      acc += 2.0 * kPi * eta.deta(r) * eta.deta(r) * r * r * ds;
    }
    CHECK(acc == doctest::Approx(eta.grad_norm_sq_exact()).epsilon(1e-3));
  }
  CHECK_THROWS_AS(cutoff_eta(1.0), AnalysisError);
}

TEST_CASE("axis-concentrating force keeps an epsilon-stable meridian mass") {
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, 256, 32);
  std::vector<double> masses;
  for (double eps : {0.1, 0.05}) {
    Field f = axis_concentrating_force(grid, eps);
    double m = 0.0;
    for (int i = 0; i < grid.n_r; ++i)
      for (int j = 0; j < grid.n_z; ++j)
        m += std::abs(f(i, j)) * grid.r(i) * grid.h_r * grid.h_z;
    masses.push_back(m);
  }
  CHECK(masses[0] == doctest::Approx(masses[1]).epsilon(0.02));
}

TEST_CASE("cancellation pairings shrink linearly in epsilon") {
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, 256, 32);
  std::vector<double> eps = {0.1, 0.05};
  std::vector<Field> f_r, f_z;
  for (double e : eps) {
    f_r.push_back(axis_concentrating_force(grid, e));
    f_z.push_back(grid.make_field());
  }
  auto lib = test_function_library(grid, 1.0);
  double t = 0.5 * (lib[0].time_profile().a + lib[0].time_profile().b);
  CancellationReport rep = cancellation_experiment(f_r, f_z, eps, grid, lib[0], {1e2}, t);
  double slope0 = std::abs(rep.pairing_r[0]) / eps[0];
  double slope1 = std::abs(rep.pairing_r[1]) / eps[1];
  CHECK(slope0 == doctest::Approx(slope1).epsilon(0.15));
}

TEST_CASE("momentum residual vanishes for the trivial stationary state") {
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, 16, 16);
  Trajectory still;
  still.grid = grid;
  still.params.mode = RunParameters::Mode::sphere;
  still.params.dt = 1e-3;
  still.bc = director_bc_from_angle([](double, double) { return 0.0; }, grid);
  for (double t : {0.0, 0.01}) {
    Snapshot s;
    s.time = t;
    s.state.flow = {grid.make_field(), grid.make_field(), grid.make_field(), grid.make_field()};
    s.state.director.rep = DirectorState::Rep::sphere;
    s.state.director.phi = grid.make_field();
    sync_sphere_components(s.state.director);
    s.tau_r = grid.make_field();
    s.tau_z = grid.make_field();
    still.snapshots.push_back(std::move(s));
  }
  for (const auto& fn : test_function_library(grid, 0.01))
    CHECK(std::abs(weak_momentum_residual(still, fn)) <= 1e-12);
}
