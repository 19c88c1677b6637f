#include <cmath>

#include "doctest.h"
#include "elax/diagnostics.hpp"
#include "elax/scenario.hpp"

using namespace elax;

TEST_CASE("hedgehog profile has the closed-form energy density") {
  // phi = 2 arctan(r / lc), z-independent: elastic density
  // (phi_r^2 + sin^2 phi / r^2)/2 = 4 lc^2 / (lc^2 + r^2)^2.
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, 64, 64);
  const double lc = 1.0;
  DirectorState d;
  d.rep = DirectorState::Rep::sphere;
  d.phi = grid.make_field();
  for (int i = 0; i < grid.n_r; ++i)
    for (int j = 0; j < grid.n_z; ++j) d.phi(i, j) = 2.0 * std::atan(grid.r(i) / lc);
  sync_sphere_components(d);
  DirectorBc bc = director_bc_from_angle(
      [lc](double r, double) { return 2.0 * std::atan(r / lc); }, grid);
  Field e = energy_density(d, grid, 0.1, &bc);
  for (int i = 0; i < grid.n_r; ++i) {
    double r = grid.r(i);
    double exact = 4.0 * lc * lc / std::pow(lc * lc + r * r, 2);
    CHECK(e(i, grid.n_z / 2) == doctest::Approx(exact).epsilon(5e-3));
  }
}

TEST_CASE("energy inequality check flags fabricated energy growth") {
  std::vector<DiagnosticsRecord> recs(4);
  for (int k = 0; k < 4; ++k) {
    recs[k].time = 0.1 * k;
    recs[k].e_el = 1.0 - 0.05 * k;  // decaying energy
    recs[k].d_visc = 0.0;
    recs[k].d_tension = 0.4;  // over-accounts the decay: residual stays negative
  }
  CHECK(check_energy_inequality(recs).ok);
  recs[3].e_el = 1.2;  // energy pops above E(0) with no matching dissipation
  EnergyReport bad = check_energy_inequality(recs);
  CHECK_FALSE(bad.ok);
  CHECK(bad.flagged.size() == 1);
  CHECK(bad.flagged[0] == 3);
}

TEST_CASE("good-time classification satisfies the measure bound") {
  std::vector<DiagnosticsRecord> recs(100);
  for (int k = 0; k < 100; ++k) {
    recs[k].time = 0.01 * k;
    recs[k].e_el = (k == 0) ? 2.0 : recs[0].e_el;
    recs[k].lambda_t = (k % 10 == 0) ? 50.0 : 1.0;  // 10% bad samples
  }
  GoodTimeReport rep = classify_good_times(recs, 10.0);
  CHECK(rep.bad_times.size() == 10);
  CHECK(rep.good_times.size() == 90);
  CHECK(rep.bad_fraction == doctest::Approx(0.1).epsilon(0.11));
  CHECK(rep.bound_holds);
}

TEST_CASE("almost-monotonicity rejects malformed ball radii") {
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, 16, 16);
  DirectorState d;
  d.rep = DirectorState::Rep::sphere;
  d.phi = grid.make_field();
  sync_sphere_components(d);
  TensionPair tau{grid.make_field(), grid.make_field()};
  CHECK_THROWS(almost_monotonicity(d, tau, grid, 0.5, 0.5, 0.3, 0.1, nullptr));
}

TEST_CASE("almost-monotonicity holds for a constant director") {
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, 32, 32);
  DirectorState d;
  d.rep = DirectorState::Rep::sphere;
  d.phi = grid.make_field();
  sync_sphere_components(d);
  TensionPair tau{grid.make_field(), grid.make_field()};
  MonotonicityReport rep = almost_monotonicity(d, tau, grid, 0.5, 0.5, 0.1, 0.2, nullptr);
  CHECK(rep.holds);
  CHECK(rep.weak_holds);
  CHECK(rep.psi_small == doctest::Approx(0.0).epsilon(1e-12));
}
