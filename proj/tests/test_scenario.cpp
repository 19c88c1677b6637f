#include <cmath>

#include "doctest.h"
#include "elax/errors.hpp"
#include "elax/scenario.hpp"

using namespace elax;

TEST_CASE("unknown scenario ids are rejected") {
  MeridianGrid grid = build_grid(1.0, -1.0, 1.0, 16, 32);
  CHECK_THROWS_AS(make_scenario("bogus", ScenarioParams{}, grid), ConfigError);
}

TEST_CASE("scenario library produces axis-compatible angles") {
  MeridianGrid grid = build_grid(1.0, -1.0, 1.0, 32, 64);
  for (const char* id : {"uniform", "hedgehog", "hedgehog_pair", "vortex_ring"}) {
    Scenario sc = make_scenario(id, ScenarioParams{}, grid);
    CHECK(sc.id == id);
    // phi0 near the axis must sit close to a multiple of pi so the Cartesian
    // director stays single-valued across r = 0.
    for (int j = 0; j < grid.n_z; ++j) {
      double phi = sc.phi0(0, j);
      double dist = std::abs(std::remainder(phi, 3.14159265358979323846));
      CHECK(dist <= 0.2);  // first cell center sits h/2 off the axis
    }
    CHECK_FALSE(sc.vorticity_source.has_value());
  }
  // The axis defect family is only axis-compatible away from the defect row,
  // where phi tends to 0 (below) or pi (above).
  Scenario def = make_scenario("axis_defect", ScenarioParams{}, grid);
  CHECK(std::abs(def.phi0(0, 0)) <= 0.1);
  CHECK(std::abs(def.phi0(0, grid.n_z - 1) - 3.14159265358979323846) <= 0.1);
}

TEST_CASE("manufactured scenario carries a vorticity source") {
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, 16, 16);
  Scenario sc = make_scenario("manufactured", ScenarioParams{}, grid);
  CHECK(sc.vorticity_source.has_value());
  CHECK(sc.vorticity_source->max_abs_interior() > 0.0);
}

TEST_CASE("vortex ring stream function vanishes near all walls") {
  MeridianGrid grid = build_grid(1.0, -1.0, 1.0, 32, 64);
  Scenario sc = make_scenario("vortex_ring", ScenarioParams{}, grid);
  CHECK(sc.psi0.max_abs_interior() > 0.0);
  for (int j = 0; j < grid.n_z; ++j)
    CHECK(std::abs(sc.psi0(grid.n_r - 1, j)) <= 1e-12);
  for (int i = 0; i < grid.n_r; ++i) {
    CHECK(std::abs(sc.psi0(i, 0)) <= 1e-12);
    CHECK(std::abs(sc.psi0(i, grid.n_z - 1)) <= 1e-12);
  }
}

TEST_CASE("axis defect flips with its sign parameter") {
  MeridianGrid grid = build_grid(1.0, -1.0, 1.0, 16, 32);
  ScenarioParams plus, minus;
  minus.sign = -1.0;
  Scenario a = make_scenario("axis_defect", plus, grid);
  Scenario b = make_scenario("axis_defect", minus, grid);
  CHECK(a.phi0(8, 8) == doctest::Approx(-b.phi0(8, 8)));
  ScenarioParams bad;
  bad.sign = 0.5;
  CHECK_THROWS_AS(make_scenario("axis_defect", bad, grid), ConfigError);
}
