#include <cmath>

#include "doctest.h"
#include "elax/dynamics.hpp"
#include "elax/state.hpp"

using namespace elax;

TEST_CASE("rigid-column stream function gives unit axial velocity") {
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, 32, 32);
  Field psi(grid.n_r, grid.n_z);
  // Fill interior plus halos analytically; psi = r^2/2 is smooth across r = 0.
  for (int i = -2; i <= grid.n_r + 1; ++i)
    for (int j = -2; j <= grid.n_z + 1; ++j) {
      double r = grid.r(i);
      psi(i, j) = 0.5 * r * r;
    }
  auto [u_r, u_z] = velocity_from_streamfunction(psi, grid);
  for (int i = 0; i < grid.n_r; ++i)
    for (int j = 0; j < grid.n_z; ++j) {
      CHECK(u_r(i, j) == doctest::Approx(0.0).epsilon(1e-13));
      CHECK(u_z(i, j) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("streamfunction velocities are discretely divergence free") {
  MeridianGrid grid = build_grid(1.0, -1.0, 1.0, 24, 48);
  Field psi0 = grid.make_field();
  for (int i = 0; i < grid.n_r; ++i)
    for (int j = 0; j < grid.n_z; ++j) {
      double r = grid.r(i), z = grid.z(j);
      psi0(i, j) = r * r * z * std::exp(-2.0 * r) * std::cos(z);
    }
  FlowState flow = flow_from_streamfunction(psi0, grid);
  CHECK(max_divergence(flow.u_r, flow.u_z, grid) <= 1e-10);
}

TEST_CASE("vorticity of a linear shear is constant") {
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, 16, 16);
  Field u_r(grid.n_r, grid.n_z), u_z(grid.n_r, grid.n_z);
  for (int i = -2; i <= grid.n_r + 1; ++i)
    for (int j = -2; j <= grid.n_z + 1; ++j) {
      u_r(i, j) = 0.0;
      u_z(i, j) = grid.r(i);  // omega = -d_r u_z = -1
    }
  Field w = vorticity_from_velocity(u_r, u_z, grid);
  for (int i = 0; i < grid.n_r; ++i)
    for (int j = 0; j < grid.n_z; ++j) CHECK(w(i, j) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("polar decomposition round-trips smooth director fields") {
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, 20, 20);
  Field rho = grid.make_field(), phi = grid.make_field();
  for (int i = 0; i < grid.n_r; ++i)
    for (int j = 0; j < grid.n_z; ++j) {
      double r = grid.r(i), z = grid.z(j);
      rho(i, j) = 0.8 + 0.15 * std::sin(r + z);
      phi(i, j) = 2.0 * std::atan(r / 0.5) * (0.5 + 0.3 * z);
    }
  DirectorState d = polar_to_cartesian(rho, phi);
  auto [rho2, phi2] = cartesian_to_polar(d);
  for (int i = 0; i < grid.n_r; ++i)
    for (int j = 0; j < grid.n_z; ++j) {
      CHECK(rho2(i, j) == doctest::Approx(rho(i, j)).epsilon(1e-12));
      CHECK(std::remainder(phi2(i, j) - phi(i, j), 2.0 * 3.14159265358979323846) ==
            doctest::Approx(0.0).epsilon(1e-11));
    }
}

TEST_CASE("axis branch values are the nearest multiples of pi") {
  Field phi(4, 3);
  phi(0, 0) = 0.2;
  phi(0, 1) = 3.0;
  phi(0, 2) = -2.9;
  auto branch = axis_branch_values(phi);
  REQUIRE(branch.size() == 3);
  CHECK(branch[0] == doctest::Approx(0.0));
  CHECK(branch[1] == doctest::Approx(3.14159265358979323846));
  CHECK(branch[2] == doctest::Approx(-3.14159265358979323846));
}
