#include <cmath>

#include "doctest.h"
#include "elax/galerkin.hpp"

using namespace elax;

TEST_CASE("stokes eigenbasis is M-orthonormal with positive ordered spectrum") {
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, 16, 16);
  StokesOperators ops = assemble_stokes_operator(grid);
  StokesEigenbasis basis = compute_eigenbasis(ops, grid, 4);
  REQUIRE(basis.m == 4);
  for (int k = 0; k < 4; ++k) {
    CHECK(basis.eigenvalues[k] > 0.0);
    if (k > 0) CHECK(basis.eigenvalues[k] >= basis.eigenvalues[k - 1]);
  }
  int n = grid.n_r * grid.n_z;
  Eigen::MatrixXd S(n, 4);
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < grid.n_r; ++i)
      for (int j = 0; j < grid.n_z; ++j) S(i * grid.n_z + j, k) = basis.stream[k](i, j);
  Eigen::MatrixXd G = S.transpose() * (ops.mass * S);
  CHECK((G - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-10);
  // Rayleigh quotients reproduce the eigenvalues.
  Eigen::MatrixXd R = S.transpose() * (ops.stiffness * S);
  for (int k = 0; k < 4; ++k)
    CHECK(R(k, k) == doctest::Approx(basis.eigenvalues[k]).epsilon(1e-8));
}

TEST_CASE("eigenmodes are discretely divergence free") {
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, 16, 16);
  StokesOperators ops = assemble_stokes_operator(grid);
  StokesEigenbasis basis = compute_eigenbasis(ops, grid, 3);
  for (const auto& [u_r, u_z] : basis.modes) CHECK(max_divergence(u_r, u_z, grid) <= 1e-10);
}

TEST_CASE("projection of a mode returns the unit coordinate vector") {
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, 16, 16);
  StokesOperators ops = assemble_stokes_operator(grid);
  StokesEigenbasis basis = compute_eigenbasis(ops, grid, 4);
  Eigen::VectorXd c = project_Pm(basis.modes[1].first, basis.modes[1].second, basis, grid);
  for (int k = 0; k < 4; ++k)
    CHECK(c[k] == doctest::Approx(k == 1 ? 1.0 : 0.0).epsilon(1e-9));
  Field u_r(grid.n_r, grid.n_z), u_z(grid.n_r, grid.n_z);
  reconstruct_velocity(c, basis, &u_r, &u_z);
  for (int i = 0; i < grid.n_r; ++i)
    for (int j = 0; j < grid.n_z; ++j)
      CHECK(u_r(i, j) == doctest::Approx(basis.modes[1].first(i, j)).epsilon(1e-9));
}

TEST_CASE("eigenvalues follow the refinement of the discrete operator") {
  // lambda_1 should be stable under one refinement at the percent level.
  std::vector<double> lam;
  for (int n : {24, 48}) {
    MeridianGrid grid = build_grid(1.0, 0.0, 1.0, n, n);
    StokesOperators ops = assemble_stokes_operator(grid);
    lam.push_back(compute_eigenbasis(ops, grid, 1).eigenvalues[0]);
  }
  CHECK(std::abs(lam[0] / lam[1] - 1.0) <= 0.05);
}
