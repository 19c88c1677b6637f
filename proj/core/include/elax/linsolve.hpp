#pragma once

#include <memory>

#include "elax/field.hpp"
#include "elax/grid.hpp"

namespace elax {

// Direct sparse solver for the constant-coefficient operators of the scheme,
//
//   A f = alpha f - beta (f_rr + s (1/r) f_r + f_zz - c/r^2 f),
//
// on interior cells, with the axis ghost folded by the declared parity and
// Dirichlet outer walls. s = +1 for the scalar Laplacian L, s = -1 for the
// stream-function operator. The factorization is computed once; boundary
// values (traces, axis branch values) enter through the right-hand side at
// solve time.
class HelmholtzSolver {
 public:
  HelmholtzSolver(const MeridianGrid& grid, double alpha, double beta, double c_over_r2,
                  Parity parity, double r_deriv_sign = 1.0);
  ~HelmholtzSolver();
  HelmholtzSolver(HelmholtzSolver&&) noexcept;
  HelmholtzSolver& operator=(HelmholtzSolver&&) noexcept;

  // Solves A f = rhs. `spec` carries the boundary data; its parity must match
  // the parity the operator was assembled with. Throws SolverError if the
  // verification residual exceeds the tolerance.
  Field solve(const Field& rhs, const GhostSpec& spec) const;

  // Relative residual of the last solve.
  double last_residual() const { return last_residual_; }

  static constexpr double kResidualTol = 1e-10;

 private:
  double apply_stencil(const Field& f, int i, int j) const;

  MeridianGrid grid_;
  double alpha_, beta_, c_over_r2_, sign_;
  Parity parity_;
  mutable double last_residual_ = 0.0;
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Solves psi_rr - psi_r/r + psi_zz = -r w with psi = 0 on the outer walls and
// an even axis ghost (psi ~ r^2 near the axis).
class StreamPoissonSolver {
 public:
  explicit StreamPoissonSolver(const MeridianGrid& grid);

  Field solve(const Field& omega) const;
  double last_residual() const { return helm_.last_residual(); }

 private:
  MeridianGrid grid_;
  HelmholtzSolver helm_;
};

}  // namespace elax
