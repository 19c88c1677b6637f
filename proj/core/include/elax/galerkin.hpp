#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <utility>
#include <vector>

#include "elax/diagnostics.hpp"
#include "elax/dynamics.hpp"
#include "elax/field.hpp"
#include "elax/grid.hpp"

namespace elax {

// Stiffness/mass pair over streamfunction degrees of freedom. Velocities are
// generated from psi by the discrete (2.31) map, so every basis vector is
// exactly solenoidal and no-swirl; stiffness realizes the full r-weighted
// int |grad v|^2 (including the (v_r/r)^2 hoop term), mass the r-weighted L^2
// product of velocities.
struct StokesOperators {
  Eigen::SparseMatrix<double> stiffness, mass;
  int n_r = 0, n_z = 0;
};
StokesOperators assemble_stokes_operator(const MeridianGrid& grid);

struct StokesEigenbasis {
  int m = 0;
  std::vector<double> eigenvalues;                  // non-decreasing, > 0
  std::vector<Field> stream;                        // psi dof fields per mode
  std::vector<std::pair<Field, Field>> modes;       // (u_r, u_z) per mode
};

// Lowest-m generalized eigenpairs K c = lambda M c by subspace inverse
// iteration (sparse LDLT of K, deterministic smooth start vectors),
// M-orthonormalized to 1e-10 with the sign fixed so the first nonzero
// streamfunction coefficient is positive.
StokesEigenbasis compute_eigenbasis(const StokesOperators& ops, const MeridianGrid& grid, int m);

// c_i = <u, mode_i> in the r-weighted L^2 product.
Eigen::VectorXd project_Pm(const Field& u_r, const Field& u_z, const StokesEigenbasis& basis,
                           const MeridianGrid& grid);

void reconstruct_velocity(const Eigen::VectorXd& c, const StokesEigenbasis& basis, Field* u_r,
                          Field* u_z);

struct GalerkinState {
  Eigen::VectorXd c;
  DirectorState director;
  double time = 0.0;
};

// One splitting step: coefficient ODE c' = -lambda c + <N, mode> advanced with
// the exact e^{-lambda dt} integrating factor (N = advection + Ericksen
// stress, evaluated on the grid and projected), then the shared IMEX director
// step with the reconstructed velocity as advecting field.
GalerkinState galerkin_step(const GalerkinState& state, const StokesEigenbasis& basis,
                            const Stepper& stepper);

// Full trajectory with the same diagnostics schema as the FD solver.
Trajectory galerkin_run(const MeridianGrid& grid, const RunParameters& params,
                        const DirectorBc& bc, const StokesEigenbasis& basis,
                        const SystemState& initial, int snapshot_cadence);

}  // namespace elax
