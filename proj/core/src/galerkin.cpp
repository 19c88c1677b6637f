#include "elax/galerkin.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCholesky>
#include <cmath>

#include "elax/errors.hpp"
#include "elax/operators.hpp"

namespace elax {

namespace {

using Triplet = Eigen::Triplet<double>;
using SpMat = Eigen::SparseMatrix<double>;

// Sign of the ghost reflection across each boundary for the four parities we
// need; 0 kills the coupling entirely (never used here).
struct Reflection {
  double axis;   // psi even: +1; u_r odd(0): -1; u_z even: +1
  double outer;  // Dirichlet walls: -1 for all fields used here
};

void add_centered_r(std::vector<Triplet>* t, int row, int i, int j, int nr, int nz, double coef,
                    Reflection refl, int col_base) {
  auto dof = [&](int ii, int jj) { return col_base + ii * nz + jj; };
  // +coef on (i+1,j), -coef on (i-1,j)
  if (i + 1 < nr)
    t->emplace_back(row, dof(i + 1, j), coef);
  else
    t->emplace_back(row, dof(nr - 1, j), coef * refl.outer);
  if (i - 1 >= 0)
    t->emplace_back(row, dof(i - 1, j), -coef);
  else
    t->emplace_back(row, dof(0, j), -coef * refl.axis);
}

void add_centered_z(std::vector<Triplet>* t, int row, int i, int j, int nz, double coef,
                    Reflection refl, int col_base) {
  auto dof = [&](int ii, int jj) { return col_base + ii * nz + jj; };
  if (j + 1 < nz)
    t->emplace_back(row, dof(i, j + 1), coef);
  else
    t->emplace_back(row, dof(i, nz - 1), coef * refl.outer);
  if (j - 1 >= 0)
    t->emplace_back(row, dof(i, j - 1), -coef);
  else
    t->emplace_back(row, dof(i, 0), -coef * refl.outer);
}

}  // namespace

StokesOperators assemble_stokes_operator(const MeridianGrid& grid) {
  const int nr = grid.n_r, nz = grid.n_z, n = nr * nz;
  // psi even at axis; on no-slip walls psi and its normal derivative vanish,
  // so the second-order ghost is the mirror (+1), matching the solver's fill.
  const Reflection psi_refl{+1.0, +1.0};
  const Reflection ur_refl{-1.0, -1.0};   // u_r odd(0) / no-slip
  const Reflection uz_refl{+1.0, -1.0};   // u_z even / no-slip

  // V: psi dofs -> (u_r, u_z) dofs, u_r = -psi_z/r, u_z = psi_r/r.
  std::vector<Triplet> tv;
  for (int i = 0; i < nr; ++i) {
    double r = grid.r(i);
    for (int j = 0; j < nz; ++j) {
      int cell = i * nz + j;
      add_centered_z(&tv, cell, i, j, nz, -1.0 / (2.0 * grid.h_z * r), psi_refl, 0);
      add_centered_r(&tv, n + cell, i, j, nr, nz, 1.0 / (2.0 * grid.h_r * r), psi_refl, 0);
    }
  }
  SpMat V(2 * n, n);
  V.setFromTriplets(tv.begin(), tv.end());

  // D: face-based Dirichlet form. Centered derivatives of cell-centered
  // velocities leave checkerboards energy-free (spurious near-zero
  // eigenvalues), so the gradient is sampled on cell faces with adjacent-cell
  // differences: r-faces at r = (i+1) h_r (the axis face carries zero weight
  // and is skipped), z-faces at every wall and interior face. The hoop term
  // u_r/r stays cell-centered.
  const double two_pi = 2.0 * 3.14159265358979323846;
  std::vector<Triplet> td;
  std::vector<double> wd;
  int row = 0;
  auto dof = [&](int comp, int ii, int jj) { return comp * n + ii * nz + jj; };
  for (int comp = 0; comp < 2; ++comp) {
    Reflection refl = comp == 0 ? ur_refl : uz_refl;
    // Wall faces use the one-sided quadratic gradient (9 f0 - f1)/(3h)
    // through the homogeneous wall value and carry trapezoidal half-weights;
    // a two-point antisymmetric-ghost difference with full weight
    // under-resolves the wall shear and drags the eigenvalues O(h) low.
    for (int i = 0; i < nr; ++i) {  // d_r at face i+1/2
      double r_face = (i + 1) * grid.h_r;
      double w_face = two_pi * r_face * grid.h_r * grid.h_z;
      for (int j = 0; j < nz; ++j) {
        if (i + 1 < nr) {
          td.emplace_back(row, dof(comp, i + 1, j), 1.0 / grid.h_r);
          td.emplace_back(row, dof(comp, i, j), -1.0 / grid.h_r);
          wd.push_back(w_face);
        } else {
          td.emplace_back(row, dof(comp, nr - 1, j), 3.0 / grid.h_r);
          td.emplace_back(row, dof(comp, nr - 2, j), -1.0 / (3.0 * grid.h_r));
          wd.push_back(0.5 * w_face);
        }
        ++row;
      }
    }
    for (int i = 0; i < nr; ++i) {  // d_z at faces j-1/2, j = 0..nz
      double w = grid.cell_weight(i);
      for (int j = 0; j <= nz; ++j) {
        if (j == 0) {
          td.emplace_back(row, dof(comp, i, 0), 3.0 / grid.h_z);
          td.emplace_back(row, dof(comp, i, 1), -1.0 / (3.0 * grid.h_z));
          wd.push_back(0.5 * w);
        } else if (j == nz) {
          td.emplace_back(row, dof(comp, i, nz - 1), 3.0 / grid.h_z);
          td.emplace_back(row, dof(comp, i, nz - 2), -1.0 / (3.0 * grid.h_z));
          wd.push_back(0.5 * w);
        } else {
          td.emplace_back(row, dof(comp, i, j), 1.0 / grid.h_z);
          td.emplace_back(row, dof(comp, i, j - 1), -1.0 / grid.h_z);
          wd.push_back(w);
        }
        ++row;
      }
    }
  }
  for (int i = 0; i < nr; ++i) {  // hoop term u_r/r at cell centers
    double r = grid.r(i);
    for (int j = 0; j < nz; ++j) {
      td.emplace_back(row, dof(0, i, j), 1.0 / r);
      wd.push_back(grid.cell_weight(i));
      ++row;
    }
  }
  SpMat D(row, 2 * n);
  D.setFromTriplets(td.begin(), td.end());

  Eigen::VectorXd w2(2 * n), w5(row);
  for (int q = 0; q < row; ++q) w5[q] = wd[q];
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nz; ++j) {
      double w = grid.cell_weight(i);
      int cell = i * nz + j;
      for (int c = 0; c < 2; ++c) w2[c * n + cell] = w;
    }

  // No-penetration (psi constant on walls) is otherwise only felt through the
  // O(1/h)-weighted wall-shear rows, which lets "leaky" modes with an O(1)
  // wall streamfunction sit below the true spectrum at finite h (and leaves
  // constant psi in a shared null space of K and M). Penalising the linearly
  // extrapolated wall trace (3 psi0 - psi1)/2, scaled by 1/h_n so it carries
  // velocity units, expels those modes while adding only O(h^3) energy to
  // admissible fields (whose wall trace is O(h^2)).
  std::vector<Triplet> tb;
  std::vector<double> wb;
  int brow = 0;
  auto dof_psi = [&](int ii, int jj) { return ii * nz + jj; };
  for (int i = 0; i < nr; ++i) {
    for (int jw : {0, nz - 1}) {
      int jn = jw == 0 ? 1 : nz - 2;
      tb.emplace_back(brow, dof_psi(i, jw), 1.5 / grid.h_z);
      tb.emplace_back(brow, dof_psi(i, jn), -0.5 / grid.h_z);
      wb.push_back(grid.cell_weight(i) / grid.h_z);
      ++brow;
    }
  }
  for (int j = 0; j < nz; ++j) {
    tb.emplace_back(brow, dof_psi(nr - 1, j), 1.5 / grid.h_r);
    tb.emplace_back(brow, dof_psi(nr - 2, j), -0.5 / grid.h_r);
    wb.push_back(two_pi * grid.r_max * grid.h_r * grid.h_z / grid.h_r);
    ++brow;
  }
  SpMat B(brow, n);
  B.setFromTriplets(tb.begin(), tb.end());
  Eigen::VectorXd wbv(brow);
  for (int q = 0; q < brow; ++q) wbv[q] = wb[q];

  // Same device for no-slip: the linearly extrapolated wall trace of the
  // tangential velocity is exactly the wall value for fields linear in the
  // wall distance, hence O(h^2) for admissible fields, while slope-leaking
  // modes keep an O(1) trace. The 1/h^3 weight expels them at 1/h^2 without
  // disturbing second-order consistency.
  std::vector<Triplet> tu;
  std::vector<double> wu;
  int urow = 0;
  for (int i = 0; i < nr; ++i) {  // u_r trace on the z walls
    for (int jw : {0, nz - 1}) {
      int jn = jw == 0 ? 1 : nz - 2;
      tu.emplace_back(urow, dof(0, i, jw), 1.5);
      tu.emplace_back(urow, dof(0, i, jn), -0.5);
      wu.push_back(grid.cell_weight(i) / (grid.h_z * grid.h_z * grid.h_z));
      ++urow;
    }
  }
  for (int j = 0; j < nz; ++j) {  // u_z trace on the outer wall
    tu.emplace_back(urow, dof(1, nr - 1, j), 1.5);
    tu.emplace_back(urow, dof(1, nr - 2, j), -0.5);
    wu.push_back(two_pi * grid.r_max * grid.h_z / (grid.h_r * grid.h_r));
    ++urow;
  }
  SpMat Bu(urow, 2 * n);
  Bu.setFromTriplets(tu.begin(), tu.end());
  Eigen::VectorXd wuv(urow);
  for (int q = 0; q < urow; ++q) wuv[q] = wu[q];
  SpMat BuV = Bu * V;

  StokesOperators ops;
  ops.n_r = nr;
  ops.n_z = nz;
  SpMat G = D * V;
  ops.stiffness = SpMat(G.transpose() * w5.asDiagonal() * G +
                        B.transpose() * wbv.asDiagonal() * B +
                        BuV.transpose() * wuv.asDiagonal() * BuV);
  ops.mass = SpMat(V.transpose() * w2.asDiagonal() * V);
  ops.stiffness = SpMat(0.5 * (ops.stiffness + SpMat(ops.stiffness.transpose())));
  ops.mass = SpMat(0.5 * (ops.mass + SpMat(ops.mass.transpose())));
  return ops;
}

StokesEigenbasis compute_eigenbasis(const StokesOperators& ops, const MeridianGrid& grid, int m) {
  const int nr = ops.n_r, nz = ops.n_z, n = nr * nz;
  if (m < 1 || m > n) throw AnalysisError("compute_eigenbasis: invalid mode count");
  const int sub = std::min(n, m + 8);

  Eigen::SimplicialLDLT<SpMat> ldlt(ops.stiffness);
  if (ldlt.info() != Eigen::Success)
    throw SolverError("compute_eigenbasis: stiffness factorization failed");

  // Deterministic smooth start vectors: tensor sine modes in (r/r_max, z).
  Eigen::MatrixXd X(n, sub);
  {
    int col = 0;
    for (int total = 0; col < sub; ++total)
      for (int a = 0; a <= total && col < sub; ++a) {
        int b = total - a;
        for (int i = 0; i < nr; ++i) {
          double x = grid.r(i) / grid.r_max;
          for (int j = 0; j < nz; ++j) {
            double y = (grid.z(j) - grid.z_min) / (grid.z_max - grid.z_min);
            X(i * nz + j, col) =
                std::sin((a + 1) * M_PI * x) * std::sin((b + 1) * M_PI * y);
          }
        }
        ++col;
      }
  }

  auto m_orthonormalize = [&](Eigen::MatrixXd& Y) {
    for (int c = 0; c < Y.cols(); ++c) {
      for (int rep = 0; rep < 2; ++rep)
        for (int p = 0; p < c; ++p) {
          double proj = Y.col(p).dot(ops.mass * Y.col(c));
          Y.col(c) -= proj * Y.col(p);
        }
      double norm = std::sqrt(Y.col(c).dot(ops.mass * Y.col(c)));
      if (norm < 1e-300) throw SolverError("compute_eigenbasis: degenerate subspace");
      Y.col(c) /= norm;
    }
  };

  Eigen::VectorXd ritz_prev = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd ritz(sub);
  for (int iter = 0; iter < 300; ++iter) {
    Eigen::MatrixXd Y = ldlt.solve(ops.mass * X);
    m_orthonormalize(Y);
    Eigen::MatrixXd A = Y.transpose() * (ops.stiffness * Y);
    A = 0.5 * (A + A.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    if (es.info() != Eigen::Success) throw SolverError("compute_eigenbasis: Ritz solve failed");
    X = Y * es.eigenvectors();
    ritz = es.eigenvalues();
    double delta = (ritz.head(m) - ritz_prev).cwiseAbs().maxCoeff();
    ritz_prev = ritz.head(m);
    if (iter > 3 && delta <= 1e-12 * std::max(1.0, ritz_prev.cwiseAbs().maxCoeff())) break;
  }
  m_orthonormalize(X);
  // Recompute Rayleigh quotients after the final orthonormalization.
  for (int c = 0; c < m; ++c) ritz[c] = X.col(c).dot(ops.stiffness * X.col(c));

  StokesEigenbasis basis;
  basis.m = m;
  for (int c = 0; c < m; ++c) {
    Eigen::VectorXd v = X.col(c);
    double scale = 1.0;
    for (int q = 0; q < n; ++q)
      if (std::abs(v[q]) > 1e-12 * v.cwiseAbs().maxCoeff()) {
        scale = v[q] > 0.0 ? 1.0 : -1.0;
        break;
      }
    v *= scale;
    basis.eigenvalues.push_back(ritz[c]);
    Field psi(nr, nz);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nz; ++j) psi(i, j) = v[i * nz + j];
    GhostSpec spec;
    spec.parity = Parity::even;
    spec.outer = OuterBc::neumann;  // wall-clamped psi: mirror ghost (see dynamics)
    fill_ghosts(psi, grid, spec);
    auto [ur, uz] = velocity_from_streamfunction(psi, grid);
    basis.modes.emplace_back(std::move(ur), std::move(uz));
    basis.stream.push_back(std::move(psi));
  }
  return basis;
}

Eigen::VectorXd project_Pm(const Field& u_r, const Field& u_z, const StokesEigenbasis& basis,
                           const MeridianGrid& grid) {
  Eigen::VectorXd c(basis.m);
  for (int q = 0; q < basis.m; ++q) {
    double acc = 0.0;
    for (int i = 0; i < grid.n_r; ++i) {
      double w = grid.cell_weight(i);
      for (int j = 0; j < grid.n_z; ++j)
        acc += w * (u_r(i, j) * basis.modes[q].first(i, j) +
                    u_z(i, j) * basis.modes[q].second(i, j));
    }
    c[q] = acc;
  }
  return c;
}

void reconstruct_velocity(const Eigen::VectorXd& c, const StokesEigenbasis& basis, Field* u_r,
                          Field* u_z) {
  const Field& ref = basis.modes.at(0).first;
  *u_r = Field(ref.nr(), ref.nz());
  *u_z = Field(ref.nr(), ref.nz());
  for (int q = 0; q < basis.m; ++q)
    for (int i = -Field::HALO; i < ref.nr() + Field::HALO; ++i)
      for (int j = -Field::HALO; j < ref.nz() + Field::HALO; ++j) {
        (*u_r)(i, j) += c[q] * basis.modes[q].first(i, j);
        (*u_z)(i, j) += c[q] * basis.modes[q].second(i, j);
      }
}

GalerkinState galerkin_step(const GalerkinState& state, const StokesEigenbasis& basis,
                            const Stepper& stepper) {
  const MeridianGrid& grid = stepper.grid();
  const RunParameters& params = stepper.params();
  const int nr = grid.n_r, nz = grid.n_z;

  Field ur, uz;
  reconstruct_velocity(state.c, basis, &ur, &uz);
  // Halos of the modes come from the streamfunction stencil; extend the first
  // layer only (enough for centered advection derivatives below).
  ForceField force = stepper.ericksen_force(state.director);

  Field n_r_fld(nr, nz), n_z_fld(nr, nz);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nz; ++j) {
      double a = ur(i, j), b = uz(i, j);
      n_r_fld(i, j) = -(a * diff_r(ur, i, j, grid) + b * diff_z(ur, i, j, grid)) - force.f_r(i, j);
      n_z_fld(i, j) = -(a * diff_r(uz, i, j, grid) + b * diff_z(uz, i, j, grid)) - force.f_z(i, j);
    }
  Eigen::VectorXd rhs = project_Pm(n_r_fld, n_z_fld, basis, grid);

  GalerkinState out;
  out.c.resize(basis.m);
  for (int q = 0; q < basis.m; ++q)
    out.c[q] = std::exp(-basis.eigenvalues[q] * params.dt) * (state.c[q] + params.dt * rhs[q]);

  SystemState sys;
  sys.flow.u_r = ur;
  sys.flow.u_z = uz;
  sys.flow.psi = Field(nr, nz);
  sys.flow.omega = Field(nr, nz);
  sys.director = state.director;
  sys.time = state.time;
  out.director = params.mode == RunParameters::Mode::gl ? stepper.gl_director_step(sys)
                                                        : stepper.sharp_director_step(sys);
  out.time = state.time + params.dt;
  return out;
}

Trajectory galerkin_run(const MeridianGrid& grid, const RunParameters& params,
                        const DirectorBc& bc, const StokesEigenbasis& basis,
                        const SystemState& initial, int snapshot_cadence) {
  Stepper stepper(grid, params, bc);
  Trajectory traj;
  traj.grid = grid;
  traj.params = params;
  traj.bc = bc;

  GalerkinState gs;
  gs.c = project_Pm(initial.flow.u_r, initial.flow.u_z, basis, grid);
  gs.director = initial.director;
  gs.time = initial.time;

  auto to_system = [&](const GalerkinState& g) {
    SystemState s;
    reconstruct_velocity(g.c, basis, &s.flow.u_r, &s.flow.u_z);
    s.flow.psi = Field(grid.n_r, grid.n_z);
    s.flow.omega = Field(grid.n_r, grid.n_z);
    for (int q = 0; q < basis.m; ++q)
      for (int i = -Field::HALO; i < grid.n_r + Field::HALO; ++i)
        for (int j = -Field::HALO; j < grid.n_z + Field::HALO; ++j)
          s.flow.psi(i, j) += g.c[q] * basis.stream[q](i, j);
    s.director = g.director;
    s.time = g.time;
    return s;
  };

  SystemState sys = to_system(gs);
  traj.records.push_back(record_initial(sys, grid, params, &bc));
  Snapshot snap0{gs.time, sys, Field(grid.n_r, grid.n_z), Field(grid.n_r, grid.n_z)};
  traj.snapshots.push_back(std::move(snap0));

  int step_idx = 0;
  int n_steps = static_cast<int>(std::ceil(params.t_end / params.dt - 1e-12));
  while (step_idx < n_steps) {
    DirectorState prev = gs.director;
    gs = galerkin_step(gs, basis, stepper);
    ++step_idx;
    sys = to_system(gs);
    traj.records.push_back(record_step(sys, prev, grid, params, &bc));
    if (step_idx % snapshot_cadence == 0 || step_idx == n_steps) {
      TensionPair t = tension_field(prev, sys.director, sys.flow, grid, params.dt, &bc);
      traj.snapshots.push_back(Snapshot{gs.time, sys, std::move(t.tau_r), std::move(t.tau_z)});
    }
  }
  return traj;
}

}  // namespace elax
