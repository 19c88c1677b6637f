#include "elax/state.hpp"

#include <cmath>

#include "elax/errors.hpp"
#include "elax/operators.hpp"

namespace elax {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kDegenerateRho = 1e-8;
}  // namespace

DirectorState polar_to_cartesian(const Field& rho, const Field& phi) {
  if (!rho.same_shape(phi)) throw AnalysisError("polar_to_cartesian: field shape mismatch");
  for (int i = 0; i < rho.nr(); ++i)
    for (int j = 0; j < rho.nz(); ++j)
      if (rho(i, j) < 0.0) throw AnalysisError("polar_to_cartesian: negative rho");
  DirectorState d;
  d.rep = DirectorState::Rep::gl;
  d.d_r = Field(rho.nr(), rho.nz());
  d.d_z = Field(rho.nr(), rho.nz());
  for (int i = 0; i < rho.nr(); ++i)
    for (int j = 0; j < rho.nz(); ++j) {
      d.d_r(i, j) = rho(i, j) * std::sin(phi(i, j));
      d.d_z(i, j) = rho(i, j) * std::cos(phi(i, j));
    }
  return d;
}

std::pair<Field, Field> cartesian_to_polar(const DirectorState& d) {
  const int nr = d.d_r.nr(), nz = d.d_r.nz();
  Field rho(nr, nz), phi(nr, nz);
  for (int j = 0; j < nz; ++j) {
    double prev = 0.0;
    bool have_prev = false;
    for (int i = 0; i < nr; ++i) {
      double dr = d.d_r(i, j), dz = d.d_z(i, j);
      rho(i, j) = std::hypot(dr, dz);
      double a;
      if (rho(i, j) < kDegenerateRho) {
        a = have_prev ? prev : 0.0;  // copy nearest resolved neighbor inward
      } else {
        a = std::atan2(dr, dz);
        if (have_prev) {
          // unwrap outward in r: pick the 2*pi branch nearest the neighbor
          a += 2.0 * kPi * std::round((prev - a) / (2.0 * kPi));
        }
      }
      phi(i, j) = a;
      prev = a;
      have_prev = have_prev || rho(i, j) >= kDegenerateRho;
    }
  }
  return {std::move(rho), std::move(phi)};
}

std::pair<Field, Field> velocity_from_streamfunction(const Field& psi, const MeridianGrid& grid) {
  Field u_r(grid.n_r, grid.n_z), u_z(grid.n_r, grid.n_z);
  // The first halo layer is derived from the same stencil so that the discrete
  // divergence identity cancels exactly up to the boundary cells.
  for (int i = -1; i <= grid.n_r; ++i) {
    double inv_r = 1.0 / grid.r(i);
    for (int j = -1; j <= grid.n_z; ++j) {
      u_r(i, j) = -diff_z(psi, i, j, grid) * inv_r;
      u_z(i, j) = diff_r(psi, i, j, grid) * inv_r;
    }
  }
  return {std::move(u_r), std::move(u_z)};
}

Field vorticity_from_velocity(const Field& u_r, const Field& u_z, const MeridianGrid& grid) {
  Field w(grid.n_r, grid.n_z);
  for (int i = 0; i < grid.n_r; ++i)
    for (int j = 0; j < grid.n_z; ++j)
      w(i, j) = diff_z(u_r, i, j, grid) - diff_r(u_z, i, j, grid);
  return w;
}

double max_divergence(const Field& u_r, const Field& u_z, const MeridianGrid& grid) {
  double m = 0.0;
  for (int i = 0; i < grid.n_r; ++i) {
    double inv_r = 1.0 / grid.r(i);
    for (int j = 0; j < grid.n_z; ++j) {
      double drur = (grid.r(i + 1) * u_r(i + 1, j) - grid.r(i - 1) * u_r(i - 1, j)) / (2.0 * grid.h_r);
      double div = inv_r * drur + diff_z(u_z, i, j, grid);
      m = std::max(m, std::abs(div));
    }
  }
  return m;
}

void sync_sphere_components(DirectorState& d) {
  if (d.rep != DirectorState::Rep::sphere) return;
  const int nr = d.phi.nr(), nz = d.phi.nz();
  if (d.d_r.nr() != nr || d.d_r.nz() != nz) {
    d.d_r = Field(nr, nz);
    d.d_z = Field(nr, nz);
  }
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nz; ++j) {
      d.d_r(i, j) = std::sin(d.phi(i, j));
      d.d_z(i, j) = std::cos(d.phi(i, j));
    }
}

std::vector<double> axis_branch_values(const Field& phi) {
  std::vector<double> branch(phi.nz());
  for (int j = 0; j < phi.nz(); ++j) branch[j] = kPi * std::round(phi(0, j) / kPi);
  return branch;
}

}  // namespace elax
