#pragma once

#include "elax/field.hpp"
#include "elax/grid.hpp"

namespace elax {

// Centered first derivatives at cell centers (halo must be filled).
inline double diff_r(const Field& f, int i, int j, const MeridianGrid& g) {
  return (f(i + 1, j) - f(i - 1, j)) / (2.0 * g.h_r);
}
inline double diff_z(const Field& f, int i, int j, const MeridianGrid& g) {
  return (f(i, j + 1) - f(i, j - 1)) / (2.0 * g.h_z);
}

// Discrete L = d_rr + (1/r) d_r + d_zz, the axisymmetric no-swirl Laplacian
// acting on scalar coefficients.
inline double lap_axisym(const Field& f, int i, int j, const MeridianGrid& g) {
  double frr = (f(i + 1, j) - 2.0 * f(i, j) + f(i - 1, j)) / (g.h_r * g.h_r);
  double fzz = (f(i, j + 1) - 2.0 * f(i, j) + f(i, j - 1)) / (g.h_z * g.h_z);
  return frr + diff_r(f, i, j, g) / g.r(i) + fzz;
}

// Stream-function operator d_rr - (1/r) d_r + d_zz appearing in the
// psi-omega coupling psi_rr - psi_r/r + psi_zz = -r w.
inline double lap_stream(const Field& f, int i, int j, const MeridianGrid& g) {
  double frr = (f(i + 1, j) - 2.0 * f(i, j) + f(i - 1, j)) / (g.h_r * g.h_r);
  double fzz = (f(i, j + 1) - 2.0 * f(i, j) + f(i, j - 1)) / (g.h_z * g.h_z);
  return frr - diff_r(f, i, j, g) / g.r(i) + fzz;
}

// Second-order upwind (b . grad) f. Uses the two-cell halo.
inline double advect_upwind2(const Field& f, double ur, double uz, int i, int j,
                             const MeridianGrid& g) {
  double fr, fz;
  if (ur >= 0.0)
    fr = (3.0 * f(i, j) - 4.0 * f(i - 1, j) + f(i - 2, j)) / (2.0 * g.h_r);
  else
    fr = (-3.0 * f(i, j) + 4.0 * f(i + 1, j) - f(i + 2, j)) / (2.0 * g.h_r);
  if (uz >= 0.0)
    fz = (3.0 * f(i, j) - 4.0 * f(i, j - 1) + f(i, j - 2)) / (2.0 * g.h_z);
  else
    fz = (-3.0 * f(i, j) + 4.0 * f(i, j + 1) - f(i, j + 2)) / (2.0 * g.h_z);
  return ur * fr + uz * fz;
}

}  // namespace elax
