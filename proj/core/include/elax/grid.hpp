#pragma once

#include <vector>

#include "elax/field.hpp"

namespace elax {

// Cell-centered mesh of the meridian rectangle [0,r_max] x [z_min,z_max].
// Cell centers sit at r_i = (i+1/2) h_r, so no unknown lies on the axis and
// every 1/r, 1/r^2 coefficient is evaluated at strictly positive radius.
struct MeridianGrid {
  double r_max = 1.0;
  double z_min = -1.0;
  double z_max = 1.0;
  int n_r = 0;
  int n_z = 0;
  double h_r = 0.0;
  double h_z = 0.0;

  double r(int i) const { return (i + 0.5) * h_r; }
  double z(int j) const { return z_min + (j + 0.5) * h_z; }
  // Quadrature weight of cell (i,j) for integrals over the solid of revolution.
  double cell_weight(int i) const { return 2.0 * 3.14159265358979323846 * r(i) * h_r * h_z; }

  Field make_field(double init = 0.0) const { return Field(n_r, n_z, init); }
};

MeridianGrid build_grid(double r_max, double z_min, double z_max, int n_r, int n_z);

// Midpoint-rule value of 2*pi * integral f(r,z) r dr dz over the meridian section.
double integrate_meridian(const Field& f, const MeridianGrid& grid);

// Axis reflection rule for axisymmetric no-swirl fields. Odd fields reflect
// through a stated axis value (default 0); even fields mirror.
enum class Parity { odd, even };

enum class OuterBc { dirichlet, neumann };

// Wall-face values for Dirichlet outer boundaries. `outer_r` is sampled on the
// r = r_max face (length n_z), `z_lo`/`z_hi` on the z walls (length n_r).
struct BoundaryTrace {
  std::vector<double> outer_r, z_lo, z_hi;
};

struct GhostSpec {
  Parity parity = Parity::even;
  double axis_value = 0.0;
  // Optional per-row axis values (length n_z); used for the angle field whose
  // axis branch may differ between z-rows. Overrides axis_value when set.
  const std::vector<double>* axis_values = nullptr;
  OuterBc outer = OuterBc::dirichlet;
  double outer_value = 0.0;
  const BoundaryTrace* trace = nullptr;  // overrides outer_value when set
};

// Populates the two-cell halo of `f`: axis ghosts by the parity rule, outer
// ghosts by reflection consistent with the declared boundary condition.
void fill_ghosts(Field& f, const MeridianGrid& grid, const GhostSpec& spec);

}  // namespace elax
