#pragma once

#include <utility>

#include "elax/field.hpp"
#include "elax/grid.hpp"

namespace elax {

// Director field of the axisymmetric no-swirl ansatz
//   d = d_r(r,z) e_r + d_z(r,z) e_z.
// In GL representation the Cartesian components are authoritative and |d| is
// free; in sphere representation the angle phi is authoritative and
// (d_r, d_z) = (sin phi, cos phi).
struct DirectorState {
  enum class Rep { gl, sphere };

  Rep rep = Rep::gl;
  Field d_r, d_z;
  Field phi;  // sphere representation only

  // Parity at the axis: d_r odd (axis value 0), d_z even, phi odd with a
  // per-row branch value in pi*Z.
};

// Poloidal flow in streamfunction-vorticity form. Velocities are derived:
//   u_r = -(d_z psi)/r,  u_z = (d_r psi)/r,
// which makes the discrete axisymmetric divergence vanish identically.
struct FlowState {
  Field psi, omega, u_r, u_z;
};

DirectorState polar_to_cartesian(const Field& rho, const Field& phi);

// Returns (rho, phi) with phi unwrapped continuously outward in r along each
// z-row. Where rho < 1e-8 the angle is copied from the nearest resolved
// neighbor in the row.
std::pair<Field, Field> cartesian_to_polar(const DirectorState& d);

// Centered-difference velocity recovery; psi halo must be filled.
std::pair<Field, Field> velocity_from_streamfunction(const Field& psi, const MeridianGrid& grid);

// Azimuthal vorticity w = d_z u_r - d_r u_z; halos of u_r, u_z must be filled.
Field vorticity_from_velocity(const Field& u_r, const Field& u_z, const MeridianGrid& grid);

// Max-norm of the discrete divergence (1/r) d_r(r u_r) + d_z u_z over interior
// cells; halos must be filled.
double max_divergence(const Field& u_r, const Field& u_z, const MeridianGrid& grid);

// Ensures (d_r, d_z) = (sin phi, cos phi) for sphere-representation states.
void sync_sphere_components(DirectorState& d);

// Per-row axis branch values for phi, each the multiple of pi nearest to the
// first interior cell of the row.
std::vector<double> axis_branch_values(const Field& phi);

}  // namespace elax
