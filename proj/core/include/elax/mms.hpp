#pragma once

namespace elax {

// Exact manufactured steady Stokes-type flow on the meridian rectangle
// [0,R] x [z0,z1] (implementations generated by scripts/gen_mms.py):
//   psi = A r^2 (R^2 - r^2)^2 (z - z0)^2 (z1 - z)^2,
// u from psi by (2.31), omega its azimuthal curl, and mms_source the steady
// vorticity forcing S = (u.grad)omega - (u_r/r)omega - (L omega - omega/r^2).
double mms_psi(double r, double z, double A, double R, double z0, double z1);
double mms_u_r(double r, double z, double A, double R, double z0, double z1);
double mms_u_z(double r, double z, double A, double R, double z0, double z1);
double mms_omega(double r, double z, double A, double R, double z0, double z1);
double mms_source(double r, double z, double A, double R, double z0, double z1);

}  // namespace elax
