#!/usr/bin/env python3
"""Generates core/src/mms.cpp: exact manufactured-solution fields for the
axisymmetric streamfunction-vorticity solver.

Stream function: psi = A r^2 (R^2 - r^2)^2 (z - z0)^2 (z1 - z)^2
(no-slip on all walls, regular at the axis). The steady vorticity source is
S = (u.grad) omega - (u_r/r) omega - (L omega - omega/r^2).
"""

import sympy as sp

r, z, A, R, z0, z1 = sp.symbols("r z A R z0 z1", real=True, positive=False)

psi = A * r**2 * (R**2 - r**2) ** 2 * (z - z0) ** 2 * (z1 - z) ** 2
u_r = -sp.diff(psi, z) / r
u_z = sp.diff(psi, r) / r
omega = sp.diff(u_r, z) - sp.diff(u_z, r)


def L(f):
    return sp.diff(f, r, 2) + sp.diff(f, r) / r + sp.diff(f, z, 2)


source = u_r * sp.diff(omega, r) + u_z * sp.diff(omega, z) - (u_r / r) * omega - (
    L(omega) - omega / r**2
)

fields = {
    "mms_psi": psi,
    "mms_u_r": u_r,
    "mms_u_z": u_z,
    "mms_omega": omega,
    "mms_source": source,
}

header = """// Generated by scripts/gen_mms.py -- do not edit by hand.
#include "elax/mms.hpp"

#include <cmath>

namespace elax {
"""

body = []
for name, expr in fields.items():
    expr = sp.horner(sp.expand(sp.cancel(sp.together(expr))), wrt=r)
    code = sp.ccode(expr)
    body.append(
        f"""
double {name}(double r, double z, double A, double R, double z0, double z1) {{
  return {code};
}}
"""
    )

footer = """
}  // namespace elax
"""

with open("core/src/mms.cpp", "w") as f:
    f.write(header + "".join(body) + footer)
print("wrote core/src/mms.cpp")
