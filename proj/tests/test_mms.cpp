#include <cmath>
#include <initializer_list>

#include "doctest.h"
#include "elax/mms.hpp"

using namespace elax;

namespace {
const double A = 4.0, R = 1.0, Z0 = 0.0, Z1 = 1.0;
}

TEST_CASE("manufactured stream function satisfies no-slip on every wall") {
  for (double z : {0.1, 0.5, 0.9}) {
    CHECK(mms_psi(R, z, A, R, Z0, Z1) == doctest::Approx(0.0));
    CHECK(mms_u_r(R, z, A, R, Z0, Z1) == doctest::Approx(0.0));
    CHECK(mms_u_z(R, z, A, R, Z0, Z1) == doctest::Approx(0.0));
  }
  for (double r : {0.2, 0.6, 0.95}) {
    for (double z : {Z0, Z1}) {
      CHECK(mms_psi(r, z, A, R, Z0, Z1) == doctest::Approx(0.0));
      CHECK(mms_u_r(r, z, A, R, Z0, Z1) == doctest::Approx(0.0));
      CHECK(mms_u_z(r, z, A, R, Z0, Z1) == doctest::Approx(0.0));
    }
  }
}

TEST_CASE("velocities derive from the stream function") {
  double h = 1e-6;
  for (double r : {0.3, 0.7}) {
    for (double z : {0.25, 0.6}) {
      double psi_z =
          (mms_psi(r, z + h, A, R, Z0, Z1) - mms_psi(r, z - h, A, R, Z0, Z1)) / (2 * h);
      double psi_r =
          (mms_psi(r + h, z, A, R, Z0, Z1) - mms_psi(r - h, z, A, R, Z0, Z1)) / (2 * h);
      CHECK(mms_u_r(r, z, A, R, Z0, Z1) == doctest::Approx(-psi_z / r).epsilon(1e-7));
      CHECK(mms_u_z(r, z, A, R, Z0, Z1) == doctest::Approx(psi_r / r).epsilon(1e-7));
    }
  }
}

TEST_CASE("vorticity is the curl of the manufactured velocity") {
  double h = 1e-5;
  for (double r : {0.35, 0.8}) {
    double z = 0.45;
    double duz_dr =
        (mms_u_z(r + h, z, A, R, Z0, Z1) - mms_u_z(r - h, z, A, R, Z0, Z1)) / (2 * h);
    double dur_dz =
        (mms_u_r(r, z + h, A, R, Z0, Z1) - mms_u_r(r, z - h, A, R, Z0, Z1)) / (2 * h);
    CHECK(mms_omega(r, z, A, R, Z0, Z1) == doctest::Approx(dur_dz - duz_dr).epsilon(1e-6));
  }
}

TEST_CASE("source balances the steady vorticity equation") {
  // S = (u . grad) omega - (u_r / r) omega - (L omega - omega / r^2),
  // evaluated by finite differences of the closed-form fields.
  double h = 1e-4;
  for (double r : {0.4, 0.65}) {
    double z = 0.55;
    auto w = [&](double rr, double zz) { return mms_omega(rr, zz, A, R, Z0, Z1); };
    double w_r = (w(r + h, z) - w(r - h, z)) / (2 * h);
    double w_z = (w(r, z + h) - w(r, z - h)) / (2 * h);
    double w_rr = (w(r + h, z) - 2 * w(r, z) + w(r - h, z)) / (h * h);
    double w_zz = (w(r, z + h) - 2 * w(r, z) + w(r, z - h)) / (h * h);
    double ur = mms_u_r(r, z, A, R, Z0, Z1), uz = mms_u_z(r, z, A, R, Z0, Z1);
    double adv = ur * w_r + uz * w_z;
    double stretch = (ur / r) * w(r, z);
    double diff = w_rr + w_r / r + w_zz - w(r, z) / (r * r);
    double s_fd = adv - stretch - diff;
    CHECK(mms_source(r, z, A, R, Z0, Z1) == doctest::Approx(s_fd).epsilon(1e-4));
  }
}
