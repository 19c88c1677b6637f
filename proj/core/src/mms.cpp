// Generated by scripts/gen_mms.py -- do not edit by hand.
#include "elax/mms.hpp"

#include <cmath>

namespace elax {

double mms_psi(double r, double z, double A, double R, double z0, double z1) {
  return pow(r, 2)*(A*pow(R, 4)*pow(z0, 2)*pow(z1, 2) + pow(r, 2)*(-2*A*pow(R, 2)*pow(z0, 2)*pow(z1, 2) + pow(r, 2)*(pow(z, 2)*(A*pow(z1, 2) + z*(A*z - 2*A*z1)) + z0*(z*(-2*A*pow(z1, 2) + z*(-2*A*z + 4*A*z1)) + z0*(A*pow(z1, 2) + z*(A*z - 2*A*z1)))) + z*(z*(-2*A*pow(R, 2)*pow(z1, 2) + z*(-2*A*pow(R, 2)*z + 4*A*pow(R, 2)*z0 + 4*A*pow(R, 2)*z1) + z0*(-2*A*pow(R, 2)*z0 - 8*A*pow(R, 2)*z1)) + z0*(4*A*pow(R, 2)*z0*z1 + 4*A*pow(R, 2)*pow(z1, 2)))) + z*(z*(A*pow(R, 4)*pow(z1, 2) + z*(A*pow(R, 4)*z - 2*A*pow(R, 4)*z0 - 2*A*pow(R, 4)*z1) + z0*(A*pow(R, 4)*z0 + 4*A*pow(R, 4)*z1)) + z0*(-2*A*pow(R, 4)*z0*z1 - 2*A*pow(R, 4)*pow(z1, 2))));
}

double mms_u_r(double r, double z, double A, double R, double z0, double z1) {
  return r*(pow(r, 2)*(pow(r, 2)*(z*(-2*A*pow(z1, 2) + z*(-4*A*z + 6*A*z1)) + z0*(2*A*pow(z1, 2) + z*(6*A*z - 8*A*z1) + z0*(-2*A*z + 2*A*z1))) + z*(4*A*pow(R, 2)*pow(z1, 2) + z*(8*A*pow(R, 2)*z - 12*A*pow(R, 2)*z0 - 12*A*pow(R, 2)*z1) + z0*(4*A*pow(R, 2)*z0 + 16*A*pow(R, 2)*z1)) + z0*(-4*A*pow(R, 2)*z0*z1 - 4*A*pow(R, 2)*pow(z1, 2))) + z*(-2*A*pow(R, 4)*pow(z1, 2) + z*(-4*A*pow(R, 4)*z + 6*A*pow(R, 4)*z0 + 6*A*pow(R, 4)*z1) + z0*(-2*A*pow(R, 4)*z0 - 8*A*pow(R, 4)*z1)) + z0*(2*A*pow(R, 4)*z0*z1 + 2*A*pow(R, 4)*pow(z1, 2)));
}

double mms_u_z(double r, double z, double A, double R, double z0, double z1) {
  return 2*A*pow(R, 4)*pow(z0, 2)*pow(z1, 2) + pow(r, 2)*(-8*A*pow(R, 2)*pow(z0, 2)*pow(z1, 2) + pow(r, 2)*(pow(z, 2)*(6*A*pow(z1, 2) + z*(6*A*z - 12*A*z1)) + z0*(z*(-12*A*pow(z1, 2) + z*(-12*A*z + 24*A*z1)) + z0*(6*A*pow(z1, 2) + z*(6*A*z - 12*A*z1)))) + z*(z*(-8*A*pow(R, 2)*pow(z1, 2) + z*(-8*A*pow(R, 2)*z + 16*A*pow(R, 2)*z0 + 16*A*pow(R, 2)*z1) + z0*(-8*A*pow(R, 2)*z0 - 32*A*pow(R, 2)*z1)) + z0*(16*A*pow(R, 2)*z0*z1 + 16*A*pow(R, 2)*pow(z1, 2)))) + z*(z*(2*A*pow(R, 4)*pow(z1, 2) + z*(2*A*pow(R, 4)*z - 4*A*pow(R, 4)*z0 - 4*A*pow(R, 4)*z1) + z0*(2*A*pow(R, 4)*z0 + 8*A*pow(R, 4)*z1)) + z0*(-4*A*pow(R, 4)*z0*z1 - 4*A*pow(R, 4)*pow(z1, 2)));
}

double mms_omega(double r, double z, double A, double R, double z0, double z1) {
  return r*(-2*A*pow(R, 4)*pow(z1, 2) + pow(r, 2)*(4*A*pow(R, 2)*pow(z1, 2) + pow(r, 2)*(-2*A*pow(z1, 2) + z*(-12*A*z + 12*A*z1) + z0*(12*A*z - 2*A*z0 - 8*A*z1)) + z*(-24*A*pow(R, 2)*z1 + z*(24*A*pow(R, 2) - 24*A*pow(z1, 2) + z*(-24*A*z + 48*A*z0 + 48*A*z1) + z0*(-24*A*z0 - 96*A*z1)) + z0*(-24*A*pow(R, 2) + 48*A*z0*z1 + 48*A*pow(z1, 2))) + z0*(16*A*pow(R, 2)*z1 + z0*(4*A*pow(R, 2) - 24*A*pow(z1, 2)))) + z*(12*A*pow(R, 4)*z1 + z*(-12*A*pow(R, 4) + 16*A*pow(R, 2)*pow(z1, 2) + z*(16*A*pow(R, 2)*z - 32*A*pow(R, 2)*z0 - 32*A*pow(R, 2)*z1) + z0*(16*A*pow(R, 2)*z0 + 64*A*pow(R, 2)*z1)) + z0*(12*A*pow(R, 4) - 32*A*pow(R, 2)*z0*z1 - 32*A*pow(R, 2)*pow(z1, 2))) + z0*(-8*A*pow(R, 4)*z1 + z0*(-2*A*pow(R, 4) + 16*A*pow(R, 2)*pow(z1, 2))));
}

double mms_source(double r, double z, double A, double R, double z0, double z1) {
  return r*(24*A*pow(R, 4) - 64*A*pow(R, 2)*pow(z1, 2) + pow(r, 2)*(-48*A*pow(R, 2) + 96*A*pow(z1, 2) + pow(r, 2)*(24*A + pow(r, 2)*(pow(r, 2)*(z*(16*pow(A, 2)*pow(z1, 4) + z*(-72*pow(A, 2)*pow(z1, 3) + z*(128*pow(A, 2)*pow(z1, 2) + z*(48*pow(A, 2)*z - 120*pow(A, 2)*z1)))) + z0*(-16*pow(A, 2)*pow(z1, 4) + z*(80*pow(A, 2)*pow(z1, 3) + z*(-168*pow(A, 2)*pow(z1, 2) + z*(-120*pow(A, 2)*z + 224*pow(A, 2)*z1))) + z0*(-8*pow(A, 2)*pow(z1, 3) + z*(48*pow(A, 2)*pow(z1, 2) + z*(128*pow(A, 2)*z - 168*pow(A, 2)*z1)) + z0*(-8*pow(A, 2)*pow(z1, 2) + z*(-72*pow(A, 2)*z + 80*pow(A, 2)*z1) + z0*(16*pow(A, 2)*z - 16*pow(A, 2)*z1))))) + z*(-48*pow(A, 2)*pow(R, 2)*pow(z1, 4) + z*(192*pow(A, 2)*pow(R, 2)*pow(z1, 3) + z*(z*(z*(-96*pow(A, 2)*pow(R, 2) - 1728*pow(A, 2)*pow(z1, 2) + z*(-384*pow(A, 2)*z + 1344*pow(A, 2)*z0 + 1344*pow(A, 2)*z1) + z0*(-1728*pow(A, 2)*z0 - 4608*pow(A, 2)*z1)) + z0*(240*pow(A, 2)*pow(R, 2) + 5760*pow(A, 2)*pow(z1, 2) + z0*(960*pow(A, 2)*z0 + 5760*pow(A, 2)*z1)) + z1*(240*pow(A, 2)*pow(R, 2) + 960*pow(A, 2)*pow(z1, 2))) + z0*(z0*(-288*pow(A, 2)*pow(R, 2) - 6912*pow(A, 2)*pow(z1, 2) + z0*(-192*pow(A, 2)*z0 - 3072*pow(A, 2)*z1)) + z1*(-384*pow(A, 2)*pow(R, 2) - 3072*pow(A, 2)*pow(z1, 2))) + pow(z1, 2)*(-288*pow(A, 2)*pow(R, 2) - 192*pow(A, 2)*pow(z1, 2))) + z0*(z0*(z0*(192*pow(A, 2)*pow(R, 2) + 576*pow(A, 2)*z0*z1 + 3456*pow(A, 2)*pow(z1, 2)) + z1*(288*pow(A, 2)*pow(R, 2) + 3456*pow(A, 2)*pow(z1, 2))) + pow(z1, 2)*(288*pow(A, 2)*pow(R, 2) + 576*pow(A, 2)*pow(z1, 2)))) + z0*(-192*pow(A, 2)*pow(R, 2)*pow(z1, 3) + z0*(-576*pow(A, 2)*pow(z1, 4) + z0*(z0*(-48*pow(A, 2)*pow(R, 2) - 576*pow(A, 2)*pow(z1, 2)) + z1*(-192*pow(A, 2)*pow(R, 2) - 1536*pow(A, 2)*pow(z1, 2)))))) + z0*(48*pow(A, 2)*pow(R, 2)*pow(z1, 4) + pow(z0, 2)*(192*pow(A, 2)*pow(z1, 4) + z0*z1*(48*pow(A, 2)*pow(R, 2) + 192*pow(A, 2)*pow(z1, 2))))) + z*(48*pow(A, 2)*pow(R, 4)*pow(z1, 4) + z*(-144*pow(A, 2)*pow(R, 4)*pow(z1, 3) + z*(z*(-1920*pow(A, 2)*pow(R, 2)*pow(z1, 3) + z*(3456*pow(A, 2)*pow(R, 2)*pow(z1, 2) + z*(768*pow(A, 2)*pow(R, 2)*z - 2688*pow(A, 2)*pow(R, 2)*z0 - 2688*pow(A, 2)*pow(R, 2)*z1) + z0*(3456*pow(A, 2)*pow(R, 2)*z0 + 9216*pow(A, 2)*pow(R, 2)*z1)) + z0*(-11520*pow(A, 2)*pow(R, 2)*pow(z1, 2) + z0*(-1920*pow(A, 2)*pow(R, 2)*z0 - 11520*pow(A, 2)*pow(R, 2)*z1))) + z0*(z0*(96*pow(A, 2)*pow(R, 4) + 13824*pow(A, 2)*pow(R, 2)*pow(z1, 2) + z0*(384*pow(A, 2)*pow(R, 2)*z0 + 6144*pow(A, 2)*pow(R, 2)*z1)) + z1*(-192*pow(A, 2)*pow(R, 4) + 6144*pow(A, 2)*pow(R, 2)*pow(z1, 2))) + pow(z1, 2)*(96*pow(A, 2)*pow(R, 4) + 384*pow(A, 2)*pow(R, 2)*pow(z1, 2))) + z0*(z0*(z0*(-144*pow(A, 2)*pow(R, 4) - 1152*pow(A, 2)*pow(R, 2)*z0*z1 - 6912*pow(A, 2)*pow(R, 2)*pow(z1, 2)) + z1*(144*pow(A, 2)*pow(R, 4) - 6912*pow(A, 2)*pow(R, 2)*pow(z1, 2))) + pow(z1, 2)*(144*pow(A, 2)*pow(R, 4) - 1152*pow(A, 2)*pow(R, 2)*pow(z1, 2)))) + z0*(96*pow(A, 2)*pow(R, 4)*pow(z1, 3) + z0*(z0*(z0*(48*pow(A, 2)*pow(R, 4) + 1152*pow(A, 2)*pow(R, 2)*pow(z1, 2)) + z1*(96*pow(A, 2)*pow(R, 4) + 3072*pow(A, 2)*pow(R, 2)*pow(z1, 2))) + pow(z1, 2)*(-288*pow(A, 2)*pow(R, 4) + 1152*pow(A, 2)*pow(R, 2)*pow(z1, 2))))) + z0*(-48*pow(A, 2)*pow(R, 4)*pow(z1, 4) + z0*(48*pow(A, 2)*pow(R, 4)*pow(z1, 3) + z0*(z0*z1*(-48*pow(A, 2)*pow(R, 4) - 384*pow(A, 2)*pow(R, 2)*pow(z1, 2)) + pow(z1, 2)*(48*pow(A, 2)*pow(R, 4) - 384*pow(A, 2)*pow(R, 2)*pow(z1, 2)))))) + z*(z*(576*A + z*(z*(z*(96*pow(A, 2)*pow(R, 6) - 2304*pow(A, 2)*pow(R, 4)*pow(z1, 2) + z*(-512*pow(A, 2)*pow(R, 4)*z + 1792*pow(A, 2)*pow(R, 4)*z0 + 1792*pow(A, 2)*pow(R, 4)*z1) + z0*(-2304*pow(A, 2)*pow(R, 4)*z0 - 6144*pow(A, 2)*pow(R, 4)*z1)) + z0*(-240*pow(A, 2)*pow(R, 6) + 7680*pow(A, 2)*pow(R, 4)*pow(z1, 2) + z0*(1280*pow(A, 2)*pow(R, 4)*z0 + 7680*pow(A, 2)*pow(R, 4)*z1)) + z1*(-240*pow(A, 2)*pow(R, 6) + 1280*pow(A, 2)*pow(R, 4)*pow(z1, 2))) + z0*(z0*(160*pow(A, 2)*pow(R, 6) - 9216*pow(A, 2)*pow(R, 4)*pow(z1, 2) + z0*(-256*pow(A, 2)*pow(R, 4)*z0 - 4096*pow(A, 2)*pow(R, 4)*z1)) + z1*(640*pow(A, 2)*pow(R, 6) - 4096*pow(A, 2)*pow(R, 4)*pow(z1, 2))) + pow(z1, 2)*(160*pow(A, 2)*pow(R, 6) - 256*pow(A, 2)*pow(R, 4)*pow(z1, 2))) + z0*(z0*(z0*(768*pow(A, 2)*pow(R, 4)*z0*z1 + 4608*pow(A, 2)*pow(R, 4)*pow(z1, 2)) + z1*(-480*pow(A, 2)*pow(R, 6) + 4608*pow(A, 2)*pow(R, 4)*pow(z1, 2))) + pow(z1, 2)*(-480*pow(A, 2)*pow(R, 6) + 768*pow(A, 2)*pow(R, 4)*pow(z1, 2)))) + z0*(64*pow(A, 2)*pow(R, 6)*pow(z1, 3) - 576*A + z0*(z0*(z0*(-16*pow(A, 2)*pow(R, 6) - 768*pow(A, 2)*pow(R, 4)*pow(z1, 2)) + z1*(64*pow(A, 2)*pow(R, 6) - 2048*pow(A, 2)*pow(R, 4)*pow(z1, 2))) + pow(z1, 2)*(384*pow(A, 2)*pow(R, 6) - 768*pow(A, 2)*pow(R, 4)*pow(z1, 2)))) + z1*(-16*pow(A, 2)*pow(R, 6)*pow(z1, 3) - 576*A)) + z0*(z0*(-64*pow(A, 2)*pow(R, 6)*pow(z1, 3) + 96*A + z0*(z0*z1*(16*pow(A, 2)*pow(R, 6) + 256*pow(A, 2)*pow(R, 4)*pow(z1, 2)) + pow(z1, 2)*(-64*pow(A, 2)*pow(R, 6) + 256*pow(A, 2)*pow(R, 4)*pow(z1, 2)))) + z1*(16*pow(A, 2)*pow(R, 6)*pow(z1, 3) + 384*A))) + z*(384*A*pow(R, 2)*z1 + z*(-384*A*pow(R, 2) + z*(z*(192*A + z*(-48*pow(A, 2)*pow(R, 8) + 576*pow(A, 2)*pow(R, 6)*pow(z1, 2) + z*(128*pow(A, 2)*pow(R, 6)*z - 448*pow(A, 2)*pow(R, 6)*z0 - 448*pow(A, 2)*pow(R, 6)*z1) + z0*(576*pow(A, 2)*pow(R, 6)*z0 + 1536*pow(A, 2)*pow(R, 6)*z1)) + z0*(120*pow(A, 2)*pow(R, 8) - 1920*pow(A, 2)*pow(R, 6)*pow(z1, 2) + z0*(-320*pow(A, 2)*pow(R, 6)*z0 - 1920*pow(A, 2)*pow(R, 6)*z1)) + z1*(120*pow(A, 2)*pow(R, 8) - 320*pow(A, 2)*pow(R, 6)*pow(z1, 2))) + z0*(-384*A + z0*(-96*pow(A, 2)*pow(R, 8) + 2304*pow(A, 2)*pow(R, 6)*pow(z1, 2) + z0*(64*pow(A, 2)*pow(R, 6)*z0 + 1024*pow(A, 2)*pow(R, 6)*z1)) + z1*(-288*pow(A, 2)*pow(R, 8) + 1024*pow(A, 2)*pow(R, 6)*pow(z1, 2))) + z1*(-384*A + z1*(-96*pow(A, 2)*pow(R, 8) + 64*pow(A, 2)*pow(R, 6)*pow(z1, 2)))) + z0*(z0*(192*A + z0*(24*pow(A, 2)*pow(R, 8) - 192*pow(A, 2)*pow(R, 6)*z0*z1 - 1152*pow(A, 2)*pow(R, 6)*pow(z1, 2)) + z1*(216*pow(A, 2)*pow(R, 8) - 1152*pow(A, 2)*pow(R, 6)*pow(z1, 2))) + z1*(768*A + z1*(216*pow(A, 2)*pow(R, 8) - 192*pow(A, 2)*pow(R, 6)*pow(z1, 2)))) + pow(z1, 2)*(24*pow(A, 2)*pow(R, 8)*z1 + 192*A)) + z0*(384*A*pow(R, 2) + z0*(z0*(192*pow(A, 2)*pow(R, 6)*z0*pow(z1, 2) + z1*(-48*pow(A, 2)*pow(R, 8) + 512*pow(A, 2)*pow(R, 6)*pow(z1, 2))) + z1*(-384*A + z1*(-144*pow(A, 2)*pow(R, 8) + 192*pow(A, 2)*pow(R, 6)*pow(z1, 2)))) + pow(z1, 2)*(-48*pow(A, 2)*pow(R, 8)*z1 - 384*A))) + z0*(-256*A*pow(R, 2)*z1 + z0*(-64*A*pow(R, 2) + z0*(-64*pow(A, 2)*pow(R, 6)*z0*pow(z1, 3) + pow(z1, 2)*(24*pow(A, 2)*pow(R, 8) - 64*pow(A, 2)*pow(R, 6)*pow(z1, 2))) + pow(z1, 2)*(24*pow(A, 2)*pow(R, 8)*z1 + 192*A))));
}

}  // namespace elax
