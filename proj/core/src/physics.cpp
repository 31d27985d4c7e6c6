#include "iphys/physics.hpp"

#include <cmath>
#include <stdexcept>

namespace iphys {

double dynamic_youngs_modulus(const SonicSample& s, const PhysicsConstants& k) {
  if (k.c <= 0.0) {
    throw std::domain_error("dynamic_youngs_modulus: constant c must be positive");
  }
  if (s.rho <= 0.0 || s.dtp <= 0.0) {
    throw std::domain_error("dynamic_youngs_modulus: rho and dtp must be positive");
  }
  const double dts2 = s.dts * s.dts;
  const double dtp2 = s.dtp * s.dtp;
  // dts > (2/sqrt(3)) dtp keeps both 3 dts^2 - 4 dtp^2 and dts^2 - dtp^2
  // positive, hence E_dyn > 0.
  if (3.0 * dts2 - 4.0 * dtp2 <= 0.0 || dts2 - dtp2 <= 0.0) {
    throw std::domain_error(
        "dynamic_youngs_modulus: sample outside validity region "
        "dts > (2/sqrt(3)) * dtp");
  }
  return k.c * (s.rho / dts2) * ((3.0 * dts2 - 4.0 * dtp2) / (dts2 - dtp2));
}

double static_from_dynamic(double e_dyn, const PhysicsConstants& k) {
  return k.a_stat * e_dyn + k.b_stat;
}

double ucs_from_static(double e_stat, const PhysicsConstants& k) {
  return k.b_ucs + k.a_ucs * e_stat;
}

double ucs_from_logs(const SonicSample& s, const PhysicsConstants& k) {
  return ucs_from_static(static_from_dynamic(dynamic_youngs_modulus(s, k), k), k);
}

int expected_correlation_sign(const PhysicsConstants& k) {
  const double slope = k.a_stat * k.a_ucs;
  if (slope == 0.0) {
    throw std::domain_error(
        "expected_correlation_sign: composite slope a_stat * a_ucs is zero");
  }
  return slope > 0.0 ? +1 : -1;
}

}  // namespace iphys
