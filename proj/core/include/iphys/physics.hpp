#pragma once

namespace iphys {

/// Coefficients of the rock-physics chain sonic -> E_dyn -> E_stat -> UCS.
///
/// The unit-conversion constant c is dimensionless here: logs are treated
/// in consistent internal units and c only rescales reported magnitudes,
/// which the projection loss is invariant to. Downstream metrics are all
/// unit-agnostic.
struct PhysicsConstants {
  double c = 1.0;        ///< unit conversion factor in the E_dyn formula
  double a_stat = 0.414;  ///< slope of the static-from-dynamic correlation
  double b_stat = -1.05;  ///< intercept of the static-from-dynamic correlation
  double a_ucs = 4.1089;  ///< slope of the UCS-from-static correlation
  double b_ucs = 2.28;    ///< intercept of the UCS-from-static correlation
};

/// One aligned sample of the logs entering the physics chain.
struct SonicSample {
  double rho;  ///< bulk density
  double dts;  ///< shear slowness
  double dtp;  ///< compressional slowness
};

/// Dynamic Young's modulus from density and sonic slownesses:
///   E_dyn = c * (rho / dts^2) * (3 dts^2 - 4 dtp^2) / (dts^2 - dtp^2).
///
/// Throws std::domain_error outside the validity region
/// dts > (2/sqrt(3)) * dtp (where the numerator or denominator would be
/// non-positive), or when rho, dtp or c is non-positive. Invalid samples
/// are rejected, never clamped: a clamped value would silently corrupt
/// the indirect labels built from this quantity.
double dynamic_youngs_modulus(const SonicSample& s,
                              const PhysicsConstants& k = {});

/// Static Young's modulus estimate: E_stat = a_stat * E_dyn + b_stat.
double static_from_dynamic(double e_dyn, const PhysicsConstants& k = {});

/// Uniaxial compressive strength: UCS = b_ucs + a_ucs * E_stat.
double ucs_from_static(double e_stat, const PhysicsConstants& k = {});

/// Full chain; equal to composing the three steps above.
double ucs_from_logs(const SonicSample& s, const PhysicsConstants& k = {});

/// Sign of dUCS/dE_dyn = a_stat * a_ucs; +1 for the default constants.
/// This is the expected correlation sign between the quantity being
/// predicted and the indirect labels, used by the covariance sign fix.
/// Throws std::domain_error when the composite slope is zero.
int expected_correlation_sign(const PhysicsConstants& k = {});

}  // namespace iphys
