#pragma once

#include <span>
#include <vector>

namespace iphys {

/// Outcome of the covariance analysis between a prediction vector and the
/// indirect labels. Because the indirect loss is symmetric under f -> -f,
/// a trained model lands on one of two mirror solutions; the covariance
/// against the indirect labels picks the physically oriented one.
struct OrientationReport {
  double covariance = 0.0;   ///< sample covariance cov(f, e)
  double correlation = 0.0;  ///< Pearson correlation, in [-1, 1]
  int resolved_sign = +1;    ///< sign to multiply f by
  bool confident = true;     ///< false when |correlation| < threshold
};

/// Default |correlation| below which the resolution is reported as a
/// coin-flip rather than silently applied.
inline constexpr double kOrientationConfidenceThreshold = 0.05;

/// Chooses the orientation sign so that resolved_sign * f correlates with
/// e with the sign the physics chain demands (expected_sign, the sign of
/// dUCS/dE_dyn). Below the confidence threshold the sign stays +1 and
/// confident is false. Throws std::invalid_argument on length mismatch or
/// fewer than 3 samples, std::domain_error when either vector is constant.
OrientationReport covariance_sign(
    std::span<const double> f, std::span<const double> e, int expected_sign = +1,
    double confidence_threshold = kOrientationConfidenceThreshold);

/// resolved_sign * f.
std::vector<double> resolve_orientation(std::span<const double> f,
                                        const OrientationReport& report);

/// Maps a standardized prediction back to physical UCS units:
/// f * ucs_std + ucs_mean. The moments come from TRAINING wells only,
/// computed through the physics chain, so the rescaling uses nothing that
/// is unavailable at training time. Throws std::domain_error when
/// ucs_std <= 0.
std::vector<double> rescale_to_physical(std::span<const double> f_oriented,
                                        double ucs_mean, double ucs_std);

}  // namespace iphys
