#pragma once

#include <span>
#include <vector>

#include "iphys/projection.hpp"

namespace iphys {

struct LossConfig {
  /// Re-standardize the projected vector before taking the difference.
  /// Keeps the per-iteration target at unit scale; without it the loss
  /// admits arbitrarily small-norm in-range minimizers and predictions
  /// collapse toward zero as training progresses.
  bool normalize_projection = true;
  /// Treat the (normalized) projection as a constant per evaluation
  /// instead of differentiating through it.
  bool detach_projection_branch = false;
};

struct LossValue {
  double value = 0.0;        ///< sum of squared differences, >= 0
  std::vector<double> grad;  ///< exact d(value)/df, length n
};

/// Indirect physics-constrained loss of a prediction vector f:
///   normalize_projection off:  sum_i ((P f)_i - f_i)^2
///   normalize_projection on:   sum_i (normalize(P f)_i - f_i)^2
/// The gradient is the exact derivative of the returned value; with
/// detach_projection_branch the projected branch is held constant, which
/// is the simpler stop-gradient reading of the same loss.
///
/// The reduction is a plain sum over components; callers wanting a
/// per-sample mean divide by n themselves.
///
/// Throws std::invalid_argument on length mismatch and std::domain_error
/// when P f is constant while normalization is requested (the collapsed-
/// prediction failure mode; it should surface, not be epsilon-guarded).
LossValue indirect_loss(const ProjectionOperator& op, std::span<const double> f,
                        const LossConfig& cfg = {});

/// Scale-normalized discrepancy between two gradient vectors:
///   max_i |a_i - b_i| / max(||a||_inf, ||b||_inf, 1e-8).
/// Normalizing by the dominant magnitude keeps components that are tiny
/// relative to the gradient's scale from spuriously dominating the check.
double max_relative_error(std::span<const double> a, std::span<const double> b);

/// Validates the analytic gradient of indirect_loss against central finite
/// differences of the same declared forward definition (for the detach
/// variant, the projected branch is frozen at the evaluation point, which
/// is what that variant claims to differentiate). Returns the
/// max_relative_error between the two gradients. Requires h in [1e-7, 1e-3].
double loss_gradient_check(const ProjectionOperator& op, std::span<const double> f,
                           const LossConfig& cfg, double h);

}  // namespace iphys
