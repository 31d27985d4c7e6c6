#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace iphys {

/// Coefficients and fit of the overdetermined system [e 1] * theta ~= y.
struct LeastSquaresSolution {
  std::array<double, 2> theta;   ///< (slope on e, intercept)
  std::vector<double> fitted;    ///< A * theta
  std::vector<double> residual;  ///< A * theta - y
};

/// Orthogonal projector onto range([e 1]) applied matrix-free.
///
/// The design matrix A = [e 1] has exactly two columns (the indirect-label
/// column and a constant column), so A^T A is 2x2 and its inverse can be
/// cached in closed form. Projection is then
///   P y = A (A^T A)^{-1} (A^T y)
/// evaluated right-to-left in O(n) time and O(n) space. The n x n matrix
/// P itself is never materialized, so batch size times sequence length can
/// grow without any quadratic memory cost.
class ProjectionOperator {
 public:
  struct Options {
    /// Reject construction when var(e) <= tol * (1 + mean(e)^2).
    double collinearity_rtol = 1e-12;
    /// Instead of rejecting, add lambda = 1e-8 * trace(A^T A)/2 to the
    /// Gram diagonal. Off by default: degenerate batches should fail
    /// loudly, not be silently regularized.
    bool ridge_fallback = false;
  };

  /// Builds the operator from the indirect-label column e.
  /// Throws std::invalid_argument when e has fewer than 3 entries or a
  /// non-finite value, std::domain_error when the columns of A are
  /// (numerically) collinear and ridge fallback is off.
  explicit ProjectionOperator(std::vector<double> e, const Options& opts = {});

  std::size_t size() const { return e_.size(); }
  const std::vector<double>& labels() const { return e_; }

  /// Cached inverse of A^T A, row-major [ [0,1], [2,3] ].
  const std::array<double, 4>& gram_inverse() const { return gram_inv_; }

  /// A^T A entries, row-major. Equal to [[sum e^2, sum e], [sum e, n]]
  /// plus the ridge term when the fallback engaged.
  std::array<double, 4> gram() const;

  /// y* = P y. Requires out.size() == size(); out may alias y.
  void project(std::span<const double> y, std::span<double> out) const;
  std::vector<double> project(std::span<const double> y) const;

  /// Solves the normal equations for theta and reports fit and residual.
  LeastSquaresSolution least_squares_coeffs(std::span<const double> y) const;

 private:
  std::array<double, 2> solve_normal_equations(std::span<const double> y) const;

  std::vector<double> e_;
  std::array<double, 4> gram_inv_{};
  double sum_e_ = 0.0;
  double sum_e2_ = 0.0;
  double ridge_ = 0.0;
};

/// Shifts and scales v to zero mean and unit population standard deviation
/// (the batch-normalization convention: variance divides by n, not n-1).
/// Throws std::invalid_argument for fewer than 2 entries and
/// std::domain_error when the population std is <= 1e-12.
std::vector<double> normalize(std::span<const double> v);

/// Population mean and standard deviation of v (std divides by n).
struct Moments {
  double mean;
  double std;
};
Moments population_moments(std::span<const double> v);

}  // namespace iphys
