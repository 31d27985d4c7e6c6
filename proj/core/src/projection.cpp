#include "iphys/projection.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace iphys {

ProjectionOperator::ProjectionOperator(std::vector<double> e, const Options& opts)
    : e_(std::move(e)) {
  const std::size_t n = e_.size();
  if (n < 3) {
    throw std::invalid_argument(
        "ProjectionOperator: need at least 3 samples, got " + std::to_string(n));
  }
  for (double v : e_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("ProjectionOperator: non-finite indirect label");
    }
  }
  for (double v : e_) {
    sum_e_ += v;
    sum_e2_ += v * v;
  }
  const double nd = static_cast<double>(n);
  const double mean = sum_e_ / nd;
  const double var = sum_e2_ / nd - mean * mean;
  if (var <= opts.collinearity_rtol * (1.0 + mean * mean)) {
    if (!opts.ridge_fallback) {
      throw std::domain_error(
          "ProjectionOperator: indirect-label column is collinear with the "
          "constant column (variance below tolerance)");
    }
    ridge_ = 1e-8 * (sum_e2_ + nd) / 2.0;  // 1e-8 * trace(A^T A) / 2
  }

  const double g00 = sum_e2_ + ridge_;
  const double g01 = sum_e_;
  const double g11 = nd + ridge_;
  const double det = g00 * g11 - g01 * g01;
  if (det <= 0.0 || !std::isfinite(det)) {
    throw std::domain_error("ProjectionOperator: Gram matrix is singular");
  }
  gram_inv_ = {g11 / det, -g01 / det, -g01 / det, g00 / det};
}

std::array<double, 4> ProjectionOperator::gram() const {
  const double nd = static_cast<double>(e_.size());
  return {sum_e2_ + ridge_, sum_e_, sum_e_, nd + ridge_};
}

std::array<double, 2> ProjectionOperator::solve_normal_equations(
    std::span<const double> y) const {
  if (y.size() != e_.size()) {
    throw std::invalid_argument(
        "ProjectionOperator: vector length " + std::to_string(y.size()) +
        " does not match operator size " + std::to_string(e_.size()));
  }
  // A^T y with A = [e 1].
  double aty0 = 0.0;
  double aty1 = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    aty0 += e_[i] * y[i];
    aty1 += y[i];
  }
  return {gram_inv_[0] * aty0 + gram_inv_[1] * aty1,
          gram_inv_[2] * aty0 + gram_inv_[3] * aty1};
}

void ProjectionOperator::project(std::span<const double> y,
                                 std::span<double> out) const {
  const auto theta = solve_normal_equations(y);
  if (out.size() != e_.size()) {
    throw std::invalid_argument("ProjectionOperator: output length mismatch");
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = theta[0] * e_[i] + theta[1];
  }
}

std::vector<double> ProjectionOperator::project(std::span<const double> y) const {
  std::vector<double> out(e_.size());
  project(y, out);
  return out;
}

LeastSquaresSolution ProjectionOperator::least_squares_coeffs(
    std::span<const double> y) const {
  LeastSquaresSolution sol;
  sol.theta = solve_normal_equations(y);
  sol.fitted.resize(e_.size());
  sol.residual.resize(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    sol.fitted[i] = sol.theta[0] * e_[i] + sol.theta[1];
    sol.residual[i] = sol.fitted[i] - y[i];
  }
  return sol;
}

Moments population_moments(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  const double mean = sum / static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) {
    const double d = x - mean;
    ss += d * d;
  }
  return {mean, std::sqrt(ss / static_cast<double>(v.size()))};
}

std::vector<double> normalize(std::span<const double> v) {
  if (v.size() < 2) {
    throw std::invalid_argument("normalize: need at least 2 entries");
  }
  const Moments m = population_moments(v);
  if (m.std <= 1e-12) {
    throw std::domain_error("normalize: vector is constant (population std <= 1e-12)");
  }
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = (v[i] - m.mean) / m.std;
  }
  return out;
}

}  // namespace iphys
