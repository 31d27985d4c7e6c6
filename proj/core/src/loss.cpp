#include "iphys/loss.hpp"

#include <cmath>
#include <stdexcept>

namespace iphys {

namespace {

double sum_squared_diff(std::span<const double> target, std::span<const double> f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double d = target[i] - f[i];
    acc += d * d;
  }
  return acc;
}

}  // namespace

LossValue indirect_loss(const ProjectionOperator& op, std::span<const double> f,
                        const LossConfig& cfg) {
  const std::size_t n = op.size();
  if (f.size() != n) {
    throw std::invalid_argument("indirect_loss: prediction length mismatch");
  }

  const std::vector<double> proj = op.project(f);

  std::vector<double> target;
  double sigma = 1.0;
  if (cfg.normalize_projection) {
    const Moments m = population_moments(proj);
    if (m.std <= 1e-12) {
      throw std::domain_error(
          "indirect_loss: projected prediction is constant; cannot normalize "
          "(collapsed prediction)");
    }
    sigma = m.std;
    target.resize(n);
    for (std::size_t i = 0; i < n; ++i) target[i] = (proj[i] - m.mean) / m.std;
  } else {
    target = proj;
  }

  LossValue out;
  out.value = sum_squared_diff(target, f);
  out.grad.assign(n, 0.0);

  // d(value)/d(target) and the direct -d(value)/d(f) term.
  std::vector<double> gt(n);
  for (std::size_t i = 0; i < n; ++i) {
    gt[i] = 2.0 * (target[i] - f[i]);
    out.grad[i] = -gt[i];
  }
  if (cfg.detach_projection_branch) {
    return out;
  }

  // Pull gt back through the normalization to d(value)/d(Pf).
  std::vector<double> du;
  if (cfg.normalize_projection) {
    const double nd = static_cast<double>(n);
    double mean_gt = 0.0;
    double mean_gtz = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      mean_gt += gt[i];
      mean_gtz += gt[i] * target[i];
    }
    mean_gt /= nd;
    mean_gtz /= nd;
    du.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      du[i] = (gt[i] - mean_gt - target[i] * mean_gtz) / sigma;
    }
  } else {
    du = std::move(gt);
  }

  // Pull back through the projection: P is self-adjoint, so the adjoint
  // application is another forward projection.
  const std::vector<double> pdu = op.project(du);
  for (std::size_t i = 0; i < n; ++i) out.grad[i] += pdu[i];
  return out;
}

double max_relative_error(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("max_relative_error: length mismatch");
  }
  double scale = 1e-8;
  for (std::size_t i = 0; i < a.size(); ++i) {
    scale = std::max(scale, std::max(std::fabs(a[i]), std::fabs(b[i])));
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::fabs(a[i] - b[i]) / scale);
  }
  return worst;
}

double loss_gradient_check(const ProjectionOperator& op, std::span<const double> f,
                           const LossConfig& cfg, double h) {
  if (!(h >= 1e-7 && h <= 1e-3)) {
    throw std::invalid_argument("loss_gradient_check: h must be in [1e-7, 1e-3]");
  }
  const LossValue analytic = indirect_loss(op, f, cfg);

  // The declared forward for the detach variant holds the projected branch
  // fixed at the evaluation point.
  std::vector<double> frozen_target;
  if (cfg.detach_projection_branch) {
    const std::vector<double> proj = op.project(f);
    frozen_target = cfg.normalize_projection ? normalize(proj) : proj;
  }
  const auto eval = [&](std::span<const double> x) {
    if (cfg.detach_projection_branch) {
      return sum_squared_diff(frozen_target, x);
    }
    return indirect_loss(op, x, cfg).value;
  };

  std::vector<double> x(f.begin(), f.end());
  std::vector<double> numeric(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double saved = x[i];
    x[i] = saved + h;
    const double plus = eval(x);
    x[i] = saved - h;
    const double minus = eval(x);
    x[i] = saved;
    numeric[i] = (plus - minus) / (2.0 * h);
  }
  return max_relative_error(analytic.grad, numeric);
}

}  // namespace iphys
