#include "iphys/signfix.hpp"

#include <cmath>
#include <stdexcept>

namespace iphys {

OrientationReport covariance_sign(std::span<const double> f,
                                  std::span<const double> e, int expected_sign,
                                  double confidence_threshold) {
  if (f.size() != e.size()) {
    throw std::invalid_argument("covariance_sign: length mismatch");
  }
  if (f.size() < 3) {
    throw std::invalid_argument("covariance_sign: need at least 3 samples");
  }
  const double nd = static_cast<double>(f.size());
  double mf = 0.0;
  double me = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mf += f[i];
    me += e[i];
  }
  mf /= nd;
  me /= nd;
  double sff = 0.0;
  double see = 0.0;
  double sfe = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double df = f[i] - mf;
    const double de = e[i] - me;
    sff += df * df;
    see += de * de;
    sfe += df * de;
  }
  if (sff <= 0.0 || see <= 0.0) {
    throw std::domain_error("covariance_sign: constant input vector");
  }

  OrientationReport rep;
  rep.covariance = sfe / (nd - 1.0);
  rep.correlation = sfe / std::sqrt(sff * see);
  rep.confident = std::fabs(rep.correlation) >= confidence_threshold;
  if (rep.confident) {
    rep.resolved_sign = (rep.covariance >= 0.0 ? +1 : -1) * expected_sign;
  } else {
    rep.resolved_sign = +1;  // do not coin-flip on an uninformative prediction
  }
  return rep;
}

std::vector<double> resolve_orientation(std::span<const double> f,
                                        const OrientationReport& report) {
  std::vector<double> out(f.begin(), f.end());
  if (report.resolved_sign < 0) {
    for (double& v : out) v = -v;
  }
  return out;
}

std::vector<double> rescale_to_physical(std::span<const double> f_oriented,
                                        double ucs_mean, double ucs_std) {
  if (ucs_std <= 0.0) {
    throw std::domain_error("rescale_to_physical: ucs_std must be positive");
  }
  std::vector<double> out(f_oriented.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = f_oriented[i] * ucs_std + ucs_mean;
  }
  return out;
}

}  // namespace iphys
