#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace iphys {

/// Seeded random stream with portable draw functions.
///
/// All experiment plumbing draws through this wrapper instead of the
/// standard distributions, whose output is implementation-defined. Two
/// runs with the same seed therefore produce the same stream on any
/// platform, which is what the reproducibility contract of the CLI
/// ultimately rests on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller; consumes two uniforms per pair.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    // Push u1 away from zero so log() stays finite.
    u1 = 1.0 - u1;
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 6.283185307179586476925286766559 * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  /// Uniform index in [0, n). Modulo bias is negligible for n << 2^64.
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(eng_() % n);
  }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace iphys
