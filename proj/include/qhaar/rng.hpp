#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "qhaar/common.hpp"

namespace qhaar {

/// Deterministic 64-bit stream (splitmix64).  Probe vectors drawn from it are
/// reproducible across platforms and thread counts.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [lo, hi] inclusive.
  long long next_int(long long lo, long long hi) {
    return lo + static_cast<long long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Standard complex Gaussian via Box-Muller (real and imaginary parts N(0,1/2)-free
  /// convention: both parts N(0,1)).
  cplx next_gaussian() {
    double u1 = next_double();
    double u2 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    double rad = std::sqrt(-2.0 * std::log(u1));
    return {rad * std::cos(2.0 * pi * u2), rad * std::sin(2.0 * pi * u2)};
  }

  std::vector<cplx> gaussian_vector(std::size_t n) {
    std::vector<cplx> v(n);
    for (auto& z : v) z = next_gaussian();
    return v;
  }

  /// Derive an independent deterministic stream for a named sub-task.
  static Rng derive(std::uint64_t seed, const std::string& tag, std::uint64_t index = 0) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : tag) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    Rng mix(seed ^ h ^ (index * 0x9e3779b97f4a7c15ULL));
    // burn a few states so nearby seeds decorrelate
    mix.next_u64();
    mix.next_u64();
    return mix;
  }

 private:
  std::uint64_t state_;
};

}  // namespace qhaar
