/**
 * Deterministic 64-bit generator used by every sampler.
 *
 * The algorithm is part of the external contract so that seeded runs are
 * reproducible across implementations:
 *
 *   SplitMix64 state update   s += 0x9E3779B97F4A7C15
 *   output mix                z = s; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9;
 *                             z = (z ^ z>>27) * 0x94D049BB133111EB;
 *                             return z ^ z>>31
 *
 * Sample k of a stream with seed s draws from a generator whose initial
 * state is mix(s ^ mix(k + 1)), where mix is the output mix above. Streams
 * for distinct indices are independent, so any index may be generated on
 * any worker.
 *
 * Doubles: next_double() = (next() >> 11) * 2^-53, uniform on [0, 1).
 * Bounded integers use rejection, never modulo bias. Simplex points use
 * exponential normalization: w_i = E_i / sum(E), E_i = -log(1 - u_i).
 */

#pragma once

#include <cmath>
#include <cstdint>

#include <Eigen/Dense>

namespace conedist {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static SplitMix64 for_sample(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix(seed ^ mix(index + 1)));
  }

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  double next_double() { return (next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound), bias-free via rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t rem = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next();
      if (r <= UINT64_MAX - rem) return r % bound;
    }
  }

  // Standard normal via Box-Muller; draws two uniforms per call.
  double next_gaussian() {
    const double u1 = 1.0 - next_double();  // (0, 1]
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925 * u2);
  }

 private:
  std::uint64_t state_;
};

// Uniform point on the standard (n-1)-simplex.
inline Eigen::VectorXd simplex_uniform(SplitMix64& rng, int n) {
  Eigen::VectorXd e(n);
  for (int i = 0; i < n; ++i) {
    e[i] = -std::log1p(-rng.next_double());
  }
  return e / e.sum();
}

}  // namespace conedist
