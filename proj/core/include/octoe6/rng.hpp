#pragma once
/**
 * @file rng.hpp
 * @brief Seeded deterministic pseudo-random scalars for randomized checks.
 *
 * Draws come straight from the (fully specified) mt19937_64 stream, so the
 * same seed yields the same sequence on every platform and standard library.
 */

#include "octoe6/rational.hpp"

#include <cstdint>
#include <random>

namespace octoe6 {

class RatRng {
 public:
  explicit RatRng(std::uint64_t seed) : eng_(seed) {}

  /// Small rational num/den with num in [-bound, bound], den in [1, bound].
  [[nodiscard]] Rational next(int bound = 9) {
    const long num = static_cast<long>(eng_() % (2 * static_cast<unsigned>(bound) + 1)) - bound;
    const long den = static_cast<long>(eng_() % static_cast<unsigned>(bound)) + 1;
    return rat(num, den);
  }

  /// Uniform-ish index in [0, n); n must be positive.
  [[nodiscard]] std::size_t next_index(std::size_t n) { return eng_() % n; }

  /// Uniform double in [lo, hi).
  [[nodiscard]] double next_double(double lo, double hi) {
    const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace octoe6
