#pragma once

#include <cstdint>

#include "eds/rational.hpp"

namespace eds {

/// SplitMix64: 64-bit state, output mixed with the constants of Steele,
/// Lea and Flood.  State advances by 0x9e3779b97f4a7c15 per draw.  Every
/// seeded computation in the workbench derives its randomness from this
/// generator so that reports are reproducible across reimplementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Draw in {0, ..., n-1}, specified exactly as next() mod n.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Integer in [lo, hi], inclusive.
  int range_int(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Rational with numerator in [-num_bound, num_bound] and denominator in [1, den_bound].
  Rational rational(int num_bound, int den_bound) {
    const int num = range_int(-num_bound, num_bound);
    const int den = range_int(1, den_bound);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

 private:
  std::uint64_t state_;
};

}  // namespace eds
