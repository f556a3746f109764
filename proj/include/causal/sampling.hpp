#pragma once

#include "causal/rational.hpp"

#include <cstdint>
#include <random>

namespace causal {

constexpr std::uint64_t kDefaultSeed = 20260101;

/// Deterministic across platforms: only raw mt19937_64 output and integer
/// modulo are used, never the implementation-defined std distributions.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

  std::uint64_t next() { return rng_(); }
  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  /// Uniform in [0, 1) with 53 random bits.
  double unit();
  /// Multiple of 1/denominator in [-bound, bound].
  Rational rational(std::int64_t bound, std::int64_t denominator);
  RationalVector vector(std::size_t dim, std::int64_t bound, std::int64_t denominator);

 private:
  std::mt19937_64 rng_;
};

}  // namespace causal
