#include "causal/sampling.hpp"

#include <stdexcept>

namespace causal {

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty sampling range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng_() % span);
}

double Sampler::unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

Rational Sampler::rational(std::int64_t bound, std::int64_t denominator) {
  return Rational(integer(-bound * denominator, bound * denominator), denominator);
}

RationalVector Sampler::vector(std::size_t dim, std::int64_t bound, std::int64_t denominator) {
  RationalVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = rational(bound, denominator);
  return v;
}

}  // namespace causal
