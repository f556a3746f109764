#include "causal/causal_cones.hpp"

#include <stdexcept>

namespace causal {

namespace {

std::vector<RationalVector> coroots(const std::vector<Root>& roots) {
  std::vector<RationalVector> out;
  for (const auto& r : roots) out.push_back(coroot(r.vector));
  return out;
}

bool all_leq(std::span<const RationalVector> rows, const RationalVector& x, bool strict, bool negate) {
  for (const auto& r : rows) {
    const Rational v = negate ? Rational(-dot(r, x)) : dot(r, x);
    if (strict ? v <= 0 : v < 0) return false;
  }
  return true;
}

}  // namespace

CausalCones c_min_and_ck(const CausalRootDatum& datum) {
  const std::size_t n = datum.ambient_dim();
  return {PolyCone::from_generators(n, coroots(datum.positive_noncompact())),
          PolyCone::from_generators(n, coroots(datum.positive_compact()))};
}

bool rds_check(const CausalRootDatum& datum, const RationalVector& lambda) {
  require_same_dim(lambda.dim(), datum.ambient_dim(), "spectral parameter");
  const RationalVector shifted = lambda + datum.rho();
  for (const auto& r : datum.positive_noncompact())
    if (dot(shifted, r.vector) >= 0) return false;
  return true;
}

bool rds_check(const CausalRootDatum& datum, std::span<const double> lambda) {
  require_same_dim(lambda.size(), datum.ambient_dim(), "spectral parameter");
  for (const auto& r : datum.positive_noncompact())
    if (dot(lambda, r.vector) + to_double(dot(datum.rho(), r.vector)) >= 0) return false;
  return true;
}

bool e_omega_check(const CausalRootDatum& datum, const RationalVector& lambda) {
  require_same_dim(lambda.dim(), datum.ambient_dim(), "spectral parameter");
  for (const auto& r : datum.positive_noncompact())
    if (dot(lambda, coroot(r.vector)) >= 2 - r.mult) return false;
  return true;
}

bool e_omega_check(const CausalRootDatum& datum, std::span<const double> lambda) {
  require_same_dim(lambda.size(), datum.ambient_dim(), "spectral parameter");
  for (const auto& r : datum.positive_noncompact())
    if (dot(lambda, coroot(r.vector)) >= 2.0 - r.mult) return false;
  return true;
}

bool e_zero_check(const CausalRootDatum& datum, const RationalVector& lambda) {
  require_same_dim(lambda.dim(), datum.ambient_dim(), "spectral parameter");
  for (const auto& r : datum.positive_compact())
    if (dot(lambda, r.vector) <= 0) return false;
  return true;
}

bool e_zero_check(const CausalRootDatum& datum, std::span<const double> lambda) {
  require_same_dim(lambda.size(), datum.ambient_dim(), "spectral parameter");
  for (const auto& r : datum.positive_compact())
    if (dot(lambda, r.vector) <= 0.0) return false;
  return true;
}

Polyhedron e_omega_polyhedron(const CausalRootDatum& datum) {
  Polyhedron p;
  p.dim = datum.ambient_dim();
  p.strict = true;
  for (const auto& r : datum.positive_noncompact()) {
    p.normals.push_back(-coroot(r.vector));
    p.offsets.push_back(Rational(r.mult - 2));
  }
  return p;
}

PolyCone c_plus_cone(const CausalRootDatum& datum, const StronglyOrthogonalSet& gamma) {
  const std::size_t s = gamma.size();
  std::vector<RationalVector> rows;
  for (const auto& r : datum.positive()) {
    RationalVector row(s);
    for (std::size_t j = 0; j < s; ++j) row[j] = dot(r.vector, gamma.h_basis[j]);
    rows.push_back(std::move(row));
  }
  const auto v = extreme_rays(s, rows);
  if (!v.lineality.empty()) throw std::domain_error("c+ is not pointed");
  std::vector<RationalVector> gens;
  for (const auto& y : v.rays) {
    RationalVector x(datum.ambient_dim());
    for (std::size_t j = 0; j < s; ++j) x += gamma.h_basis[j] * y[j];
    gens.push_back(std::move(x));
  }
  return PolyCone::from_generators(datum.ambient_dim(), std::move(gens));
}

PolyCone w_domain(const CausalRootDatum& datum) {
  const auto cones = c_min_and_ck(datum);
  return dual_cone(cones.c_min).negated().intersect(dual_cone(cones.c_k));
}

bool in_w(const CausalRootDatum& datum, const RationalVector& x) {
  require_same_dim(x.dim(), datum.ambient_dim(), "W membership");
  for (const auto& r : datum.positive_noncompact())
    if (dot(x, r.vector) >= 0) return false;
  for (const auto& r : datum.positive_compact())
    if (dot(x, r.vector) < 0) return false;
  return true;
}

ConeIdentityReport cplus_identity_check(const CausalRootDatum& datum, const StronglyOrthogonalSet& gamma,
                                        std::uint64_t seed, std::size_t samples,
                                        const std::optional<PolyCone>& c_plus_override) {
  const std::size_t n = datum.ambient_dim();
  const auto cones = c_min_and_ck(datum);
  const PolyCone c_plus = c_plus_override ? *c_plus_override : c_plus_cone(datum, gamma);
  require_same_dim(c_plus.dim(), n, "c+ override");

  const auto min_gens = coroots(datum.positive_noncompact());
  const auto k_gens = coroots(datum.positive_compact());
  const auto& plus_gens = c_plus.generators();
  const auto in_w1 = [&](const RationalVector& x) {
    return all_leq(min_gens, x, false, false) && all_leq(k_gens, x, false, true);
  };
  const auto in_w2 = [&](const RationalVector& x) {
    return all_leq(plus_gens, x, false, false) && all_leq(k_gens, x, false, true);
  };

  ConeIdentityReport rep;
  std::vector<RationalVector> seeds;
  if (n <= kExactConeDim) {
    const PolyCone neg_k = dual_cone(cones.c_k).negated();
    const PolyCone w1 = dual_cone(cones.c_min).intersect(neg_k);
    const PolyCone w2 = dual_cone(c_plus).intersect(neg_k);
    rep.exact_checked = true;
    rep.exact_equal = canonical_form(w1) == canonical_form(w2) && same_cone(w1, w2);
    seeds = w1.generators();
    for (const auto& g : w2.generators()) seeds.push_back(g);
  }
  for (const auto& g : min_gens) seeds.push_back(g);
  for (const auto& g : k_gens) seeds.push_back(-g);
  for (const auto& g : plus_gens) seeds.push_back(g);

  Sampler rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    RationalVector x(n);
    if (i % 2 == 0 || seeds.empty()) {
      x = rng.vector(n, 4, 8);
    } else {
      // random nonnegative combination of boundary generators, optionally nudged off the boundary
      const auto terms = static_cast<std::size_t>(rng.integer(1, 3));
      for (std::size_t t = 0; t < terms; ++t)
        x += seeds[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(seeds.size()) - 1))] *
             Rational(rng.integer(1, 8));
      if (rng.integer(0, 1) == 1) x += rng.vector(n, 1, 64) * Rational(1, 16);
    }
    ++rep.samples;
    if (in_w1(x) != in_w2(x)) {
      if (!rep.witness) rep.witness = x;
      ++rep.disagreements;
    }
  }
  return rep;
}

}  // namespace causal
