#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "causal/cayley.hpp"
#include "causal/sampling.hpp"

#include <stdexcept>

using namespace causal;

namespace {

// exhaustive search for the largest pairwise strongly orthogonal subset of the noncompact positive roots
std::size_t brute_max_strongly_orthogonal(const CausalRootDatum& d) {
  const auto nc = d.positive_noncompact();
  const std::size_t n = nc.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    std::size_t size = 0;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      ++size;
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if (mask >> j & 1) ok = strongly_orthogonal(d, nc[i].vector, nc[j].vector);
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

std::vector<CausalRootDatum> hermitian_doubles() {
  std::vector<CausalRootDatum> out;
  for (int n = 1; n <= 4; ++n) {
    for (int p = 1; p <= n; ++p) out.push_back(group_double(Family::A, n, p));
    out.push_back(group_double(Family::C, n));
    if (n >= 2) out.push_back(group_double(Family::B, n));
    if (n >= 3)
      for (int p : {1, n - 1, n}) out.push_back(group_double(Family::D, n, p));
  }
  return out;
}

}  // namespace

TEST_CASE("strongly orthogonal sets") {
  const auto c2 = group_double(Family::C, 2);
  const auto g = find_strongly_orthogonal(c2);
  REQUIRE(g.size() == 2);
  CHECK(g.gammas[0] == RationalVector{2, 0});
  CHECK(g.gammas[1] == RationalVector{0, 2});
  CHECK(g.h_basis[0] == RationalVector{1, 0});

  const auto a1 = group_double(Family::A, 1, 1);
  const auto g1 = find_strongly_orthogonal(a1);
  REQUIRE(g1.size() == 1);
  CHECK(g1.gammas[0] == RationalVector{1, -1});

  for (const auto& d : hermitian_doubles()) {
    CAPTURE(d.label());
    const auto gam = find_strongly_orthogonal(d);
    for (std::size_t i = 0; i < gam.size(); ++i) {
      CHECK(dot(gam.gammas[i], gam.h_basis[i]) == 2);
      for (std::size_t j = 0; j < gam.size(); ++j) {
        if (i == j) continue;
        CHECK(!d.is_root(gam.gammas[i] + gam.gammas[j]));
        CHECK(!d.is_root(gam.gammas[i] - gam.gammas[j]));
        CHECK(dot(gam.gammas[i], gam.h_basis[j]) == 0);
      }
    }
    CHECK(is_maximal(d, gam));
    CHECK(gam.size() == brute_max_strongly_orthogonal(d));
  }
}

TEST_CASE("restricted system of sp4 and su(1,1)") {
  const auto c2 = group_double(Family::C, 2);
  const auto rs = restricted_system(c2, find_strongly_orthogonal(c2));
  CHECK(rs.s == 2);
  CHECK(rs.class_mult[0] == 2);
  CHECK(rs.class_mult[1] == 2);
  CHECK(rs.class_mult[2] == 0);
  CHECK(!rs.has_half_roots());
  CHECK(rs.positive.size() == 4);

  const auto c1 = group_double(Family::C, 1);
  const auto r1 = restricted_system(c1, find_strongly_orthogonal(c1));
  CHECK(r1.s == 1);
  REQUIRE(r1.positive.size() == 1);
  CHECK(r1.positive[0].cls == SigmaClass::full);
  CHECK(r1.class_mult[1] == 2);
  REQUIRE(r1.jac[1].has_value());
  CHECK(r1.jac[1]->plus == 1);
  CHECK(r1.jac[1]->minus == 1);
}

TEST_CASE("every hermitian double has the three-class shape") {
  for (const auto& d : hermitian_doubles()) {
    CAPTURE(d.label());
    const auto gam = find_strongly_orthogonal(d);
    RestrictedSystem rs;
    REQUIRE_NOTHROW(rs = restricted_system(d, gam));
    for (const auto& p : rs.psis) CHECK(norm2(p) == norm2(rs.psis[0]));
    std::size_t roots_seen = rs.zero_restrictions;
    int mult_total = 0;
    for (const auto& phi : rs.positive) {
      CHECK(phi.mult == rs.class_mult[static_cast<std::size_t>(phi.cls)]);
      mult_total += phi.mult;
      if (phi.noncompact)
        for (const auto& c : phi.coeffs) CHECK(c >= 0);
    }
    for (const auto& r : d.positive()) {
      bool nonzero = false;
      for (const auto& g : gam.gammas) nonzero = nonzero || dot(r.vector, g) != 0;
      if (nonzero) mult_total -= r.mult;
    }
    CHECK(mult_total == 0);
    CHECK(roots_seen <= d.positive().size());
    CHECK(rs.has_half_roots() == (rs.class_mult[2] != 0));
  }
}

TEST_CASE("chamber b+ agrees with the cone cut out by Sigma+") {
  Sampler rng(7);
  for (const auto& d : {group_double(Family::C, 3), group_double(Family::A, 3, 2), group_double(Family::A, 2, 1),
                        group_double(Family::D, 4, 4)}) {
    const auto rs = restricted_system(d, find_strongly_orthogonal(d));
    for (int trial = 0; trial < 400; ++trial) {
      const RationalVector x = rng.vector(rs.s, 3, 4);
      bool ordered = x[rs.s - 1] >= 0;
      for (std::size_t j = 0; j + 1 < rs.s; ++j) ordered = ordered && x[j] >= x[j + 1];
      bool positive = true;
      for (const auto& phi : rs.positive) {
        Rational v = 0;
        for (std::size_t j = 0; j < rs.s; ++j) v += 2 * phi.coeffs[j] * x[j];
        positive = positive && v >= 0;
      }
      CHECK(ordered == positive);
    }
  }
}

TEST_CASE("jacobian exponent validation") {
  const auto c1 = group_double(Family::C, 1);
  const auto rs = restricted_system(c1, find_strongly_orthogonal(c1));
  ClassSplits ok;
  ok[1] = JacobianSplit{2, 0};
  CHECK(jacobian_exponents(rs, ok).jac[1]->plus == 2);
  ClassSplits bad;
  bad[1] = JacobianSplit{2, 1};
  CHECK_THROWS_AS(jacobian_exponents(rs, bad), std::invalid_argument);
  bad[1] = JacobianSplit{3, -1};
  CHECK_THROWS_AS(jacobian_exponents(rs, bad), std::invalid_argument);
}

TEST_CASE("shape violation on a corrupt datum") {
  // orthogonal roots of different lengths: both noncompact, so Gamma has psi of unequal length
  RootSet set{Family::B, 2, 2, {}, {RationalVector{1, 0}, RationalVector{0, 2}}};
  for (const auto& p : set.positive) {
    set.roots.push_back(p);
    set.roots.push_back(-p);
  }
  const auto d = make_causal(set, RationalVector{2, 1}, uniform_multiplicities(set, 1), "corrupt");
  const auto gam = find_strongly_orthogonal(d);
  CHECK(gam.size() == 2);
  CHECK_THROWS_WITH_AS(restricted_system(d, gam), doctest::Contains("Sigma shape violation"), std::domain_error);

  const auto c2 = group_double(Family::C, 2);
  StronglyOrthogonalSet partial;
  partial.gammas = {RationalVector{2, 0}};
  partial.h_basis = {RationalVector{1, 0}};
  CHECK_THROWS_WITH_AS(restricted_system(c2, partial), doctest::Contains("not maximal"), std::invalid_argument);
}
