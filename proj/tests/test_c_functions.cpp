#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "causal/c_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace causal;

namespace {

CausalRootDatum rank_one(int m) {
  const auto set = build_classical(Family::A, 1);
  const std::vector<Multiplicity> mults{{RationalVector{1, -1}, m}};
  return make_causal(set, RationalVector{Rational(1, 2), Rational(-1, 2)}, mults, "A1 m=" + std::to_string(m));
}

RationalVector q(std::initializer_list<Rational> c) { return RationalVector(c); }

double gk_oracle(double z, int m, int m2) {
  return std::pow(2.0, -z) * std::tgamma(z) / (std::tgamma((m / 2.0 + 1 + z) / 2) * std::tgamma((m / 2.0 + m2 + z) / 2));
}

}  // namespace

TEST_CASE("c_omega rank one values") {
  CHECK(c_omega(rank_one(1), q({Rational(-1, 2), Rational(1, 2)})).to_double() == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(c_omega(rank_one(2), q({-2, 2})).to_double() == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(c_omega(rank_one(1), q({Rational(3, 4), Rational(-3, 4)})).status == Status::divergent);
  CHECK(c_omega_continued(rank_one(1), q({Rational(3, 4), Rational(-3, 4)})).is_finite());
  // m = 4: B(-t - 1, 2) = 1/((-t-1)(-t))
  const double t = -3.25;
  CHECK(c_omega(rank_one(4), q({Rational(-13, 4), Rational(13, 4)})).to_double() ==
        doctest::Approx(1 / ((-t - 1) * (-t))).epsilon(1e-12));
}

TEST_CASE("c_omega finite exactly on E_Omega") {
  Sampler rng;
  for (const auto& datum : {group_double(Family::C, 2), group_double(Family::A, 2, 1), rank_one(3)}) {
    for (int i = 0; i < 300; ++i) {
      const auto lam = rng.vector(datum.ambient_dim(), 6, 4);
      const auto c = c_omega(datum, lam);
      if (e_omega_check(datum, lam)) {
        REQUIRE(c.is_finite());
        CHECK(c.sign() == 1);
      } else {
        CHECK(c.status == Status::divergent);
      }
    }
  }
}

TEST_CASE("Gindikin-Karpelevic factor") {
  const auto set = build_classical(Family::C, 2);
  for (auto [m, m2] : {std::pair{2, 0}, std::pair{3, 0}, std::pair{1, 1}, std::pair{4, 3}}) {
    std::vector<Multiplicity> mults;
    for (const auto& a : set.positive) mults.push_back({a, a == RationalVector{1, -1} ? m : 1, a == RationalVector{1, -1} ? m2 : 0});
    const auto datum = make_causal(set, q({1, 1}), mults, "C2 custom");
    for (double x : {0.3, 1.0, 2.5, 7.0}) {
      const std::vector<double> lam{x, -x};  // <lambda, e1 - e2> / 2 = x
      REQUIRE(e_zero_check(datum, SpectralParameter(lam)));
      CHECK(c_zero(datum, lam).to_double() == doctest::Approx(gk_oracle(x, m, m2)).epsilon(1e-12));
      if (m == 2 && m2 == 0)
        CHECK(c_zero(datum, lam).to_double() == doctest::Approx(1 / (std::sqrt(std::numbers::pi) * x)).epsilon(1e-12));
    }
    CHECK(c_zero(datum, std::vector<double>{-1.0, 1.0}).status == Status::divergent);
  }
}

TEST_CASE("c_total is the product of both factors") {
  Sampler rng(7);
  const auto datum = group_double(Family::C, 2);
  int tested = 0;
  for (int i = 0; i < 200; ++i) {
    const auto lam = rng.vector(2, 8, 3);
    const auto total = c_total(datum, lam);
    if (!e_omega_check(datum, lam) || !e_zero_check(datum, lam)) {
      CHECK(total.status == Status::divergent);
      continue;
    }
    ++tested;
    const double ref = c_zero(datum, lam).to_double() * c_omega(datum, lam).to_double();
    CHECK(total.to_double() == doctest::Approx(ref).epsilon(1e-13));
  }
  CHECK(tested > 10);
}

TEST_CASE("weyl_dim") {
  const std::vector<RationalVector> a1{q({1, -1})};
  CHECK(weyl_dim({}, q({3, 1})).to_double() == 1.0);
  CHECK(weyl_dim(a1, q({0, 0})).to_double() == doctest::Approx(1.0));
  for (int n = 0; n < 6; ++n) CHECK(weyl_dim(a1, q({n, 0})).to_double() == doctest::Approx(n + 1.0));
  const std::vector<RationalVector> a2{q({1, -1, 0}), q({0, 1, -1}), q({1, 0, -1})};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      CHECK(weyl_dim(a2, q({a + b, b, 0})).to_double() == doctest::Approx((a + 1) * (b + 1) * (a + b + 2) / 2.0));
  const std::vector<RationalVector> c2{q({1, -1}), q({1, 1}), q({2, 0}), q({0, 2})};
  CHECK(weyl_dim(c2, q({1, 0})).to_double() == doctest::Approx(4.0));
  CHECK(weyl_dim(c2, q({1, 1})).to_double() == doctest::Approx(5.0));
  CHECK(weyl_dim(c2, q({2, 0})).to_double() == doctest::Approx(10.0));
  CHECK_THROWS_WITH_AS(weyl_dim(a1, q({0, 1})), "lambda is not Delta_k^+-dominant", std::domain_error);
}

TEST_CASE("d_group") {
  const auto datum = group_double(Family::A, 1, 1);
  const auto hat = hat_system(datum, {q({1, -1})});
  CHECK(hat.noncompact[0]);
  CHECK(d_group(hat, q({-2, 2})).to_double() == doctest::Approx(3.0));
  CHECK(d_group(hat, q({Rational(-1, 2), Rational(1, 2)})).is_zero());
  CHECK(d_group(hat, q({1, 0})).status == Status::divergent);
  CHECK(d_group_signed(hat, q({1, 0})).to_double() == doctest::Approx(2.0));
  const auto def = default_hat_system(datum);
  CHECK(def.rho == datum.rho());
  CHECK(def.positive.size() == 2);
}

TEST_CASE("formal_dimension") {
  const auto datum = group_double(Family::C, 2);
  REQUIRE(datum.rho() == q({4, 2}));

  // group case: |d(lambda)| / |prod <lambda + rho, alpha>| is constant on (RDS)
  Sampler rng(11);
  double ratio = 0.0;
  int seen = 0;
  for (int i = 0; i < 200 && seen < 20; ++i) {
    const auto lam = rng.vector(2, 12, 2);
    if (!rds_check(datum, lam)) {
      CHECK(formal_dimension(datum, lam).value.status == Status::divergent);
      continue;
    }
    const auto mu = lam + datum.rho();
    double prod = 1.0;
    for (const auto& r : datum.positive()) prod *= to_double(dot(mu, r.vector));
    if (prod == 0.0) continue;
    const auto d = formal_dimension(datum, lam);
    REQUIRE(d.value.is_finite());
    const auto c = c_total_continued(datum, SpectralParameter(mu));
    CHECK(d.value.sign() == c.sign());
    CHECK(d.value.to_double() / d_group(default_hat_system(datum), lam).to_double() ==
          doctest::Approx(c.to_double()).epsilon(1e-10));
    const double r = std::fabs(d.value.to_double() / prod);
    if (seen++ == 0) ratio = r;
    CHECK(r == doctest::Approx(ratio).epsilon(1e-10));
  }
  CHECK(seen == 20);

  const auto at_minus_rho = formal_dimension(datum, -datum.rho());
  CHECK(at_minus_rho.value.status == Status::divergent);
  CHECK(at_minus_rho.eps_trace.size() == 3);

  // lambda + rho = (-2, -2) is on the compact wall e1 - e2
  const auto wall = formal_dimension(datum, q({-6, -4}));
  CHECK(wall.value.is_zero());
  CHECK(wall.eps_trace.size() == 3);
  CHECK(wall.eps_direction.size() == 2);
}

TEST_CASE("formal_dimension rank one") {
  // su(1,1): d(lambda) = |lambda_1 + 2| / 2
  const auto datum = group_double(Family::C, 1);
  for (double x : {-2.5, -3.0, -4.75, -11.0}) {
    const auto d = formal_dimension(datum, std::vector<double>{x});
    CHECK(d.value.to_double() == doctest::Approx(std::fabs(x + 2) / 2).epsilon(1e-12));
    CHECK(d.eps_trace.empty());
  }
}

TEST_CASE("custom hat systems that break the Harish-Chandra condition diverge") {
  const auto datum = group_double(Family::A, 1, 1);
  const auto hat = hat_system(datum, {q({-1, 1}), q({-1, 1})});
  CHECK(formal_dimension(datum, hat, q({-3, 3})).value.status == Status::divergent);
}

TEST_CASE("group_case_c") {
  const auto datum = group_double(Family::A, 1, 1);
  CHECK(group_case_c(datum, q({-1, 1})).to_double() == doctest::Approx(-0.5));
  CHECK(group_case_c(datum, q({1, 1})).status == Status::pole);
  CHECK_THROWS_AS(group_case_c(rank_one(1), q({-1, 1})), std::invalid_argument);
}

TEST_CASE("spherical_factor") {
  const auto datum = group_double(Family::C, 2);
  Sampler rng(3);
  int seen = 0;
  for (int i = 0; i < 300; ++i) {
    const auto lam = rng.vector(2, 12, 2);
    const auto mu = lam + datum.rho();
    if (!e_omega_check(datum, mu)) {
      CHECK_THROWS_WITH_AS(spherical_factor(datum, lam), "lambda + rho outside E_Omega", std::domain_error);
      continue;
    }
    const auto s = spherical_factor(datum, lam);
    const auto c = c_omega(datum, mu) * c_zero_continued(datum, mu);
    if (c.status == Status::pole) {
      CHECK(s.is_zero());
      continue;
    }
    REQUIRE(c.is_finite());
    CHECK(s.to_double() * c.to_double() == doctest::Approx(1.0).epsilon(1e-12));
    if (rds_check(datum, lam)) {
      const auto d = formal_dimension(datum, lam).value;
      const auto dg = d_group(default_hat_system(datum), lam);
      if (d.is_finite() && !d.is_zero())
        CHECK(d.to_double() * s.to_double() == doctest::Approx(dg.to_double()).epsilon(1e-10));
      ++seen;
    }
  }
  CHECK(seen > 10);
}
