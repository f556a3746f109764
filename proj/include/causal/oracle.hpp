#pragma once

#include "causal/cayley.hpp"
#include "causal/cone.hpp"
#include "causal/root_system.hpp"
#include "causal/special_functions.hpp"

#include <array>
#include <span>
#include <vector>

namespace causal {

struct HTerm {
  std::vector<double> vec;
  int power = 0;
};

/// H(lambda) = int_W e^{lambda(x)} prod sinh(alpha_j(x))^{p_j} prod cosh(beta_j(x))^{q_j} dx
/// over the interior of a pointed full-dimensional cone W (dim 1 or 2).
struct HSpec {
  std::size_t dim = 1;
  std::vector<double> lam;
  std::vector<HTerm> sinh_terms;
  std::vector<HTerm> cosh_terms;
  PolyCone cone;
};

/// Throws std::invalid_argument for dim outside {1, 2}, a cone that is not pointed
/// and full-dimensional, or an exponent vector outside W* \ {0}.
void validate(const HSpec& spec);

struct HCriterion {
  bool convergent = false;
  /// min over unit extreme rays w of -<mu, w>, mu = lambda + sum p alpha + sum q beta;
  /// positive iff mu in -int W*.
  double margin = 0.0;
  std::vector<double> mu;
};
HCriterion h_criterion(const HSpec& spec);

struct HIntegral {
  EvalResult value;
  double abs_error = 0.0;
  std::array<double, 2> radius{0.0, 0.0};  // truncation in unit-ray coordinates
  HCriterion criterion;
};

/// Divergent by the cone criterion without integrating; otherwise adaptive
/// quadrature on the orthant image of W truncated where the exponential envelope
/// 2^{-P} e^{<mu, x>} bounds the tail below 1e-10 relative to the value.
HIntegral h_integral(const HSpec& spec);

/// Termwise integration after expanding every sinh/cosh power into exponentials,
/// in exact arithmetic on the binary values of the inputs.
EvalResult h_closed_form(const HSpec& spec);

/// B(a, b) = prefactor * H(lambda) for integer b >= 1: substituting t = e^{-x} gives
/// 2^{b-1} int_0^inf e^{-(a + (b-1)/2) x} sinh(x/2)^{b-1} dx over W = R+.
struct BetaReduction {
  HSpec spec;
  double prefactor = 1.0;
};
BetaReduction beta_reduction(double a, int b);

struct GrowthScan {
  static constexpr std::array<double, 5> radii{50, 100, 200, 400, 800};
  std::array<double, 5> values{};
  bool divergent = false;
};

/// Criterion-free detector: truncated integrals T(R) over [0, R]^dim in unit-ray
/// coordinates; divergent iff some T(R) is not finite, T(800) > 1e12, or
/// T(800) > 1.5 T(400).
GrowthScan detect_divergence(const HSpec& spec);

/// prod over Sigma^+ of cosh(phi(X))^{m+} sinh(phi(X))^{m-}, X = sum x_j X_j in the
/// closed chamber; throws std::domain_error outside it.
double jacobian_J(const RestrictedSystem& rsys, std::span<const double> x);
bool in_closed_chamber(const RestrictedSystem& rsys, std::span<const double> x);

/// Coefficients of log mu(exp X) in the basis H_j: (1/2) log cosh(2 x_j).
std::vector<double> mu_log(const RestrictedSystem& rsys, std::span<const double> x);

struct RankOneIntegral {
  EvalResult value;
  double abs_error = 0.0;
  double rate = 0.0;  // exponential growth rate of the integrand; convergent iff < 0
  double radius = 0.0;
  GrowthScan scan;
};

/// I(lambda) = int_0^inf cosh(2x)^{lambda(H_1)} J(x X_1) dx for a rank-one group
/// datum (dim F(lambda) = 1). Throws std::invalid_argument otherwise.
RankOneIntegral i_lambda_rank1(const CausalRootDatum& datum, std::span<const double> lambda);

struct RatioStats {
  double mean = 0.0;
  double rel_std = 0.0;
  double max_rel_dev = 0.0;
};

/// Statistics of a_i / b_i; throws std::invalid_argument on unequal or short input,
/// non-finite values, or a zero denominator.
RatioStats ratio_constancy(std::span<const EvalResult> a, std::span<const EvalResult> b);

}  // namespace causal
