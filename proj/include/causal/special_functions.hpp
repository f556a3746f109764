#pragma once

#include <span>
#include <string_view>

namespace causal {

enum class Status { finite, pole, divergent };

std::string_view to_string(Status s);

/// value * exp(log_scale) is the result; value carries the sign (+1, -1) or is 0
/// for an exact zero. Poles and divergences carry no value.
struct EvalResult {
  double value = 1.0;
  double log_scale = 0.0;
  Status status = Status::finite;

  static EvalResult of(double x);
  static EvalResult from_log(int sign, double log_abs);
  static EvalResult zero() { return {0.0, 0.0, Status::finite}; }
  static EvalResult pole() { return {0.0, 0.0, Status::pole}; }
  static EvalResult divergent() { return {0.0, 0.0, Status::divergent}; }

  bool is_finite() const { return status == Status::finite; }
  bool is_zero() const { return is_finite() && value == 0.0; }
  int sign() const { return value > 0 ? 1 : value < 0 ? -1 : 0; }
  double to_double() const;
};

/// Divergent dominates pole; a pole absorbs zeros and finite factors.
EvalResult operator*(const EvalResult& a, const EvalResult& b);
/// Division by zero or by a pole with a nonzero pole numerator is resolved as
/// pole/zero respectively; 0/0 and pole/pole are ambiguous and reported as pole.
EvalResult operator/(const EvalResult& a, const EvalResult& b);
EvalResult reciprocal(const EvalResult& a);

/// log|Gamma(x)| with the sign of Gamma(x) in value; Lanczos (g = 7, 9 terms),
/// reflection below 1/2. Nonpositive integers are poles.
EvalResult log_gamma(double x);

bool is_gamma_pole(double x);

/// Gamma(arg)^power with arg = a + slope * t near the evaluation point t = 0.
struct GammaTerm {
  double arg;
  double slope;
  int power;  // +1 numerator, -1 denominator
};

/// Limit of prod Gamma(arg_i)^power_i as t -> 0: simple poles are counted, equal
/// numerator and denominator counts are resolved through the residues
/// (-1)^k / (k! slope).
EvalResult gamma_product(std::span<const GammaTerm> terms);

/// Euler Beta Gamma(x) Gamma(y) / Gamma(x + y) with pole cancellation.
EvalResult beta(double x, double y);

}  // namespace causal
