#include "causal/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace causal {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::finite: return "finite";
    case Status::pole: return "pole";
    case Status::divergent: return "divergent";
  }
  return "?";
}

EvalResult EvalResult::of(double x) {
  if (x == 0.0) return zero();
  return {x > 0 ? 1.0 : -1.0, std::log(std::fabs(x)), Status::finite};
}

EvalResult EvalResult::from_log(int sign, double log_abs) {
  if (sign == 0) return zero();
  return {sign > 0 ? 1.0 : -1.0, log_abs, Status::finite};
}

double EvalResult::to_double() const {
  if (status != Status::finite) return std::nan("");
  if (value == 0.0) return 0.0;
  return value * std::exp(log_scale);
}

EvalResult operator*(const EvalResult& a, const EvalResult& b) {
  if (a.status == Status::divergent || b.status == Status::divergent) return EvalResult::divergent();
  if (a.status == Status::pole || b.status == Status::pole) return EvalResult::pole();
  if (a.value == 0.0 || b.value == 0.0) return EvalResult::zero();
  return {a.value * b.value, a.log_scale + b.log_scale, Status::finite};
}

EvalResult operator/(const EvalResult& a, const EvalResult& b) {
  if (a.status == Status::divergent || b.status == Status::divergent) return EvalResult::divergent();
  if (a.status == Status::pole) return EvalResult::pole();
  if (b.status == Status::pole) return a.value == 0.0 ? EvalResult::pole() : EvalResult::zero();
  if (b.value == 0.0) return EvalResult::pole();
  if (a.value == 0.0) return EvalResult::zero();
  return {a.value * b.value, a.log_scale - b.log_scale, Status::finite};
}

EvalResult reciprocal(const EvalResult& a) { return EvalResult::of(1.0) / a; }

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos{
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_log(double x) {  // x >= 1/2
  x -= 1.0;
  double a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (x + static_cast<double>(i));
  const double t = x + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (x + 0.5) * std::log(t) - t + std::log(a);
}

// sin(pi x) with argument reduction so that zeros at integers are exact
double sin_pi(double x) {
  const double n = std::nearbyint(x);
  const double r = x - n;
  const double s = std::sin(std::numbers::pi * r);
  return std::fmod(std::fabs(n), 2.0) == 1.0 ? -s : s;
}

}  // namespace

bool is_gamma_pole(double x) { return x <= 0.0 && x == std::floor(x); }

EvalResult log_gamma(double x) {
  if (std::isnan(x)) return EvalResult::divergent();
  if (is_gamma_pole(x)) return EvalResult::pole();
  if (x >= 0.5) return EvalResult::from_log(1, lanczos_log(x));
  const double s = sin_pi(x);
  return EvalResult::from_log(s > 0 ? 1 : -1, std::log(std::numbers::pi) - std::log(std::fabs(s)) - lanczos_log(1.0 - x));
}

EvalResult gamma_product(std::span<const GammaTerm> terms) {
  int num_poles = 0, den_poles = 0;
  bool hard_pole = false, hard_zero = false;
  int sign = 1;
  double log_abs = 0.0;
  for (const auto& t : terms) {
    if (t.power == 0) continue;
    if (is_gamma_pole(t.arg)) {
      if (t.slope == 0.0) {
        (t.power > 0 ? hard_pole : hard_zero) = true;
        continue;
      }
      // Gamma(-k + u) ~ (-1)^k / (k! u), u = slope * t
      const double k = -t.arg;
      double r = -lanczos_log(k + 1.0) - std::log(std::fabs(t.slope));
      int rs = (std::fmod(k, 2.0) == 1.0 ? -1 : 1) * (t.slope < 0 ? -1 : 1);
      (t.power > 0 ? num_poles : den_poles) += std::abs(t.power);
      if (std::abs(t.power) % 2 == 0) rs = 1;
      sign *= rs;
      log_abs += t.power * r;
      continue;
    }
    const EvalResult g = log_gamma(t.arg);
    if (std::abs(t.power) % 2 == 1) sign *= g.sign();
    log_abs += t.power * g.log_scale;
  }
  if (hard_pole) return EvalResult::pole();
  if (hard_zero) return EvalResult::zero();
  if (num_poles > den_poles) return EvalResult::pole();
  if (num_poles < den_poles) return EvalResult::zero();
  return EvalResult::from_log(sign, log_abs);
}

EvalResult beta(double x, double y) {
  // perturb the argument carrying the pole; the sum moves with it
  const bool px = is_gamma_pole(x), py = is_gamma_pole(y);
  const double sx = px || !py ? 1.0 : 0.0;
  const double sy = py && !px ? 1.0 : 0.0;
  const std::array<GammaTerm, 3> terms{GammaTerm{x, sx, 1}, GammaTerm{y, sy, 1}, GammaTerm{x + y, sx + sy, -1}};
  if (px && py) return EvalResult::pole();
  return gamma_product(terms);
}

}  // namespace causal
