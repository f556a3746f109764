#include "causal/oracle.hpp"

#include "causal/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace causal {

namespace {

constexpr double kTailTarget = 1e-10;
constexpr double kQuadRelTol = 1e-12;
constexpr double kScanRelTol = 1e-8;

double log_sinh(double y) {
  if (y <= 0.0) return -std::numeric_limits<double>::infinity();
  if (y > 20.0) return y - std::numbers::ln2 + std::log1p(-std::exp(-2.0 * y));
  return std::log(std::sinh(y));
}

double log_cosh(double y) {
  const double a = std::fabs(y);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

double dot_d(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// unit extreme rays of W and the Jacobian of t -> sum t_i w_i
struct Frame {
  std::vector<RationalVector> rays;
  std::vector<std::vector<double>> unit;
  double jac = 1.0;
};

Frame frame_of(const HSpec& spec) {
  if (spec.dim != 1 && spec.dim != 2) throw std::invalid_argument("h_integral supports dim 1 and 2");
  if (spec.cone.dim() != spec.dim) throw std::invalid_argument("cone dimension mismatch");
  const auto canon = canonical_form(spec.cone);
  if (!canon.lineality.empty() || canon.rays.size() != spec.dim)
    throw std::invalid_argument("W must be pointed and full-dimensional");
  Frame f;
  f.rays = canon.rays;
  for (const auto& r : f.rays) {
    auto v = r.to_double();
    const double n = std::sqrt(dot_d(v, v));
    for (auto& c : v) c /= n;
    f.unit.push_back(std::move(v));
  }
  if (spec.dim == 2) f.jac = std::fabs(f.unit[0][0] * f.unit[1][1] - f.unit[0][1] * f.unit[1][0]);
  return f;
}

// log integrand in orthant coordinates t (exponent vectors pre-projected on the rays)
struct LogIntegrand {
  std::vector<double> lam;  // <lambda, w_i>
  std::vector<std::pair<std::vector<double>, int>> sinh_terms, cosh_terms;

  double operator()(std::span<const double> t) const {
    double s = dot_d(lam, t);
    for (const auto& [a, p] : sinh_terms) s += p * log_sinh(dot_d(a, t));
    for (const auto& [b, q] : cosh_terms) s += q * log_cosh(dot_d(b, t));
    return s;
  }
};

LogIntegrand project(const HSpec& spec, const Frame& f) {
  LogIntegrand g;
  const auto proj = [&](const std::vector<double>& v) {
    std::vector<double> out;
    for (const auto& w : f.unit) out.push_back(dot_d(v, w));
    return out;
  };
  g.lam = proj(spec.lam);
  for (const auto& t : spec.sinh_terms)
    if (t.power > 0) g.sinh_terms.emplace_back(proj(t.vec), t.power);
  for (const auto& t : spec.cosh_terms)
    if (t.power > 0) g.cosh_terms.emplace_back(proj(t.vec), t.power);
  return g;
}

struct BoxResult {
  double value = 0.0;
  double abs_error = 0.0;
};

// int over [0, R_1] x ... of exp(log_f(t))
BoxResult box_integral(const std::function<double(std::span<const double>)>& log_f, std::size_t dim,
                       std::array<double, 2> radius, double rel_tol) {
  QuadOptions opt;
  opt.rel_tol = rel_tol;
  opt.initial_pieces = 8;
  if (dim == 1) {
    const auto r = integrate([&](double t) { return std::exp(log_f(std::array{t})); }, 0.0, radius[0], opt);
    return {r.value, r.abs_error};
  }
  double inner_err = 0.0;
  const auto inner = [&](double t1) {
    const auto r = integrate([&](double t2) { return std::exp(log_f(std::array{t1, t2})); }, 0.0, radius[1], opt);
    inner_err = std::max(inner_err, r.abs_error);
    return r.value;
  };
  const auto r = integrate(inner, 0.0, radius[0], opt);
  return {r.value, r.abs_error + radius[0] * inner_err};
}

GrowthScan scan(const std::function<double(std::span<const double>)>& log_f, std::size_t dim) {
  GrowthScan out;
  for (std::size_t i = 0; i < GrowthScan::radii.size(); ++i) {
    const double r = GrowthScan::radii[i];
    out.values[i] = box_integral(log_f, dim, {r, r}, kScanRelTol).value;
    if (!std::isfinite(out.values[i])) {
      std::fill(out.values.begin() + i, out.values.end(), std::numeric_limits<double>::infinity());
      out.divergent = true;
      return out;
    }
  }
  out.divergent = out.values[4] > 1e12 || out.values[4] > 1.5 * out.values[3];
  return out;
}

}  // namespace

void validate(const HSpec& spec) {
  const Frame f = frame_of(spec);
  if (spec.lam.size() != spec.dim) throw std::invalid_argument("lambda dimension mismatch");
  for (const auto* terms : {&spec.sinh_terms, &spec.cosh_terms})
    for (const auto& t : *terms) {
      if (t.vec.size() != spec.dim) throw std::invalid_argument("exponent dimension mismatch");
      if (t.power < 0) throw std::invalid_argument("negative sinh/cosh power");
      if (std::all_of(t.vec.begin(), t.vec.end(), [](double c) { return c == 0.0; }))
        throw std::invalid_argument("exponent vector must be nonzero");
      for (const auto& w : f.rays)
        if (dot(t.vec, w) < 0.0) throw std::invalid_argument("exponent vector outside the dual of W");
    }
}

HCriterion h_criterion(const HSpec& spec) {
  const Frame f = frame_of(spec);
  HCriterion c;
  c.mu = spec.lam;
  for (const auto* terms : {&spec.sinh_terms, &spec.cosh_terms})
    for (const auto& t : *terms)
      for (std::size_t i = 0; i < spec.dim; ++i) c.mu[i] += t.power * t.vec[i];
  c.margin = std::numeric_limits<double>::infinity();
  for (const auto& w : f.unit) c.margin = std::min(c.margin, -dot_d(c.mu, w));
  c.convergent = c.margin > 0.0;
  return c;
}

HIntegral h_integral(const HSpec& spec) {
  validate(spec);
  HIntegral out;
  out.criterion = h_criterion(spec);
  if (!out.criterion.convergent) {
    out.value = EvalResult::divergent();
    return out;
  }
  const Frame f = frame_of(spec);
  const LogIntegrand g = project(spec, f);
  int total_p = 0;
  for (const auto& t : spec.sinh_terms) total_p += t.power;
  const double log_c = std::log(f.jac) - total_p * std::numbers::ln2;

  std::array<double, 2> delta{0.0, 0.0};
  for (std::size_t i = 0; i < spec.dim; ++i) delta[i] = -dot_d(out.criterion.mu, f.unit[i]);

  // tail outside the box <= C sum_i e^{-delta_i R_i} / prod delta
  const auto radii = [&](double target) {
    std::array<double, 2> r{0.0, 0.0};
    double log_prod = 0.0;
    for (std::size_t i = 0; i < spec.dim; ++i) log_prod += std::log(delta[i]);
    const double share = std::log(static_cast<double>(spec.dim));
    for (std::size_t i = 0; i < spec.dim; ++i)
      r[i] = std::max(1.0, (log_c + share - log_prod - std::log(target)) / delta[i]);
    return r;
  };
  const auto tail = [&](const std::array<double, 2>& r) {
    double log_prod = 0.0, s = 0.0;
    for (std::size_t i = 0; i < spec.dim; ++i) log_prod += std::log(delta[i]);
    for (std::size_t i = 0; i < spec.dim; ++i) s += std::exp(log_c - log_prod - delta[i] * r[i]);
    return s;
  };
  const auto log_f = [&](std::span<const double> t) { return g(t) + std::log(f.jac); };

  auto r = radii(kTailTarget);
  auto box = box_integral(log_f, spec.dim, r, kQuadRelTol);
  const double target = kTailTarget * std::min(1.0, std::fabs(box.value));
  if (target > 0.0 && target < kTailTarget) {
    r = radii(target);
    box = box_integral(log_f, spec.dim, r, kQuadRelTol);
  }
  out.value = EvalResult::of(box.value);
  out.abs_error = box.abs_error + tail(r);
  out.radius = r;
  return out;
}

EvalResult h_closed_form(const HSpec& spec) {
  validate(spec);
  if (!h_criterion(spec).convergent) return EvalResult::divergent();
  const Frame f = frame_of(spec);

  std::vector<std::pair<Rational, RationalVector>> terms{{Rational(1), from_doubles(spec.lam)}};
  const auto expand = [&](const HTerm& t, bool alternating) {
    const RationalVector a = from_doubles(t.vec);
    const Rational scale = Rational(1, Integer(1) << t.power);
    std::vector<std::pair<Rational, RationalVector>> next;
    for (const auto& [c, nu] : terms) {
      Integer binom = 1;
      for (int k = 0; k <= t.power; ++k) {
        const Rational coef = c * scale * Rational(binom) * (alternating && k % 2 ? -1 : 1);
        next.emplace_back(coef, nu + a * Rational(t.power - 2 * k));
        binom = binom * (t.power - k) / (k + 1);
      }
    }
    terms = std::move(next);
  };
  for (const auto& t : spec.sinh_terms) expand(t, true);
  for (const auto& t : spec.cosh_terms) expand(t, false);

  // int_W e^{<nu, x>} dx = |det(w)| prod_i 1 / (-<nu, w_i>) over primitive rays
  Rational det = 1;
  if (spec.dim == 2) det = abs(f.rays[0][0] * f.rays[1][1] - f.rays[0][1] * f.rays[1][0]);
  Rational total = 0;
  for (const auto& [c, nu] : terms) {
    Rational v = c * det;
    for (const auto& w : f.rays) {
      const Rational d = -dot(nu, w);
      if (d <= 0) throw std::logic_error("non-decaying exponential term under a convergent criterion");
      v /= d;
    }
    total += v;
  }
  return EvalResult::of(to_double(total));
}

BetaReduction beta_reduction(double a, int b) {
  if (b < 1) throw std::invalid_argument("beta_reduction needs an integer b >= 1");
  BetaReduction r;
  r.spec.dim = 1;
  r.spec.lam = {-(a + (b - 1) / 2.0)};
  if (b > 1) r.spec.sinh_terms.push_back({{0.5}, b - 1});
  r.spec.cone = PolyCone::from_generators(1, {RationalVector{1}});
  r.prefactor = std::ldexp(1.0, b - 1);
  return r;
}

GrowthScan detect_divergence(const HSpec& spec) {
  validate(spec);
  const Frame f = frame_of(spec);
  const LogIntegrand g = project(spec, f);
  const double log_jac = std::log(f.jac);
  return scan([&](std::span<const double> t) { return g(t) + log_jac; }, spec.dim);
}

bool in_closed_chamber(const RestrictedSystem& rsys, std::span<const double> x) {
  if (x.size() != rsys.s) throw std::invalid_argument("chamber point dimension mismatch");
  return std::all_of(rsys.positive.begin(), rsys.positive.end(),
                     [&](const RestrictedRoot& phi) { return rsys.evaluate(phi, x) >= 0.0; });
}

double jacobian_J(const RestrictedSystem& rsys, std::span<const double> x) {
  if (!in_closed_chamber(rsys, x)) throw std::domain_error("X outside the closed chamber b+");
  double j = 1.0;
  for (const auto& phi : rsys.positive) {
    const auto& split = rsys.jac[static_cast<std::size_t>(phi.cls)];
    if (!split) throw std::logic_error("Jacobian exponents not set");
    const double y = rsys.evaluate(phi, x);
    j *= std::pow(std::cosh(y), split->plus) * std::pow(std::sinh(y), split->minus);
  }
  return j;
}

std::vector<double> mu_log(const RestrictedSystem& rsys, std::span<const double> x) {
  if (x.size() != rsys.s) throw std::invalid_argument("mu_log dimension mismatch");
  std::vector<double> out;
  for (double v : x) out.push_back(0.5 * log_cosh(2.0 * v));
  return out;
}

RankOneIntegral i_lambda_rank1(const CausalRootDatum& datum, std::span<const double> lambda) {
  if (!datum.is_group_type() || datum.rank() != 1 || !datum.positive_compact().empty())
    throw std::invalid_argument("oracle supports rank-1 group case only");
  require_same_dim(lambda.size(), datum.ambient_dim(), "spectral parameter");
  const auto gamma = find_strongly_orthogonal(datum);
  const auto rsys = jacobian_exponents(restricted_system(datum, gamma), {});
  const double a = dot(lambda, rsys.h_basis[0]);

  struct Factor {
    double slope;
    int plus, minus;
  };
  std::vector<Factor> factors;
  for (const auto& phi : rsys.positive) {
    const auto& split = rsys.jac[static_cast<std::size_t>(phi.cls)];
    if (!split) throw std::logic_error("Jacobian exponents not set");
    factors.push_back({rsys.evaluate(phi, std::array{1.0}), split->plus, split->minus});
  }
  const auto log_f = [&](std::span<const double> t) {
    const double x = t[0];
    double s = a * log_cosh(2.0 * x);
    for (const auto& fa : factors) {
      if (fa.plus) s += fa.plus * log_cosh(fa.slope * x);
      if (fa.minus) s += fa.minus * log_sinh(fa.slope * x);
    }
    return s;
  };

  RankOneIntegral out;
  out.rate = 2.0 * a;
  double log_c = a < 0 ? -a * std::numbers::ln2 : 0.0;
  for (const auto& fa : factors) {
    out.rate += (fa.plus + fa.minus) * fa.slope;
    log_c -= fa.minus * std::numbers::ln2;
  }
  out.scan = scan(log_f, 1);
  if (out.rate >= 0.0) {
    out.value = EvalResult::divergent();
    return out;
  }
  const double delta = -out.rate;
  const auto radius = [&](double target) { return std::max(1.0, (log_c - std::log(delta * target)) / delta); };
  double r = radius(kTailTarget);
  auto box = box_integral(log_f, 1, {r, 0.0}, kQuadRelTol);
  const double target = kTailTarget * std::min(1.0, std::fabs(box.value));
  if (target > 0.0 && target < kTailTarget) {
    r = radius(target);
    box = box_integral(log_f, 1, {r, 0.0}, kQuadRelTol);
  }
  out.value = EvalResult::of(box.value);
  out.abs_error = box.abs_error + std::exp(log_c - delta * r) / delta;
  out.radius = r;
  return out;
}

RatioStats ratio_constancy(std::span<const EvalResult> a, std::span<const EvalResult> b) {
  if (a.size() != b.size()) throw std::invalid_argument("ratio_constancy needs equal lengths");
  if (a.size() < 3) throw std::invalid_argument("ratio_constancy needs at least 3 values");
  std::vector<double> r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_finite() || !b[i].is_finite()) throw std::invalid_argument("ratio_constancy needs finite values");
    if (b[i].is_zero()) throw std::invalid_argument("ratio_constancy denominator is zero");
    r.push_back((a[i] / b[i]).to_double());
  }
  RatioStats s;
  for (double v : r) s.mean += v;
  s.mean /= static_cast<double>(r.size());
  if (s.mean == 0.0) throw std::invalid_argument("ratio_constancy mean is zero");
  double var = 0.0;
  for (double v : r) {
    var += (v - s.mean) * (v - s.mean);
    s.max_rel_dev = std::max(s.max_rel_dev, std::fabs(v - s.mean) / std::fabs(s.mean));
  }
  s.rel_std = std::sqrt(var / static_cast<double>(r.size())) / std::fabs(s.mean);
  return s;
}

}  // namespace causal
