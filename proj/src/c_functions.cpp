#include "causal/c_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace causal {

std::size_t SpectralParameter::dim() const {
  return is_exact() ? exact().dim() : std::get<std::vector<double>>(coords_).size();
}

std::vector<double> SpectralParameter::to_double() const {
  return is_exact() ? exact().to_double() : std::get<std::vector<double>>(coords_);
}

double SpectralParameter::pair(const RationalVector& v) const {
  if (is_exact()) return causal::to_double(dot(exact(), v));
  return dot(std::get<std::vector<double>>(coords_), v);
}

std::optional<Rational> SpectralParameter::pair_exact(const RationalVector& v) const {
  if (!is_exact()) return std::nullopt;
  return dot(exact(), v);
}

SpectralParameter SpectralParameter::shifted(const RationalVector& v) const {
  require_same_dim(v.dim(), dim(), "spectral parameter shift");
  if (is_exact()) return SpectralParameter(exact() + v);
  auto x = std::get<std::vector<double>>(coords_);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += causal::to_double(v[i]);
  return SpectralParameter(std::move(x));
}

SpectralParameter SpectralParameter::shifted(const RationalVector& direction, double eps) const {
  require_same_dim(direction.dim(), dim(), "spectral parameter shift");
  auto x = to_double();
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += eps * causal::to_double(direction[i]);
  return SpectralParameter(std::move(x));
}

bool rds_check(const CausalRootDatum& datum, const SpectralParameter& lambda) {
  if (lambda.is_exact()) return rds_check(datum, lambda.exact());
  const auto x = lambda.to_double();
  return rds_check(datum, std::span<const double>(x));
}

bool e_omega_check(const CausalRootDatum& datum, const SpectralParameter& lambda) {
  if (lambda.is_exact()) return e_omega_check(datum, lambda.exact());
  const auto x = lambda.to_double();
  return e_omega_check(datum, std::span<const double>(x));
}

bool e_zero_check(const CausalRootDatum& datum, const SpectralParameter& lambda) {
  if (lambda.is_exact()) return e_zero_check(datum, lambda.exact());
  const auto x = lambda.to_double();
  return e_zero_check(datum, std::span<const double>(x));
}

namespace {

// t = lambda(coroot alpha) / 2 = <lambda, alpha> / |alpha|^2
double half_coroot_pairing(const SpectralParameter& lambda, const RationalVector& alpha) {
  if (auto q = lambda.pair_exact(alpha)) return to_double(*q / norm2(alpha));
  return lambda.pair(alpha) / to_double(norm2(alpha));
}

void require_dim(const CausalRootDatum& datum, const SpectralParameter& lambda) {
  require_same_dim(lambda.dim(), datum.ambient_dim(), "spectral parameter");
}

EvalResult gk_factor(double z, int m, int m2) {
  const double h = m / 2.0;
  const std::array<GammaTerm, 3> terms{GammaTerm{z, 1.0, 1}, GammaTerm{(h + 1.0 + z) / 2.0, 0.5, -1},
                                       GammaTerm{(h + m2 + z) / 2.0, 0.5, -1}};
  return EvalResult::from_log(1, -z * std::numbers::ln2) * gamma_product(terms);
}

}  // namespace

EvalResult c_omega_continued(const CausalRootDatum& datum, const SpectralParameter& lambda) {
  require_dim(datum, lambda);
  EvalResult out = EvalResult::of(1.0);
  for (const auto& r : datum.positive_noncompact()) {
    const double t = half_coroot_pairing(lambda, r.vector);
    const double h = r.mult / 2.0;
    out = out * beta(-t - h + 1.0, h);
  }
  return out;
}

EvalResult c_zero_continued(const CausalRootDatum& datum, const SpectralParameter& lambda) {
  require_dim(datum, lambda);
  EvalResult out = EvalResult::of(1.0);
  for (const auto& r : datum.positive_compact())
    out = out * gk_factor(half_coroot_pairing(lambda, r.vector), r.mult, r.mult_double);
  return out;
}

EvalResult c_total_continued(const CausalRootDatum& datum, const SpectralParameter& lambda) {
  return c_zero_continued(datum, lambda) * c_omega_continued(datum, lambda);
}

EvalResult c_omega(const CausalRootDatum& datum, const SpectralParameter& lambda) {
  require_dim(datum, lambda);
  if (!e_omega_check(datum, lambda)) return EvalResult::divergent();
  return c_omega_continued(datum, lambda);
}

EvalResult c_zero(const CausalRootDatum& datum, const SpectralParameter& lambda) {
  require_dim(datum, lambda);
  if (!e_zero_check(datum, lambda)) return EvalResult::divergent();
  return c_zero_continued(datum, lambda);
}

EvalResult c_total(const CausalRootDatum& datum, const SpectralParameter& lambda) {
  return c_zero(datum, lambda) * c_omega(datum, lambda);
}

std::vector<RationalVector> HatSystem::compact_positive() const {
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < positive.size(); ++i)
    if (!noncompact[i]) out.push_back(positive[i]);
  return out;
}

HatSystem default_hat_system(const CausalRootDatum& datum) {
  HatSystem h;
  for (const auto& r : datum.positive()) {
    for (int i = 0; i < r.mult; ++i) {
      h.positive.push_back(r.vector);
      h.noncompact.push_back(r.kind == RootKind::noncompact);
    }
    for (int i = 0; i < r.mult_double; ++i) {
      h.positive.push_back(r.vector * 2);
      h.noncompact.push_back(r.kind == RootKind::noncompact);
    }
  }
  h.rho = datum.rho();
  return h;
}

HatSystem hat_system(const CausalRootDatum& datum, std::vector<RationalVector> positive) {
  HatSystem h;
  h.from_datum = false;
  h.rho = RationalVector(datum.ambient_dim());
  for (auto& a : positive) {
    require_same_dim(a.dim(), datum.ambient_dim(), "hat root");
    if (a.is_zero()) throw std::invalid_argument("zero hat root");
    h.noncompact.push_back(dot(a, datum.z0()) != 0);
    h.rho += a * Rational(1, 2);
    h.positive.push_back(std::move(a));
  }
  return h;
}

EvalResult weyl_dim(std::span<const RationalVector> compact_positive, const SpectralParameter& lambda) {
  RationalVector rho(lambda.dim());
  for (const auto& a : compact_positive) {
    require_same_dim(a.dim(), lambda.dim(), "weyl dimension");
    rho += a * Rational(1, 2);
  }
  EvalResult out = EvalResult::of(1.0);
  const SpectralParameter shifted = lambda.shifted(rho);
  for (const auto& a : compact_positive) {
    const bool dominant = lambda.is_exact() ? *lambda.pair_exact(a) >= 0 : lambda.pair(a) >= 0.0;
    if (!dominant) throw std::domain_error("lambda is not Delta_k^+-dominant");
    out = out * EvalResult::of(shifted.pair(a)) / EvalResult::of(to_double(dot(rho, a)));
  }
  return out;
}

EvalResult d_group_signed(const HatSystem& hat, const SpectralParameter& lambda) {
  require_same_dim(lambda.dim(), hat.rho.dim(), "spectral parameter");
  const SpectralParameter shifted = lambda.shifted(hat.rho);
  EvalResult out = EvalResult::of(1.0);
  for (const auto& a : hat.positive) {
    const Rational den = dot(hat.rho, a);
    if (den == 0) throw std::domain_error("hat rho is singular on " + format_vector(a));
    out = out * EvalResult::of(shifted.pair(a)) / EvalResult::of(to_double(den));
  }
  return out;
}

EvalResult d_group(const HatSystem& hat, const SpectralParameter& lambda) {
  require_same_dim(lambda.dim(), hat.rho.dim(), "spectral parameter");
  const SpectralParameter shifted = lambda.shifted(hat.rho);
  for (std::size_t i = 0; i < hat.positive.size(); ++i) {
    if (!hat.noncompact[i]) continue;
    const bool violated = shifted.is_exact() ? *shifted.pair_exact(hat.positive[i]) > 0
                                             : shifted.pair(hat.positive[i]) > 0.0;
    if (violated) return EvalResult::divergent();
  }
  EvalResult out = d_group_signed(hat, lambda);
  if (out.is_finite() && out.value != 0.0) out.value = 1.0;
  return out;
}

namespace {

constexpr std::array<double, 3> kEpsRay{1e-4, 1e-5, 1e-6};

EvalResult abs_value(EvalResult r) {
  if (r.is_finite() && r.value != 0.0) r.value = 1.0;
  return r;
}

EvalResult product_at(const CausalRootDatum& datum, const HatSystem& hat, const SpectralParameter& lambda) {
  return abs_value(d_group_signed(hat, lambda)) * c_total_continued(datum, lambda.shifted(datum.rho()));
}

// limit along lambda + eps u; fills the trace of the direction finally used
EvalResult eps_limit(const CausalRootDatum& datum, const HatSystem& hat, const SpectralParameter& lambda,
                     FormalDimension& out) {
  const std::array<RationalVector, 2> directions{-datum.rho_n(), datum.rho_k() - datum.rho_n()};
  std::array<EvalResult, 3> f{};
  for (const auto& u : directions) {
    out.eps_trace.clear();
    bool usable = true;
    for (std::size_t i = 0; i < kEpsRay.size(); ++i) {
      f[i] = product_at(datum, hat, lambda.shifted(u, kEpsRay[i]));
      out.eps_trace.push_back({kEpsRay[i], f[i]});
      usable = usable && f[i].is_finite() && f[i].value != 0.0;
    }
    out.eps_direction = u.to_double();
    if (usable) break;
  }
  for (const auto& r : f)
    if (!r.is_finite() || r.value == 0.0) return r;

  // rescale by |f(eps_3)| so the extrapolation runs on O(1) numbers
  const double scale = f[2].log_scale;
  std::array<double, 3> g{};
  for (std::size_t i = 0; i < 3; ++i) g[i] = f[i].value * std::exp(f[i].log_scale - scale);
  const double r1 = std::fabs(g[1] / g[0]);
  const double r2 = std::fabs(g[2] / g[1]);
  if (r1 > 5.0 && r2 > 5.0) return EvalResult::pole();
  if (r1 < 0.2 && r2 < 0.2) return EvalResult::zero();
  const double r12 = (10.0 * g[1] - g[0]) / 9.0;
  const double r23 = (10.0 * g[2] - g[1]) / 9.0;
  const double limit = (100.0 * r23 - r12) / 99.0;
  EvalResult res = EvalResult::of(limit);
  if (res.is_finite() && res.value != 0.0) res.log_scale += scale;
  return res;
}

}  // namespace

FormalDimension formal_dimension(const CausalRootDatum& datum, const HatSystem& hat, const SpectralParameter& lambda) {
  require_dim(datum, lambda);
  FormalDimension out;
  if (!rds_check(datum, lambda)) {
    out.value = EvalResult::divergent();
    const SpectralParameter shifted = lambda.shifted(datum.rho());
    bool closure = true;
    for (const auto& r : datum.positive_noncompact())
      closure = closure && (shifted.is_exact() ? *shifted.pair_exact(r.vector) <= 0 : shifted.pair(r.vector) <= 0.0);
    if (closure) {
      FormalDimension probe;
      eps_limit(datum, hat, lambda, probe);
      out.eps_trace = std::move(probe.eps_trace);
      out.eps_direction = std::move(probe.eps_direction);
    }
    return out;
  }
  const EvalResult dg = d_group(hat, lambda);
  if (dg.status == Status::divergent) {
    out.value = dg;
    return out;
  }
  const EvalResult c = c_total_continued(datum, lambda.shifted(datum.rho()));
  if (dg.is_finite() && dg.value != 0.0 && c.is_finite() && c.value != 0.0) {
    out.value = dg * c;
    return out;
  }
  out.value = eps_limit(datum, hat, lambda, out);
  return out;
}

FormalDimension formal_dimension(const CausalRootDatum& datum, const SpectralParameter& lambda) {
  return formal_dimension(datum, default_hat_system(datum), lambda);
}

EvalResult group_case_c(const CausalRootDatum& datum, const SpectralParameter& lambda) {
  require_dim(datum, lambda);
  if (!datum.is_group_type()) throw std::invalid_argument("group_case_c needs a group-type datum");
  EvalResult prod = EvalResult::of(1.0);
  for (const auto& r : datum.positive()) {
    const bool zero = lambda.is_exact() ? *lambda.pair_exact(r.vector) == 0 : lambda.pair(r.vector) == 0.0;
    if (zero) return EvalResult::pole();
    prod = prod * EvalResult::of(lambda.pair(r.vector));
  }
  return reciprocal(prod);
}

EvalResult spherical_factor(const CausalRootDatum& datum, const SpectralParameter& lambda) {
  require_dim(datum, lambda);
  const SpectralParameter shifted = lambda.shifted(datum.rho());
  if (!e_omega_check(datum, shifted)) throw std::domain_error("lambda + rho outside E_Omega");
  const EvalResult c = c_omega(datum, shifted) * c_zero_continued(datum, shifted);
  if (c.status == Status::pole) return EvalResult::zero();
  return reciprocal(c);
}

}  // namespace causal
