#include "causal/verify.hpp"

#include "causal/causal_cones.hpp"
#include "causal/c_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace causal {

namespace {

using ojson = nlohmann::ordered_json;

double rel_dev(double a, double b) {
  const double d = std::fabs(a - b);
  return b == 0.0 ? d : d / std::fabs(b);
}

CheckResult make(std::string suite, std::string name, const Case* c) {
  CheckResult r;
  r.suite = std::move(suite);
  r.name = std::move(name);
  if (c) r.case_label = c->label();
  return r;
}

// ---- cones -------------------------------------------------------------------

void cones_suite(const Case& c, const VerifyOptions& opt, std::vector<CheckResult>& out) {
  const auto& datum = c.datum;
  const bool exact = datum.ambient_dim() <= kExactConeDim;
  const auto cones = c_min_and_ck(datum);

  auto bid = make("cones", "biduality", &c);
  if (exact) {
    bool ok = true;
    for (const auto* cone : {&cones.c_min, &cones.c_k}) {
      const auto bb = dual_cone(dual_cone(*cone));
      ok = ok && same_cone(bb, *cone) && canonical_form(bb) == canonical_form(*cone);
    }
    bid.pass = ok;
  } else {
    bid.pass = true;
    bid.metrics["skipped"] = "ambient dimension above the exact cap";
  }
  out.push_back(std::move(bid));

  auto lem = make("cones", "cplus_identity", &c);
  const auto rep = cplus_identity_check(datum, c.gamma, opt.seed, 2000);
  lem.pass = rep.pass();
  lem.metrics["exact_checked"] = rep.exact_checked;
  lem.metrics["exact_equal"] = rep.exact_equal;
  lem.metrics["samples"] = rep.samples;
  lem.metrics["disagreements"] = rep.disagreements;
  out.push_back(std::move(lem));

  if (!exact) return;
  const auto dual_min = dual_cone(cones.c_min);

  auto rds = make("cones", "rds_dual_form", &c);
  Sampler rng(opt.seed);
  std::size_t disagree = 0;
  constexpr std::size_t n = 2000;
  for (std::size_t i = 0; i < n; ++i) {
    const auto lam = sample_around_rho(datum, rng);
    const bool a = rds_check(datum, lam);
    const bool b = dual_min.contains_interior(-(lam + datum.rho()));
    disagree += a != b;
  }
  rds.pass = disagree == 0;
  rds.metrics["samples"] = n;
  rds.metrics["disagreements"] = disagree;
  out.push_back(std::move(rds));

  auto lim = make("cones", "e_omega_limit_cone", &c);
  lim.pass = same_cone(limit_cone(e_omega_polyhedron(datum)), dual_min.negated());
  out.push_back(std::move(lim));
}

// ---- c-functions -------------------------------------------------------------

CheckResult beta_identities() {
  auto r = make("cfn", "beta_identities", nullptr);
  double worst = 0.0;
  for (double x = 0.1; x <= 12; x += 0.45)
    for (double y = 0.1; y <= 12; y += 0.55) {
      const double b = beta(x, y).to_double();
      worst = std::max(worst, rel_dev(beta(y, x).to_double(), b));
      worst = std::max(worst, rel_dev(beta(x + 1, y).to_double(), b * x / (x + y)));
    }
  for (double x = 0.1; x <= 50; x += 0.7) worst = std::max(worst, rel_dev(beta(x, 1).to_double() * x, 1.0));
  r.pass = worst <= 1e-12;
  r.metrics["max_rel_dev"] = worst;
  return r;
}

void cfn_suite(const Case& c, const VerifyOptions& opt, std::vector<CheckResult>& out) {
  const auto& datum = c.datum;
  const std::size_t dim = datum.ambient_dim();
  Sampler rng(opt.seed);

  auto prod = make("cfn", "product_identity", &c);
  auto dom = make("cfn", "domain_identity", &c);
  double worst_log = 0.0;
  std::size_t disagree = 0, finite = 0;
  constexpr std::size_t n = 2000;
  for (std::size_t i = 0; i < n; ++i) {
    const auto lam = rng.vector(dim, 8, 4);
    const SpectralParameter sp(lam);
    const auto t = c_total(datum, sp);
    const bool in_domain = e_omega_check(datum, sp) && e_zero_check(datum, sp);
    disagree += in_domain != (t.status != Status::divergent);
    const auto z = c_zero(datum, sp), o = c_omega(datum, sp);
    if (z.is_finite() && o.is_finite() && !z.is_zero() && !o.is_zero()) {
      ++finite;
      worst_log = std::max(worst_log, std::fabs(t.log_scale - (z.log_scale + o.log_scale)));
      if (t.sign() != z.sign() * o.sign()) worst_log = std::numeric_limits<double>::infinity();
    }
  }
  prod.pass = worst_log == 0.0;
  prod.metrics["finite_samples"] = finite;
  prod.metrics["max_log_diff"] = worst_log;
  dom.pass = disagree == 0;
  dom.metrics["samples"] = n;
  dom.metrics["disagreements"] = disagree;
  out.push_back(std::move(prod));
  out.push_back(std::move(dom));

  auto fac = make("cfn", "factorization", &c);
  const RdsSampler rds(datum);
  double worst = 0.0;
  std::size_t compared = 0, attempts = 0;
  while (compared < 100 && attempts < 20000) {
    ++attempts;
    const auto lam = rds(rng);
    const auto d = formal_dimension(datum, c.hat, lam).value;
    const auto dg = d_group(c.hat, lam);
    const auto ct = c_total(datum, SpectralParameter(lam + datum.rho()));
    if (!d.is_finite() || !dg.is_finite() || !ct.is_finite() || d.is_zero() || dg.is_zero()) continue;
    ++compared;
    worst = std::max(worst, rel_dev((d / dg).to_double(), ct.to_double()));
  }
  fac.pass = compared == 100 && worst <= 1e-10;
  fac.metrics["compared"] = compared;
  fac.metrics["max_rel_dev"] = worst;
  out.push_back(std::move(fac));

  auto wd = make("cfn", "weyl_integrality", &c);
  std::vector<RationalVector> compact;
  for (const auto& r : datum.positive_compact()) compact.push_back(r.vector);
  std::size_t hits = 0;
  double worst_int = 0.0;
  bool positive = true;
  for (int i = 0; i < 4000 && hits < 50; ++i) {
    const auto lam = rng.vector(dim, 4, 2);
    bool ok = true;
    for (const auto& a : compact) {
      const Rational p = dot(lam, coroot(a));
      ok = ok && p >= 0 && denominator(p) == 1;
    }
    if (!ok) continue;
    ++hits;
    const double v = weyl_dim(compact, lam).to_double();
    positive = positive && v >= 1.0 - 1e-9;
    worst_int = std::max(worst_int, std::fabs(v - std::round(v)));
  }
  wd.pass = hits > 0 && positive && worst_int <= 1e-9;
  wd.metrics["samples"] = hits;
  wd.metrics["max_abs_dev"] = worst_int;
  out.push_back(std::move(wd));
}

// ---- group ratio ---------------------------------------------------------------

void group_ratio_suite(const Case& c, const VerifyOptions& opt, std::vector<CheckResult>& out) {
  auto r = make("group_ratio", "group_ratio_constancy", &c);
  if (!c.datum.is_group_type()) {
    r.pass = true;
    r.metrics["skipped"] = "not a group-type case";
    out.push_back(std::move(r));
    return;
  }
  Sampler rng(opt.seed);
  std::vector<EvalResult> a, b;
  for (int i = 0; i < 20000 && a.size() < 25; ++i) {
    const SpectralParameter lam(rng.vector(c.datum.ambient_dim(), 10, 4));
    const auto ct = c_total(c.datum, lam);
    const auto g = group_case_c(c.datum, lam);
    if (!ct.is_finite() || !g.is_finite()) continue;
    a.push_back(ct);
    b.push_back(g);
  }
  if (a.size() < 20) {
    r.pass = false;
    r.metrics["samples"] = a.size();
  } else {
    const auto s = ratio_constancy(a, b);
    r.pass = s.rel_std <= 1e-8;
    r.metrics["samples"] = a.size();
    r.metrics["rel_std"] = s.rel_std;
    r.metrics["max_rel_dev"] = s.max_rel_dev;
  }
  out.push_back(std::move(r));
}

// ---- oracles -----------------------------------------------------------------

HSpec unit_spec(double lam, std::vector<HTerm> sinh, std::vector<HTerm> cosh) {
  return {1, {lam}, std::move(sinh), std::move(cosh), PolyCone::from_generators(1, {RationalVector{1}})};
}

CausalRootDatum rank_one_datum(int m) {
  const auto set = build_classical(Family::A, 1);
  const std::vector<Multiplicity> mults{{RationalVector{1, -1}, m}};
  return make_causal(set, RationalVector{Rational(1, 2), Rational(-1, 2)}, mults, "A1 m=" + std::to_string(m));
}

void oracle_suite(const std::vector<Case>& cases, const VerifyOptions& opt, std::vector<CheckResult>& out) {
  const double tol = opt.tol.value_or(1e-8);
  Sampler rng(opt.seed);

  auto ex = make("oracle", "h_examples", nullptr);
  const double e1 = h_integral(unit_spec(-2, {{{1.0}, 1}}, {})).value.to_double();
  const double e3 = h_integral(unit_spec(-3, {}, {{{1.0}, 1}})).value.to_double();
  const bool div = h_integral(unit_spec(-1, {{{1.0}, 1}}, {})).value.status == Status::divergent;
  ex.pass = rel_dev(e1, 1.0 / 3) <= tol && rel_dev(e3, 3.0 / 8) <= tol && div;
  ex.metrics["sinh_lambda_-2"] = e1;
  ex.metrics["cosh_lambda_-3"] = e3;
  out.push_back(std::move(ex));

  auto cf = make("oracle", "h_closed_form", nullptr);
  auto crit = make("oracle", "h_criterion_vs_growth", nullptr);
  double worst = 0.0;
  std::size_t compared = 0, scanned = 0, disagree = 0;
  for (std::size_t dim : {1u, 2u}) {
    for (int i = 0; i < 60; ++i) {
      const auto s = sample_hspec(rng, dim);
      const auto hc = h_criterion(s);
      if (std::fabs(hc.margin) < 0.05) continue;
      ++scanned;
      disagree += detect_divergence(s).divergent == hc.convergent;
      if (!hc.convergent) continue;
      ++compared;
      worst = std::max(worst, rel_dev(h_integral(s).value.to_double(), h_closed_form(s).to_double()));
    }
  }
  cf.pass = compared > 0 && worst <= tol;
  cf.metrics["compared"] = compared;
  cf.metrics["max_rel_dev"] = worst;
  crit.pass = disagree == 0;
  crit.metrics["specs"] = scanned;
  crit.metrics["disagreements"] = disagree;
  out.push_back(std::move(cf));
  out.push_back(std::move(crit));

  auto br = make("oracle", "c_omega_beta_reduction", nullptr);
  double worst_b = 0.0;
  std::size_t nb = 0;
  for (int m : {2, 4, 6}) {
    const auto datum = rank_one_datum(m);
    for (int i = 0; i < 200 && nb < static_cast<std::size_t>(7 * (m / 2)); ++i) {
      const SpectralParameter lam(rng.vector(2, 8, 4));
      if (!e_omega_check(datum, lam)) continue;
      const double t = lam.pair(RationalVector{1, -1}) / 2.0;
      const auto red = beta_reduction(-t - m / 2.0 + 1.0, m / 2);
      const double c = c_omega(datum, lam).to_double();
      worst_b = std::max(worst_b, rel_dev(red.prefactor * h_closed_form(red.spec).to_double(), c));
      worst_b = std::max(worst_b, rel_dev(red.prefactor * h_integral(red.spec).value.to_double(), c));
      ++nb;
    }
  }
  br.pass = nb > 0 && worst_b <= tol;
  br.metrics["samples"] = nb;
  br.metrics["max_rel_dev"] = worst_b;
  out.push_back(std::move(br));

  std::vector<const Case*> rank_one;
  for (const auto& c : cases)
    if (c.datum.is_group_type() && c.datum.rank() == 1 && c.datum.positive_compact().empty()) rank_one.push_back(&c);
  std::optional<Case> fallback;
  if (rank_one.empty()) {
    fallback = build_case(group_case_spec(Family::C, 1));
    rank_one.push_back(&*fallback);
  }
  for (const Case* c : rank_one) {
    auto il = make("oracle", "i_lambda_rank1", c);
    const RdsSampler rds(c->datum);
    std::vector<EvalResult> prod, ones;
    for (int i = 0; i < 12; ++i) {
      const auto lam = rds(rng);
      const auto id = i_lambda_rank1(c->datum, lam.to_double());
      prod.push_back(id.value * formal_dimension(c->datum, lam).value);
      ones.push_back(EvalResult::of(1.0));
    }
    const auto wall = i_lambda_rank1(c->datum, (-c->datum.rho()).to_double());
    const bool wall_ok = wall.value.status == Status::divergent && wall.scan.divergent;
    bool all_finite = std::all_of(prod.begin(), prod.end(), [](const EvalResult& e) { return e.is_finite(); });
    if (all_finite) {
      const auto s = ratio_constancy(prod, ones);
      il.pass = s.max_rel_dev <= opt.tol.value_or(1e-4) && wall_ok;
      il.metrics["constant"] = s.mean;
      il.metrics["max_rel_dev"] = s.max_rel_dev;
    } else {
      il.pass = false;
    }
    il.metrics["wall_divergent_both"] = wall_ok;
    out.push_back(std::move(il));
  }

  for (const auto& c : cases) {
    if (c.rsys.s == 0) continue;
    auto mu = make("oracle", "mu_log_chamber", &c);
    std::size_t bad = 0;
    for (int i = 0; i < 1000; ++i) {
      std::vector<double> x(c.rsys.s);
      for (auto& v : x) v = 4 * rng.unit();
      std::sort(x.rbegin(), x.rend());
      const auto m = mu_log(c.rsys, x);
      for (std::size_t j = 0; j < m.size(); ++j) {
        bad += m[j] < 0.0;
        if (j + 1 < m.size()) bad += m[j] < m[j + 1];
      }
    }
    mu.pass = bad == 0;
    mu.metrics["violations"] = bad;
    out.push_back(std::move(mu));
  }
}

}  // namespace

RdsSampler::RdsSampler(const CausalRootDatum& datum)
    : rho_(datum.rho()), gens_(dual_cone(c_min_and_ck(datum).c_min).generators()) {}

RationalVector RdsSampler::operator()(Sampler& rng) const {
  RationalVector mu(rho_.dim());
  for (const auto& g : gens_) mu += g * Rational(rng.integer(1, 24), 4);
  return -mu - rho_;
}

RationalVector sample_around_rho(const CausalRootDatum& datum, Sampler& rng) {
  double bound = 1.0;
  for (const auto& c : datum.rho()) bound = std::max(bound, 2.0 * std::abs(to_double(c)));
  const auto b = static_cast<std::int64_t>(std::ceil(bound));
  return rng.vector(datum.ambient_dim(), b, 4) - datum.rho();
}

HSpec sample_hspec(Sampler& rng, std::size_t dim) {
  static const std::vector<std::vector<RationalVector>> cones{
      {RationalVector{1, 0}, RationalVector{0, 1}},
      {RationalVector{1, 0}, RationalVector{1, 1}},
      {RationalVector{1, -1}, RationalVector{1, 1}},
      {RationalVector{2, 1}, RationalVector{-1, 3}},
  };
  if (dim != 1 && dim != 2) throw std::invalid_argument("sample_hspec supports dim 1 and 2");
  HSpec s;
  s.dim = dim;
  std::vector<RationalVector> dual_gens;
  if (dim == 1) {
    const int dir = rng.integer(0, 1) ? 1 : -1;
    s.cone = PolyCone::from_generators(1, {RationalVector{dir}});
    dual_gens = {RationalVector{dir}};
  } else {
    s.cone = PolyCone::from_generators(2, cones[static_cast<std::size_t>(rng.integer(0, 3))]);
    dual_gens = dual_cone(s.cone).generators();
  }
  for (std::size_t i = 0; i < dim; ++i) s.lam.push_back(static_cast<double>(rng.integer(-40, 40)) / 4);
  const int total = static_cast<int>(rng.integer(1, 4));
  int used = 0;
  while (used < total) {
    const int pw = static_cast<int>(rng.integer(1, total - used));
    std::vector<double> v(dim, 0.0);
    bool nonzero = false;
    for (const auto& g : dual_gens) {
      const auto k = rng.integer(0, 4);
      nonzero = nonzero || k > 0;
      for (std::size_t i = 0; i < dim; ++i) v[i] += static_cast<double>(k) / 2 * to_double(g[i]);
    }
    if (!nonzero) continue;
    (rng.integer(0, 1) ? s.sinh_terms : s.cosh_terms).push_back({v, pw});
    used += pw;
  }
  return s;
}

std::vector<CheckResult> run_suite(std::string_view suite, const std::vector<Case>& cases, const VerifyOptions& opt) {
  if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end())
    throw std::invalid_argument("unknown suite \"" + std::string(suite) + "\"");
  const bool all = suite == "all";
  std::vector<CheckResult> out;
  if (all || suite == "cones")
    for (const auto& c : cases) cones_suite(c, opt, out);
  if (all || suite == "cfn") {
    out.push_back(beta_identities());
    for (const auto& c : cases) cfn_suite(c, opt, out);
  }
  if (all || suite == "group_ratio")
    for (const auto& c : cases) group_ratio_suite(c, opt, out);
  if (all || suite == "oracle") oracle_suite(cases, opt, out);
  return out;
}

ojson report_json(std::string_view suite, const std::vector<CheckResult>& checks) {
  ojson j;
  j["suite"] = std::string(suite);
  j["pass"] = std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  ojson arr = ojson::array();
  for (const auto& c : checks) {
    ojson o;
    o["suite"] = c.suite;
    o["name"] = c.name;
    o["case"] = c.case_label.empty() ? ojson(nullptr) : ojson(c.case_label);
    o["pass"] = c.pass;
    o["metrics"] = c.metrics;
    arr.push_back(std::move(o));
  }
  j["checks"] = std::move(arr);
  return j;
}

}  // namespace causal
