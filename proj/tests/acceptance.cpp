// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "causal/case_file.hpp"
#include "causal/causal_cones.hpp"
#include "causal/c_functions.hpp"
#include "causal/oracle.hpp"
#include "causal/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>

using namespace causal;

namespace {

double rel_dev(double a, double b) {
  const double d = std::fabs(a - b);
  return b == 0.0 ? d : d / std::fabs(b);
}

struct Outcome {
  bool pass = false;
  std::string detail;
  double time_limit = 0.0;  // seconds, 0 for none
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<Case> builtins() {
  std::vector<Case> out;
  for (const auto& s : builtin_cases()) out.push_back(build_case(s));
  return out;
}

CausalRootDatum rank_one(int m) {
  const std::vector<Multiplicity> mults{{RationalVector{1, -1}, m}};
  return make_causal(build_classical(Family::A, 1), RationalVector{Rational(1, 2), Rational(-1, 2)}, mults,
                     "A1 m=" + std::to_string(m));
}

// 1. c_Omega on rank-one data against the partial-fraction closed form of the Beta integral
//    and against adaptive quadrature of the same integral.
Outcome beta_vs_integral() {
  Sampler rng(kDefaultSeed);
  double worst_closed = 0.0, worst_quad = 0.0;
  int n = 0;
  const int ms[] = {2, 4, 6, 8};
  for (int attempt = 0; n < 50 && attempt < 10000; ++attempt) {
    const int m = ms[attempt % 4];
    const auto datum = rank_one(m);
    const SpectralParameter lam(rng.vector(2, 10, 4));
    if (!e_omega_check(datum, lam)) continue;
    const double t = lam.pair(RationalVector{1, -1}) / 2.0;
    const auto red = beta_reduction(-t - m / 2.0 + 1.0, m / 2);
    const auto c = c_omega(datum, lam);
    if (!c.is_finite()) return {false, "c_omega not finite inside E_Omega"};
    worst_closed = std::max(worst_closed, rel_dev(red.prefactor * h_closed_form(red.spec).to_double(), c.to_double()));
    worst_quad = std::max(worst_quad, rel_dev(red.prefactor * h_integral(red.spec).value.to_double(), c.to_double()));
    ++n;
  }
  return {n == 50 && worst_closed <= 1e-8 && worst_quad <= 1e-8,
          fmt("%d lambda, max rel dev closed form %.3g, quadrature %.3g (tol 1e-8)", n, worst_closed, worst_quad),
          10.0};
}

// 2. c_total * prod <lambda, alpha> constant for group types of rank 1 and 2.
Outcome group_ratio() {
  std::string detail;
  bool ok = true;
  for (const auto& c : builtins()) {
    if (c.datum.rank() > 2) continue;
    Sampler rng(kDefaultSeed);
    std::vector<EvalResult> a, b;
    for (int i = 0; i < 20000 && a.size() < 25; ++i) {
      const SpectralParameter lam(rng.vector(c.datum.ambient_dim(), 10, 4));
      const auto ct = c_total(c.datum, lam);
      const auto g = group_case_c(c.datum, lam);
      if (!ct.is_finite() || !g.is_finite()) continue;
      a.push_back(ct);
      b.push_back(g);
    }
    const auto s = ratio_constancy(a, b);
    ok = ok && a.size() >= 20 && s.rel_std <= 1e-8;
    detail += fmt("%s n=%zu rel_std=%.3g; ", c.label().c_str(), a.size(), s.rel_std);
  }
  return {ok, detail + "tol 1e-8", 5.0};
}

// 3. d / d^G = c(lambda + rho) inside (RDS).
Outcome factorization() {
  bool ok = true;
  double worst = 0.0;
  std::size_t skipped = 0, cases = 0;
  for (const auto& c : builtins()) {
    ++cases;
    Sampler rng(kDefaultSeed);
    const RdsSampler rds(c.datum);
    int compared = 0;
    for (int attempt = 0; compared < 100 && attempt < 20000; ++attempt) {
      const auto lam = rds(rng);
      if (!rds_check(c.datum, lam)) return {false, "RDS sampler left the interior"};
      const auto d = formal_dimension(c.datum, c.hat, lam).value;
      const auto dg = d_group(c.hat, lam);
      const auto ct = c_total(c.datum, SpectralParameter(lam + c.datum.rho()));
      if (dg.is_zero() || !ct.is_finite()) {
        ++skipped;
        continue;
      }
      if (!d.is_finite() || !dg.is_finite()) {
        ok = false;
        continue;
      }
      ++compared;
      worst = std::max(worst, rel_dev((d / dg).to_double(), ct.to_double()));
    }
    ok = ok && compared == 100;
  }
  return {ok && worst <= 1e-10,
          fmt("%zu cases x 100 lambda, max rel dev %.3g (tol 1e-10), %zu draws skipped on d^G = 0 or a pole of c",
              cases, worst, skipped)};
}

// 4. RDS check against the dual-cone form and the status of d.
Outcome rds_finiteness() {
  std::size_t cone_dis = 0, status_dis = 0, inside = 0, total = 0;
  for (const auto& c : builtins()) {
    const auto dual_min = dual_cone(c_min_and_ck(c.datum).c_min);
    Sampler rng(kDefaultSeed);
    for (int i = 0; i < 10000; ++i) {
      const auto lam = sample_around_rho(c.datum, rng);
      const bool rds = rds_check(c.datum, lam);
      cone_dis += rds != dual_min.contains_interior(-(lam + c.datum.rho()));
      const auto st = formal_dimension(c.datum, c.hat, lam).value.status;
      status_dis += rds != (st == Status::finite);
      inside += rds;
      ++total;
    }
  }
  return {cone_dis == 0 && status_dis == 0,
          fmt("%zu lambda (%zu in RDS), disagreements: dual-cone form %zu, d status %zu", total, inside, cone_dis,
              status_dis)};
}

// 5. C_min* = (c+)* restricted identity, exact and by sampling.
Outcome cone_identity() {
  bool ok = true;
  std::size_t exact = 0, samples = 0, dis = 0, cases = 0;
  for (const auto& c : builtins()) {
    if (c.gamma.size() > 3) continue;
    ++cases;
    const auto rep = cplus_identity_check(c.datum, c.gamma, kDefaultSeed, 10000);
    ok = ok && rep.exact_checked && rep.exact_equal && rep.disagreements == 0;
    exact += rep.exact_checked && rep.exact_equal;
    samples += rep.samples;
    dis += rep.disagreements;
  }
  return {ok, fmt("%zu group cases, exact equality %zu/%zu, %zu samples, %zu disagreements", cases, exact, cases,
                  samples, dis),
          30.0};
}

// 6. Convergence criterion vs quadrature growth, and values vs termwise closed forms.
Outcome h_criterion() {
  Sampler rng(kDefaultSeed);
  std::size_t specs = 0, dis = 0, convergent = 0;
  double worst = 0.0;
  for (std::size_t dim : {1u, 2u}) {
    std::size_t here = 0;
    while (here < 100) {
      const auto s = sample_hspec(rng, dim);
      const auto hc = h_criterion(s);
      if (std::fabs(hc.margin) < 0.05) continue;
      ++here;
      ++specs;
      dis += detect_divergence(s).divergent == hc.convergent;
      if (!hc.convergent) continue;
      ++convergent;
      worst = std::max(worst, rel_dev(h_integral(s).value.to_double(), h_closed_form(s).to_double()));
    }
  }
  return {dis == 0 && worst <= 1e-8,
          fmt("%zu specs (%zu convergent), disagreements %zu, max rel dev %.3g (tol 1e-8)", specs, convergent, dis,
              worst)};
}

// 7. I(lambda) d(lambda) constant on the rank-one group case.
Outcome rank_one_integral() {
  const Case c = build_case(group_case_spec(Family::C, 1));
  Sampler rng(kDefaultSeed);
  const RdsSampler rds(c.datum);
  std::vector<EvalResult> prod, ones;
  for (int i = 0; i < 12; ++i) {
    const auto lam = rds(rng);
    prod.push_back(i_lambda_rank1(c.datum, lam.to_double()).value * formal_dimension(c.datum, lam).value);
    ones.push_back(EvalResult::of(1.0));
  }
  for (const auto& p : prod)
    if (!p.is_finite()) return {false, "non-finite I(lambda) d(lambda)", 60.0};
  const auto s = ratio_constancy(prod, ones);
  return {s.max_rel_dev <= 1e-4,
          fmt("%s, 12 lambda, constant %.10g, max rel dev %.3g (tol 1e-4)", c.label().c_str(), s.mean, s.max_rel_dev),
          60.0};
}

// 8. Shape of the restricted system, recomputed by projection onto span(Gamma).
Outcome restricted_shape() {
  bool ok = true;
  std::size_t restrictions = 0, classified = 0, cases = 0;
  std::string bad;
  for (const auto& c : builtins()) {
    ++cases;
    const auto& g = c.gamma.gammas;
    const auto& rs = c.rsys;
    bool case_ok = true;
    // equal psi lengths
    for (const auto& p : rs.psis) case_ok = case_ok && norm2(p) == norm2(rs.psis.front());
    std::map<std::vector<Rational>, int> mult;  // keyed by the positive representative
    std::size_t zeros = 0;
    for (const auto& r : c.datum.positive()) {
      std::vector<Rational> coeffs;
      for (const auto& gj : g) coeffs.push_back(dot(r.vector, gj) / norm2(gj));
      if (std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& q) { return q == 0; })) {
        ++zeros;
        continue;
      }
      ++restrictions;
      const auto first = std::find_if(coeffs.begin(), coeffs.end(), [](const Rational& q) { return q != 0; });
      if (*first < 0)
        for (auto& q : coeffs) q = -q;
      mult[coeffs] += r.mult;
      // the three admissible shapes
      std::vector<Rational> nz;
      for (const auto& q : coeffs)
        if (q != 0) nz.push_back(q);
      const Rational half(1, 2);
      const bool mixed = nz.size() == 2 && (nz[0] == half) && (nz[1] == half || nz[1] == -half);
      const bool full = nz.size() == 1 && nz[0] == 1;
      const bool halfc = nz.size() == 1 && nz[0] == half;
      const SigmaClass expect = mixed ? SigmaClass::mixed : full ? SigmaClass::full : SigmaClass::half;
      if (!(mixed || full || halfc)) {
        case_ok = false;
        continue;
      }
      const auto it = std::find_if(rs.positive.begin(), rs.positive.end(), [&](const RestrictedRoot& phi) {
        auto pc = phi.coeffs;
        const auto f = std::find_if(pc.begin(), pc.end(), [](const Rational& q) { return q != 0; });
        if (f != pc.end() && *f < 0)
          for (auto& q : pc) q = -q;
        return pc == coeffs;
      });
      if (it == rs.positive.end() || it->cls != expect) {
        case_ok = false;
        continue;
      }
      ++classified;
    }
    case_ok = case_ok && zeros == rs.zero_restrictions && mult.size() == rs.positive.size();
    for (const auto& phi : rs.positive) {
      auto pc = phi.coeffs;
      const auto f = std::find_if(pc.begin(), pc.end(), [](const Rational& q) { return q != 0; });
      if (f != pc.end() && *f < 0)
        for (auto& q : pc) q = -q;
      const auto m = mult.find(pc);
      case_ok = case_ok && m != mult.end() && m->second == phi.mult &&
                phi.mult == rs.class_mult[static_cast<std::size_t>(phi.cls)];
    }
    if (!case_ok) bad += c.label() + " ";
    ok = ok && case_ok;
  }
  return {ok && classified == restrictions,
          fmt("%zu cases, %zu/%zu nonzero restrictions classified%s%s", cases, classified, restrictions,
              bad.empty() ? "" : ", failing: ", bad.c_str())};
}

// 9. Exact invariants. Expected rho values are twice the classical half-sums.
Outcome exact_invariants() {
  const std::map<std::string, RationalVector> rho_expected{
      {"group:su(1,1)", RationalVector{2}},
      {"group:sp4", RationalVector{4, 2}},
      {"group:sp6", RationalVector{6, 4, 2}},
      {"group:su(1,2)", RationalVector{2, 0, -2}},
      {"group:su(1,3)", RationalVector{3, 1, -1, -3}},
      {"group:su(2,2)", RationalVector{3, 1, -1, -3}},
      {"group:so(2,3)", RationalVector{3, 1}},
      {"group:so(2,5)", RationalVector{5, 3, 1}},
      {"group:so(2,4)", RationalVector{4, 2, 0}},
  };
  const std::map<std::string, std::size_t> weyl_expected{
      {"group:su(1,1)", 2}, {"group:sp4", 8},      {"group:sp6", 48},     {"group:su(1,2)", 6}, {"group:su(1,3)", 24},
      {"group:su(2,2)", 24}, {"group:so(2,3)", 8}, {"group:so(2,5)", 48}, {"group:so(2,4)", 24},
  };
  std::string bad;
  std::size_t checks = 0;
  for (const auto& c : builtins()) {
    const auto& d = c.datum;
    std::vector<RationalVector> roots;
    for (const auto& r : d.roots()) roots.push_back(r.vector);
    const bool closed = is_reflection_closed(roots);
    RationalVector half_sum(d.ambient_dim());
    for (const auto& r : d.positive()) half_sum += r.vector * Rational(r.mult + 2 * r.mult_double, 2);
    const bool rho_ok = half_sum == d.rho() && d.rho() == rho_expected.at(d.label()) && d.rho_k() + d.rho_n() == d.rho();
    const bool weyl_ok = weyl_group(d).size() == weyl_expected.at(d.label());
    const auto cones = c_min_and_ck(d);
    bool bid = true;
    for (const auto* cone : {&cones.c_min, &cones.c_k}) {
      const auto bb = dual_cone(dual_cone(*cone));
      bid = bid && same_cone(bb, *cone) && canonical_form(bb) == canonical_form(*cone);
    }
    checks += 4;
    if (!closed) bad += d.label() + ":closure ";
    if (!rho_ok) bad += d.label() + ":rho ";
    if (!weyl_ok) bad += d.label() + ":weyl ";
    if (!bid) bad += d.label() + ":biduality ";
  }
  return {bad.empty(), fmt("%zu exact checks over the built-ins (|W(A2)| = 6, |W(C2)| = 8 included)%s%s", checks,
                           bad.empty() ? "" : ", failing: ", bad.c_str())};
}

}  // namespace

int main() {
  const std::vector<std::pair<int, Outcome (*)()>> criteria{
      {1, beta_vs_integral}, {2, group_ratio},       {3, factorization},     {4, rds_finiteness},   {5, cone_identity},
      {6, h_criterion},      {7, rank_one_integral}, {8, restricted_shape}, {9, exact_invariants},
  };
  int failed = 0;
  for (const auto& [id, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = o.pass;
    std::string timing = fmt("%.2f s", secs);
    if (o.time_limit > 0) {
      timing += fmt(" (limit %.0f s)", o.time_limit);
      pass = pass && secs < o.time_limit;
    }
    failed += !pass;
    std::printf("criterion %d: %s  %s  [%s]\n", id, pass ? "PASS" : "FAIL", o.detail.c_str(), timing.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
