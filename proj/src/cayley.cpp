#include "causal/cayley.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace causal {

bool strongly_orthogonal(const CausalRootDatum& datum, const RationalVector& a, const RationalVector& b) {
  if (a == b || a == -b) return false;
  return !datum.is_root(a + b) && !datum.is_root(a - b);
}

std::vector<Rational> simple_root_coefficients(const CausalRootDatum& datum, const RationalVector& v) {
  std::vector<RationalVector> positive;
  for (const auto& r : datum.positive()) positive.push_back(r.vector);
  const auto simples = simple_roots(positive);
  const std::size_t k = simples.size();
  std::vector<RationalVector> gram;
  RationalVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    RationalVector row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = dot(simples[i], simples[j]);
    gram.push_back(std::move(row));
    rhs[i] = dot(simples[i], v);
  }
  const RationalVector c = solve(gram, rhs);
  return c.coords();
}

bool root_order_leq(const CausalRootDatum& datum, const RationalVector& a, const RationalVector& b) {
  for (const auto& c : simple_root_coefficients(datum, b - a))
    if (c < 0) return false;
  return true;
}

StronglyOrthogonalSet find_strongly_orthogonal(const CausalRootDatum& datum) {
  std::vector<RationalVector> candidates;
  for (const auto& r : datum.positive_noncompact()) candidates.push_back(r.vector);
  if (candidates.empty()) throw std::invalid_argument("datum has no noncompact positive root");

  StronglyOrthogonalSet out;
  while (!candidates.empty()) {
    // maximal elements under the root order, ties broken lexicographically
    std::vector<RationalVector> maximal;
    for (const auto& a : candidates) {
      bool dominated = false;
      for (const auto& b : candidates)
        if (!(a == b) && root_order_leq(datum, a, b)) dominated = true;
      if (!dominated) maximal.push_back(a);
    }
    const RationalVector top =
        *std::max_element(maximal.begin(), maximal.end(), [](const auto& x, const auto& y) { return lex_less(x, y); });
    out.gammas.push_back(top);
    std::erase_if(candidates, [&](const RationalVector& c) { return !strongly_orthogonal(datum, c, top); });
  }
  for (const auto& g : out.gammas) out.h_basis.push_back(coroot(g));
  return out;
}

bool is_maximal(const CausalRootDatum& datum, const StronglyOrthogonalSet& set) {
  for (const auto& r : datum.positive_noncompact()) {
    bool compatible = true;
    for (const auto& g : set.gammas) compatible = compatible && strongly_orthogonal(datum, r.vector, g);
    if (compatible) return false;
  }
  return true;
}

std::string_view to_string(SigmaClass c) {
  switch (c) {
    case SigmaClass::mixed: return "mixed";
    case SigmaClass::full: return "full";
    case SigmaClass::half: return "half";
  }
  return "?";
}

double RestrictedSystem::evaluate(const RestrictedRoot& phi, std::span<const double> x) const {
  require_same_dim(x.size(), s, "restricted root evaluation");
  double v = 0.0;
  for (std::size_t j = 0; j < s; ++j) v += 2.0 * to_double(phi.coeffs[j]) * x[j];
  return v;
}

namespace {

[[noreturn]] void shape_violation(const std::string& why) {
  throw std::domain_error("Sigma shape violation: " + why);
}

std::string coeff_key(const std::vector<Rational>& c) {
  std::string k;
  for (const auto& x : c) k += format_rational(x) + ",";
  return k;
}

}  // namespace

RestrictedSystem restricted_system(const CausalRootDatum& datum, const StronglyOrthogonalSet& gamma,
                                   const ClassSplits& split_hint) {
  const std::size_t s = gamma.size();
  if (s == 0) throw std::invalid_argument("empty strongly orthogonal set");
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      if (!strongly_orthogonal(datum, gamma.gammas[i], gamma.gammas[j]))
        throw std::invalid_argument("Gamma is not strongly orthogonal");
  if (!is_maximal(datum, gamma)) throw std::invalid_argument("Gamma is not maximal");

  RestrictedSystem rs;
  rs.s = s;
  rs.psis = gamma.gammas;
  rs.h_basis = gamma.h_basis;
  for (const auto& p : rs.psis)
    if (norm2(p) != norm2(rs.psis.front())) shape_violation("psi_j of unequal length");

  std::map<std::string, std::size_t> index;
  for (const auto& root : datum.positive()) {
    std::vector<Rational> c(s);
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < s; ++j) {
      c[j] = dot(root.vector, rs.psis[j]) / norm2(rs.psis[j]);
      if (c[j] != 0) nz.push_back(j);
    }
    const bool noncompact = root.kind == RootKind::noncompact;
    const std::string where = " for root " + format_vector(root.vector);
    if (nz.empty()) {
      if (noncompact) shape_violation("noncompact root restricts to zero" + where);
      ++rs.zero_restrictions;
      continue;
    }
    SigmaClass cls;
    const Rational half(1, 2);
    if (nz.size() == 1) {
      const Rational a = abs(c[nz[0]]);
      if (a == 1)
        cls = SigmaClass::full;
      else if (a == half)
        cls = SigmaClass::half;
      else
        shape_violation("coefficient " + format_rational(c[nz[0]]) + where);
    } else if (nz.size() == 2 && abs(c[nz[0]]) == half && abs(c[nz[1]]) == half) {
      cls = SigmaClass::mixed;
    } else {
      shape_violation("restriction not of the form (psi_i +- psi_j)/2, psi_j, psi_j/2" + where);
    }
    if (noncompact) {
      for (auto j : nz)
        if (c[j] < 0) shape_violation("noncompact restriction outside Sigma_n^+" + where);
    } else {
      if (cls == SigmaClass::full) shape_violation("compact root restricts to psi_j" + where);
      if (cls == SigmaClass::mixed && sign(c[nz[0]]) == sign(c[nz[1]]))
        shape_violation("compact root restricts to (psi_i + psi_j)/2" + where);
    }
    const std::string key = coeff_key(c);
    if (auto it = index.find(key); it != index.end()) {
      auto& phi = rs.positive[it->second];
      phi.mult += root.mult;
      phi.noncompact = phi.noncompact || noncompact;
    } else {
      index.emplace(key, rs.positive.size());
      rs.positive.push_back({c, cls, root.mult, noncompact});
    }
  }

  std::array<int, 3> seen{-1, -1, -1};
  std::array<std::size_t, 3> count{0, 0, 0};
  for (const auto& phi : rs.positive) {
    const auto k = static_cast<std::size_t>(phi.cls);
    if (seen[k] >= 0 && seen[k] != phi.mult)
      shape_violation(std::string("incoherent multiplicities in class ") + std::string(to_string(phi.cls)));
    seen[k] = phi.mult;
    ++count[k];
  }
  // a present class fills every slot of its Weyl orbit
  const std::size_t expected[3] = {s * (s - 1), s, s};
  for (std::size_t k = 0; k < 3; ++k) {
    rs.class_mult[k] = seen[k] < 0 ? 0 : seen[k];
    if (count[k] != 0 && count[k] != expected[k])
      shape_violation(std::string("class ") + std::string(to_string(static_cast<SigmaClass>(k))) +
                      " is incomplete");
  }
  if (count[1] != s) shape_violation("some psi_j missing from Sigma^+");

  return jacobian_exponents(std::move(rs), split_hint);
}

RestrictedSystem jacobian_exponents(RestrictedSystem rsys, const ClassSplits& split) {
  for (std::size_t k = 0; k < 3; ++k) {
    const auto cls = std::string(to_string(static_cast<SigmaClass>(k)));
    if (split[k]) {
      const auto& sp = *split[k];
      if (sp.plus < 0 || sp.minus < 0) throw std::invalid_argument("negative Jacobian exponent in class " + cls);
      if (sp.plus + sp.minus != rsys.class_mult[k])
        throw std::invalid_argument("Jacobian split for class " + cls + " sums to " +
                                    std::to_string(sp.plus + sp.minus) + ", class multiplicity is " +
                                    std::to_string(rsys.class_mult[k]));
      rsys.jac[k] = sp;
    } else if (rsys.class_mult[k] == 0) {
      rsys.jac[k] = JacobianSplit{0, 0};
    } else if (rsys.class_mult[k] % 2 == 0) {
      rsys.jac[k] = JacobianSplit{rsys.class_mult[k] / 2, rsys.class_mult[k] / 2};
    }
  }
  return rsys;
}

}  // namespace causal
