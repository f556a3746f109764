#include "causal/root_system.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace causal {

Family parse_family(std::string_view s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw std::invalid_argument("unsupported root system family '" + std::string(s) + "'");
}

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

std::string_view to_string(RootKind k) { return k == RootKind::compact ? "compact" : "noncompact"; }

namespace {

RationalVector e(std::size_t n, std::size_t i) { return RationalVector::unit(n, i); }

}  // namespace

RootSet build_classical(Family family, int rank) {
  if (rank < 1 || rank > kMaxClassicalRank)
    throw std::invalid_argument("rank must lie in [1, " + std::to_string(kMaxClassicalRank) +
                                "], got " + std::to_string(rank));
  if (family == Family::D && rank < 2)
    throw std::invalid_argument("family D needs rank >= 2");
  const auto r = static_cast<std::size_t>(rank);
  RootSet set{family, rank, family == Family::A ? r + 1 : r, {}, {}};
  const std::size_t n = set.ambient_dim;

  if (family == Family::A) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) set.positive.push_back(e(n, i) - e(n, j));
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        set.positive.push_back(e(n, i) - e(n, j));
        set.positive.push_back(e(n, i) + e(n, j));
      }
    for (std::size_t i = 0; i < n; ++i) {
      if (family == Family::B) set.positive.push_back(e(n, i));
      if (family == Family::C) set.positive.push_back(e(n, i) * 2);
    }
  }
  std::sort(set.positive.begin(), set.positive.end(),
            [](const auto& a, const auto& b) { return lex_less(b, a); });
  for (const auto& p : set.positive) {
    set.roots.push_back(p);
    set.roots.push_back(-p);
  }
  return set;
}

std::vector<Multiplicity> uniform_multiplicities(const RootSet& set, int m) {
  std::vector<Multiplicity> out;
  out.reserve(set.positive.size());
  for (const auto& p : set.positive) out.push_back({p, m, 0});
  return out;
}

std::vector<Root> CausalRootDatum::positive_noncompact() const {
  std::vector<Root> out;
  for (const auto& r : positive_)
    if (r.kind == RootKind::noncompact) out.push_back(r);
  return out;
}

std::vector<Root> CausalRootDatum::positive_compact() const {
  std::vector<Root> out;
  for (const auto& r : positive_)
    if (r.kind == RootKind::compact) out.push_back(r);
  return out;
}

const Root* CausalRootDatum::find(const RationalVector& v) const {
  if (v.dim() != ambient_dim_) return nullptr;
  for (const auto& r : roots_)
    if (r.vector == v) return &r;
  return nullptr;
}

CausalRootDatum make_causal(const RootSet& set, const RationalVector& z0,
                            std::span<const Multiplicity> mults, std::string label) {
  require_same_dim(z0.dim(), set.ambient_dim, "central element z0");
  CausalRootDatum d;
  d.ambient_dim_ = set.ambient_dim;
  d.rank_ = static_cast<int>(rank_of(set.roots, set.ambient_dim));
  d.family_ = set.family;
  d.family_rank_ = set.rank;
  d.z0_ = z0;
  d.label_ = std::move(label);

  Rational c0 = 0;
  for (const auto& p : set.positive) {
    const Rational v = dot(p, z0);
    if (v == 0) continue;
    if (c0 == 0) {
      if (v < 0)
        throw std::invalid_argument("inconsistent positive system: noncompact positive root " +
                                    format_vector(p) + " pairs negatively with z0");
      c0 = v;
    } else if (v == -c0) {
      throw std::invalid_argument("inconsistent positive system: root " + format_vector(p) +
                                  " pairs to " + format_rational(v) + " with z0");
    } else if (v != c0) {
      throw std::invalid_argument("root " + format_vector(p) + " pairs to " +
                                  format_rational(v) + " with z0, outside {0, +-" +
                                  format_rational(c0) + "}");
    }
  }
  if (c0 == 0) throw std::invalid_argument("z0 leaves no noncompact root; the datum is not causal");
  d.c0_ = c0;

  d.rho_ = RationalVector(set.ambient_dim);
  d.rho_k_ = RationalVector(set.ambient_dim);
  d.rho_n_ = RationalVector(set.ambient_dim);
  for (const auto& p : set.positive) {
    const Multiplicity* m = nullptr;
    for (const auto& cand : mults) {
      if (cand.root == p) {
        if (m) throw std::invalid_argument("duplicate multiplicity for root " + format_vector(p));
        m = &cand;
      }
    }
    if (!m) throw std::invalid_argument("missing multiplicity for root " + format_vector(p));
    if (m->mult < 1) throw std::invalid_argument("multiplicity must be positive for root " + format_vector(p));
    if (m->mult_double < 0) throw std::invalid_argument("negative m_2alpha for root " + format_vector(p));
    const RootKind kind = dot(p, z0) == 0 ? RootKind::compact : RootKind::noncompact;
    if (kind == RootKind::noncompact && m->mult_double != 0)
      throw std::invalid_argument("m_2alpha is only supported on compact roots");
    d.positive_.push_back({p, kind, m->mult, m->mult_double});
    const RationalVector contribution = p * Rational(m->mult + 2 * m->mult_double, 2);
    d.rho_ += contribution;
    (kind == RootKind::compact ? d.rho_k_ : d.rho_n_) += contribution;
  }
  for (const auto& cand : mults) {
    bool found = false;
    for (const auto& p : set.positive) found = found || p == cand.root;
    if (!found) throw std::invalid_argument("multiplicity given for non-positive root " + format_vector(cand.root));
  }
  for (const auto& r : d.positive_) {
    d.roots_.push_back(r);
    d.roots_.push_back({-r.vector, r.kind, r.mult, r.mult_double});
  }
  return d;
}

int default_marking(Family family, int rank) {
  return family == Family::C ? rank : 1;
}

namespace {

void require_hermitian(Family family, int rank, int marking) {
  const auto fail = [&] {
    throw std::invalid_argument(std::string("non-hermitian input: ") + family_letter(family) +
                                std::to_string(rank) + " with marking " + std::to_string(marking));
  };
  if (rank < 1 || rank > kMaxClassicalRank) fail();
  switch (family) {
    case Family::A:
      if (marking < 1 || marking > rank) fail();
      break;
    case Family::B:
      if (rank < 2 || marking != 1) fail();
      break;
    case Family::C:
      if (marking != rank) fail();
      break;
    case Family::D:
      if (rank < 3 || (marking != 1 && marking != rank - 1 && marking != rank)) fail();
      break;
  }
}

}  // namespace

RationalVector hermitian_z0(Family family, int rank, int marking) {
  require_hermitian(family, rank, marking);
  const auto r = static_cast<std::size_t>(rank);
  switch (family) {
    case Family::A: {
      RationalVector z(r + 1);
      for (int i = 0; i < marking; ++i) z[static_cast<std::size_t>(i)] = 1;
      return z;
    }
    case Family::B: return RationalVector::unit(r, 0);
    case Family::C: {
      RationalVector z(r);
      for (std::size_t i = 0; i < r; ++i) z[i] = 1;
      return z;
    }
    case Family::D: {
      if (marking == 1) return RationalVector::unit(r, 0);
      RationalVector z(r);
      for (std::size_t i = 0; i < r; ++i) z[i] = Rational(1, 2);
      if (marking == rank - 1) z[r - 1] = Rational(-1, 2);
      return z;
    }
  }
  return {};
}

std::string group_label(Family family, int rank, int marking) {
  require_hermitian(family, rank, marking);
  const std::string n = std::to_string(rank);
  switch (family) {
    case Family::A:
      return "group:su(" + std::to_string(marking) + "," + std::to_string(rank + 1 - marking) + ")";
    case Family::B: return "group:so(2," + std::to_string(2 * rank - 1) + ")";
    case Family::C: return rank == 1 ? "group:su(1,1)" : "group:sp" + std::to_string(2 * rank);
    case Family::D:
      if (marking == 1) return "group:so(2," + std::to_string(2 * rank - 2) + ")";
      return "group:so*(" + std::to_string(2 * rank) + ")";
  }
  return {};
}

CausalRootDatum group_double(Family family, int rank, int marking) {
  if (marking == 0) marking = default_marking(family, rank);
  const RationalVector z0 = hermitian_z0(family, rank, marking);
  const RootSet set = build_classical(family, rank);
  const auto mults = uniform_multiplicities(set, 2);
  CausalRootDatum d = make_causal(set, z0, mults, group_label(family, rank, marking));
  d.group_type_ = true;
  d.marking_ = marking;
  return d;
}

RationalVector coroot(const RationalVector& alpha) {
  if (alpha.is_zero()) throw std::invalid_argument("coroot of the zero vector");
  return alpha * (Rational(2) / norm2(alpha));
}

RationalVector reflect(const RationalVector& x, const RationalVector& alpha) {
  return x - alpha * dot(x, coroot(alpha));
}

std::vector<RationalVector> simple_roots(std::span<const RationalVector> positive) {
  std::vector<RationalVector> out;
  for (const auto& p : positive) {
    bool decomposable = false;
    for (std::size_t i = 0; i < positive.size() && !decomposable; ++i)
      for (std::size_t j = i; j < positive.size() && !decomposable; ++j)
        decomposable = positive[i] + positive[j] == p;
    if (!decomposable) out.push_back(p);
  }
  return out;
}

bool is_reflection_closed(std::span<const RationalVector> roots) {
  for (const auto& a : roots)
    for (const auto& b : roots) {
      const RationalVector img = reflect(b, a);
      if (std::find(roots.begin(), roots.end(), img) == roots.end()) return false;
    }
  return true;
}

RationalVector OrthogonalMap::apply(const RationalVector& x) const {
  require_same_dim(x.dim(), columns.size(), "orthogonal map");
  RationalVector y(x.dim());
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (x[i] != 0) y += columns[i] * x[i];
  return y;
}

std::vector<OrthogonalMap> weyl_group(const CausalRootDatum& datum) {
  if (datum.rank() > kMaxWeylRank)
    throw std::invalid_argument("weyl group enumeration capped at rank " + std::to_string(kMaxWeylRank));
  const std::size_t n = datum.ambient_dim();
  std::vector<RationalVector> positive;
  for (const auto& r : datum.positive()) positive.push_back(r.vector);
  const auto simples = simple_roots(positive);

  std::vector<OrthogonalMap> generators;
  for (const auto& s : simples) {
    OrthogonalMap m;
    for (std::size_t i = 0; i < n; ++i) m.columns.push_back(reflect(RationalVector::unit(n, i), s));
    generators.push_back(std::move(m));
  }
  const auto key = [](const OrthogonalMap& m) {
    std::vector<std::string> k;
    for (const auto& c : m.columns) k.push_back(format_vector(c));
    return k;
  };
  OrthogonalMap identity;
  for (std::size_t i = 0; i < n; ++i) identity.columns.push_back(RationalVector::unit(n, i));

  std::vector<OrthogonalMap> group{identity};
  std::set<std::vector<std::string>> seen{key(identity)};
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const OrthogonalMap w = group[frontier.front()];
    frontier.pop_front();
    for (const auto& g : generators) {
      OrthogonalMap gw;
      for (const auto& c : w.columns) gw.columns.push_back(g.apply(c));
      if (seen.insert(key(gw)).second) {
        group.push_back(gw);
        frontier.push_back(group.size() - 1);
      }
    }
  }
  return group;
}

}  // namespace causal
