#include "causal/cone.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace causal {

namespace {

std::vector<RationalVector> nonzero(std::span<const RationalVector> rows, std::size_t dim) {
  std::vector<RationalVector> out;
  for (const auto& r : rows) {
    require_same_dim(r.dim(), dim, "cone vector");
    if (!r.is_zero()) out.push_back(r);
  }
  return out;
}

struct DDRay {
  RationalVector y;
  std::vector<std::size_t> zeros;  // sorted indices of processed tight rows
};

bool subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::size_t> intersection(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void sort_unique(std::vector<RationalVector>& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return lex_less(a, b); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

RayDescription extreme_rays(std::size_t dim, std::span<const RationalVector> inequalities) {
  const auto rows = nonzero(inequalities, dim);
  RayDescription out;
  out.lineality = null_space(rows, dim);
  for (auto& l : out.lineality) l = primitive(l);
  const std::size_t d = dim - out.lineality.size();
  if (d == 0) return out;

  // coordinates on the orthogonal complement of the lineality space
  std::vector<RationalVector> basis = null_space(out.lineality, dim);
  std::vector<RationalVector> reduced;
  for (const auto& a : rows) {
    RationalVector r(d);
    for (std::size_t k = 0; k < d; ++k) r[k] = dot(a, basis[k]);
    reduced.push_back(std::move(r));
  }

  std::vector<std::size_t> order, initial;
  std::vector<RationalVector> picked;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    picked.push_back(reduced[i]);
    if (rank_of(picked, d) == picked.size() && initial.size() < d) {
      initial.push_back(i);
    } else {
      picked.pop_back();
      order.push_back(i);
    }
  }

  // simplicial start: rays dual to the chosen independent rows
  std::vector<DDRay> rays;
  std::vector<RationalVector> s_rows;
  for (auto i : initial) s_rows.push_back(reduced[i]);
  for (std::size_t k = 0; k < d; ++k) {
    DDRay r{primitive(solve(s_rows, RationalVector::unit(d, k))), {}};
    for (std::size_t j = 0; j < d; ++j)
      if (j != k) r.zeros.push_back(initial[j]);
    std::sort(r.zeros.begin(), r.zeros.end());
    rays.push_back(std::move(r));
  }

  for (auto i : order) {
    const auto& a = reduced[i];
    std::vector<Rational> val;
    for (const auto& r : rays) val.push_back(dot(a, r.y));
    std::vector<DDRay> next;
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (val[p] < 0) continue;
      DDRay r = rays[p];
      if (val[p] == 0) {
        r.zeros.push_back(i);
        std::sort(r.zeros.begin(), r.zeros.end());
      }
      next.push_back(std::move(r));
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (std::size_t n = 0; n < rays.size(); ++n) {
        if (val[n] >= 0) continue;
        const auto common = intersection(rays[p].zeros, rays[n].zeros);
        if (common.size() + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t q = 0; q < rays.size() && adjacent; ++q)
          if (q != p && q != n && subset(common, rays[q].zeros)) adjacent = false;
        if (!adjacent) continue;
        DDRay r{primitive(rays[n].y * val[p] - rays[p].y * val[n]), common};
        r.zeros.push_back(i);
        std::sort(r.zeros.begin(), r.zeros.end());
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
    if (rays.empty()) break;
  }

  for (const auto& r : rays) {
    RationalVector x(dim);
    for (std::size_t k = 0; k < d; ++k)
      if (r.y[k] != 0) x += basis[k] * r.y[k];
    out.rays.push_back(primitive(x));
  }
  sort_unique(out.rays);
  return out;
}

bool in_generated_cone(std::span<const RationalVector> generators, const RationalVector& x) {
  const std::size_t m = x.dim();
  const std::size_t k = generators.size();
  if (x.is_zero()) return true;
  if (k == 0) return false;
  for (const auto& g : generators) require_same_dim(g.dim(), m, "cone generator");

  // tableau rows: sum_j g_j[i] c_j + a_i = |x_i| (signs flipped so rhs >= 0)
  const std::size_t cols = k + m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1));
  std::vector<std::size_t> basic(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = x[i] < 0;
    for (std::size_t j = 0; j < k; ++j) t[i][j] = flip ? Rational(-generators[j][i]) : generators[j][i];
    t[i][k + i] = 1;
    t[i][cols] = flip ? Rational(-x[i]) : x[i];
    basic[i] = k + i;
  }
  // phase-one objective: minimize sum of artificials; reduced costs
  std::vector<Rational> cost(cols + 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= cols; ++j)
      if (j < k || j == cols) cost[j] -= t[i][j];

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rational ratio = t[i][cols] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basic[i] < basic[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction cannot occur in phase one
    const Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * t[leave][j];
    }
    basic[leave] = enter;
  }
  return cost[cols] == 0;
}

PolyCone PolyCone::from_generators(std::size_t dim, std::vector<RationalVector> generators) {
  PolyCone c;
  c.dim_ = dim;
  auto gens = nonzero(generators, dim);
  if (dim > kExactConeDim) {
    for (auto& g : gens) g = primitive(g);
    sort_unique(gens);
    c.generators_ = std::move(gens);
    return c;
  }
  // facets of cone(G) are the extreme rays of {a : <a, g> >= 0}
  const auto facets = extreme_rays(dim, gens);
  std::vector<RationalVector> h = facets.rays;
  for (const auto& l : facets.lineality) {
    h.push_back(l);
    h.push_back(-l);
  }
  const auto v = extreme_rays(dim, h);
  std::vector<RationalVector> g = v.rays;
  for (const auto& l : v.lineality) {
    g.push_back(l);
    g.push_back(-l);
  }
  c.generators_ = std::move(g);
  c.inequalities_ = std::move(h);
  return c;
}

PolyCone PolyCone::from_inequalities(std::size_t dim, std::vector<RationalVector> inequalities) {
  PolyCone c;
  c.dim_ = dim;
  auto rows = nonzero(inequalities, dim);
  if (dim > kExactConeDim) {
    for (auto& r : rows) r = primitive(r);
    sort_unique(rows);
    c.inequalities_ = std::move(rows);
    return c;
  }
  const auto v = extreme_rays(dim, rows);
  std::vector<RationalVector> g = v.rays;
  for (const auto& l : v.lineality) {
    g.push_back(l);
    g.push_back(-l);
  }
  const auto facets = extreme_rays(dim, g);
  std::vector<RationalVector> h = facets.rays;
  for (const auto& l : facets.lineality) {
    h.push_back(l);
    h.push_back(-l);
  }
  c.generators_ = std::move(g);
  c.inequalities_ = std::move(h);
  return c;
}

const std::vector<RationalVector>& PolyCone::generators() const {
  if (!generators_)
    throw std::length_error("generator representation unavailable above ambient dim " +
                            std::to_string(kExactConeDim));
  return *generators_;
}

const std::vector<RationalVector>& PolyCone::inequalities() const {
  if (!inequalities_)
    throw std::length_error("H-representation unavailable above ambient dim " + std::to_string(kExactConeDim));
  return *inequalities_;
}

bool PolyCone::contains(const RationalVector& x) const {
  require_same_dim(x.dim(), dim_, "cone membership");
  if (inequalities_) {
    for (const auto& h : *inequalities_)
      if (dot(h, x) < 0) return false;
    return true;
  }
  return in_generated_cone(*generators_, x);
}

bool PolyCone::contains_interior(const RationalVector& x) const {
  require_same_dim(x.dim(), dim_, "cone membership");
  for (const auto& h : inequalities())
    if (dot(h, x) <= 0) return false;
  return true;
}

bool PolyCone::contains(std::span<const double> x) const {
  require_same_dim(x.size(), dim_, "cone membership");
  if (!inequalities_) return contains(from_doubles(x));
  for (const auto& h : *inequalities_)
    if (dot(x, h) < 0) return false;
  return true;
}

bool PolyCone::contains_interior(std::span<const double> x) const {
  require_same_dim(x.size(), dim_, "cone membership");
  for (const auto& h : inequalities())
    if (dot(x, h) <= 0) return false;
  return true;
}

PolyCone PolyCone::intersect(const PolyCone& other) const {
  require_same_dim(other.dim_, dim_, "cone intersection");
  std::vector<RationalVector> rows = inequalities();
  for (const auto& h : other.inequalities()) rows.push_back(h);
  return from_inequalities(dim_, std::move(rows));
}

PolyCone PolyCone::negated() const {
  PolyCone c;
  c.dim_ = dim_;
  const auto flip = [](const std::vector<RationalVector>& v) {
    std::vector<RationalVector> out;
    for (const auto& x : v) out.push_back(-x);
    return out;
  };
  if (generators_) c.generators_ = flip(*generators_);
  if (inequalities_) c.inequalities_ = flip(*inequalities_);
  return c;
}

PolyCone dual_cone(const PolyCone& cone) {
  if (cone.has_generators()) return PolyCone::from_inequalities(cone.dim(), cone.generators());
  return PolyCone::from_generators(cone.dim(), cone.inequalities());
}

bool same_cone(const PolyCone& a, const PolyCone& b) {
  require_same_dim(a.dim(), b.dim(), "cone comparison");
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  for (const auto& g : b.generators())
    if (!a.contains(g)) return false;
  return true;
}

CanonicalCone canonical_form(const PolyCone& cone) {
  const auto v = extreme_rays(cone.dim(), cone.inequalities());
  CanonicalCone c;
  // reduced echelon basis of the lineality space
  std::vector<RationalVector> lin = v.lineality;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cone.dim() && row < lin.size(); ++col) {
    std::size_t piv = row;
    while (piv < lin.size() && lin[piv][col] == 0) ++piv;
    if (piv == lin.size()) continue;
    std::swap(lin[row], lin[piv]);
    lin[row] = lin[row] / lin[row][col];
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (i != row && lin[i][col] != 0) lin[i] -= lin[row] * lin[i][col];
    ++row;
  }
  c.lineality = std::move(lin);
  c.rays = v.rays;
  return c;
}

bool Polyhedron::contains(const RationalVector& x) const {
  require_same_dim(x.dim(), dim, "polyhedron membership");
  for (std::size_t i = 0; i < normals.size(); ++i) {
    const Rational v = dot(normals[i], x);
    if (strict ? v <= offsets[i] : v < offsets[i]) return false;
  }
  return true;
}

PolyCone limit_cone(const Polyhedron& p) {
  if (p.normals.size() != p.offsets.size()) throw std::invalid_argument("polyhedron normals/offsets mismatch");
  return PolyCone::from_inequalities(p.dim, p.normals);
}

}  // namespace causal
