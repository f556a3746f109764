#pragma once

#include "causal/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace causal {

/// Ambient dimension up to which both representations are maintained exactly.
constexpr std::size_t kExactConeDim = 4;

/// V-description of {x : <a_i, x> >= 0}: extreme rays of the pointed part plus
/// a basis of the lineality space.
struct RayDescription {
  std::vector<RationalVector> rays;
  std::vector<RationalVector> lineality;
};

/// Double-description (Motzkin) conversion from inequalities to rays.
RayDescription extreme_rays(std::size_t dim, std::span<const RationalVector> inequalities);

/// Exact feasibility of x = sum c_i g_i with c >= 0 (phase-one simplex, Bland's rule).
bool in_generated_cone(std::span<const RationalVector> generators, const RationalVector& x);

class PolyCone {
 public:
  static PolyCone from_generators(std::size_t dim, std::vector<RationalVector> generators);
  static PolyCone from_inequalities(std::size_t dim, std::vector<RationalVector> inequalities);
  static PolyCone zero(std::size_t dim) { return from_generators(dim, {}); }
  static PolyCone whole(std::size_t dim) { return from_inequalities(dim, {}); }

  std::size_t dim() const { return dim_; }
  bool has_generators() const { return generators_.has_value(); }
  bool has_inequalities() const { return inequalities_.has_value(); }
  /// Throws std::length_error when the representation is unavailable above the exact cap.
  const std::vector<RationalVector>& generators() const;
  const std::vector<RationalVector>& inequalities() const;

  bool contains(const RationalVector& x) const;
  /// Strict inequalities in the H-representation.
  bool contains_interior(const RationalVector& x) const;
  bool contains(std::span<const double> x) const;
  bool contains_interior(std::span<const double> x) const;

  PolyCone intersect(const PolyCone& other) const;
  PolyCone negated() const;

 private:
  std::size_t dim_ = 0;
  std::optional<std::vector<RationalVector>> generators_;
  std::optional<std::vector<RationalVector>> inequalities_;
};

/// E* = {a : <a, x> >= 0 for all x in C}, recomputed by double description.
PolyCone dual_cone(const PolyCone& cone);

/// Set equality by mutual generator containment.
bool same_cone(const PolyCone& a, const PolyCone& b);

/// Normal form for exact comparison: reduced lineality basis and sorted primitive
/// rays of the pointed part orthogonal to the lineality.
struct CanonicalCone {
  std::vector<RationalVector> lineality;
  std::vector<RationalVector> rays;
  friend bool operator==(const CanonicalCone&, const CanonicalCone&) = default;
};

CanonicalCone canonical_form(const PolyCone& cone);

/// {x : <a_i, x> >= b_i} (or > b_i when strict).
struct Polyhedron {
  std::size_t dim = 0;
  std::vector<RationalVector> normals;
  std::vector<Rational> offsets;
  bool strict = false;
  bool contains(const RationalVector& x) const;
};

/// Recession cone {x : x + P subset P} of a polyhedron.
PolyCone limit_cone(const Polyhedron& p);

}  // namespace causal
