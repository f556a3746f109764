#pragma once

#include "causal/cayley.hpp"
#include "causal/cone.hpp"
#include "causal/root_system.hpp"
#include "causal/sampling.hpp"

#include <optional>
#include <span>

namespace causal {

struct CausalCones {
  PolyCone c_min;  // cone of noncompact positive coroots
  PolyCone c_k;    // cone of compact positive coroots ({0} when there are none)
};

CausalCones c_min_and_ck(const CausalRootDatum& datum);

/// <lambda + rho, alpha> < 0 for every noncompact positive alpha.
bool rds_check(const CausalRootDatum& datum, const RationalVector& lambda);
bool rds_check(const CausalRootDatum& datum, std::span<const double> lambda);

/// lambda(coroot alpha) < 2 - m_alpha for every noncompact positive alpha.
bool e_omega_check(const CausalRootDatum& datum, const RationalVector& lambda);
bool e_omega_check(const CausalRootDatum& datum, std::span<const double> lambda);

/// lambda in int of the dual of the compact coroot cone.
bool e_zero_check(const CausalRootDatum& datum, const RationalVector& lambda);
bool e_zero_check(const CausalRootDatum& datum, std::span<const double> lambda);

/// The convergence domain of c_Omega as a polyhedron; its limit cone is -C_min*.
Polyhedron e_omega_polyhedron(const CausalRootDatum& datum);

/// c+ = a+ intersected with c = span(H_j), as a cone in the ambient space.
PolyCone c_plus_cone(const CausalRootDatum& datum, const StronglyOrthogonalSet& gamma);

/// Closed cone -C_min* intersected with C_k*.
PolyCone w_domain(const CausalRootDatum& datum);
/// x in -int C_min* and x in C_k*.
bool in_w(const CausalRootDatum& datum, const RationalVector& x);

struct ConeIdentityReport {
  bool exact_checked = false;
  bool exact_equal = false;
  std::size_t samples = 0;
  std::size_t disagreements = 0;
  std::optional<RationalVector> witness;
  bool pass() const { return (!exact_checked || exact_equal) && disagreements == 0; }
};

/// Compares C_min* and -C_k* with (c+)* and -C_k*, exactly by double description
/// when the ambient dimension allows it and by fixed-seed membership sampling.
/// c_plus_override replaces c+ (used to demonstrate detection of a wrong cone).
ConeIdentityReport cplus_identity_check(const CausalRootDatum& datum, const StronglyOrthogonalSet& gamma,
                                       std::uint64_t seed = kDefaultSeed, std::size_t samples = 10000,
                                       const std::optional<PolyCone>& c_plus_override = std::nullopt);

}  // namespace causal
