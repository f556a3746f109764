#pragma once

#include "causal/root_system.hpp"

#include <array>
#include <optional>
#include <vector>

namespace causal {

/// Maximal family of strongly orthogonal noncompact positive roots, highest first,
/// with the dual basis H_j of c (gamma_i(H_j) = 2 delta_ij).
struct StronglyOrthogonalSet {
  std::vector<RationalVector> gammas;
  std::vector<RationalVector> h_basis;
  std::size_t size() const { return gammas.size(); }
};

bool strongly_orthogonal(const CausalRootDatum& datum, const RationalVector& a, const RationalVector& b);

/// Coefficients of v in the simple-root basis of the datum's positive system.
std::vector<Rational> simple_root_coefficients(const CausalRootDatum& datum, const RationalVector& v);

/// true iff b - a is a nonnegative combination of simple roots.
bool root_order_leq(const CausalRootDatum& datum, const RationalVector& a, const RationalVector& b);

/// Greedy construction starting with the highest noncompact positive root.
StronglyOrthogonalSet find_strongly_orthogonal(const CausalRootDatum& datum);

/// No noncompact positive root can be appended keeping strong orthogonality.
bool is_maximal(const CausalRootDatum& datum, const StronglyOrthogonalSet& set);

/// The three Weyl classes of the double restricted root system:
/// mixed = +-(psi_i +- psi_j)/2, full = +-psi_j, half = +-psi_j/2.
enum class SigmaClass { mixed = 0, full = 1, half = 2 };

std::string_view to_string(SigmaClass c);

struct JacobianSplit {
  int plus = 0;   // m_phi^+
  int minus = 0;  // m_phi^-
};

using ClassSplits = std::array<std::optional<JacobianSplit>, 3>;

struct RestrictedRoot {
  std::vector<Rational> coeffs;  // restriction = sum coeffs[j] psi_j
  SigmaClass cls;
  int mult;       // summed m_alpha over positive roots restricting here
  bool noncompact;
};

struct RestrictedSystem {
  std::size_t s = 0;
  std::vector<RationalVector> psis;  // psi_j identified with gamma_j in c*
  std::vector<RationalVector> h_basis;
  std::array<int, 3> class_mult{0, 0, 0};
  ClassSplits jac;
  std::vector<RestrictedRoot> positive;  // Sigma^+
  std::size_t zero_restrictions = 0;     // positive roots vanishing on c

  bool has_half_roots() const { return class_mult[2] != 0; }
  /// phi(X) for X = sum x_j X_j, using psi_i(X_j) = 2 delta_ij.
  double evaluate(const RestrictedRoot& phi, std::span<const double> x) const;
};

/// Orthogonal projection of every positive root onto span(Gamma) and
/// classification into the three-class shape; throws std::domain_error
/// ("Sigma shape violation") for anything else.
RestrictedSystem restricted_system(const CausalRootDatum& datum, const StronglyOrthogonalSet& gamma,
                                   const ClassSplits& split_hint = {});

/// Installs the Jacobian exponents; each provided split must sum to its class
/// multiplicity. Unspecified classes fall back to the even split when possible.
RestrictedSystem jacobian_exponents(RestrictedSystem rsys, const ClassSplits& split);

}  // namespace causal
