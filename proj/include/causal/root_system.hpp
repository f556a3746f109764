#pragma once

#include "causal/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace causal {

enum class Family { A, B, C, D };

Family parse_family(std::string_view s);
char family_letter(Family f);

enum class RootKind { compact, noncompact };

std::string_view to_string(RootKind k);

/// Root set of a classical family in the standard e_i model, with the standard
/// lexicographic positive system.
struct RootSet {
  Family family;
  int rank;
  std::size_t ambient_dim;
  std::vector<RationalVector> roots;
  std::vector<RationalVector> positive;
};

constexpr int kMaxClassicalRank = 8;

RootSet build_classical(Family family, int rank);

struct Root {
  RationalVector vector;
  RootKind kind;
  int mult;         // m_alpha
  int mult_double;  // m_{2 alpha}, 0 when 2 alpha is not a root
};

struct Multiplicity {
  RationalVector root;
  int mult;
  int mult_double = 0;
};

/// Multiplicity m on every positive root.
std::vector<Multiplicity> uniform_multiplicities(const RootSet& set, int m);

class CausalRootDatum {
 public:
  std::size_t ambient_dim() const { return ambient_dim_; }
  /// Dimension of the span of the roots.
  int rank() const { return rank_; }
  Family family() const { return family_; }
  int family_rank() const { return family_rank_; }
  bool is_group_type() const { return group_type_; }
  int marking() const { return marking_; }

  const std::vector<Root>& roots() const { return roots_; }
  const std::vector<Root>& positive() const { return positive_; }
  std::vector<Root> positive_noncompact() const;
  std::vector<Root> positive_compact() const;

  const RationalVector& rho() const { return rho_; }
  const RationalVector& rho_k() const { return rho_k_; }
  const RationalVector& rho_n() const { return rho_n_; }
  const RationalVector& z0() const { return z0_; }
  const Rational& z0_value() const { return c0_; }
  const std::string& label() const { return label_; }

  const Root* find(const RationalVector& v) const;
  bool is_root(const RationalVector& v) const { return find(v) != nullptr; }

 private:
  friend CausalRootDatum make_causal(const RootSet&, const RationalVector&,
                                     std::span<const Multiplicity>, std::string);
  friend CausalRootDatum group_double(Family, int, int);

  std::size_t ambient_dim_ = 0;
  int rank_ = 0;
  Family family_ = Family::A;
  int family_rank_ = 0;
  bool group_type_ = false;
  int marking_ = 0;
  std::vector<Root> roots_;
  std::vector<Root> positive_;
  RationalVector rho_, rho_k_, rho_n_, z0_;
  Rational c0_;
  std::string label_;
};

/// Splits the root set by the central element z0: compact iff <alpha, z0> = 0.
/// Throws std::invalid_argument when the positive noncompact roots do not all
/// pair to one common positive value.
CausalRootDatum make_causal(const RootSet& set, const RationalVector& z0,
                            std::span<const Multiplicity> mults, std::string label);

/// Group-type datum (h + h, flip): every multiplicity 2. marking selects the
/// hermitian node (0 picks the family default); non-hermitian input throws.
CausalRootDatum group_double(Family family, int rank, int marking = 0);

int default_marking(Family family, int rank);
RationalVector hermitian_z0(Family family, int rank, int marking);
std::string group_label(Family family, int rank, int marking);

RationalVector coroot(const RationalVector& alpha);
RationalVector reflect(const RationalVector& x, const RationalVector& alpha);

/// Positive roots not expressible as a sum of two positive roots.
std::vector<RationalVector> simple_roots(std::span<const RationalVector> positive);

bool is_reflection_closed(std::span<const RationalVector> roots);

/// Linear map stored by the images of e_1..e_n.
struct OrthogonalMap {
  std::vector<RationalVector> columns;
  RationalVector apply(const RationalVector& x) const;
  friend bool operator==(const OrthogonalMap&, const OrthogonalMap&) = default;
};

constexpr int kMaxWeylRank = 4;

std::vector<OrthogonalMap> weyl_group(const CausalRootDatum& datum);

}  // namespace causal
