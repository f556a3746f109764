#pragma once

#include "causal/causal_cones.hpp"
#include "causal/root_system.hpp"
#include "causal/special_functions.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace causal {

/// Real functional lambda on a, exact or floating.
class SpectralParameter {
 public:
  SpectralParameter(RationalVector exact) : coords_(std::move(exact)) {}
  SpectralParameter(std::vector<double> numeric) : coords_(std::move(numeric)) {}

  bool is_exact() const { return std::holds_alternative<RationalVector>(coords_); }
  std::size_t dim() const;
  const RationalVector& exact() const { return std::get<RationalVector>(coords_); }
  std::vector<double> to_double() const;

  /// <lambda, v> rounded to double; exact parameters round only once.
  double pair(const RationalVector& v) const;
  std::optional<Rational> pair_exact(const RationalVector& v) const;

  SpectralParameter shifted(const RationalVector& v) const;
  SpectralParameter shifted(const RationalVector& direction, double eps) const;

 private:
  std::variant<RationalVector, std::vector<double>> coords_;
};

bool rds_check(const CausalRootDatum& datum, const SpectralParameter& lambda);
bool e_omega_check(const CausalRootDatum& datum, const SpectralParameter& lambda);
bool e_zero_check(const CausalRootDatum& datum, const SpectralParameter& lambda);

/// prod over noncompact positive alpha of B(-lambda(coroot)/2 - m/2 + 1, m/2);
/// divergent outside E_Omega.
EvalResult c_omega(const CausalRootDatum& datum, const SpectralParameter& lambda);
/// Gindikin-Karpelevic product over compact positive roots with z = lambda(coroot)/2:
/// 2^{-z} Gamma(z) / [Gamma((m/2 + 1 + z)/2) Gamma((m/2 + m_2 + z)/2)]; divergent outside E_0.
EvalResult c_zero(const CausalRootDatum& datum, const SpectralParameter& lambda);
/// c_zero * c_omega; divergent outside E_Omega n E_0.
EvalResult c_total(const CausalRootDatum& datum, const SpectralParameter& lambda);

/// The same closed forms without the domain gates (meromorphic continuation).
EvalResult c_omega_continued(const CausalRootDatum& datum, const SpectralParameter& lambda);
EvalResult c_zero_continued(const CausalRootDatum& datum, const SpectralParameter& lambda);
EvalResult c_total_continued(const CausalRootDatum& datum, const SpectralParameter& lambda);

/// Positive system of the full compact Cartan with its compact/noncompact split.
struct HatSystem {
  std::vector<RationalVector> positive;
  std::vector<bool> noncompact;
  RationalVector rho;
  bool from_datum = true;

  std::vector<RationalVector> compact_positive() const;
};

/// Delta^+ with every root repeated m_alpha times (and 2 alpha repeated m_2alpha
/// times), so that the hat rho equals rho.
HatSystem default_hat_system(const CausalRootDatum& datum);
/// Explicit positive roots; kinds follow the datum's central element.
HatSystem hat_system(const CausalRootDatum& datum, std::vector<RationalVector> positive);

/// prod <lambda + rho_k, alpha> / <rho_k, alpha> over the supplied positive compact
/// roots; throws std::domain_error when lambda is not dominant.
EvalResult weyl_dim(std::span<const RationalVector> compact_positive, const SpectralParameter& lambda);

/// |prod <lambda + rho, alpha> / prod <rho, alpha>| over the hat system. Divergent
/// when <lambda + rho, alpha> > 0 for a noncompact alpha; zero on the wall.
EvalResult d_group(const HatSystem& hat, const SpectralParameter& lambda);
/// The raw signed product, without the Harish-Chandra condition.
EvalResult d_group_signed(const HatSystem& hat, const SpectralParameter& lambda);

struct EpsStep {
  double eps;
  EvalResult value;
};

struct FormalDimension {
  EvalResult value;
  /// Present when the value came from (or was probed by) the epsilon-ray limit.
  std::vector<EpsStep> eps_trace;
  std::vector<double> eps_direction;
};

/// d(lambda) = d^G(lambda) c(lambda + rho). Divergent outside (RDS). At pole/zero
/// cancellations the limit along lambda + eps u is Richardson-extrapolated from
/// eps = 1e-4, 1e-5, 1e-6 with u = -rho_n (or rho_k - rho_n).
FormalDimension formal_dimension(const CausalRootDatum& datum, const HatSystem& hat, const SpectralParameter& lambda);
FormalDimension formal_dimension(const CausalRootDatum& datum, const SpectralParameter& lambda);

/// 1 / prod <lambda, alpha> over Delta^+ for a group-type datum; pole on a zero pairing.
EvalResult group_case_c(const CausalRootDatum& datum, const SpectralParameter& lambda);

/// 1 / c(lambda + rho); throws std::domain_error when lambda + rho is outside E_Omega.
EvalResult spherical_factor(const CausalRootDatum& datum, const SpectralParameter& lambda);

}  // namespace causal
