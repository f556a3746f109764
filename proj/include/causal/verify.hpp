#pragma once

#include "causal/case_file.hpp"
#include "causal/oracle.hpp"
#include "causal/sampling.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace causal {

struct CheckResult {
  std::string suite;
  std::string name;
  std::string case_label;  // empty for case-independent checks
  bool pass = false;
  nlohmann::ordered_json metrics = nlohmann::ordered_json::object();
};

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Overrides the oracle comparison tolerance (1e-8 closed forms, 1e-4 I(lambda)).
  std::optional<double> tol;
};

constexpr std::array<std::string_view, 5> kSuites{"cones", "cfn", "group_ratio", "oracle", "all"};

/// Throws std::invalid_argument for an unknown suite name.
std::vector<CheckResult> run_suite(std::string_view suite, const std::vector<Case>& cases,
                                   const VerifyOptions& opt = {});

nlohmann::ordered_json report_json(std::string_view suite, const std::vector<CheckResult>& checks);

/// lambda with lambda + rho = -(positive combination of the generators of C_min*,
/// lineality included in both signs), i.e. strictly inside (RDS).
class RdsSampler {
 public:
  explicit RdsSampler(const CausalRootDatum& datum);
  RationalVector operator()(Sampler& rng) const;

 private:
  RationalVector rho_;
  std::vector<RationalVector> gens_;
};

/// lambda in -rho + [-B, B]^n with B = max(1, 2 max |rho_i|), quarter-integer grid.
RationalVector sample_around_rho(const CausalRootDatum& datum, Sampler& rng);

/// Random H-integral spec: dim 1 or 2 cone from a small catalog, exponent vectors
/// drawn from W*, |lambda| <= 10 on a quarter grid, p + q <= 4.
HSpec sample_hspec(Sampler& rng, std::size_t dim);

}  // namespace causal
