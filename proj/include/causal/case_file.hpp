#pragma once

#include "causal/c_functions.hpp"
#include "causal/cayley.hpp"
#include "causal/root_system.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace causal {

struct CaseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parsed case file: {label, family, rank, type: "group"|"custom", marking, z0,
/// mults, jac_split, hat_system}. Rationals are "p/q" strings.
struct CaseSpec {
  std::string label;
  Family family = Family::A;
  int rank = 1;
  bool group = true;
  int marking = 0;
  RationalVector z0;
  std::vector<Multiplicity> mults;
  ClassSplits jac_split;
  std::optional<std::vector<RationalVector>> hat_system;
};

struct Case {
  CaseSpec spec;
  CausalRootDatum datum;
  StronglyOrthogonalSet gamma;
  RestrictedSystem rsys;
  HatSystem hat;

  const std::string& label() const { return datum.label(); }
  /// Non-group cases without explicit hat data use the default hat system.
  bool modulo_hat_data() const { return !spec.group && !spec.hat_system; }
};

CaseSpec parse_case(const nlohmann::json& doc);
CaseSpec parse_case_text(std::string_view text);
nlohmann::ordered_json case_to_json(const CaseSpec& spec);
/// Group-type spec with z0 and multiplicities written out.
CaseSpec group_case_spec(Family family, int rank, int marking = 0);

/// Throws CaseError wrapping any construction failure.
Case build_case(const CaseSpec& spec);

/// su(1,1), sp4, sp6, su(1,2), su(1,3), su(2,2), so(2,3), so(2,5), so(2,4).
std::vector<CaseSpec> builtin_cases();

/// CAUSAL_CFN_CASE_DIR if set, else the cases/ directory of the source tree.
std::filesystem::path case_dir();

/// Cases of the case directory followed by built-ins not shadowed by a file.
std::vector<CaseSpec> catalog();

/// A path to a case file, or a label / file stem from the catalog.
Case load_case(std::string_view name);

}  // namespace causal
