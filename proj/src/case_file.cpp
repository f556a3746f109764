#include "causal/case_file.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef CAUSAL_CFN_DEFAULT_CASE_DIR
#define CAUSAL_CFN_DEFAULT_CASE_DIR "cases"
#endif

namespace causal {

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

Rational rational_of(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw CaseError(where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw CaseError(where + ": rationals must be \"p/q\" strings");
}

RationalVector vector_of(const json& v, const std::string& where) {
  if (!v.is_array()) throw CaseError(where + ": expected an array of rationals");
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = rational_of(v[i], where);
  return out;
}

int int_of(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw CaseError(where + ": expected an integer");
  return v.get<int>();
}

ojson vector_json(const RationalVector& v) {
  ojson a = ojson::array();
  for (const auto& s : format_coords(v)) a.push_back(s);
  return a;
}

constexpr std::array<std::string_view, 3> kClassNames{"mixed", "full", "half"};

}  // namespace

CaseSpec parse_case(const json& doc) {
  if (!doc.is_object()) throw CaseError("case file must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    static const std::vector<std::string> known{"label", "family", "rank", "type", "marking",
                                                "z0", "mults", "jac_split", "hat_system"};
    if (std::find(known.begin(), known.end(), key) == known.end()) throw CaseError("unknown case field \"" + key + "\"");
  }
  CaseSpec s;
  if (!doc.contains("family") || !doc["family"].is_string()) throw CaseError("case needs a family string");
  try {
    s.family = parse_family(doc["family"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw CaseError(e.what());
  }
  if (!doc.contains("rank")) throw CaseError("case needs a rank");
  s.rank = int_of(doc["rank"], "rank");
  const std::string type = doc.value("type", std::string("group"));
  if (type != "group" && type != "custom") throw CaseError("type must be \"group\" or \"custom\"");
  s.group = type == "group";
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw CaseError("label must be a string");
    s.label = doc["label"].get<std::string>();
  }
  if (doc.contains("marking")) s.marking = int_of(doc["marking"], "marking");
  if (doc.contains("z0")) s.z0 = vector_of(doc["z0"], "z0");
  if (doc.contains("mults")) {
    const auto& m = doc["mults"];
    if (!m.is_array()) throw CaseError("mults must be an array");
    for (const auto& e : m) {
      if (!e.is_object() || !e.contains("root") || !e.contains("mult"))
        throw CaseError("mults entries need \"root\" and \"mult\"");
      s.mults.push_back({vector_of(e["root"], "mults.root"), int_of(e["mult"], "mults.mult"),
                         e.contains("mult_double") ? int_of(e["mult_double"], "mults.mult_double") : 0});
    }
  }
  if (doc.contains("jac_split")) {
    const auto& j = doc["jac_split"];
    if (!j.is_object()) throw CaseError("jac_split must be an object");
    for (const auto& [key, val] : j.items()) {
      const auto it = std::find(kClassNames.begin(), kClassNames.end(), key);
      if (it == kClassNames.end()) throw CaseError("jac_split class must be mixed, full or half");
      if (!val.is_array() || val.size() != 2) throw CaseError("jac_split." + key + " must be [plus, minus]");
      s.jac_split[static_cast<std::size_t>(it - kClassNames.begin())] =
          JacobianSplit{int_of(val[0], "jac_split"), int_of(val[1], "jac_split")};
    }
  }
  if (doc.contains("hat_system")) {
    const auto& h = doc["hat_system"];
    if (!h.is_array()) throw CaseError("hat_system must be an array of vectors");
    std::vector<RationalVector> roots;
    for (const auto& r : h) roots.push_back(vector_of(r, "hat_system"));
    s.hat_system = std::move(roots);
  }
  if (!s.group) {
    if (s.z0.dim() == 0) throw CaseError("custom case needs z0");
    if (s.mults.empty()) throw CaseError("custom case needs mults");
    if (s.label.empty()) throw CaseError("custom case needs a label");
  }
  return s;
}

CaseSpec parse_case_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CaseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_case(doc);
}

ojson case_to_json(const CaseSpec& s) {
  ojson j;
  j["label"] = s.label;
  j["family"] = std::string(1, family_letter(s.family));
  j["rank"] = s.rank;
  j["type"] = s.group ? "group" : "custom";
  if (s.group) j["marking"] = s.marking;
  if (s.z0.dim()) j["z0"] = vector_json(s.z0);
  if (!s.mults.empty()) {
    ojson m = ojson::array();
    for (const auto& e : s.mults) {
      ojson o;
      o["root"] = vector_json(e.root);
      o["mult"] = e.mult;
      if (e.mult_double) o["mult_double"] = e.mult_double;
      m.push_back(std::move(o));
    }
    j["mults"] = std::move(m);
  }
  ojson split = ojson::object();
  for (std::size_t k = 0; k < 3; ++k)
    if (s.jac_split[k]) split[std::string(kClassNames[k])] = ojson::array({s.jac_split[k]->plus, s.jac_split[k]->minus});
  if (!split.empty()) j["jac_split"] = std::move(split);
  if (s.hat_system) {
    ojson h = ojson::array();
    for (const auto& r : *s.hat_system) h.push_back(vector_json(r));
    j["hat_system"] = std::move(h);
  }
  return j;
}

CaseSpec group_case_spec(Family family, int rank, int marking) {
  if (marking == 0) marking = default_marking(family, rank);
  const auto datum = group_double(family, rank, marking);
  CaseSpec s;
  s.label = datum.label();
  s.family = family;
  s.rank = rank;
  s.group = true;
  s.marking = marking;
  s.z0 = datum.z0();
  for (const auto& r : datum.positive()) s.mults.push_back({r.vector, r.mult, r.mult_double});
  return s;
}

Case build_case(const CaseSpec& spec) {
  try {
    CausalRootDatum datum = [&] {
      if (!spec.group)
        return make_causal(build_classical(spec.family, spec.rank), spec.z0, spec.mults, spec.label);
      auto d = group_double(spec.family, spec.rank, spec.marking);
      if (spec.z0.dim() && spec.z0 != d.z0()) throw CaseError("z0 does not match the group-type datum");
      for (const auto& m : spec.mults)
        if (m.mult != 2 || m.mult_double != 0) throw CaseError("group cases fix every multiplicity to 2");
      if (!spec.label.empty() && spec.label != d.label())
        throw CaseError("group case label must be " + d.label());
      return d;
    }();
    auto gamma = find_strongly_orthogonal(datum);
    auto rsys = restricted_system(datum, gamma, spec.jac_split);
    HatSystem hat = spec.hat_system ? hat_system(datum, *spec.hat_system) : default_hat_system(datum);
    return Case{spec, std::move(datum), std::move(gamma), std::move(rsys), std::move(hat)};
  } catch (const CaseError&) {
    throw;
  } catch (const std::exception& e) {
    throw CaseError(e.what());
  }
}

std::vector<CaseSpec> builtin_cases() {
  return {group_case_spec(Family::C, 1), group_case_spec(Family::C, 2), group_case_spec(Family::C, 3),
          group_case_spec(Family::A, 2, 1), group_case_spec(Family::A, 3, 1), group_case_spec(Family::A, 3, 2),
          group_case_spec(Family::B, 2), group_case_spec(Family::B, 3), group_case_spec(Family::D, 3, 1)};
}

std::filesystem::path case_dir() {
  if (const char* env = std::getenv("CAUSAL_CFN_CASE_DIR"); env && *env) return env;
  return CAUSAL_CFN_DEFAULT_CASE_DIR;
}

namespace {

CaseSpec read_case_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw CaseError("cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_case_text(ss.str());
  } catch (const CaseError& e) {
    throw CaseError(p.string() + ": " + e.what());
  }
}

std::string resolved_label(const CaseSpec& s) {
  if (!s.label.empty()) return s.label;
  return group_label(s.family, s.rank, s.marking ? s.marking : default_marking(s.family, s.rank));
}

std::vector<std::pair<std::filesystem::path, CaseSpec>> directory_cases() {
  std::vector<std::pair<std::filesystem::path, CaseSpec>> out;
  std::error_code ec;
  const auto dir = case_dir();
  if (!std::filesystem::is_directory(dir, ec)) return out;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir, ec))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) out.emplace_back(f, read_case_file(f));
  return out;
}

}  // namespace

std::vector<CaseSpec> catalog() {
  std::vector<CaseSpec> out;
  for (auto& [path, spec] : directory_cases()) {
    if (spec.label.empty()) spec.label = resolved_label(spec);
    out.push_back(std::move(spec));
  }
  for (auto& b : builtin_cases()) {
    const bool shadowed = std::any_of(out.begin(), out.end(), [&](const CaseSpec& s) { return s.label == b.label; });
    if (!shadowed) out.push_back(std::move(b));
  }
  return out;
}

Case load_case(std::string_view name) {
  const std::filesystem::path p{std::string(name)};
  std::error_code ec;
  if (std::filesystem::is_regular_file(p, ec)) return build_case(read_case_file(p));
  for (const auto& [path, spec] : directory_cases())
    if (resolved_label(spec) == name || path.stem() == p) return build_case(spec);
  for (const auto& b : builtin_cases())
    if (b.label == name) return build_case(b);
  throw CaseError("unknown case \"" + std::string(name) + "\"");
}

}  // namespace causal
