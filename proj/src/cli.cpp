#include "causal/cli.hpp"

#include "causal/case_file.hpp"
#include "causal/causal_cones.hpp"
#include "causal/c_functions.hpp"
#include "causal/json_writer.hpp"
#include "causal/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace causal {

namespace {

using ojson = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

constexpr std::array<std::string_view, 6> kOutputs{"c_omega", "c_zero", "c", "d_group", "d", "spherical_factor"};

std::vector<std::string> parse_outputs(const std::string& text) {
  if (text.empty()) return {kOutputs.begin(), kOutputs.end()};
  std::vector<std::string> out;
  for (auto k : split(text, ',')) {
    if (std::find(kOutputs.begin(), kOutputs.end(), k) == kOutputs.end())
      throw UsageError("unknown output \"" + std::string(k) + "\"");
    out.emplace_back(k);
  }
  return out;
}

ojson eval_record(const Case& c, const RationalVector& lam, const std::vector<std::string>& outputs) {
  const SpectralParameter sp(lam);
  ojson rec;
  rec["case"] = c.label();
  rec["lambda"] = rational_vector_json(lam);
  ojson results = ojson::object();
  FormalDimension fd;
  const bool want_d = std::find(outputs.begin(), outputs.end(), "d") != outputs.end();
  if (want_d) fd = formal_dimension(c.datum, c.hat, sp);
  for (const auto& key : outputs) {
    if (key == "c_omega") results[key] = eval_json(c_omega(c.datum, sp));
    if (key == "c_zero") results[key] = eval_json(c_zero(c.datum, sp));
    if (key == "c") results[key] = eval_json(c_total(c.datum, sp));
    if (key == "d_group") results[key] = eval_json(d_group(c.hat, sp));
    if (key == "d") results[key] = eval_json(fd.value);
    if (key == "spherical_factor") {
      try {
        results[key] = eval_json(spherical_factor(c.datum, sp));
      } catch (const std::domain_error& e) {
        auto j = eval_json(EvalResult::divergent());
        j["error"] = e.what();
        results[key] = std::move(j);
      }
    }
  }
  rec["results"] = std::move(results);
  ojson checks;
  checks["rds"] = rds_check(c.datum, sp);
  checks["e_omega"] = e_omega_check(c.datum, sp);
  checks["e_zero"] = e_zero_check(c.datum, sp);
  rec["checks"] = std::move(checks);
  if (want_d && !fd.eps_trace.empty()) {
    ojson det;
    det["eps_direction"] = double_vector_json(fd.eps_direction);
    ojson trace = ojson::array();
    for (const auto& s : fd.eps_trace) {
      ojson t;
      t["eps"] = s.eps;
      t["result"] = eval_json(s.value);
      trace.push_back(std::move(t));
    }
    det["eps_trace"] = std::move(trace);
    rec["d_detail"] = std::move(det);
  }
  if (c.modulo_hat_data()) rec["note"] = "modulo hat-system data";
  return rec;
}

std::string csv_cell(const ojson& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return write_json(v);
}

void write_csv(std::ostream& out, const std::vector<ojson>& records, const std::vector<std::string>& outputs) {
  out << "case,lambda";
  for (const auto& k : outputs) out << ',' << k << "_status," << k << "_log_value," << k << "_value";
  out << ",rds,e_omega,e_zero\n";
  for (const auto& r : records) {
    std::string lam;
    for (const auto& x : r["lambda"]) lam += (lam.empty() ? "" : ";") + x.get<std::string>();
    out << '"' << r["case"].get<std::string>() << "\"," << lam;
    for (const auto& k : outputs) {
      const auto& e = r["results"][k];
      out << ',' << csv_cell(e["status"]) << ',' << csv_cell(e["log_value"]) << ',' << csv_cell(e["value"]);
    }
    for (const char* k : {"rds", "e_omega", "e_zero"}) out << ',' << (r["checks"][k].get<bool>() ? "true" : "false");
    out << '\n';
  }
}

ojson roots_json(const std::vector<Root>& roots) {
  ojson a = ojson::array();
  for (const auto& r : roots) {
    ojson o;
    o["root"] = rational_vector_json(r.vector);
    o["mult"] = r.mult;
    o["mult_double"] = r.mult_double;
    a.push_back(std::move(o));
  }
  return a;
}

ojson vectors_json(const std::vector<RationalVector>& vs) {
  ojson a = ojson::array();
  for (const auto& v : vs) a.push_back(rational_vector_json(v));
  return a;
}

ojson show_json(const Case& c) {
  const auto& d = c.datum;
  ojson j;
  j["label"] = d.label();
  j["family"] = std::string(1, family_letter(d.family()));
  j["rank"] = d.family_rank();
  j["type"] = c.spec.group ? "group" : "custom";
  j["ambient_dim"] = d.ambient_dim();
  j["z0"] = rational_vector_json(d.z0());
  j["c0"] = format_rational(d.z0_value());
  j["positive_compact"] = roots_json(d.positive_compact());
  j["positive_noncompact"] = roots_json(d.positive_noncompact());
  j["rho"] = rational_vector_json(d.rho());
  j["rho_k"] = rational_vector_json(d.rho_k());
  j["rho_n"] = rational_vector_json(d.rho_n());
  j["gamma"] = vectors_json(c.gamma.gammas);
  j["h_basis"] = vectors_json(c.gamma.h_basis);
  ojson sigma;
  ojson cm, js;
  for (std::size_t k = 0; k < 3; ++k) {
    const std::string name(to_string(static_cast<SigmaClass>(k)));
    cm[name] = c.rsys.class_mult[k];
    js[name] = c.rsys.jac[k] ? ojson::array({c.rsys.jac[k]->plus, c.rsys.jac[k]->minus}) : ojson(nullptr);
  }
  sigma["class_mult"] = std::move(cm);
  sigma["jac_split"] = std::move(js);
  ojson pos = ojson::array();
  for (const auto& phi : c.rsys.positive) {
    ojson o;
    ojson coeffs = ojson::array();
    for (const auto& q : phi.coeffs) coeffs.push_back(format_rational(q));
    o["coeffs"] = std::move(coeffs);
    o["class"] = std::string(to_string(phi.cls));
    o["mult"] = phi.mult;
    o["noncompact"] = phi.noncompact;
    pos.push_back(std::move(o));
  }
  sigma["positive"] = std::move(pos);
  sigma["zero_restrictions"] = c.rsys.zero_restrictions;
  j["sigma"] = std::move(sigma);
  ojson cones;
  if (d.ambient_dim() <= kExactConeDim) {
    const auto cc = c_min_and_ck(d);
    cones["c_min"] = vectors_json(cc.c_min.generators());
    cones["c_k"] = vectors_json(cc.c_k.generators());
    cones["w_domain"] = vectors_json(w_domain(d).generators());
    try {
      cones["c_plus"] = vectors_json(c_plus_cone(d, c.gamma).generators());
    } catch (const std::domain_error&) {
      cones["c_plus"] = nullptr;
    }
  }
  j["cones"] = std::move(cones);
  if (d.rank() <= kMaxWeylRank) j["weyl_order"] = weyl_group(d).size();
  ojson hat;
  hat["source"] = c.spec.hat_system ? "case file" : "default";
  hat["positive"] = vectors_json(c.hat.positive);
  hat["rho_hat"] = rational_vector_json(c.hat.rho);
  j["hat_system"] = std::move(hat);
  return j;
}

std::string braces(const std::vector<RationalVector>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + format_e(vs[i]);
  return s + "}";
}

void show_text(std::ostream& out, const Case& c) {
  const auto& d = c.datum;
  const auto vecs = [](const std::vector<Root>& rs) {
    std::vector<RationalVector> v;
    for (const auto& r : rs) v.push_back(r.vector);
    return v;
  };
  out << "case " << d.label() << " (" << family_letter(d.family()) << d.family_rank() << ", "
      << (c.spec.group ? "group" : "custom") << ")\n";
  out << "z0 = " << format_e(d.z0()) << ", c0 = " << format_rational(d.z0_value()) << '\n';
  out << "Delta_k+ = " << braces(vecs(d.positive_compact())) << '\n';
  out << "Delta_n+ = " << braces(vecs(d.positive_noncompact())) << '\n';
  out << "rho = " << format_e(d.rho()) << ", rho_k = " << format_e(d.rho_k()) << ", rho_n = " << format_e(d.rho_n())
      << '\n';
  out << "Gamma = " << braces(c.gamma.gammas) << '\n';
  out << "H = " << braces(c.gamma.h_basis) << '\n';
  for (std::size_t k = 0; k < 3; ++k) {
    out << "Sigma class " << to_string(static_cast<SigmaClass>(k)) << ": m = " << c.rsys.class_mult[k];
    if (c.rsys.jac[k]) out << ", split (" << c.rsys.jac[k]->plus << ", " << c.rsys.jac[k]->minus << ")";
    out << '\n';
  }
  if (d.ambient_dim() <= kExactConeDim) {
    const auto cc = c_min_and_ck(d);
    out << "C_min = cone" << braces(cc.c_min.generators()) << '\n';
    out << "C_k = cone" << braces(cc.c_k.generators()) << '\n';
  }
  if (d.rank() <= kMaxWeylRank) out << "|W| = " << weyl_group(d).size() << '\n';
}

int cmd_eval(const std::string& case_name, const std::vector<std::string>& lambdas, const std::vector<std::string>& grids,
             const std::string& outputs_text, const std::string& format, std::ostream& out) {
  const Case c = load_case(case_name);
  const auto outputs = parse_outputs(outputs_text);
  std::vector<RationalVector> points;
  for (const auto& l : lambdas) points.push_back(parse_lambda(l));
  for (const auto& g : grids)
    for (auto& p : parse_grid(g)) points.push_back(std::move(p));
  if (points.empty()) throw UsageError("eval needs --lambda or --grid");
  for (const auto& p : points)
    if (p.dim() != c.datum.ambient_dim())
      throw UsageError("lambda has dimension " + std::to_string(p.dim()) + ", case " + c.label() + " expects " +
                       std::to_string(c.datum.ambient_dim()));
  std::vector<ojson> records;
  for (const auto& p : points) records.push_back(eval_record(c, p, outputs));
  if (format == "csv") {
    write_csv(out, records, outputs);
  } else {
    for (const auto& r : records) out << write_json(r) << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& suite, const std::vector<std::string>& case_names, const VerifyOptions& opt,
               std::ostream& out) {
  if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end())
    throw UsageError("unknown suite \"" + suite + "\"");
  std::vector<Case> cases;
  if (case_names.empty()) {
    for (const auto& s : catalog()) cases.push_back(build_case(s));
  } else {
    for (const auto& n : case_names) cases.push_back(load_case(n));
  }
  const auto checks = run_suite(suite, cases, opt);
  const auto rep = report_json(suite, checks);
  out << write_json(rep, 2) << '\n';
  return rep["pass"].get<bool>() ? 0 : 1;
}

}  // namespace

RationalVector parse_lambda(std::string_view text) {
  std::vector<Rational> coords;
  for (auto part : split(text, ',')) {
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    try {
      coords.push_back(parse_rational(part));
    } catch (const std::invalid_argument& e) {
      throw UsageError("bad lambda coordinate \"" + std::string(part) + "\": " + e.what());
    }
  }
  return RationalVector(std::move(coords));
}

std::vector<RationalVector> parse_grid(std::string_view text) {
  const auto at = text.find('@');
  if (at == std::string_view::npos) throw UsageError("grid must be from:to:steps@direction");
  const auto range = split(text.substr(0, at), ':');
  if (range.size() != 3) throw UsageError("grid must be from:to:steps@direction");
  Rational from, to;
  long steps = 0;
  try {
    from = parse_rational(range[0]);
    to = parse_rational(range[1]);
    steps = std::stol(std::string(range[2]));
  } catch (const std::exception&) {
    throw UsageError("bad grid range \"" + std::string(text.substr(0, at)) + "\"");
  }
  if (steps < 1) throw UsageError("grid needs at least one step");
  const RationalVector dir = parse_lambda(text.substr(at + 1));
  std::vector<RationalVector> out;
  for (long i = 0; i < steps; ++i) {
    const Rational t = steps == 1 ? from : from + (to - from) * Rational(i, steps - 1);
    out.push_back(dir * t);
  }
  return out;
}

std::string format_e(const RationalVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const Rational& c = v[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (a != 1) s += denominator(a) == 1 ? format_rational(a) : "(" + format_rational(a) + ")";
    s += "e" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"c-functions and formal dimensions of compactly causal symmetric spaces", "causal_cfn"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "evaluate c-functions and d(lambda) for a case");
  std::string eval_case, outputs, format = "json";
  std::vector<std::string> lambdas, grids;
  eval->add_option("case", eval_case, "case file path or catalog label")->required();
  eval->add_option("--lambda", lambdas, "\"a,b,...\" (repeatable)");
  eval->add_option("--grid", grids, "from:to:steps@direction (repeatable)");
  eval->add_option("--outputs", outputs, "comma-separated subset of c_omega,c_zero,c,d_group,d,spherical_factor");
  eval->add_option("--out", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "run invariant suites");
  std::string suite;
  std::vector<std::string> verify_cases;
  VerifyOptions vopt;
  double tol = 0.0;
  verify->add_option("suite", suite, "cones, cfn, group_ratio, oracle or all")->required();
  verify->add_option("--case", verify_cases, "restrict to these cases (repeatable)");
  verify->add_option("--seed", vopt.seed, "sampling seed");
  auto* tol_opt = verify->add_option("--tol", tol, "oracle tolerance override");

  auto* cs = app.add_subcommand("case", "inspect and create case files");
  cs->require_subcommand(1);
  auto* list = cs->add_subcommand("list", "list catalog cases");
  auto* show = cs->add_subcommand("show", "derived data of a case");
  std::string show_case;
  bool text = false;
  show->add_option("case", show_case)->required();
  show->add_flag("--text", text, "human-readable output");
  auto* newg = cs->add_subcommand("new-group", "write a group-type case file");
  std::string fam;
  int rank = 0, marking = 0;
  newg->add_option("family", fam)->required();
  newg->add_option("rank", rank)->required();
  newg->add_option("marking", marking);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*eval) return cmd_eval(eval_case, lambdas, grids, outputs, format, out);
    if (*verify) {
      if (*tol_opt) vopt.tol = tol;
      return cmd_verify(suite, verify_cases, vopt, out);
    }
    if (*list) {
      for (const auto& s : catalog())
        out << s.label << '\t' << family_letter(s.family) << s.rank << '\t' << (s.group ? "group" : "custom") << '\n';
      return 0;
    }
    if (*show) {
      const Case c = load_case(show_case);
      if (text)
        show_text(out, c);
      else
        out << write_json(show_json(c), 2) << '\n';
      return 0;
    }
    if (*newg) {
      Family f;
      try {
        f = parse_family(fam);
        out << write_json(case_to_json(group_case_spec(f, rank, marking)), 2) << '\n';
      } catch (const std::invalid_argument& e) {
        throw CaseError(e.what());
      }
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const CaseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace causal
