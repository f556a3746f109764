#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "causal/case_file.hpp"
#include "causal/cli.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace causal;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "causal_cfn");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) out.push_back(json::parse(l));
  return out;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_CASE("parsing lambda and grids") {
  CHECK(parse_lambda("1/2, -3") == RationalVector{Rational(1, 2), Rational(-3)});
  const auto g = parse_grid("1:3:3@-1,2");
  REQUIRE(g.size() == 3);
  CHECK(g[0] == RationalVector{-1, 2});
  CHECK(g[1] == RationalVector{-2, 4});
  CHECK(g[2] == RationalVector{-3, 6});
  CHECK(parse_grid("0:1:5@1")[1] == RationalVector{Rational(1, 4)});
  CHECK(format_e(RationalVector{2, 0, Rational(-1, 2)}) == "2e1 - (1/2)e3");
  CHECK(format_e(RationalVector{-1, 1}) == "-e1 + e2");
  CHECK(format_e(RationalVector{0, 0}) == "0");
}

TEST_CASE("case files reject malformed documents") {
  CHECK_THROWS_AS(parse_case_text("{"), CaseError);
  CHECK_THROWS_AS(parse_case_text(R"({"family":"C","rank":2,"colour":"red"})"), CaseError);
  CHECK_THROWS_AS(parse_case_text(R"({"family":"A","rank":1,"type":"custom","label":"x","z0":[0.5,-0.5],
                                       "mults":[{"root":["1","-1"],"mult":2}]})"),
                  CaseError);
  CHECK_THROWS_AS(parse_case_text(R"({"family":"Q","rank":2})"), CaseError);
  CHECK_THROWS_AS(build_case(parse_case_text(R"({"family":"C","rank":2,"mults":[{"root":["2","0"],"mult":3}]})")),
                  CaseError);
  const auto s = parse_case_text(R"({"family":"A","rank":1,"type":"custom","label":"x","z0":["1/2","-1/2"],
                                     "mults":[{"root":["1","-1"],"mult":4}]})");
  CHECK_FALSE(s.group);
  CHECK(s.z0 == RationalVector{Rational(1, 2), Rational(-1, 2)});
  CHECK(build_case(s).modulo_hat_data());
}

TEST_CASE("new-group round-trips into eval for every built-in") {
  for (const auto& b : builtin_cases()) {
    CAPTURE(b.label);
    const auto r = run({"case", "new-group", std::string(1, family_letter(b.family)), std::to_string(b.rank),
                        std::to_string(b.marking)});
    REQUIRE(r.code == 0);
    const auto spec = parse_case_text(r.out);
    CHECK(spec.label == b.label);
    const auto path = temp_file("causal_cfn_roundtrip.json", r.out);
    const Case c = build_case(spec);
    RationalVector lam = -c.datum.rho() * 2;
    std::string arg;
    for (std::size_t i = 0; i < lam.dim(); ++i) arg += (i ? "," : "") + format_rational(lam[i]);
    const auto e = run({"eval", path.string(), "--lambda", arg});
    REQUIRE(e.code == 0);
    const auto recs = lines(e.out);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0]["case"] == b.label);
    CHECK(recs[0]["checks"]["rds"] == true);
    CHECK(recs[0]["results"]["d"]["status"] == "finite");
    std::filesystem::remove(path);
  }
}

TEST_CASE("rank-1 grid statuses follow the RDS check") {
  const auto r = run({"eval", "group:su(1,1)", "--grid", "-4:0:5@1"});
  REQUIRE(r.code == 0);
  const auto recs = lines(r.out);
  REQUIRE(recs.size() == 5);
  for (const auto& rec : recs) {
    const bool rds = rec["checks"]["rds"];
    CHECK(rec["results"]["d"]["status"] == (rds ? "finite" : "divergent"));
  }
  CHECK(recs[0]["lambda"][0] == "-4");
  CHECK(recs[0]["checks"]["rds"] == true);
  CHECK(recs[4]["checks"]["rds"] == false);
}

TEST_CASE("lambda outside RDS gives a divergent formal dimension") {
  const auto r = run({"eval", "group:sp4", "--lambda", "1,1", "--outputs", "d"});
  REQUIRE(r.code == 0);
  const auto rec = lines(r.out).at(0);
  CHECK(rec["results"]["d"]["status"] == "divergent");
  CHECK(rec["results"]["d"]["value"].is_null());
  CHECK(rec["results"].size() == 1);
}

TEST_CASE("eval output is deterministic") {
  const std::vector<std::string> args{"eval", "group:su(2,2)", "--grid", "1:6:7@-3,-1,1,3", "--lambda", "-9,-2,1/3,4"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto ca = run({"eval", "group:su(1,1)", "--grid", "-4:-1:4@1", "--out", "csv"});
  const auto cb = run({"eval", "group:su(1,1)", "--grid", "-4:-1:4@1", "--out", "csv"});
  CHECK(ca.out == cb.out);
  CHECK(ca.out.rfind("case,lambda,c_omega_status", 0) == 0);
}

TEST_CASE("usage and case errors exit with 2") {
  CHECK(run({"eval", "no-such-case", "--lambda", "1"}).code == 2);
  CHECK(run({"eval", "group:sp4", "--lambda", "1"}).code == 2);
  CHECK(run({"eval", "group:sp4"}).code == 2);
  CHECK(run({"eval", "group:sp4", "--lambda", "1,x"}).code == 2);
  CHECK(run({"eval", "group:sp4", "--lambda", "1,1", "--outputs", "q"}).code == 2);
  CHECK(run({"case", "show", "no-such-case"}).code == 2);
  CHECK(run({"case", "new-group", "C", "9"}).code == 2);
  CHECK(run({"verify", "bogus"}).code == 2);
  CHECK(run({}).code == 2);
  const auto bad = temp_file("causal_cfn_bad.json", "{\"family\": ");
  const auto r = run({"eval", bad.string(), "--lambda", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("malformed JSON") != std::string::npos);
  std::filesystem::remove(bad);
}

TEST_CASE("case list and show") {
  const auto l = run({"case", "list"});
  REQUIRE(l.code == 0);
  CHECK(std::count(l.out.begin(), l.out.end(), '\n') >= 4);
  CHECK(l.out.find("group:sp4") != std::string::npos);

  const auto t = run({"case", "show", "group:sp4", "--text"});
  REQUIRE(t.code == 0);
  CHECK(t.out.find("Gamma = {2e1, 2e2}") != std::string::npos);
  CHECK(t.out.find("rho = 4e1 + 2e2") != std::string::npos);
  CHECK(t.out.find("|W| = 8") != std::string::npos);

  const auto j = run({"case", "show", "group:sp4"});
  REQUIRE(j.code == 0);
  const auto doc = json::parse(j.out);
  CHECK(doc["gamma"] == json::parse(R"([["2","0"],["0","2"]])"));
  CHECK(doc["sigma"]["class_mult"]["mixed"] == 2);
  CHECK(doc["sigma"]["class_mult"]["full"] == 2);
  CHECK(doc["weyl_order"] == 8);
}

TEST_CASE("verify on selected cases") {
  const auto c = run({"verify", "cones", "--case", "group:sp4"});
  CHECK(c.code == 0);
  const auto rep = json::parse(c.out);
  CHECK(rep["pass"] == true);
  bool saw = false;
  for (const auto& chk : rep["checks"])
    if (chk["name"] == "cplus_identity") {
      saw = true;
      CHECK(chk["pass"] == true);
    }
  CHECK(saw);
  const auto g = run({"verify", "group_ratio", "--case", "group:su(1,1)", "--seed", "7"});
  CHECK(g.code == 0);
  const auto grep = json::parse(g.out);
  CHECK(grep["checks"][0]["metrics"]["rel_std"].get<double>() <= 1e-8);
}
