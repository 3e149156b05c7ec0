#include "cli.hpp"
#include "superroots/errors.hpp"
#include "superroots/io.hpp"

#include "printers.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace superroots;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("superroots_test_" + name)).string();
}

}  // namespace

TEST_CASE("root JSON round trip") {
  const auto s = make_system(parse_affine_type("A,1,1"));
  for (const auto& r : s->window(2)) CHECK(root_from_json(s->basis(), root_json(r)) == r);
  const Json j = root_json(parse_root(BasisId::eps_delta(1, 1), "1/2e1-d1+3δ"));
  CHECK(j["coords"]["e1"] == "1/2");
  CHECK(j["coords"]["d1"] == "-1/1");
  CHECK(j["k"] == 3);
}

TEST_CASE("shadow JSON round trip") {
  const auto sc = find_scenario("b11-case3");
  const auto sys = make_system(sc.type);
  const Shadow sh = component_shadow(sys, decompose(even_part(sys)), sc.patterns);
  const Shadow back = shadow_from_json(shadow_json(sh));
  CHECK(back.configs() == sh.configs());
  Json j = shadow_json(sh);
  j["classes"].erase(0);
  CHECK_THROWS_AS(shadow_from_json(j), ParseError);
  j = shadow_json(sh);
  j["classes"][0]["config"]["t"] = 3;
  CHECK_THROWS_AS(shadow_from_json(j), ParseError);
}

TEST_CASE("export JSON layout") {
  const Json j = window_json(*make_system(parse_affine_type("B,1,1")), 1);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"type", "ranks", "lambda_mode", "window", "roots"});
  CHECK(j["roots"].size() == 3 * 11);
  std::vector<std::string> rkeys;
  for (const auto& [k, v] : j["roots"][0].items()) rkeys.push_back(k);
  CHECK(rkeys == std::vector<std::string>{"coords", "k", "sigma", "kind", "parity"});
  const Json f = finite_set_json(build_finite(parse_finite_type("D21L")));
  CHECK(f["roots"].size() == 15);
  CHECK(f["lambda_mode"] == "symbolic");
}

TEST_CASE("cli: tables") {
  auto r = run({"tables", "--type", "B,1,1", "--window", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 kind mismatches, 0 parity mismatches") != std::string::npos);
  CHECK(r.out.find("Nonsingular: -e1-d1, -e1+d1, e1-d1, e1+d1") != std::string::npos);
  r = run({"tables", "--type", "G3", "--json"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["kind_mismatches"] == 198);
}

TEST_CASE("cli: axioms") {
  auto r = run({"axioms", "--type", "s,2"});
  CHECK(r.code == 1);
  CHECK(r.out.find("(f) nondegenerate form on span: FAIL") != std::string::npos);
  r = run({"axioms", "--type", "B", "--m", "1", "--n", "1", "--json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["all_passed"] == true);
}

TEST_CASE("cli: zeta scenario") {
  auto r = run({"zeta", "--scenario", "d21l-case3", "--window", "10"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["case"] == 3);
  CHECK(j["zeta"]["zeta_delta"] == "2/1");
  CHECK(j["report"]["ok"] == true);
  CHECK(j["report"]["membership_violations"].empty());
  r = run({"zeta", "--type", "B,1,1", "--patterns", "up:0:1,up:2:-1"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["case"] == 1);
  r = run({"zeta", "--type", "B,1,1", "--patterns", "up:0:1,down:2:-1"});
  CHECK(r.code == 1);
  r = run({"zeta", "--type", "B,1,1", "--patterns", "up:0:7,up:0:0"});
  CHECK(r.code == 2);
  r = run({"zeta", "--type", "B,1,1", "--patterns", "up:0:0"});
  CHECK(r.code == 2);
}

TEST_CASE("cli: classify, decompose, build, export") {
  auto r = run({"classify", "--type", "D21L", "--root", "g1+g2+g3+3delta"});
  CHECK(r.code == 0);
  CHECK(r.out == "g1+g2+g3+3δ: nonsingular odd\n");
  r = run({"classify", "--type", "D21L", "--root", "g1"});
  CHECK(r.code == 1);
  r = run({"classify", "--type", "D21L", "--root", "q7"});
  CHECK(r.code == 2);
  r = run({"decompose", "--type", "D21L"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("R0 of D(2,1;λ)^(1): 3 components\n", 0) == 0);
  r = run({"build", "--type", "B,0,1"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["roots"].size() == 5);
  r = run({"build", "--type", "D21L", "--lambda", "1/2"});
  CHECK(Json::parse(r.out)["lambda_mode"] == "1/2");
  r = run({"export", "--type", "F4", "--window", "0"});
  CHECK(Json::parse(r.out)["roots"].size() == 37);
}

TEST_CASE("cli: shadow-validate") {
  const std::string good = temp_path("good.json"), bad = temp_path("bad.json");
  auto r = run({"export", "--scenario", "b11-case2", "--output", good});
  REQUIRE(r.code == 0);
  r = run({"shadow-validate", "--input", good, "--window", "4"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["violations"].empty());

  Json j;
  std::ifstream(good) >> j;
  for (auto& c : j["classes"])
    if (c["rep"]["coords"]["d1"] == "-2/1") c["config"] = Json{{"family", "FullIN"}};
    else if (c["rep"]["coords"]["d1"] == "-1/1" && c["rep"]["coords"]["e1"] == "0/1") c["config"] = Json{{"family", "FullLN"}};
  std::ofstream(bad) << j.dump();
  r = run({"shadow-validate", "--input", bad, "--window", "2"});
  CHECK(r.code == 1);
  const Json v = Json::parse(r.out)["violations"];
  REQUIRE_FALSE(v.empty());
  CHECK(v[0].contains("alpha"));
  CHECK(v[0]["expected"] == "ln");
  CHECK(v[0]["found"] == "in");
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

TEST_CASE("cli: usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"tables"}).code == 2);
  CHECK(run({"tables", "--type", "Q,1"}).code == 2);
  CHECK(run({"tables", "--type", "B,1,0"}).code == 2);
  CHECK(run({"build", "--type", "D21L", "--lambda", "-1"}).code == 2);
  CHECK(run({"build", "--type", "D21L", "--lambda", "0"}).code == 2);
  CHECK(run({"tables", "--type", "B,1,1", "--window", "-3"}).code == 2);
  CHECK(run({"shadow-validate"}).code == 2);
  CHECK(run({"shadow-validate", "--input", "/nonexistent.json"}).code == 2);
  CHECK(run({"zeta", "--scenario", "nope"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli: output is deterministic") {
  for (std::vector<std::string> args : {std::vector<std::string>{"zeta", "--scenario", "b11-case4"},
                                        {"export", "--type", "G3", "--window", "2"},
                                        {"tables", "--type", "F4"},
                                        {"decompose", "--type", "B,1,1", "--json"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
    CHECK_FALSE(a.out.empty());
    CHECK(a.out.back() == '\n');
  }
}
