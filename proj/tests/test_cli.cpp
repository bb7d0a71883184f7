#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <map>
#include <sstream>

#include "laurmon/cli.hpp"

using json = nlohmann::json;
using laurmon::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Outcome call(std::vector<std::string> args, std::map<std::string, std::string> env = {}) {
  std::ostringstream out, err;
  auto lookup = [env](const std::string& k) -> std::optional<std::string> {
    auto it = env.find(k);
    if (it == env.end()) return std::nullopt;
    return it->second;
  };
  const int code = run(args, out, err, lookup);
  return {code, out.str(), err.str()};
}

const std::string kEx49 = "x^2 - 2*x + 1/2";

}  // namespace

TEST_CASE("classify: cubic example") {
  auto r = call({"classify", "--min-poly", "x^3 - 2*x^2 + 3*x - 7"});
  REQUIRE(r.code == 0);
  auto d = r.doc();
  CHECK(d["schema_version"] == "1");
  CHECK(d["command"] == "classify");
  CHECK(d["report"]["atomic"]["status"] == "Refuted");
  CHECK(d["report"]["atomic"]["witness"]["kind"] == "unit_representation");
  CHECK(d["report"]["atomic"]["witness"]["g"]["text"] == "x^-2 + x^-3 + 14*x^-4");
  CHECK(d["report"]["atomic"]["witness"]["identity"]["rhs"]["text"] == "x^2 + x + 14");
  CHECK(d["report"]["elasticity"]["class"] == "Infinite");
  CHECK(d["report"]["hierarchy_violations"].empty());
}

TEST_CASE("classify: both roots of x^2 - 2x + 1/2") {
  for (const char* idx : {"0", "1"}) {
    auto d = call({"classify", "--min-poly", kEx49, "--root-index", idx}).doc();
    for (const char* p : {"atomic", "accp", "bfm", "ffm"}) CHECK(d["report"][p]["status"] == "Proven");
    for (const char* p : {"ufm", "hfm", "lfm"}) CHECK(d["report"][p]["status"] == "Refuted");
  }
}

TEST_CASE("classify: rational and transcendental alpha") {
  auto two = call({"classify", "--rational", "2"}).doc();
  CHECK(two["report"]["atomic"]["status"] == "Refuted");
  auto tr = call({"classify", "--transcendental"});
  REQUIRE(tr.code == 0);
  auto d = tr.doc();
  CHECK(d["input"]["transcendental"] == true);
  CHECK(d["report"]["ufm"]["status"] == "Proven");
  CHECK(d["report"]["elasticity"]["class"] == "One");
}

TEST_CASE("factorize 4x with the oracle") {
  auto r = call({"factorize", "--min-poly", kEx49, "--root-index", "1", "--element", "4*x", "--oracle"});
  REQUIRE(r.code == 0);
  auto d = r.doc();
  CHECK(d["method"] == "embedding_box");
  CHECK(d["embedding_box"]["window"] == json::array({-3, 3}));
  CHECK(d["factorization_set"]["factorizations"].size() == 2);
  CHECK(d["factorization_set"]["complete"] == true);
  CHECK(d["oracle"]["agrees"] == true);
}

TEST_CASE("factorize outside the quadratic case uses the bounded search") {
  auto r = call({"factorize", "--min-poly", "x^3 - 2*x^2 + 3*x - 7", "--element", "x^4", "--budget-window", "4",
                 "--budget-coeff", "14"});
  REQUIRE(r.code == 0);
  auto d = r.doc();
  CHECK(d["method"] == "bounded_search");
  CHECK(d["embedding_box"].is_null());
  CHECK(d["factorization_set"]["complete"] == false);
  // Not complete, so --strict reports it as indefinite.
  auto s = call({"factorize", "--min-poly", "x^3 - 2*x^2 + 3*x - 7", "--element", "x^4", "--budget-window", "4",
                 "--budget-coeff", "14", "--strict"});
  CHECK(s.code == 3);
}

TEST_CASE("elasticity-witness and lfm-pair") {
  auto e = call({"elasticity-witness", "--min-poly", "x^2 - 2/3", "--n-max", "4"});
  REQUIRE(e.code == 0);
  auto d = e.doc();
  REQUIRE(d["witnesses"].size() == 4);
  CHECK(d["witnesses"][3]["p_length"] == "81");
  CHECK(d["witnesses"][3]["q_length"] == "16");
  CHECK(d["elasticity_lower_bound"] == "81/16");

  auto l = call({"lfm-pair", "--min-poly", kEx49, "--strict"});
  REQUIRE(l.code == 0);
  auto ld = l.doc();
  CHECK(ld["equal_as_elements"] == true);
  CHECK(ld["equal_length"] == true);
  CHECK(ld["distinct"] == true);
}

TEST_CASE("strict exit codes for classify") {
  // Definite answer: exit 0 even with --strict.
  CHECK(call({"classify", "--min-poly", "x^2 - 2/3", "--strict"}).code == 0);
  // One search node leaves atomicity of this cubic undecided.
  auto r = call({"classify", "--min-poly", "x^3 - 3*x^2 + x - 1/5", "--budget-nodes", "1", "--strict"});
  CHECK(r.code == 3);
  auto d = r.doc();
  bool definite = d["report"]["elasticity"]["class"] != "Unknown";
  for (const char* p : {"atomic", "accp", "bfm", "ffm", "ufm", "hfm", "lfm"})
    definite = definite && d["report"][p]["status"] != "Unknown";
  CHECK(r.code == (definite ? 0 : 3));
  CHECK(call({"classify", "--min-poly", "x^3 - 3*x^2 + x - 1/5", "--budget-nodes", "1"}).code == 0);
}

TEST_CASE("budget flags and environment overrides") {
  auto env = call({"classify", "--min-poly", "x^2 - 2/3"},
                  {{"LAURMON_BUDGET_WINDOW", "3"}, {"LAURMON_BUDGET_COEFF", "7"}, {"LAURMON_BUDGET_NODES", "99"}});
  REQUIRE(env.code == 0);
  auto d = env.doc();
  CHECK(d["budget"]["exponent_window"] == 3);
  CHECK(d["budget"]["coeff_bound"] == "7");
  CHECK(d["budget"]["node_limit"] == 99);

  auto flag = call({"classify", "--min-poly", "x^2 - 2/3", "--budget-window", "5"}, {{"LAURMON_BUDGET_WINDOW", "3"}});
  CHECK(flag.doc()["budget"]["exponent_window"] == 5);

  CHECK(call({"classify", "--rational", "2"}, {{"LAURMON_BUDGET_NODES", "zero"}}).code == 2);
  CHECK(call({"classify", "--rational", "2"}, {{"LAURMON_BUDGET_WINDOW", "0"}}).code == 2);
}

TEST_CASE("input errors exit 2 with a message") {
  auto check_error = [](std::vector<std::string> args, const std::string& fragment) {
    auto r = call(std::move(args));
    CHECK(r.code == 2);
    CHECK(r.err.find(fragment) != std::string::npos);
  };
  check_error({"classify", "--min-poly", "x^2 - 1"}, "reducible");
  check_error({"classify", "--min-poly", "x^2 - 2", "--root-index", "3"}, "1 positive root");
  check_error({"classify", "--min-poly", "x^2 +"}, "error");
  check_error({"classify", "--rational", "-3"}, "positive");
  check_error({"classify", "--rational", "1/0"}, "error");
  check_error({"classify", "--rational", "2", "--min-poly", "x - 2"}, "exactly one");
  check_error({"factorize", "--min-poly", kEx49, "--element", "-x"}, "error");
  check_error({"factorize", "--min-poly", kEx49, "--element", "0"}, "nonzero");
  check_error({"elasticity-witness", "--rational", "1"}, "alpha = 1");
  check_error({"elasticity-witness", "--min-poly", kEx49, "--n-max", "0"}, "n-max");
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({}).code == 2);
}

TEST_CASE("output is byte-stable across runs") {
  const std::vector<std::string> args{"classify", "--min-poly", kEx49, "--root-index", "1"};
  auto a = call(args), b = call(args);
  CHECK(a.out == b.out);
  auto p1 = call({"factorize", "--min-poly", kEx49, "--element", "4*x", "--pretty"});
  auto p2 = call({"factorize", "--min-poly", kEx49, "--element", "4*x", "--pretty"});
  CHECK(p1.out == p2.out);
  CHECK(p1.out.find("schema_version: 1\n") != std::string::npos);
  CHECK(p1.out.find("factorization_set.complete: true\n") != std::string::npos);
}
