#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <json.hpp>
#include <sstream>
#include <string>

#include "wolfhp/clirun.hpp"

using wolfhp::run_cli;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Result run_binary(const std::string& args) {
  const std::string cmd = std::string(WOLFHP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int status = pclose(p);
  return {WEXITSTATUS(status), out, ""};
}

}  // namespace

TEST_CASE("wolf json contains the G2 values") {
  const Result r = run({"wolf", "--algebra", "G2", "--r-max", "3", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = ordered_json::parse(r.out);
  CHECK(j["P1"] == "14");
  CHECK(j["volume"] == "9");
  CHECK(j["n"] == 2);
  CHECK(j["values"][2] == "77");
  CHECK(j["all_pass"] == true);
}

TEST_CASE("wolf family selector") {
  const Result r = run({"wolf", "--family", "HPn", "--n", "1", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = ordered_json::parse(r.out);
  // coefficients of C(2r+3, 3) = (4/3)r^3 + 4r^2 + (11/3)r + 1
  CHECK(j["P_coeffs"][0] == "1");
  CHECK(j["P_coeffs"][1] == "11/3");
  CHECK(j["P_coeffs"][2] == "4");
  CHECK(j["P_coeffs"][3] == "4/3");
  CHECK(j["volume"] == "4");
}

TEST_CASE("degenerate A1 sets the warning field") {
  const Result r = run({"wolf", "--algebra", "A1", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = ordered_json::parse(r.out);
  CHECK(j["degenerate"] == true);
  CHECK(j["P_coeffs"][0] == "1");
  CHECK(j["P_coeffs"][1] == "2");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"wolf"}).code == 2);
  CHECK(run({"wolf", "--algebra", "G2", "--family", "HPn"}).code == 2);
  CHECK(run({"wolf", "--algebra", "Q7"}).code == 2);
  CHECK(run({"wolf", "--algebra", "G2", "--format", "yaml"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"prolong", "--n", "1"}).code == 2);
}

TEST_CASE("json output round-trips byte-identically") {
  for (const auto& args : {std::vector<std::string>{"wolf", "--algebra", "F4", "--format", "json"},
                           std::vector<std::string>{"prolong", "--n", "1", "--r", "1",
                                                    "--solutions", "--format", "json"}}) {
    const Result r = run(args);
    CHECK(r.code == 0);
    const auto parsed = ordered_json::parse(r.out);
    CHECK(parsed.dump(2) + "\n" == r.out);
  }
}

TEST_CASE("identical invocations produce identical bytes") {
  const std::vector<std::string> args = {"wolf", "--algebra", "E6", "--format", "json"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("prolong reports levels and totals") {
  const Result r = run({"prolong", "--n", "1", "--r", "1", "--solutions", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = ordered_json::parse(r.out);
  CHECK(j["levels"].size() == 3);
  CHECK(j["levels"][0]["dim"] == 4);
  CHECK(j["levels"][1]["dim"] == 3);
  CHECK(j["levels"][2]["dim"] == 0);
  CHECK(j["termination_degree"] == 1);
  CHECK(j["total_dim"] == "10");
  CHECK(j["solution_dims"][0]["dim"] == 10);
}

TEST_CASE("prolong cap semantics") {
  const Result r = run({"prolong", "--n", "1", "--r", "1", "--cap", "1", "--format", "json"});
  CHECK(r.code == 1);  // finite-type check cannot pass under the low cap
  const auto j = ordered_json::parse(r.out);
  CHECK(j["terminated"] == false);
  CHECK(j["termination_degree"].is_null());
}

TEST_CASE("csv and table formats emit") {
  const Result csv = run({"wolf", "--algebra", "G2", "--r-max", "2", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.find("volume,9") != std::string::npos);
  const Result tab = run({"wolf", "--algebra", "G2", "--r-max", "2"});
  CHECK(tab.code == 0);
  CHECK(tab.out.find("P(r)") != std::string::npos);
}

TEST_CASE("expand subcommand") {
  const Result r = run({"expand", "--family", "HPn", "--n", "1", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = ordered_json::parse(r.out);
  CHECK(j["char_coeffs"][0] == "0");
  CHECK(j["char_coeffs"][1] == "4");
  CHECK(j["binomial_coeffs"].size() == 4);
}

TEST_CASE("verify hilbert scope passes") {
  const Result r = run({"verify", "--scope", "hilbert", "--r-max", "6", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = ordered_json::parse(r.out);
  CHECK(j.dump(2) + "\n" == r.out);  // byte-identical round trip
  CHECK(j["all_pass"] == true);
  int algebra_cells = 0;
  for (const auto& cell : j["cells"])
    if (cell["name"].get<std::string>().size() == 2) ++algebra_cells;
  CHECK(algebra_cells == 9);
}

TEST_CASE("verify with a corrupted root table fails with a named check") {
  const Result r =
      run({"verify", "--scope", "hilbert", "--r-max", "4", "--corrupt", "B3", "--format", "json"});
  CHECK(r.code == 1);
  const auto j = ordered_json::parse(r.out);
  CHECK(j["all_pass"] == false);
  bool named = false;
  for (const auto& cell : j["cells"])
    if (cell["name"] == "B3" && cell["pass"] == false)
      for (const auto& c : cell["checks"])
        if (c["name"] == "wolf_grading_consistency" && c["pass"] == false) named = true;
  CHECK(named);
}

TEST_CASE("installed binary smoke") {
  const Result r = run_binary("wolf --algebra C2 --format json");
  CHECK(r.code == 0);
  const auto j = ordered_json::parse(r.out);
  CHECK(j["volume"] == "4");
  CHECK(run_binary("wolf --bogus").code == 2);
}
