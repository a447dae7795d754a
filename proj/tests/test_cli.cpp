#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "extremes/cli.hpp"

using namespace extremes;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "extremes");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& s) {
  std::vector<nlohmann::json> rows;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) rows.push_back(nlohmann::json::parse(line));
  return rows;
}

}  // namespace

TEST_CASE("check exit codes") {
  CHECK(run({"check", "A | B = B | A"}).code == kExitValid);
  CHECK(run({"check", "A | B = A"}).code == kExitInvalid);
  CHECK(run({"check", "A | = B"}).code == kExitParse);
  CHECK(run({"check", "X | (A * B) = A * B"}).code == kExitUnsupported);
  CHECK(run({"check", "A | (B & C) = (A | B) & (A | C)", "--budget", "4"}).code == kExitBudget);
  // worst code wins
  CHECK(run({"check", "A = A", "A = 0", "A = ("}).code == kExitParse);
  CHECK(run({"check"}).code == kExitParse);
  CHECK(run({"frobnicate"}).code == kExitParse);
}

TEST_CASE("check text output") {
  auto r = run({"check", "A ^ (B | C) = (A | C) ^ (B | C)"});
  CHECK(r.out ==
        "A ^ (B | C) = (A | C) ^ (B | C)\n"
        "  INVALID [extremes, 2 cases]\n"
        "  witness: universe {x1}; A = {}, B = {}, C = {x1}\n"
        "  x1 lies in the left side but not the right side\n");

  r = run({"check", "--quiet", "A = A", "p -> q"});
  CHECK(r.out == "valid\ninvalid\n");

  r = run({"check", "A = "});
  CHECK(r.err.find("error: ") == 0);
  CHECK(r.err.find("\n      ^\n") != std::string::npos);
}

TEST_CASE("check json output") {
  auto r = run({"check", "--json", "Union s in S. A[s] = Inter s in S. A[s]", "X * Y = Y * X",
                "(exists t in T. forall s in S. p[s,t]) -> forall s in S. exists t in T. p[s,t]", "A & = 0"});
  auto rows = json_lines(r.out);
  REQUIRE(rows.size() == 4);
  for (const auto& j : rows) {
    CHECK(j.contains("input"));
    CHECK(j.contains("elapsed_ms"));
  }
  CHECK(rows[0]["kind"] == "set_eq");
  CHECK(rows[0]["verdict"] == "invalid");
  CHECK(rows[0]["method"] == "monadic_bound");
  CHECK(rows[0]["witness"]["index_sets"]["S"] == 2);
  CHECK(rows[0]["witness"]["extents"]["A[s2]"] == nlohmann::json::array({"x1"}));

  CHECK(rows[1]["method"] == "two_point");
  CHECK(rows[1]["witness"]["points"] == nlohmann::json::array({"a", "b"}));

  CHECK(rows[2]["verdict"] == "valid_up_to_bound");
  CHECK(rows[2]["bound"] == 4);

  CHECK_FALSE(rows[3].contains("verdict"));
  CHECK(rows[3]["error"]["kind"] == "parse_error");
  CHECK(rows[3]["error"]["span"].size() == 2);
  CHECK(r.code == kExitParse);
}

TEST_CASE("batch output does not depend on jobs") {
  const std::vector<std::string> inputs{"A | (B & C) = (A | B) & (A | C)", "A \\ B = B \\ A",
                                        "Union s in S. A[s] | B[s] = (Union s in S. A[s]) | Union s in S. B[s]",
                                        "(X * Y) \\ (A * B) = (X \\ A) * (Y \\ B)"};
  std::vector<std::string> one{"check", "--quiet"}, four{"check", "--quiet", "--jobs", "4"};
  one.insert(one.end(), inputs.begin(), inputs.end());
  four.insert(four.end(), inputs.begin(), inputs.end());
  auto a = run(one), b = run(four);
  CHECK(a.out == b.out);
  CHECK(a.code == b.code);
}

TEST_CASE("translate") {
  CHECK(run({"translate", "(p -> q) <-> (~q -> ~p)"}).out == "P' | Q = (Q')' | P'\n");
  CHECK(run({"translate", "A <= B"}).out == "a -> b\n");
  CHECK(run({"translate", "--equiv", "--to-sets", "p /\\ q <-> q /\\ p"}).out == "P & Q = Q & P\n");
  auto r = run({"translate", "--check", "p -> q"});
  CHECK(r.code == kExitInvalid);
  CHECK(r.out.find("INVALID") != std::string::npos);
  CHECK(run({"translate", "--to-logic", "p -> q"}).code == kExitUnsupported);
  CHECK(run({"translate", "--to-logic", "--to-sets", "p"}).code == kExitParse);
  auto j = json_lines(run({"translate", "--json", "--check", "A <= B"}).out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["translation"] == "a -> b");
  CHECK(j[0]["verdict"] == "invalid");
}

TEST_CASE("explain") {
  auto r = run({"explain", "A | 1 = 1"});
  CHECK(r.code == kExitValid);
  CHECK(r.out == "A | L R\n0 | 1 1  ok\n1 | 1 1  ok\nVALID [extremes, 2 cases]\n");

  r = run({"explain", "1 = 0"});
  CHECK(r.code == kExitInvalid);
  CHECK(r.out.find("differs") != std::string::npos);

  auto j = json_lines(run({"explain", "--json", "A \\ B = B \\ A"}).out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["rows"].size() == 4);
  CHECK(j[0]["rows"][1]["agree"] == false);

  CHECK(run({"explain", "X * Y = Y * X"}).code == kExitUnsupported);
}

TEST_CASE("oracle") {
  auto r = run({"oracle", "A \\ (B | C) = (A \\ B) & (A \\ C)"});
  CHECK(r.code == kExitValid);
  CHECK(r.out.find("agreement") != std::string::npos);
  CHECK(run({"oracle", "(X * Y) \\ (A * B) = (X \\ A) * (Y \\ B)", "--max-universe", "2"}).code == kExitValid);
  CHECK(run({"oracle", "Union s in S. A[s] = Inter s in S. A[s]", "--max-universe", "1"}).code == kExitValid);
  // a one-point oracle cannot see the pair counterexample
  r = run({"oracle", "X * Y = Y * X", "--max-universe", "1"});
  CHECK(r.code == kExitValid);
  CHECK(r.out.find("beyond") != std::string::npos);
  CHECK(run({"oracle", "A | B = A", "--budget", "3"}).code == kExitBudget);
}

TEST_CASE("format") {
  auto r = run({"format", "A|(B&C)=(A|B)&(A|C)", "((A'))' = A"});
  CHECK(r.out == "A | (B & C) = (A | B) & (A | C)\n(A')' = A\n");
  CHECK(run({"format", "A = ("}).code == kExitParse);
}

TEST_CASE("catalog files meet their annotations") {
  for (const auto& entry : std::filesystem::directory_iterator(CATALOG_DIR)) {
    if (entry.path().extension() != ".txt") continue;
    CAPTURE(entry.path().string());
    auto r = run({"check", "--expect", "-f", entry.path().string()});
    CHECK(r.code == kExitValid);
    CHECK(r.out.find(", 0 mismatches\n") != std::string::npos);
  }
}
