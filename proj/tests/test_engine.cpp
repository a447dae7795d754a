#include <doctest.h>

#include "extremes/engine.hpp"
#include "extremes/error.hpp"
#include "extremes/parser.hpp"
#include "extremes/semantics.hpp"
#include "gen.hpp"

using namespace extremes;

namespace {

Statement P(const char* s) { return parse_statement(s); }

}  // namespace

TEST_CASE("flat identities") {
  auto v = decide_flat(P("A | (B & C) = (A | B) & (A | C)"));
  CHECK(v.outcome == Outcome::Valid);
  CHECK(v.method == Method::Extremes);
  CHECK(v.cases_checked == 8);
  CHECK_FALSE(v.witness);

  v = decide_flat(P("A \\ (A \\ B) = A & B"));
  CHECK(v.outcome == Outcome::Valid);
  CHECK(v.cases_checked == 4);

  CHECK(decide_flat(P("0' = 1")).cases_checked == 1);
  CHECK(decide_flat(P("1 = 0")).is_invalid());
}

TEST_CASE("first failing case is reported") {
  auto v = decide_flat(P("A ^ (B | C) = (A | C) ^ (B | C)"));
  REQUIRE(v.is_invalid());
  CHECK(v.cases_checked == 2);
  REQUIRE(v.witness);
  REQUIRE(v.witness->assignment);
  const auto& a = *v.witness->assignment;
  CHECK(a.variables.at("A") == false);
  CHECK(a.variables.at("B") == false);
  CHECK(a.variables.at("C") == true);
  CHECK(v.witness->model.universe_size == 1);
  CHECK(render_model(*v.witness) == "universe {x1}; A = {}, B = {}, C = {x1}");
  CHECK(falsifies(P("A ^ (B | C) = (A | C) ^ (B | C)"), *v.witness));
}

TEST_CASE("inclusion, both readings") {
  CHECK(decide_flat(P("A & B <= A")).outcome == Outcome::Valid);
  CHECK(decide_flat(P("0 <= A")).outcome == Outcome::Valid);
  auto v = decide_flat(P("A <= A & B"));
  REQUIRE(v.is_invalid());
  CHECK(v.witness->assignment->variables.at("A"));
  CHECK_FALSE(v.witness->assignment->variables.at("B"));

  // A | B = B and A & B = A pick out the same extreme rows
  auto rows_u = explain(P("A | B = B"));
  auto rows_i = explain(P("A & B = A"));
  REQUIRE(rows_u.size() == rows_i.size());
  for (std::size_t i = 0; i < rows_u.size(); ++i) CHECK(rows_u[i].agrees() == rows_i[i].agrees());
}

TEST_CASE("explain lists every row in order") {
  auto rows = explain(P("A | 1 = 1"));
  REQUIRE(rows.size() == 2);
  CHECK_FALSE(rows[0].assignment.variables.at("A"));
  CHECK(rows[1].assignment.variables.at("A"));
  CHECK(rows[0].agrees());

  rows = explain(P("A \\ B = B \\ A"));
  REQUIRE(rows.size() == 4);
  // A is the most significant bit
  CHECK_FALSE(rows[1].assignment.variables.at("A"));
  CHECK(rows[1].assignment.variables.at("B"));
  CHECK_FALSE(rows[1].agrees());
  CHECK(rows[0].agrees());
  CHECK(rows[3].agrees());
}

TEST_CASE("indexed families") {
  auto v = decide_indexed(P("B & (Union s in S. A[s]) = Union s in S. (A[s] & B)"));
  CHECK(v.outcome == Outcome::Valid);
  CHECK(v.method == Method::MonadicBound);

  v = decide_indexed(P("(Union s in S. A[s])' = Inter s in S. A[s]'"));
  CHECK(v.outcome == Outcome::Valid);

  v = decide_indexed(P("Union s in S. A[s] = Inter s in S. A[s]"));
  REQUIRE(v.is_invalid());
  CHECK(v.witness->model.index_set_sizes.at("S") == 2);
  CHECK(v.witness->assignment->families.at(Instance{"A", {{"S", 0}}}) == false);
  CHECK(v.witness->assignment->families.at(Instance{"A", {{"S", 1}}}) == true);
  CHECK(falsifies(P("Union s in S. A[s] = Inter s in S. A[s]"), *v.witness));

  CHECK(index_bound(P("Union s in S. A[s] = 0")) == 2);
  CHECK(index_bound(P("Union s in S. A[s] | B[s] = 0")) == 4);
  CHECK(index_bound(P("Union s in S. Inter t in T. R[s,t] = 0")) == kDefaultDyadicBound);
  CHECK(index_bound(P("Union s in S. Inter t in T. R[s,t] = 0"), 3) == 3);
}

TEST_CASE("binary families are checked up to the bound") {
  auto s = P("Union t in T. Inter s in S. R[s,t] <= Inter s in S. Union t in T. R[s,t]");
  auto v = decide_indexed(s, 2);
  CHECK(v.outcome == Outcome::ValidUpToBound);
  CHECK(v.bound == 2);
  CHECK(describe(v).find("up to index-set size 2") != std::string::npos);

  auto bad = P("Inter s in S. Union t in T. R[s,t] <= Union t in T. Inter s in S. R[s,t]");
  v = decide_indexed(bad, 2);
  REQUIRE(v.is_invalid());
  CHECK(falsifies(bad, *v.witness));
}

TEST_CASE("empty index sets are optional") {
  auto s = P("Inter s in S. A[s] <= Union s in S. A[s]");
  CHECK(decide_indexed(s).outcome == Outcome::Valid);
  EngineOptions o;
  o.empty_index_sets = true;
  auto v = decide_indexed(s, kDefaultDyadicBound, o);
  REQUIRE(v.is_invalid());
  CHECK(v.witness->model.index_set_sizes.at("S") == 0);
}

TEST_CASE("wrong statement class") {
  CHECK_THROWS_AS(decide_flat(P("X * Y = Y * X")), UnsupportedError);
  CHECK_THROWS_AS(decide_flat(P("Union s in S. A[s] = 0")), UnsupportedError);
  CHECK_THROWS_AS(decide_flat(P("p -> p")), UnsupportedError);
}

TEST_CASE("budget") {
  EngineOptions o;
  o.budget = 7;
  CHECK_THROWS_AS(decide_flat(P("A | (B & C) = (A | B) & (A | C)"), o), BudgetExceeded);
  o.budget = 8;
  CHECK(decide_flat(P("A | (B & C) = (A | B) & (A | C)"), o).outcome == Outcome::Valid);
  o.budget = 100;
  CHECK_THROWS_AS(decide_indexed(P("Union s in S. A[s] | B[s] | C[s] = 0"), kDefaultDyadicBound, o), BudgetExceeded);
}

TEST_CASE("worker count does not change the verdict") {
  gen::Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    auto s = gen::flat_statement(rng);
    auto one = decide_flat(s);
    for (unsigned jobs : {2U, 3U, 8U}) {
      EngineOptions o;
      o.jobs = jobs;
      auto many = decide_flat(s, o);
      CHECK(many.outcome == one.outcome);
      CHECK(many.cases_checked == one.cases_checked);
      if (one.witness) CHECK(many.witness->model == one.witness->model);
    }
  }
  gen::Rng mrng(22);
  for (int i = 0; i < 40; ++i) {
    auto s = gen::monadic_statement(mrng);
    EngineOptions o;
    o.jobs = 4;
    auto a = decide_indexed(s), b = decide_indexed(s, kDefaultDyadicBound, o);
    CHECK(a.outcome == b.outcome);
    if (a.witness) CHECK(a.witness->model == b.witness->model);
  }
}

TEST_CASE("witnesses falsify and agree with the model oracle") {
  gen::Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    auto s = gen::flat_statement(rng);
    auto v = decide_flat(s);
    if (v.is_invalid()) CHECK(falsifies(s, *v.witness));
    CHECK(v.outcome == check_by_model(s).outcome);
  }
}
