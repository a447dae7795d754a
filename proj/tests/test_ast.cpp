#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "extremes/ast.hpp"
#include "extremes/parser.hpp"
#include "extremes/semantics.hpp"
#include "gen.hpp"

using namespace extremes;

namespace {

Statement P(const char* s) { return parse_statement(s); }

}  // namespace

TEST_CASE("identifier classes") {
  CHECK(is_upper_identifier("A"));
  CHECK(is_upper_identifier("Xs2"));
  CHECK_FALSE(is_upper_identifier("a"));
  CHECK(is_keyword("Union"));
  CHECK(is_lower_identifier("p"));
  CHECK(is_keyword("forall"));
  CHECK_FALSE(is_lower_identifier("P"));
  CHECK_THROWS_AS(SetExpr::var("a"), std::invalid_argument);
  CHECK_THROWS_AS(PropExpr::atom("P"), std::invalid_argument);
  CHECK_THROWS_AS(SetExpr::fam_var("A", {}), std::invalid_argument);
}

TEST_CASE("structural equality") {
  auto a = SetExpr::inter(SetExpr::var("A"), SetExpr::var("B"));
  CHECK(a == SetExpr::inter(SetExpr::var("A"), SetExpr::var("B")));
  CHECK_FALSE(a == SetExpr::inter(SetExpr::var("B"), SetExpr::var("A")));
  CHECK_FALSE(a == SetExpr::union_of(SetExpr::var("A"), SetExpr::var("B")));
  CHECK(Statement::set_eq(a, a) == Statement::set_eq(a, a));
  CHECK_FALSE(Statement::set_eq(a, a) == Statement::set_incl(a, a));
}

TEST_CASE("free symbols") {
  auto s = free_symbols(P("A & B = B & A"));
  CHECK(s.variables == std::vector<std::string>{"A", "B"});
  CHECK(s.families.empty());

  s = free_symbols(P("Union s in S. A[s] = 1"));
  CHECK(s.variables.empty());
  REQUIRE(s.families.size() == 1);
  CHECK(to_string(s.families[0]) == "A/1 over S");
  CHECK(s.index_sets == std::vector<std::string>{"S"});

  s = free_symbols(P("p \\/ ~p"));
  CHECK(s.variables == std::vector<std::string>{"p"});

  s = free_symbols(P("Zeta | B = Alpha & (Union s in S. Inter t in T. R[s,t])"));
  CHECK(s.variables == std::vector<std::string>{"Alpha", "B", "Zeta"});
  REQUIRE(s.families.size() == 1);
  CHECK(s.families[0].arity() == 2);
  CHECK(s.index_sets == std::vector<std::string>{"S", "T"});
}

TEST_CASE("well formed") {
  CHECK(well_formed(P("A | B = B | A")).empty());

  auto nested = Statement::set_eq(
      SetExpr::product(SetExpr::product(SetExpr::var("A"), SetExpr::var("B")), SetExpr::var("C")), SetExpr::var("C"));
  auto v = well_formed(nested);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::NestedProduct);

  auto unbound = Statement::set_eq(SetExpr::fam_var("A", {"s"}), SetExpr::var("B"));
  v = well_formed(unbound);
  REQUIRE(!v.empty());
  CHECK(v[0].kind == ViolationKind::UnboundIndex);

  auto three = Statement::set_eq(
      SetExpr::fam_union("s", "S", SetExpr::fam_union("t", "S", SetExpr::fam_union("u", "S", SetExpr::fam_var("A", {"u"})))),
      SetExpr::empty());
  v = well_formed(three);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::TooManyIndexVariables);

  auto clash = Statement::set_eq(SetExpr::fam_union("s", "S", SetExpr::fam_var("A", {"s"})), SetExpr::var("A"));
  v = well_formed(clash);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::InconsistentSignature);
}

TEST_CASE("desugar") {
  CHECK(desugar(P("A ^ B = B ^ A")) == P("(A \\ B) | (B \\ A) = (B \\ A) | (A \\ B)"));
  CHECK(desugar(P("A <= B")) == P("A | B = B"));
  CHECK(desugar(P("A' = 1 \\ A")) == P("1 \\ A = 1 \\ A"));
  // logic untouched
  CHECK(desugar(P("p -> q")) == P("p -> q"));
}

TEST_CASE("desugar is idempotent and meaning preserving") {
  gen::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    auto s = gen::flat_statement(rng);
    auto d = desugar(s);
    CHECK(desugar(d) == d);
    CHECK(is_flat(d));
    auto fs = free_symbols(s), fd = free_symbols(d);
    for (const auto& v : fd.variables) CHECK(std::find(fs.variables.begin(), fs.variables.end(), v) != fs.variables.end());
    CHECK(check_by_model(s).outcome == check_by_model(d).outcome);
  }
}

TEST_CASE("desugar preserves semantics pointwise in every small model") {
  gen::Rng rng(12);
  for (int i = 0; i < 60; ++i) {
    auto e = gen::flat_term(rng, 4, 3);
    auto d = desugar(e);
    for (unsigned n = 1; n <= 3; ++n) {
      const unsigned mask = (1U << n) - 1;
      for (unsigned a = 0; a <= mask; ++a)
        for (unsigned b = 0; b <= mask; ++b)
          for (unsigned c = 0; c <= mask; ++c) {
            FiniteModel m;
            m.universe_size = n;
            m.variables = {{"A", a}, {"B", b}, {"C", c}};
            CHECK(eval_model(e, m) == eval_model(d, m));
          }
    }
  }
}

TEST_CASE("helpers") {
  auto s = P("(X * Y) \\ (A * B) = (X \\ A) * (Y \\ B)");
  CHECK(contains_product(s));
  CHECK_FALSE(contains_family(s));
  CHECK_FALSE(is_flat(s));
  CHECK(is_flat(P("A = A")));
  CHECK(contains_family(P("Inter s in S. A[s] = 0")));
  CHECK(contains_quantifier(P("forall s in S. p[s]").formula()));
  CHECK(node_count(P("A | B = B").set_left()) == 3);
  CHECK(node_count(P("A | B = B")) == 5);
}
