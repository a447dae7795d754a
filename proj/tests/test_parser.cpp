#include <doctest.h>

#include <fstream>
#include <string>

#include "extremes/parser.hpp"
#include "gen.hpp"

using namespace extremes;

namespace {

SetExpr V(const char* n) { return SetExpr::var(n); }
PropExpr At(const char* n) { return PropExpr::atom(n); }

std::string round(const char* in) { return render(parse_statement(in)); }

ParseError parse_error(const char* in) {
  try {
    parse_statement(in);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for " << in);
  return ParseError({}, "", {});
}

}  // namespace

TEST_CASE("set statements") {
  CHECK(parse_statement("A & B = B & A") ==
        Statement::set_eq(SetExpr::inter(V("A"), V("B")), SetExpr::inter(V("B"), V("A"))));
  CHECK(parse_statement("A \\ (B | C) = (A \\ B) & (A \\ C)") ==
        Statement::set_eq(SetExpr::diff(V("A"), SetExpr::union_of(V("B"), V("C"))),
                          SetExpr::inter(SetExpr::diff(V("A"), V("B")), SetExpr::diff(V("A"), V("C")))));
  CHECK(parse_statement("A <= B").kind() == StatementKind::SetIncl);
  CHECK(parse_statement("  A|B=B  # trailing comment") == parse_statement("A | B = B"));
}

TEST_CASE("precedence") {
  // ' > * > & > \ ^ > |
  CHECK(parse_statement("A | B & C = A") == parse_statement("A | (B & C) = A"));
  CHECK(parse_statement("A \\ B & C = A") == parse_statement("A \\ (B & C) = A"));
  CHECK(parse_statement("A | B \\ C = A") == parse_statement("A | (B \\ C) = A"));
  CHECK(parse_statement("A \\ B ^ C = A") == parse_statement("(A \\ B) ^ C = A"));
  CHECK(parse_statement("A & B' = A") == parse_statement("A & (B') = A"));
  CHECK(parse_statement("A * B & C * D = A") == parse_statement("(A * B) & (C * D) = A"));
  CHECK(parse_statement("A'' = A") == Statement::set_eq(SetExpr::complement(SetExpr::complement(V("A"))), V("A")));
  CHECK(parse_statement("p /\\ q \\/ r -> p <-> q") == parse_statement("(((p /\\ q) \\/ r) -> p) <-> q"));
  CHECK(parse_statement("p -> q -> r") == parse_statement("p -> (q -> r)"));
  CHECK(parse_statement("p <-> q <-> r") == parse_statement("(p <-> q) <-> r"));
  CHECK(parse_statement("~p /\\ q") == parse_statement("(~p) /\\ q"));
}

TEST_CASE("binders and families") {
  auto s = parse_statement("Union s in S. A[s] | B = B");
  CHECK(s.set_left().op() == SetOp::FamUnion);
  CHECK(s.set_left().body().op() == SetOp::Union);
  CHECK(parse_statement("(exists t in T. forall s in S. p[s,t]) -> q").kind() == StatementKind::Taut);
  CHECK(render(parse_statement("Inter s in S. A[s] = 0").set_left()) == "Inter s in S. A[s]");
}

TEST_CASE("logic statements") {
  CHECK(parse_statement("p \\/ ~p") == Statement::taut(PropExpr::disj(At("p"), PropExpr::negation(At("p")))));
  CHECK(parse_statement("p <-> q").kind() == StatementKind::Taut);
  CHECK(parse_statement("p <-> q", ParseOptions{true}).kind() == StatementKind::PropEquiv);
  CHECK(parse_statement("true -> false").formula().left().op() == PropOp::True);
}

TEST_CASE("rendering") {
  CHECK(render(Statement::set_eq(SetExpr::union_of(V("A"), SetExpr::diff(SetExpr::universe(), V("A"))),
                                 SetExpr::universe())) == "A | (1 \\ A) = 1");
  CHECK(render(Statement::taut(PropExpr::implies(PropExpr::conj(At("p"), At("q")), At("p")))) == "p /\\ q -> p");
  CHECK(round("A|(B&C)=(A|B)&(A|C)") == "A | (B & C) = (A | B) & (A | C)");
  CHECK(round("(A | B) | C = A | (B | C)") == "A | B | C = A | (B | C)");
  CHECK(round("(A')' = A") == "(A')' = A");
  CHECK(round("(A | B)' = A' & B'") == "(A | B)' = A' & B'");
  CHECK(round("(p -> q) -> r") == "(p -> q) -> r");
  CHECK(round("~(forall s in S. p[s]) <-> exists s in S. ~p[s]") == "~(forall s in S. p[s]) <-> exists s in S. ~p[s]");
  CHECK(round("(forall s in S. p[s]) /\\ q") == "(forall s in S. p[s]) /\\ q");
}

TEST_CASE("parse errors carry spans and expectations") {
  auto e = parse_error("(A & B");
  CHECK(e.span().begin == 6);
  CHECK_FALSE(e.expected().empty());

  e = parse_error("A & = B");
  CHECK(e.span().begin == 4);

  e = parse_error("A[s] = B");
  CHECK(e.span().begin == 2);
  CHECK(e.span().end == 3);

  e = parse_error("A = B $");
  CHECK(e.span().begin == 6);

  e = parse_error("A = 2");
  CHECK(e.span().begin == 4);

  e = parse_error("A ∪ B = B");
  CHECK(e.span().begin == 2);

  for (const char* bad : {"", "=", "A =", "A = B = C", "p ->", "forall s in S p[s]", "Union s S. A[s] = 0",
                          "A = (B", "p <= q", "A[s,t,u] = 0"}) {
    CAPTURE(bad);
    try {
      parse_statement(bad);
      FAIL("accepted");
    } catch (const ParseError& err) {
      CHECK(err.span().begin <= std::string(bad).size());
      CHECK(err.span().end <= std::string(bad).size());
      CHECK(err.span().begin <= err.span().end);
      CHECK_FALSE(err.expected().empty());
      CHECK(std::string(err.what()).size() > 0);
    } catch (const UnsupportedError&) {
      CHECK(std::string(bad) == "A[s,t,u] = 0");
    }
  }
}

TEST_CASE("unsupported constructs") {
  CHECK_THROWS_AS(parse_statement("(A * B) * C = C"), UnsupportedError);
  CHECK_THROWS_AS(parse_statement("Union s in S. Union t in T. Union u in U. A[s,t,u] = 0"), UnsupportedError);
}

TEST_CASE("round trip on random statements") {
  gen::Rng rng(2024);
  for (int i = 0; i < 1000; ++i) {
    auto s = gen::any_statement(rng);
    REQUIRE(well_formed(s).empty());
    const auto text = render(s);
    CAPTURE(text);
    const auto back = parse_statement(text, ParseOptions{s.kind() == StatementKind::PropEquiv});
    CHECK(back == s);
    CHECK(render(back) == text);
  }
}
