#pragma once

// ASCII statement language. See grammar.md for the EBNF and precedence table.
//
//   A \ (B | C) = (A \ B) & (A \ C)        set equality
//   A & B <= A                              inclusion
//   Union s in S. A[s]' = (Inter s in S. A[s])'
//   (p -> q) <-> (~q -> ~p)                 tautology claim

#include <string>
#include <string_view>

#include "extremes/ast.hpp"
#include "extremes/error.hpp"

namespace extremes {

struct ParseOptions {
  // A top-level <-> becomes PropEquiv instead of Taut(Iff).
  bool equiv = false;
};

// Throws ParseError on malformed input and UnsupportedError for nested
// products, arity above two or more than two index variables.
Statement parse_statement(std::string_view input, ParseOptions options = {});

std::string render(const Statement& s);
std::string render(const SetExpr& e);
std::string render(const PropExpr& p);

}  // namespace extremes
