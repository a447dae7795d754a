#pragma once

// Equalities between sets of pairs. A product-flat side is a union,
// intersection or difference of binary products C * D whose operands are
// ordinary (product-free, family-free) set terms.
//
// A pair (a, b) lies in C * D iff a lies in C and b lies in D, so a
// product-flat equality holds iff the propositional formula over the atoms
// "a in V" and "b in V" is a tautology. Every valuation of those atoms is
// realised in a universe with two points, which makes the check exact.
// Testing only extreme values of the variables is not enough here.

#include <vector>

#include "extremes/ast.hpp"
#include "extremes/engine.hpp"
#include "extremes/model.hpp"

namespace extremes {

// Empty iff the desugared statement is a product-flat equality.
std::vector<Violation> product_flat(const Statement& s);

// No variable occurs both in a first-coordinate and a second-coordinate
// operand.
bool independence_check(const Statement& s);

// Replaces every product by an intersection. Only sound for independent
// coordinates; throws UnsupportedError otherwise or when the statement is
// not product-flat.
Statement reduce_product(const Statement& s);

// Two-point decision. Atoms are ordered (a in V1, b in V1, a in V2, ...)
// with variables sorted and the first atom as the most significant bit.
Verdict decide_product(const Statement& s, const EngineOptions& options = {});

}  // namespace extremes
