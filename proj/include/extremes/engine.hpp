#pragma once

// Decision by extreme cases. A set identity built from union, intersection,
// difference, symmetric difference and complement holds in every universe
// iff it holds when each variable is either empty or the whole universe; a
// counterexample point can be isolated from every other point.
//
// Indexed families are decided by instantiating each index set at concrete
// sizes and running the same enumeration over all family members. When every
// family is unary the statement is, pointwise, a monadic first-order sentence
// over the index set with k predicates, and index sets of size at most 2^k
// suffice, so the verdict is complete. Binary families get a configurable
// bound and a ValidUpToBound verdict.

#include <cstdint>
#include <vector>

#include "extremes/ast.hpp"
#include "extremes/model.hpp"

namespace extremes {

struct EngineOptions {
  unsigned jobs = 1;
  // Cap on the total number of assignments one decision may enumerate.
  std::uint64_t budget = std::uint64_t{1} << 26;
  // Also instantiate index sets as empty (after all non-empty sizes).
  bool empty_index_sets = false;
};

inline constexpr unsigned kDefaultDyadicBound = 4;

// Enumerates all 2^n extreme assignments, variables in lexicographic order
// with the first one as the most significant bit. Throws UnsupportedError if
// the desugared statement has products or families.
Verdict decide_flat(const Statement& s, const EngineOptions& options = {});

Verdict decide_indexed(const Statement& s, unsigned dyadic_bound = kDefaultDyadicBound,
                       const EngineOptions& options = {});

// Largest index-set size decide_indexed instantiates for `s`.
unsigned index_bound(const Statement& s, unsigned dyadic_bound = kDefaultDyadicBound);

struct CaseRow {
  ExtremeAssignment assignment;
  bool left = false;
  bool right = false;

  bool agrees() const { return left == right; }
};

// Every row decide_flat examines, in enumeration order.
std::vector<CaseRow> explain(const Statement& s, const EngineOptions& options = {});

}  // namespace extremes
