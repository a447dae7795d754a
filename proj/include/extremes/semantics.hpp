#pragma once

// Ground-truth evaluators. These walk the term trees directly over explicit
// finite models and share no code with the deciders, so agreement between
// the two is a meaningful check.

#include <cstdint>

#include "extremes/ast.hpp"
#include "extremes/model.hpp"

namespace extremes {

// Two-valued evaluation over a minimal universe: union is max, intersection
// min, a \ b is min(a, 1 - b). Expects a desugared, product-free,
// family-free term; anything else throws UnsupportedError.
bool eval_extreme(const SetExpr& e, const ExtremeAssignment& a);

// Value of a set term in a finite model: a point set, or for cartesian
// products a set of pairs over the same universe.
struct Extent {
  unsigned rank = 1;
  PointSet bits = 0;

  friend bool operator==(const Extent&, const Extent&) = default;
};

// Pointwise semantics for every node kind. Indexed union over an empty index
// set is empty and indexed intersection is the whole universe.
Extent eval_model(const SetExpr& e, const FiniteModel& m);

// Truth-functional evaluation; forall is the conjunction over the index set
// and exists the disjunction.
bool eval_prop(const PropExpr& p, const Valuation& v);

bool holds(const Statement& s, const FiniteModel& m);
bool holds(const Statement& s, const Valuation& v);

// Logical statements read atom truth off point x1 of the witness model.
Valuation valuation_of(const FiniteModel& m);

// True when re-evaluating `s` under the witness model falsifies it.
bool falsifies(const Statement& s, const Witness& w);

struct OracleOptions {
  unsigned max_universe = 3;
  unsigned max_index_set = 3;
  std::uint64_t budget = 10'000'000;
  // Also enumerate empty index sets (after all non-empty sizes).
  bool empty_index_sets = false;
  unsigned jobs = 1;
};

// Brute force over every model with 1..max_universe points, every extension
// of every symbol and every index-set size; logical statements enumerate
// truth tables instead. Throws BudgetExceeded before starting if the model
// count would pass `budget`.
Verdict check_by_model(const Statement& s, const OracleOptions& options = {});

// Number of models check_by_model would enumerate, saturating at UINT64_MAX.
std::uint64_t oracle_model_count(const Statement& s, const OracleOptions& options = {});

}  // namespace extremes
