#pragma once

// Transformations of subsets of the universe: i_A(X) = A & X,
// u_A(X) = A | X, c(X) = X', id and composition. Two transformations are
// equal when their results on a fresh variable X are identically equal.

#include <memory>
#include <string>

#include "extremes/ast.hpp"
#include "extremes/engine.hpp"
#include "extremes/model.hpp"

namespace extremes {

enum class TransformKind { Id, IntersectWith, UnionWith, Comp, Compose };

class TransformExpr {
 public:
  static TransformExpr id();
  // Throws std::invalid_argument if `a` has products or families.
  static TransformExpr intersect_with(SetExpr a);
  static TransformExpr union_with(SetExpr a);
  static TransformExpr comp();
  // outer after inner.
  static TransformExpr compose(TransformExpr outer, TransformExpr inner);

  TransformKind kind() const;
  const SetExpr& parameter() const;
  const TransformExpr& outer() const;
  const TransformExpr& inner() const;

 private:
  struct Node;
  explicit TransformExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// i_A, u_A, c, id, and t . s for composition.
std::string to_string(const TransformExpr& t);

SetExpr apply(const TransformExpr& t, const SetExpr& x);

// The skip-th name among X, Y, Z, W, X1, X2, ... not used by a parameter of `t` or `s`.
std::string fresh_variable(const TransformExpr& t, const TransformExpr& s, int skip = 0);

Statement transform_statement(const TransformExpr& t, const TransformExpr& s);
Verdict transform_equal(const TransformExpr& t, const TransformExpr& s, const EngineOptions& options = {});

enum class Law { Union, Inter };

// t(X o Y) = t(X) o t(Y) for the chosen operation o.
Statement preserves_statement(const TransformExpr& t, Law law);
Verdict preserves(const TransformExpr& t, Law law, const EngineOptions& options = {});

// t(X from Y) = t(X) to t(Y), e.g. c(X | Y) = c(X) & c(Y).
Statement maps_to_statement(const TransformExpr& t, Law from, Law to);
Verdict maps_to(const TransformExpr& t, Law from, Law to, const EngineOptions& options = {});

}  // namespace extremes
