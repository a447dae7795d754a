#include "extremes/transform.hpp"

#include <set>
#include <stdexcept>
#include <vector>

#include "extremes/parser.hpp"

namespace extremes {

struct TransformExpr::Node {
  TransformKind kind;
  SetExpr parameter;
  std::vector<TransformExpr> parts;  // outer, inner
};

namespace {

void check_parameter(const SetExpr& a) {
  if (contains_product(a) || contains_family(a))
    throw std::invalid_argument("transformation parameter must be a plain set term: " + render(a));
}

void collect(const TransformExpr& t, std::set<std::string>& names) {
  switch (t.kind()) {
    case TransformKind::IntersectWith:
    case TransformKind::UnionWith:
      for (const auto& v : free_symbols(Statement::set_eq(t.parameter(), t.parameter())).variables) names.insert(v);
      break;
    case TransformKind::Compose:
      collect(t.outer(), names);
      collect(t.inner(), names);
      break;
    default:
      break;
  }
}

SetExpr combine(Law law, SetExpr a, SetExpr b) {
  return law == Law::Union ? SetExpr::union_of(std::move(a), std::move(b)) : SetExpr::inter(std::move(a), std::move(b));
}

}  // namespace

TransformExpr TransformExpr::id() {
  return TransformExpr(std::make_shared<const Node>(Node{TransformKind::Id, SetExpr::empty(), {}}));
}

TransformExpr TransformExpr::intersect_with(SetExpr a) {
  check_parameter(a);
  return TransformExpr(std::make_shared<const Node>(Node{TransformKind::IntersectWith, std::move(a), {}}));
}

TransformExpr TransformExpr::union_with(SetExpr a) {
  check_parameter(a);
  return TransformExpr(std::make_shared<const Node>(Node{TransformKind::UnionWith, std::move(a), {}}));
}

TransformExpr TransformExpr::comp() {
  return TransformExpr(std::make_shared<const Node>(Node{TransformKind::Comp, SetExpr::empty(), {}}));
}

TransformExpr TransformExpr::compose(TransformExpr outer, TransformExpr inner) {
  return TransformExpr(std::make_shared<const Node>(
      Node{TransformKind::Compose, SetExpr::empty(), {std::move(outer), std::move(inner)}}));
}

TransformKind TransformExpr::kind() const { return node_->kind; }

const SetExpr& TransformExpr::parameter() const {
  if (kind() != TransformKind::IntersectWith && kind() != TransformKind::UnionWith)
    throw std::logic_error("transformation has no parameter");
  return node_->parameter;
}

const TransformExpr& TransformExpr::outer() const {
  if (kind() != TransformKind::Compose) throw std::logic_error("not a composition");
  return node_->parts[0];
}

const TransformExpr& TransformExpr::inner() const {
  if (kind() != TransformKind::Compose) throw std::logic_error("not a composition");
  return node_->parts[1];
}

std::string to_string(const TransformExpr& t) {
  auto param = [](const SetExpr& a) {
    auto s = render(a);
    return a.op() == SetOp::Var ? s : "(" + s + ")";
  };
  switch (t.kind()) {
    case TransformKind::Id: return "id";
    case TransformKind::IntersectWith: return "i_" + param(t.parameter());
    case TransformKind::UnionWith: return "u_" + param(t.parameter());
    case TransformKind::Comp: return "c";
    case TransformKind::Compose: return to_string(t.outer()) + " . " + to_string(t.inner());
  }
  return "";
}

SetExpr apply(const TransformExpr& t, const SetExpr& x) {
  switch (t.kind()) {
    case TransformKind::Id: return x;
    case TransformKind::IntersectWith: return SetExpr::inter(t.parameter(), x);
    case TransformKind::UnionWith: return SetExpr::union_of(t.parameter(), x);
    case TransformKind::Comp: return SetExpr::complement(x);
    case TransformKind::Compose: return apply(t.outer(), apply(t.inner(), x));
  }
  return x;
}

std::string fresh_variable(const TransformExpr& t, const TransformExpr& s, int skip) {
  std::set<std::string> used;
  collect(t, used);
  collect(s, used);
  static const char* const kNames[] = {"X", "Y", "Z", "W"};
  for (int k = 0;; ++k) {
    auto name = k < 4 ? std::string(kNames[k]) : "X" + std::to_string(k - 3);
    if (used.count(name)) continue;
    if (skip-- == 0) return name;
  }
}

Statement transform_statement(const TransformExpr& t, const TransformExpr& s) {
  const auto x = SetExpr::var(fresh_variable(t, s));
  return Statement::set_eq(apply(t, x), apply(s, x));
}

Verdict transform_equal(const TransformExpr& t, const TransformExpr& s, const EngineOptions& options) {
  return decide_flat(transform_statement(t, s), options);
}

Statement maps_to_statement(const TransformExpr& t, Law from, Law to) {
  const auto x = SetExpr::var(fresh_variable(t, t, 0));
  const auto y = SetExpr::var(fresh_variable(t, t, 1));
  return Statement::set_eq(apply(t, combine(from, x, y)), combine(to, apply(t, x), apply(t, y)));
}

Statement preserves_statement(const TransformExpr& t, Law law) { return maps_to_statement(t, law, law); }

Verdict preserves(const TransformExpr& t, Law law, const EngineOptions& options) {
  return decide_flat(preserves_statement(t, law), options);
}

Verdict maps_to(const TransformExpr& t, Law from, Law to, const EngineOptions& options) {
  return decide_flat(maps_to_statement(t, from, to), options);
}

}  // namespace extremes
