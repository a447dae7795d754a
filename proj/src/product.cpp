#include "extremes/product.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "extremes/error.hpp"
#include "extremes/parallel.hpp"
#include "extremes/parser.hpp"

namespace extremes {

namespace {

const char* op_word(SetOp op) {
  switch (op) {
    case SetOp::Union: return "union";
    case SetOp::Inter: return "intersection";
    case SetOp::Diff: return "difference";
    default: return "equality";
  }
}

void scan_rank2(const SetExpr& e, SetOp parent, std::vector<Violation>& out) {
  switch (e.op()) {
    case SetOp::Product:
      for (const auto& side : {e.left(), e.right()}) {
        if (contains_product(side))
          out.push_back({ViolationKind::NestedProduct, "cartesian product nested inside '" + render(e) + "'"});
        else if (contains_family(side))
          out.push_back({ViolationKind::ProductShape, "indexed family inside product '" + render(e) + "'"});
      }
      return;
    case SetOp::Union:
    case SetOp::Inter:
    case SetOp::Diff:
      scan_rank2(e.left(), e.op(), out);
      scan_rank2(e.right(), e.op(), out);
      return;
    default:
      out.push_back({ViolationKind::MixedRank, std::string("mixed-rank ") + op_word(parent) + ": '" + render(e) +
                                                   "' is not a set of pairs"});
  }
}

void collect_vars(const SetExpr& e, std::set<std::string>& out) {
  if (e.op() == SetOp::Var) {
    out.insert(e.name());
  } else if (e.is_binary()) {
    collect_vars(e.left(), out);
    collect_vars(e.right(), out);
  } else if (e.op() == SetOp::Complement) {
    collect_vars(e.operand(), out);
  }
}

void coordinates(const SetExpr& e, std::set<std::string>& first, std::set<std::string>& second) {
  if (e.op() == SetOp::Product) {
    collect_vars(e.left(), first);
    collect_vars(e.right(), second);
  } else if (e.is_binary()) {
    coordinates(e.left(), first, second);
    coordinates(e.right(), first, second);
  } else if (e.op() == SetOp::Complement) {
    coordinates(e.operand(), first, second);
  }
}

SetExpr replace_products(const SetExpr& e) {
  if (e.op() == SetOp::Product) return SetExpr::inter(e.left(), e.right());
  if (e.is_binary()) return SetExpr::binary(e.op(), replace_products(e.left()), replace_products(e.right()));
  if (e.op() == SetOp::Complement) return SetExpr::complement(replace_products(e.operand()));
  return e;
}

// Membership of the generic pair, with atom a-in-V at position 2i and
// b-in-V at 2i+1.
struct PairEval {
  std::map<std::string, unsigned> slot;
  unsigned width = 0;

  bool atom(std::uint64_t c, unsigned pos) const { return ((c >> (width - 1 - pos)) & 1U) != 0; }

  bool point(const SetExpr& e, std::uint64_t c, unsigned coord) const {
    switch (e.op()) {
      case SetOp::Var: return atom(c, 2 * slot.at(e.name()) + coord);
      case SetOp::Empty: return false;
      case SetOp::Universe: return true;
      case SetOp::Union: return point(e.left(), c, coord) || point(e.right(), c, coord);
      case SetOp::Inter: return point(e.left(), c, coord) && point(e.right(), c, coord);
      case SetOp::Diff: return point(e.left(), c, coord) && !point(e.right(), c, coord);
      default: throw UnsupportedError("unexpected term in product operand: " + render(e));
    }
  }

  bool pair(const SetExpr& e, std::uint64_t c) const {
    switch (e.op()) {
      case SetOp::Product: return point(e.left(), c, 0) && point(e.right(), c, 1);
      case SetOp::Union: return pair(e.left(), c) || pair(e.right(), c);
      case SetOp::Inter: return pair(e.left(), c) && pair(e.right(), c);
      case SetOp::Diff: return pair(e.left(), c) && !pair(e.right(), c);
      default: throw UnsupportedError("unexpected term in product statement: " + render(e));
    }
  }
};

}  // namespace

std::vector<Violation> product_flat(const Statement& s) {
  std::vector<Violation> out;
  if (!s.is_set()) {
    out.push_back({ViolationKind::ProductShape, "expected a set statement"});
    return out;
  }
  const auto d = desugar(s);
  if (!contains_product(d)) {
    out.push_back({ViolationKind::ProductShape, "statement has no cartesian product"});
    return out;
  }
  scan_rank2(d.set_left(), SetOp::Var, out);
  scan_rank2(d.set_right(), SetOp::Var, out);
  return out;
}

bool independence_check(const Statement& s) {
  if (!s.is_set()) return false;
  std::set<std::string> first, second;
  coordinates(s.set_left(), first, second);
  coordinates(s.set_right(), first, second);
  return std::none_of(first.begin(), first.end(), [&](const std::string& v) { return second.count(v) > 0; });
}

Statement reduce_product(const Statement& s) {
  const auto violations = product_flat(s);
  if (!violations.empty())
    throw UnsupportedError("coordinate-independence reduction inapplicable: " + violations.front().message);
  if (!independence_check(s)) {
    std::set<std::string> first, second, both;
    coordinates(s.set_left(), first, second);
    coordinates(s.set_right(), first, second);
    std::set_intersection(first.begin(), first.end(), second.begin(), second.end(), std::inserter(both, both.end()));
    std::string names;
    for (const auto& v : both) names += (names.empty() ? "" : ", ") + v;
    throw UnsupportedError("coordinate-independence reduction inapplicable: " + names +
                           " occur(s) in both coordinates");
  }
  const auto l = replace_products(s.set_left());
  const auto r = replace_products(s.set_right());
  return s.kind() == StatementKind::SetIncl ? Statement::set_incl(l, r) : Statement::set_eq(l, r);
}

Verdict decide_product(const Statement& s, const EngineOptions& options) {
  const auto violations = product_flat(s);
  if (!violations.empty()) throw UnsupportedError(violations.front().message);
  const auto d = desugar(s);
  const auto sym = free_symbols(d);

  PairEval ev;
  for (std::size_t i = 0; i < sym.variables.size(); ++i) ev.slot[sym.variables[i]] = static_cast<unsigned>(i);
  ev.width = static_cast<unsigned>(2 * sym.variables.size());
  if (ev.width > 62) throw BudgetExceeded("too many symbols to enumerate: " + std::to_string(ev.width) + " atoms");
  const std::uint64_t count = std::uint64_t{1} << ev.width;
  if (count > options.budget)
    throw BudgetExceeded("enumeration budget exceeded: " + std::to_string(count) + " valuations > budget " +
                         std::to_string(options.budget));

  const auto& l = d.set_left();
  const auto& r = d.set_right();
  auto found = first_failure(count, options.jobs, [&] {
    return [&](std::uint64_t c) { return ev.pair(l, c) != ev.pair(r, c); };
  });
  if (!found) return Verdict::valid(Method::TwoPoint, count);

  FiniteModel model;
  model.universe_size = 2;
  for (const auto& [name, i] : ev.slot) {
    PointSet bits = 0;
    if (ev.atom(*found, 2 * i)) bits |= 1;
    if (ev.atom(*found, 2 * i + 1)) bits |= 2;
    model.variables[name] = bits;
  }
  const bool left = ev.pair(l, *found);
  std::string note = left ? "(a,b) lies in the left side but not the right side"
                          : "(a,b) lies in the right side but not the left side";
  return Verdict::invalid(Method::TwoPoint, *found + 1, make_witness(std::move(model), std::nullopt, note, {"a", "b"}));
}

}  // namespace extremes
