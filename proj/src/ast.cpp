#include "extremes/ast.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace extremes {

struct SetExpr::Node {
  SetOp op;
  std::string name;       // Var, FamVar; index variable for binders
  std::string index_set;  // binders
  std::vector<std::string> indices;
  std::vector<SetExpr> kids;
};

struct PropExpr::Node {
  PropOp op;
  std::string name;
  std::string index_set;
  std::vector<std::string> indices;
  std::vector<PropExpr> kids;
};

namespace {

constexpr std::string_view kKeywords[] = {"Union", "Inter", "in", "forall", "exists", "true", "false"};

bool is_identifier_tail(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) != 0; });
}

void require(bool ok, std::string_view what, const std::string& name) {
  if (!ok) throw std::invalid_argument("invalid " + std::string(what) + " '" + name + "'");
}

void require_upper(const std::string& name, std::string_view what) {
  require(is_upper_identifier(name) && !is_keyword(name), what, name);
}

void require_lower(const std::string& name, std::string_view what) {
  require(is_lower_identifier(name) && !is_keyword(name), what, name);
}

}  // namespace

bool is_upper_identifier(std::string_view s) {
  return !s.empty() && s[0] >= 'A' && s[0] <= 'Z' && is_identifier_tail(s.substr(1));
}

bool is_lower_identifier(std::string_view s) {
  return !s.empty() && s[0] >= 'a' && s[0] <= 'z' && is_identifier_tail(s.substr(1));
}

bool is_keyword(std::string_view s) {
  return std::find(std::begin(kKeywords), std::end(kKeywords), s) != std::end(kKeywords);
}

// ---- SetExpr ---------------------------------------------------------------

SetExpr SetExpr::var(std::string name) {
  require_upper(name, "set variable");
  return SetExpr(std::make_shared<const Node>(Node{SetOp::Var, std::move(name), {}, {}, {}}));
}

SetExpr SetExpr::empty() { return SetExpr(std::make_shared<const Node>(Node{SetOp::Empty, {}, {}, {}, {}})); }

SetExpr SetExpr::universe() {
  return SetExpr(std::make_shared<const Node>(Node{SetOp::Universe, {}, {}, {}, {}}));
}

SetExpr SetExpr::binary(SetOp op, SetExpr l, SetExpr r) {
  switch (op) {
    case SetOp::Union:
    case SetOp::Inter:
    case SetOp::Diff:
    case SetOp::SymDiff:
    case SetOp::Product:
      break;
    default:
      throw std::invalid_argument("not a binary set operator");
  }
  return SetExpr(std::make_shared<const Node>(Node{op, {}, {}, {}, {std::move(l), std::move(r)}}));
}

SetExpr SetExpr::union_of(SetExpr l, SetExpr r) { return binary(SetOp::Union, std::move(l), std::move(r)); }
SetExpr SetExpr::inter(SetExpr l, SetExpr r) { return binary(SetOp::Inter, std::move(l), std::move(r)); }
SetExpr SetExpr::diff(SetExpr l, SetExpr r) { return binary(SetOp::Diff, std::move(l), std::move(r)); }
SetExpr SetExpr::sym_diff(SetExpr l, SetExpr r) { return binary(SetOp::SymDiff, std::move(l), std::move(r)); }
SetExpr SetExpr::product(SetExpr l, SetExpr r) { return binary(SetOp::Product, std::move(l), std::move(r)); }

SetExpr SetExpr::complement(SetExpr e) {
  return SetExpr(std::make_shared<const Node>(Node{SetOp::Complement, {}, {}, {}, {std::move(e)}}));
}

SetExpr SetExpr::fam_union(std::string index, std::string index_set, SetExpr body) {
  require_lower(index, "index variable");
  require_upper(index_set, "index set");
  return SetExpr(std::make_shared<const Node>(
      Node{SetOp::FamUnion, std::move(index), std::move(index_set), {}, {std::move(body)}}));
}

SetExpr SetExpr::fam_inter(std::string index, std::string index_set, SetExpr body) {
  require_lower(index, "index variable");
  require_upper(index_set, "index set");
  return SetExpr(std::make_shared<const Node>(
      Node{SetOp::FamInter, std::move(index), std::move(index_set), {}, {std::move(body)}}));
}

SetExpr SetExpr::fam_var(std::string name, std::vector<std::string> indices) {
  require_upper(name, "family symbol");
  if (indices.empty()) throw std::invalid_argument("family '" + name + "' needs at least one index");
  for (const auto& i : indices) require_lower(i, "index variable");
  return SetExpr(std::make_shared<const Node>(Node{SetOp::FamVar, std::move(name), {}, std::move(indices), {}}));
}

SetOp SetExpr::op() const { return node_->op; }

bool SetExpr::is_binary() const {
  switch (node_->op) {
    case SetOp::Union:
    case SetOp::Inter:
    case SetOp::Diff:
    case SetOp::SymDiff:
    case SetOp::Product:
      return true;
    default:
      return false;
  }
}

bool SetExpr::is_binder() const { return node_->op == SetOp::FamUnion || node_->op == SetOp::FamInter; }

const std::string& SetExpr::name() const { return node_->name; }
const std::vector<std::string>& SetExpr::indices() const { return node_->indices; }
const std::string& SetExpr::index() const { return node_->name; }
const std::string& SetExpr::index_set() const { return node_->index_set; }
const SetExpr& SetExpr::body() const { return node_->kids.at(0); }
const SetExpr& SetExpr::left() const { return node_->kids.at(0); }
const SetExpr& SetExpr::right() const { return node_->kids.at(1); }
const SetExpr& SetExpr::operand() const { return node_->kids.at(0); }

bool operator==(const SetExpr& a, const SetExpr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.op == y.op && x.name == y.name && x.index_set == y.index_set && x.indices == y.indices &&
         x.kids == y.kids;
}

// ---- PropExpr --------------------------------------------------------------

PropExpr PropExpr::atom(std::string name, std::vector<std::string> indices) {
  require_lower(name, "atom");
  for (const auto& i : indices) require_lower(i, "index variable");
  return PropExpr(std::make_shared<const Node>(Node{PropOp::Atom, std::move(name), {}, std::move(indices), {}}));
}

PropExpr PropExpr::truth() { return PropExpr(std::make_shared<const Node>(Node{PropOp::True, {}, {}, {}, {}})); }

PropExpr PropExpr::falsity() {
  return PropExpr(std::make_shared<const Node>(Node{PropOp::False, {}, {}, {}, {}}));
}

PropExpr PropExpr::binary(PropOp op, PropExpr l, PropExpr r) {
  switch (op) {
    case PropOp::Or:
    case PropOp::And:
    case PropOp::Implies:
    case PropOp::Iff:
      break;
    default:
      throw std::invalid_argument("not a binary connective");
  }
  return PropExpr(std::make_shared<const Node>(Node{op, {}, {}, {}, {std::move(l), std::move(r)}}));
}

PropExpr PropExpr::disj(PropExpr l, PropExpr r) { return binary(PropOp::Or, std::move(l), std::move(r)); }
PropExpr PropExpr::conj(PropExpr l, PropExpr r) { return binary(PropOp::And, std::move(l), std::move(r)); }
PropExpr PropExpr::implies(PropExpr l, PropExpr r) { return binary(PropOp::Implies, std::move(l), std::move(r)); }
PropExpr PropExpr::iff(PropExpr l, PropExpr r) { return binary(PropOp::Iff, std::move(l), std::move(r)); }

PropExpr PropExpr::negation(PropExpr e) {
  return PropExpr(std::make_shared<const Node>(Node{PropOp::Not, {}, {}, {}, {std::move(e)}}));
}

PropExpr PropExpr::forall(std::string index, std::string index_set, PropExpr body) {
  require_lower(index, "index variable");
  require_upper(index_set, "index set");
  return PropExpr(std::make_shared<const Node>(
      Node{PropOp::Forall, std::move(index), std::move(index_set), {}, {std::move(body)}}));
}

PropExpr PropExpr::exists(std::string index, std::string index_set, PropExpr body) {
  require_lower(index, "index variable");
  require_upper(index_set, "index set");
  return PropExpr(std::make_shared<const Node>(
      Node{PropOp::Exists, std::move(index), std::move(index_set), {}, {std::move(body)}}));
}

PropOp PropExpr::op() const { return node_->op; }

bool PropExpr::is_binary() const {
  switch (node_->op) {
    case PropOp::Or:
    case PropOp::And:
    case PropOp::Implies:
    case PropOp::Iff:
      return true;
    default:
      return false;
  }
}

bool PropExpr::is_quantifier() const { return node_->op == PropOp::Forall || node_->op == PropOp::Exists; }

const std::string& PropExpr::name() const { return node_->name; }
const std::vector<std::string>& PropExpr::indices() const { return node_->indices; }
const std::string& PropExpr::index() const { return node_->name; }
const std::string& PropExpr::index_set() const { return node_->index_set; }
const PropExpr& PropExpr::body() const { return node_->kids.at(0); }
const PropExpr& PropExpr::left() const { return node_->kids.at(0); }
const PropExpr& PropExpr::right() const { return node_->kids.at(1); }
const PropExpr& PropExpr::operand() const { return node_->kids.at(0); }

bool operator==(const PropExpr& a, const PropExpr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.op == y.op && x.name == y.name && x.index_set == y.index_set && x.indices == y.indices &&
         x.kids == y.kids;
}

// ---- Statement -------------------------------------------------------------

Statement Statement::set_eq(SetExpr l, SetExpr r) {
  return Statement(StatementKind::SetEq, {std::move(l), std::move(r)}, {});
}

Statement Statement::set_incl(SetExpr l, SetExpr r) {
  return Statement(StatementKind::SetIncl, {std::move(l), std::move(r)}, {});
}

Statement Statement::taut(PropExpr p) { return Statement(StatementKind::Taut, {}, {std::move(p)}); }

Statement Statement::prop_equiv(PropExpr l, PropExpr r) {
  return Statement(StatementKind::PropEquiv, {}, {std::move(l), std::move(r)});
}

const SetExpr& Statement::set_left() const { return sets_.at(0); }
const SetExpr& Statement::set_right() const { return sets_.at(1); }
const PropExpr& Statement::formula() const { return props_.at(0); }
const PropExpr& Statement::prop_left() const { return props_.at(0); }
const PropExpr& Statement::prop_right() const { return props_.at(1); }

bool operator==(const Statement& a, const Statement& b) {
  return a.kind_ == b.kind_ && a.sets_ == b.sets_ && a.props_ == b.props_;
}

std::string_view to_string(StatementKind kind) {
  switch (kind) {
    case StatementKind::SetEq:
      return "set_eq";
    case StatementKind::SetIncl:
      return "set_incl";
    case StatementKind::Taut:
      return "taut";
    case StatementKind::PropEquiv:
      return "prop_equiv";
  }
  return "?";
}

std::string to_string(const FamilySignature& sig) {
  std::string out = sig.name + "/" + std::to_string(sig.arity()) + " over ";
  for (std::size_t i = 0; i < sig.index_sets.size(); ++i) {
    if (i) out += " x ";
    out += sig.index_sets[i];
  }
  return out;
}

// ---- scope analysis --------------------------------------------------------

namespace {

constexpr std::string_view kUnbound = "?";

// One pass collecting everything free_symbols and well_formed report.
struct Scan {
  std::vector<std::pair<std::string, std::string>> scope;  // index variable -> index set
  std::set<std::string> variables;
  std::map<std::string, FamilySignature> families;
  std::set<std::string> index_sets;
  std::set<std::string> index_variables;
  std::vector<Violation> violations;

  std::string lookup(const std::string& index) const {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->first == index) return it->second;
    return std::string(kUnbound);
  }

  void indexed_symbol(const std::string& name, const std::vector<std::string>& indices, std::string_view what) {
    if (indices.size() > 2)
      violations.push_back({ViolationKind::ArityTooLarge, std::string(what) + " '" + name + "' has arity " +
                                                              std::to_string(indices.size()) + " (maximum 2)"});
    FamilySignature sig{name, {}};
    for (const auto& i : indices) {
      index_variables.insert(i);
      auto set = lookup(i);
      if (set == kUnbound)
        violations.push_back({ViolationKind::UnboundIndex,
                              "index '" + i + "' of " + std::string(what) + " '" + name + "' is not bound"});
      sig.index_sets.push_back(std::move(set));
    }
    auto [it, inserted] = families.emplace(name, sig);
    if (!inserted && it->second != sig)
      violations.push_back({ViolationKind::InconsistentSignature,
                            std::string(what) + " '" + name + "' is used as " + to_string(it->second) + " and as " +
                                to_string(sig)});
  }

  void bind(const std::string& index, const std::string& set) {
    index_variables.insert(index);
    index_sets.insert(set);
    scope.emplace_back(index, set);
  }

  void walk(const SetExpr& e, bool in_product) {
    switch (e.op()) {
      case SetOp::Var:
        variables.insert(e.name());
        return;
      case SetOp::Empty:
      case SetOp::Universe:
        return;
      case SetOp::FamVar:
        indexed_symbol(e.name(), e.indices(), "family");
        return;
      case SetOp::Complement:
        walk(e.operand(), in_product);
        return;
      case SetOp::FamUnion:
      case SetOp::FamInter:
        bind(e.index(), e.index_set());
        walk(e.body(), in_product);
        scope.pop_back();
        return;
      case SetOp::Product:
        if (in_product)
          violations.push_back({ViolationKind::NestedProduct, "cartesian product nested inside another product"});
        walk(e.left(), true);
        walk(e.right(), true);
        return;
      default:
        walk(e.left(), in_product);
        walk(e.right(), in_product);
        return;
    }
  }

  void walk(const PropExpr& p) {
    switch (p.op()) {
      case PropOp::Atom:
        if (p.indices().empty())
          variables.insert(p.name());
        else
          indexed_symbol(p.name(), p.indices(), "atom");
        return;
      case PropOp::True:
      case PropOp::False:
        return;
      case PropOp::Not:
        walk(p.operand());
        return;
      case PropOp::Forall:
      case PropOp::Exists:
        bind(p.index(), p.index_set());
        walk(p.body());
        scope.pop_back();
        return;
      default:
        walk(p.left());
        walk(p.right());
        return;
    }
  }

  void walk(const Statement& s) {
    if (s.is_set()) {
      walk(s.set_left(), false);
      walk(s.set_right(), false);
    } else if (s.kind() == StatementKind::Taut) {
      walk(s.formula());
    } else {
      walk(s.prop_left());
      walk(s.prop_right());
    }
  }

  void cross_checks() {
    for (const auto& [name, sig] : families)
      if (variables.count(name))
        violations.push_back(
            {ViolationKind::InconsistentSignature, "'" + name + "' is used both plain and with indices"});
    if (index_variables.size() > 2)
      violations.push_back({ViolationKind::TooManyIndexVariables,
                            std::to_string(index_variables.size()) + " distinct index variables (maximum 2)"});
    for (const auto& set : index_sets)
      if (variables.count(set) || families.count(set))
        violations.push_back({ViolationKind::NameClash, "'" + set + "' names both an index set and a set"});
  }
};

}  // namespace

Symbols free_symbols(const Statement& s) {
  Scan scan;
  scan.walk(s);
  Symbols out;
  out.variables.assign(scan.variables.begin(), scan.variables.end());
  for (auto& [name, sig] : scan.families) out.families.push_back(sig);
  out.index_sets.assign(scan.index_sets.begin(), scan.index_sets.end());
  return out;
}

std::vector<Violation> well_formed(const Statement& s) {
  Scan scan;
  scan.walk(s);
  scan.cross_checks();
  return std::move(scan.violations);
}

// ---- desugaring ------------------------------------------------------------

SetExpr desugar(const SetExpr& e) {
  switch (e.op()) {
    case SetOp::Var:
    case SetOp::Empty:
    case SetOp::Universe:
    case SetOp::FamVar:
      return e;
    case SetOp::Complement:
      return SetExpr::diff(SetExpr::universe(), desugar(e.operand()));
    case SetOp::SymDiff: {
      auto l = desugar(e.left());
      auto r = desugar(e.right());
      return SetExpr::union_of(SetExpr::diff(l, r), SetExpr::diff(r, l));
    }
    case SetOp::FamUnion:
      return SetExpr::fam_union(e.index(), e.index_set(), desugar(e.body()));
    case SetOp::FamInter:
      return SetExpr::fam_inter(e.index(), e.index_set(), desugar(e.body()));
    default:
      return SetExpr::binary(e.op(), desugar(e.left()), desugar(e.right()));
  }
}

Statement desugar(const Statement& s) {
  switch (s.kind()) {
    case StatementKind::SetEq:
      return Statement::set_eq(desugar(s.set_left()), desugar(s.set_right()));
    case StatementKind::SetIncl: {
      auto l = desugar(s.set_left());
      auto r = desugar(s.set_right());
      return Statement::set_eq(SetExpr::union_of(l, r), r);
    }
    default:
      return s;
  }
}

// ---- structural queries ----------------------------------------------------

bool contains_product(const SetExpr& e) {
  switch (e.op()) {
    case SetOp::Product:
      return true;
    case SetOp::Var:
    case SetOp::Empty:
    case SetOp::Universe:
    case SetOp::FamVar:
      return false;
    case SetOp::Complement:
      return contains_product(e.operand());
    case SetOp::FamUnion:
    case SetOp::FamInter:
      return contains_product(e.body());
    default:
      return contains_product(e.left()) || contains_product(e.right());
  }
}

bool contains_family(const SetExpr& e) {
  switch (e.op()) {
    case SetOp::FamVar:
    case SetOp::FamUnion:
    case SetOp::FamInter:
      return true;
    case SetOp::Var:
    case SetOp::Empty:
    case SetOp::Universe:
      return false;
    case SetOp::Complement:
      return contains_family(e.operand());
    default:
      return contains_family(e.left()) || contains_family(e.right());
  }
}

bool contains_product(const Statement& s) {
  return s.is_set() && (contains_product(s.set_left()) || contains_product(s.set_right()));
}

bool contains_family(const Statement& s) {
  return s.is_set() && (contains_family(s.set_left()) || contains_family(s.set_right()));
}

bool contains_quantifier(const PropExpr& p) {
  switch (p.op()) {
    case PropOp::Forall:
    case PropOp::Exists:
      return true;
    case PropOp::Atom:
      return !p.indices().empty();
    case PropOp::True:
    case PropOp::False:
      return false;
    case PropOp::Not:
      return contains_quantifier(p.operand());
    default:
      return contains_quantifier(p.left()) || contains_quantifier(p.right());
  }
}

bool is_flat(const Statement& s) { return s.is_set() && !contains_product(s) && !contains_family(s); }

std::size_t node_count(const SetExpr& e) {
  switch (e.op()) {
    case SetOp::Var:
    case SetOp::Empty:
    case SetOp::Universe:
    case SetOp::FamVar:
      return 1;
    case SetOp::Complement:
      return 1 + node_count(e.operand());
    case SetOp::FamUnion:
    case SetOp::FamInter:
      return 1 + node_count(e.body());
    default:
      return 1 + node_count(e.left()) + node_count(e.right());
  }
}

std::size_t node_count(const PropExpr& p) {
  switch (p.op()) {
    case PropOp::Atom:
    case PropOp::True:
    case PropOp::False:
      return 1;
    case PropOp::Not:
      return 1 + node_count(p.operand());
    case PropOp::Forall:
    case PropOp::Exists:
      return 1 + node_count(p.body());
    default:
      return 1 + node_count(p.left()) + node_count(p.right());
  }
}

std::size_t node_count(const Statement& s) {
  switch (s.kind()) {
    case StatementKind::SetEq:
    case StatementKind::SetIncl:
      return 1 + node_count(s.set_left()) + node_count(s.set_right());
    case StatementKind::Taut:
      return node_count(s.formula());
    case StatementKind::PropEquiv:
      return 1 + node_count(s.prop_left()) + node_count(s.prop_right());
  }
  return 0;
}

}  // namespace extremes
