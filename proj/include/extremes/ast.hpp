#pragma once

// Term languages for set expressions, propositional formulas and the
// statements built from them. All nodes are immutable and shared, so copies
// are cheap and values may be passed between threads freely.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace extremes {

enum class SetOp {
  Var,
  Empty,
  Universe,
  Union,
  Inter,
  Diff,
  SymDiff,
  Complement,
  Product,
  FamUnion,
  FamInter,
  FamVar,
};

class SetExpr {
 public:
  static SetExpr var(std::string name);
  static SetExpr empty();
  static SetExpr universe();
  static SetExpr union_of(SetExpr l, SetExpr r);
  static SetExpr inter(SetExpr l, SetExpr r);
  static SetExpr diff(SetExpr l, SetExpr r);
  static SetExpr sym_diff(SetExpr l, SetExpr r);
  static SetExpr complement(SetExpr e);
  static SetExpr product(SetExpr l, SetExpr r);
  static SetExpr fam_union(std::string index, std::string index_set, SetExpr body);
  static SetExpr fam_inter(std::string index, std::string index_set, SetExpr body);
  static SetExpr fam_var(std::string name, std::vector<std::string> indices);
  static SetExpr binary(SetOp op, SetExpr l, SetExpr r);

  SetOp op() const;
  bool is_binary() const;
  bool is_binder() const;

  // Var and FamVar.
  const std::string& name() const;
  // FamVar.
  const std::vector<std::string>& indices() const;
  // FamUnion and FamInter.
  const std::string& index() const;
  const std::string& index_set() const;
  const SetExpr& body() const;
  // Binary nodes.
  const SetExpr& left() const;
  const SetExpr& right() const;
  // Complement.
  const SetExpr& operand() const;

  friend bool operator==(const SetExpr& a, const SetExpr& b);

 private:
  struct Node;
  explicit SetExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class PropOp { Atom, True, False, Or, And, Not, Implies, Iff, Forall, Exists };

class PropExpr {
 public:
  static PropExpr atom(std::string name, std::vector<std::string> indices = {});
  static PropExpr truth();
  static PropExpr falsity();
  static PropExpr disj(PropExpr l, PropExpr r);
  static PropExpr conj(PropExpr l, PropExpr r);
  static PropExpr negation(PropExpr e);
  static PropExpr implies(PropExpr l, PropExpr r);
  static PropExpr iff(PropExpr l, PropExpr r);
  static PropExpr forall(std::string index, std::string index_set, PropExpr body);
  static PropExpr exists(std::string index, std::string index_set, PropExpr body);
  static PropExpr binary(PropOp op, PropExpr l, PropExpr r);

  PropOp op() const;
  bool is_binary() const;
  bool is_quantifier() const;

  // Atom.
  const std::string& name() const;
  const std::vector<std::string>& indices() const;
  // Forall and Exists.
  const std::string& index() const;
  const std::string& index_set() const;
  const PropExpr& body() const;
  // Binary nodes.
  const PropExpr& left() const;
  const PropExpr& right() const;
  // Not.
  const PropExpr& operand() const;

  friend bool operator==(const PropExpr& a, const PropExpr& b);

 private:
  struct Node;
  explicit PropExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class StatementKind { SetEq, SetIncl, Taut, PropEquiv };

class Statement {
 public:
  static Statement set_eq(SetExpr l, SetExpr r);
  static Statement set_incl(SetExpr l, SetExpr r);
  static Statement taut(PropExpr p);
  static Statement prop_equiv(PropExpr l, PropExpr r);

  StatementKind kind() const { return kind_; }
  bool is_set() const { return kind_ == StatementKind::SetEq || kind_ == StatementKind::SetIncl; }

  // SetEq and SetIncl.
  const SetExpr& set_left() const;
  const SetExpr& set_right() const;
  // Taut.
  const PropExpr& formula() const;
  // PropEquiv.
  const PropExpr& prop_left() const;
  const PropExpr& prop_right() const;

  friend bool operator==(const Statement& a, const Statement& b);

 private:
  Statement(StatementKind kind, std::vector<SetExpr> sets, std::vector<PropExpr> props)
      : kind_(kind), sets_(std::move(sets)), props_(std::move(props)) {}

  StatementKind kind_;
  std::vector<SetExpr> sets_;
  std::vector<PropExpr> props_;
};

std::string_view to_string(StatementKind kind);

// Token classes. Set variables, family symbols and index-set names are
// upper-case identifiers; index variables and atoms are lower-case.
bool is_upper_identifier(std::string_view s);
bool is_lower_identifier(std::string_view s);
bool is_keyword(std::string_view s);

struct FamilySignature {
  std::string name;
  std::vector<std::string> index_sets;

  std::size_t arity() const { return index_sets.size(); }
  friend bool operator==(const FamilySignature&, const FamilySignature&) = default;
};

std::string to_string(const FamilySignature& sig);

// Free symbols of a statement, each list sorted lexicographically.
// For logical statements, plain atoms are reported as variables and indexed
// atoms as families.
struct Symbols {
  std::vector<std::string> variables;
  std::vector<FamilySignature> families;
  std::vector<std::string> index_sets;

  friend bool operator==(const Symbols&, const Symbols&) = default;
};

Symbols free_symbols(const Statement& s);

enum class ViolationKind {
  UnboundIndex,
  NestedProduct,
  TooManyIndexVariables,
  ArityTooLarge,
  InconsistentSignature,
  NameClash,
  // Product normal form (see product.hpp).
  MixedRank,
  ProductShape,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

// Empty result means well formed.
std::vector<Violation> well_formed(const Statement& s);

// Rewrites symmetric difference as (A \ B) | (B \ A), complement as 1 \ A and
// inclusion A <= B as A | B = B. Logical statements are returned unchanged.
Statement desugar(const Statement& s);
SetExpr desugar(const SetExpr& e);

bool contains_product(const SetExpr& e);
// Any FamVar or indexed union/intersection.
bool contains_family(const SetExpr& e);
bool contains_product(const Statement& s);
bool contains_family(const Statement& s);
bool contains_quantifier(const PropExpr& p);
// Set statement free of products and families.
bool is_flat(const Statement& s);

std::size_t node_count(const SetExpr& e);
std::size_t node_count(const PropExpr& p);
std::size_t node_count(const Statement& s);

}  // namespace extremes
