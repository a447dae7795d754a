#include "extremes/bridge.hpp"

#include <cctype>

#include "extremes/error.hpp"

namespace extremes {

std::string atom_name_for(const std::string& set_name) {
  std::string out = set_name;
  if (!out.empty()) out[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(out[0])));
  return out;
}

std::string set_name_for(const std::string& atom_name) {
  std::string out = atom_name;
  if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

PropExpr set_to_logic(const SetExpr& e) {
  switch (e.op()) {
    case SetOp::Var:
      return PropExpr::atom(atom_name_for(e.name()));
    case SetOp::FamVar:
      return PropExpr::atom(atom_name_for(e.name()), e.indices());
    case SetOp::Empty:
      return PropExpr::falsity();
    case SetOp::Universe:
      return PropExpr::truth();
    case SetOp::Union:
      return PropExpr::disj(set_to_logic(e.left()), set_to_logic(e.right()));
    case SetOp::Inter:
      return PropExpr::conj(set_to_logic(e.left()), set_to_logic(e.right()));
    case SetOp::Diff:
      return PropExpr::conj(set_to_logic(e.left()), PropExpr::negation(set_to_logic(e.right())));
    case SetOp::SymDiff:
      return PropExpr::negation(PropExpr::iff(set_to_logic(e.left()), set_to_logic(e.right())));
    case SetOp::Complement:
      return PropExpr::negation(set_to_logic(e.operand()));
    case SetOp::FamUnion:
      return PropExpr::exists(e.index(), e.index_set(), set_to_logic(e.body()));
    case SetOp::FamInter:
      return PropExpr::forall(e.index(), e.index_set(), set_to_logic(e.body()));
    case SetOp::Product:
      break;
  }
  throw UnsupportedError("cartesian products do not translate pointwise; use the two-point product decider");
}

PropExpr set_to_logic(const Statement& s) {
  switch (s.kind()) {
    case StatementKind::SetEq:
      return PropExpr::iff(set_to_logic(s.set_left()), set_to_logic(s.set_right()));
    case StatementKind::SetIncl:
      return PropExpr::implies(set_to_logic(s.set_left()), set_to_logic(s.set_right()));
    default:
      throw UnsupportedError("expected a set statement");
  }
}

SetExpr logic_term_to_set(const PropExpr& p) {
  switch (p.op()) {
    case PropOp::Atom:
      if (p.indices().empty()) return SetExpr::var(set_name_for(p.name()));
      return SetExpr::fam_var(set_name_for(p.name()), p.indices());
    case PropOp::True:
      return SetExpr::universe();
    case PropOp::False:
      return SetExpr::empty();
    case PropOp::Or:
      return SetExpr::union_of(logic_term_to_set(p.left()), logic_term_to_set(p.right()));
    case PropOp::And:
      return SetExpr::inter(logic_term_to_set(p.left()), logic_term_to_set(p.right()));
    case PropOp::Not:
      return SetExpr::complement(logic_term_to_set(p.operand()));
    case PropOp::Implies:
      return SetExpr::union_of(SetExpr::complement(logic_term_to_set(p.left())), logic_term_to_set(p.right()));
    case PropOp::Iff:
      // Points on which both sides agree: the complement of their symmetric difference.
      return SetExpr::complement(SetExpr::sym_diff(logic_term_to_set(p.left()), logic_term_to_set(p.right())));
    case PropOp::Forall:
      return SetExpr::fam_inter(p.index(), p.index_set(), logic_term_to_set(p.body()));
    case PropOp::Exists:
      return SetExpr::fam_union(p.index(), p.index_set(), logic_term_to_set(p.body()));
  }
  return SetExpr::empty();
}

Statement logic_to_set(const PropExpr& p) {
  if (p.op() == PropOp::Iff) return Statement::set_eq(logic_term_to_set(p.left()), logic_term_to_set(p.right()));
  return Statement::set_eq(logic_term_to_set(p), SetExpr::universe());
}

Statement logic_to_set(const Statement& s) {
  switch (s.kind()) {
    case StatementKind::Taut:
      return logic_to_set(s.formula());
    case StatementKind::PropEquiv:
      return Statement::set_eq(logic_term_to_set(s.prop_left()), logic_term_to_set(s.prop_right()));
    default:
      throw UnsupportedError("expected a logical statement");
  }
}

namespace {

// Renames the witness back to atoms and restates it as a truth valuation.
Witness to_logic_witness(const Witness& w) {
  FiniteModel model;
  model.universe_size = 1;
  model.index_set_sizes = w.model.index_set_sizes;
  ExtremeAssignment a;
  a.index_set_sizes = w.model.index_set_sizes;
  std::string note;
  auto add = [&](const std::string& label, bool t) { note += (note.empty() ? "" : ", ") + label + "=" + (t ? "true" : "false"); };
  for (const auto& [name, set] : w.model.variables) {
    const auto atom = atom_name_for(name);
    model.variables[atom] = set & 1;
    a.variables[atom] = (set & 1) != 0;
    add(atom, (set & 1) != 0);
  }
  for (const auto& [inst, set] : w.model.families) {
    Instance renamed{atom_name_for(inst.name), inst.indices};
    model.families[renamed] = set & 1;
    a.families[renamed] = (set & 1) != 0;
    add(to_string(renamed), (set & 1) != 0);
  }
  std::string sizes;
  for (const auto& [set, n] : model.index_set_sizes) sizes += "|" + set + "|=" + std::to_string(n) + ", ";
  return make_witness(std::move(model), std::move(a), "false under " + sizes + note);
}

}  // namespace

Verdict decide_taut(const PropExpr& p, unsigned dyadic_bound, const EngineOptions& options) {
  return decide_taut(Statement::taut(p), dyadic_bound, options);
}

Verdict decide_taut(const Statement& s, unsigned dyadic_bound, const EngineOptions& options) {
  const auto sets = logic_to_set(s);
  auto v = contains_family(sets) ? decide_indexed(sets, dyadic_bound, options) : decide_flat(sets, options);
  if (v.witness) v.witness = to_logic_witness(*v.witness);
  return v;
}

}  // namespace extremes
