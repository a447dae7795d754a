#include "extremes/semantics.hpp"

#include <limits>
#include <utility>
#include <vector>

#include "extremes/error.hpp"
#include "extremes/parallel.hpp"

namespace extremes {

namespace {

// ---- extreme evaluation ----------------------------------------------------

bool extreme(const SetExpr& e, const ExtremeAssignment& a) {
  switch (e.op()) {
    case SetOp::Var: {
      auto it = a.variables.find(e.name());
      if (it == a.variables.end()) throw EvaluationError("no value for set variable '" + e.name() + "'");
      return it->second;
    }
    case SetOp::Empty:
      return false;
    case SetOp::Universe:
      return true;
    case SetOp::Union:
      return extreme(e.left(), a) || extreme(e.right(), a);
    case SetOp::Inter:
      return extreme(e.left(), a) && extreme(e.right(), a);
    case SetOp::Diff:
      return extreme(e.left(), a) && !extreme(e.right(), a);
    case SetOp::SymDiff:
    case SetOp::Complement:
      throw UnsupportedError("extreme evaluation expects a desugared term");
    case SetOp::Product:
      throw UnsupportedError("cartesian products have no extreme evaluation; use the two-point decider");
    default:
      throw UnsupportedError("indexed families need a finite-model evaluation");
  }
}

// ---- finite-model evaluation -----------------------------------------------

struct Binding {
  std::string index;
  IndexElement element;
};

using Env = std::vector<Binding>;

IndexElement resolve(const Env& env, const std::string& index) {
  for (auto it = env.rbegin(); it != env.rend(); ++it)
    if (it->index == index) return it->element;
  throw EvaluationError("index '" + index + "' is not bound");
}

unsigned index_size(const std::map<std::string, unsigned>& sizes, const std::string& set) {
  auto it = sizes.find(set);
  if (it == sizes.end()) throw EvaluationError("no size for index set '" + set + "'");
  return it->second;
}

PointSet full_pairs(unsigned n) { return n * n >= 64 ? ~PointSet{0} : (PointSet{1} << (n * n)) - 1; }

Extent model_eval(const SetExpr& e, const FiniteModel& m, Env& env) {
  switch (e.op()) {
    case SetOp::Var: {
      auto it = m.variables.find(e.name());
      if (it == m.variables.end()) throw EvaluationError("no extension for set variable '" + e.name() + "'");
      return {1, it->second};
    }
    case SetOp::Empty:
      return {1, 0};
    case SetOp::Universe:
      return {1, m.full()};
    case SetOp::FamVar: {
      Instance inst{e.name(), {}};
      for (const auto& idx : e.indices()) inst.indices.push_back(resolve(env, idx));
      auto it = m.families.find(inst);
      if (it == m.families.end()) throw EvaluationError("no extension for '" + to_string(inst) + "'");
      return {1, it->second};
    }
    case SetOp::FamUnion:
    case SetOp::FamInter: {
      const bool is_union = e.op() == SetOp::FamUnion;
      const unsigned size = index_size(m.index_set_sizes, e.index_set());
      Extent acc{1, is_union ? PointSet{0} : m.full()};
      for (unsigned i = 0; i < size; ++i) {
        env.push_back({e.index(), {e.index_set(), i}});
        const Extent x = model_eval(e.body(), m, env);
        env.pop_back();
        if (x.rank != 1) throw EvaluationError("indexed operators over pair sets are not supported");
        acc.bits = is_union ? (acc.bits | x.bits) : (acc.bits & x.bits);
      }
      return acc;
    }
    case SetOp::Complement: {
      const Extent x = model_eval(e.operand(), m, env);
      const PointSet full = x.rank == 1 ? m.full() : full_pairs(m.universe_size);
      return {x.rank, full & ~x.bits};
    }
    case SetOp::Product: {
      const Extent l = model_eval(e.left(), m, env);
      const Extent r = model_eval(e.right(), m, env);
      if (l.rank != 1 || r.rank != 1) throw EvaluationError("nested cartesian product");
      const unsigned n = m.universe_size;
      PointSet out = 0;
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
          if ((l.bits >> i & 1) && (r.bits >> j & 1)) out |= PointSet{1} << (i * n + j);
      return {2, out};
    }
    default: {
      const Extent l = model_eval(e.left(), m, env);
      const Extent r = model_eval(e.right(), m, env);
      if (l.rank != r.rank) throw EvaluationError("point set combined with a pair set");
      switch (e.op()) {
        case SetOp::Union:
          return {l.rank, l.bits | r.bits};
        case SetOp::Inter:
          return {l.rank, l.bits & r.bits};
        case SetOp::Diff:
          return {l.rank, l.bits & ~r.bits};
        default:
          return {l.rank, l.bits ^ r.bits};
      }
    }
  }
}

// ---- truth-functional evaluation -------------------------------------------

bool prop_eval(const PropExpr& p, const Valuation& v, Env& env) {
  switch (p.op()) {
    case PropOp::Atom: {
      Instance inst{p.name(), {}};
      for (const auto& idx : p.indices()) inst.indices.push_back(resolve(env, idx));
      auto it = v.truth.find(inst);
      if (it == v.truth.end())
        throw EvaluationError("no truth value for '" + (inst.indices.empty() ? inst.name : to_string(inst)) + "'");
      return it->second;
    }
    case PropOp::True:
      return true;
    case PropOp::False:
      return false;
    case PropOp::Not:
      return !prop_eval(p.operand(), v, env);
    case PropOp::Or:
      return prop_eval(p.left(), v, env) || prop_eval(p.right(), v, env);
    case PropOp::And:
      return prop_eval(p.left(), v, env) && prop_eval(p.right(), v, env);
    case PropOp::Implies:
      return !prop_eval(p.left(), v, env) || prop_eval(p.right(), v, env);
    case PropOp::Iff:
      return prop_eval(p.left(), v, env) == prop_eval(p.right(), v, env);
    case PropOp::Forall:
    case PropOp::Exists: {
      const bool universal = p.op() == PropOp::Forall;
      const unsigned size = index_size(v.index_set_sizes, p.index_set());
      for (unsigned i = 0; i < size; ++i) {
        env.push_back({p.index(), {p.index_set(), i}});
        const bool x = prop_eval(p.body(), v, env);
        env.pop_back();
        if (x != universal) return !universal;
      }
      return universal;
    }
  }
  return false;
}

// ---- enumeration -----------------------------------------------------------

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::uint64_t pow2(unsigned bits) {
  return bits >= 64 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << bits;
}

// Index-set sizes in enumeration order: 1..max, then 0 when requested.
std::vector<unsigned> size_sequence(const OracleOptions& o) {
  std::vector<unsigned> seq;
  for (unsigned k = 1; k <= o.max_index_set; ++k) seq.push_back(k);
  if (o.empty_index_sets) seq.push_back(0);
  return seq;
}

// All size tuples over the (sorted) index sets, first set most significant.
std::vector<std::map<std::string, unsigned>> size_tuples(const std::vector<std::string>& sets,
                                                         const OracleOptions& o) {
  const auto seq = size_sequence(o);
  std::vector<std::map<std::string, unsigned>> out;
  if (seq.empty() && !sets.empty()) return out;
  std::vector<std::size_t> odo(sets.size(), 0);
  for (;;) {
    std::map<std::string, unsigned> t;
    for (std::size_t i = 0; i < sets.size(); ++i) t[sets[i]] = seq[odo[i]];
    out.push_back(std::move(t));
    std::size_t k = sets.size();
    while (k > 0) {
      --k;
      if (++odo[k] < seq.size()) break;
      odo[k] = 0;
      if (k == 0) return out;
    }
    if (sets.empty()) return out;
  }
}

std::vector<Instance> instances(const std::vector<FamilySignature>& families,
                                const std::map<std::string, unsigned>& sizes) {
  std::vector<Instance> out;
  for (const auto& f : families) {
    if (f.arity() == 1) {
      for (unsigned i = 0; i < sizes.at(f.index_sets[0]); ++i) out.push_back({f.name, {{f.index_sets[0], i}}});
    } else {
      for (unsigned i = 0; i < sizes.at(f.index_sets[0]); ++i)
        for (unsigned j = 0; j < sizes.at(f.index_sets[1]); ++j)
          out.push_back({f.name, {{f.index_sets[0], i}, {f.index_sets[1], j}}});
    }
  }
  return out;
}

std::string render_extent(const Extent& x, unsigned n) {
  std::string out = "{";
  bool first = true;
  for (unsigned b = 0; b < (x.rank == 1 ? n : n * n); ++b) {
    if (!(x.bits >> b & 1)) continue;
    if (!first) out += ",";
    first = false;
    if (x.rank == 1)
      out += "x" + std::to_string(b + 1);
    else
      out += "(x" + std::to_string(b / n + 1) + ",x" + std::to_string(b % n + 1) + ")";
  }
  return out + "}";
}

void check_symbols(const Statement& s, const Symbols& sym) {
  for (const auto& f : sym.families)
    if (f.arity() == 0 || f.arity() > 2)
      throw UnsupportedError("family '" + f.name + "' has unsupported arity " + std::to_string(f.arity()));
  if (!well_formed(s).empty()) throw UnsupportedError("statement is not well formed: " + well_formed(s)[0].message);
}

Verdict check_sets(const Statement& s, const Symbols& sym, const OracleOptions& o) {
  std::uint64_t checked = 0;
  for (unsigned n = 1; n <= o.max_universe; ++n) {
    const PointSet mask = (PointSet{1} << n) - 1;
    for (const auto& sizes : size_tuples(sym.index_sets, o)) {
      const auto insts = instances(sym.families, sizes);
      const std::size_t m = sym.variables.size() + insts.size();
      const std::uint64_t count = pow2(static_cast<unsigned>(m * n));

      FiniteModel base;
      base.universe_size = n;
      base.index_set_sizes = sizes;
      for (const auto& v : sym.variables) base.variables[v] = 0;
      for (const auto& i : insts) base.families[i] = 0;

      auto fill = [n, m, mask](std::vector<PointSet*>& slots, std::uint64_t c) {
        for (std::size_t k = 0; k < m; ++k) *slots[k] = (c >> ((m - 1 - k) * n)) & mask;
      };
      auto bind_slots = [&](FiniteModel& model) {
        std::vector<PointSet*> slots;
        for (const auto& v : sym.variables) slots.push_back(&model.variables.at(v));
        for (const auto& i : insts) slots.push_back(&model.families.at(i));
        return slots;
      };

      auto found = first_failure(count, o.jobs, [&] {
        return [&, model = base, slots = std::vector<PointSet*>{}](std::uint64_t c) mutable {
          if (slots.empty() && m > 0) slots = bind_slots(model);
          fill(slots, c);
          return !holds(s, model);
        };
      });
      if (!found) {
        checked += count;
        continue;
      }
      checked += *found + 1;
      FiniteModel model = base;
      auto slots = bind_slots(model);
      fill(slots, *found);

      const auto d = desugar(s);
      const Extent l = eval_model(d.set_left(), model);
      const Extent r = eval_model(d.set_right(), model);
      std::optional<ExtremeAssignment> assignment;
      if (n == 1) {
        ExtremeAssignment a;
        for (const auto& [k, v] : model.variables) a.variables[k] = v != 0;
        for (const auto& [k, v] : model.families) a.families[k] = v != 0;
        a.index_set_sizes = model.index_set_sizes;
        assignment = std::move(a);
      }
      std::string note = "left side = " + render_extent(l, n) + ", right side = " + render_extent(r, n);
      return Verdict::invalid(Method::TruthTable, checked,
                              make_witness(std::move(model), std::move(assignment), std::move(note)));
    }
  }
  return Verdict::valid(Method::TruthTable, checked);
}

Verdict check_logic(const Statement& s, const Symbols& sym, const OracleOptions& o) {
  std::uint64_t checked = 0;
  for (const auto& sizes : size_tuples(sym.index_sets, o)) {
    const auto insts = instances(sym.families, sizes);
    const std::size_t m = sym.variables.size() + insts.size();
    const std::uint64_t count = pow2(static_cast<unsigned>(m));

    Valuation base;
    base.index_set_sizes = sizes;
    for (const auto& v : sym.variables) base.truth[{v, {}}] = false;
    for (const auto& i : insts) base.truth[i] = false;

    auto bind_slots = [&](Valuation& val) {
      std::vector<bool*> slots;
      for (const auto& v : sym.variables) slots.push_back(&val.truth.at({v, {}}));
      for (const auto& i : insts) slots.push_back(&val.truth.at(i));
      return slots;
    };
    auto fill = [m](std::vector<bool*>& slots, std::uint64_t c) {
      for (std::size_t k = 0; k < m; ++k) *slots[k] = ((c >> (m - 1 - k)) & 1U) != 0;
    };

    auto found = first_failure(count, o.jobs, [&] {
      return [&, val = base, slots = std::vector<bool*>{}](std::uint64_t c) mutable {
        if (slots.empty() && m > 0) slots = bind_slots(val);
        fill(slots, c);
        return !holds(s, val);
      };
    });
    if (!found) {
      checked += count;
      continue;
    }
    checked += *found + 1;
    Valuation val = base;
    auto slots = bind_slots(val);
    fill(slots, *found);

    FiniteModel model;
    ExtremeAssignment a;
    model.index_set_sizes = a.index_set_sizes = sizes;
    std::string note;
    for (const auto& [inst, t] : val.truth) {
      const auto label = inst.indices.empty() ? inst.name : to_string(inst);
      note += (note.empty() ? "" : ", ") + label + "=" + (t ? "true" : "false");
      if (inst.indices.empty()) {
        model.variables[inst.name] = t ? 1 : 0;
        a.variables[inst.name] = t;
      } else {
        model.families[inst] = t ? 1 : 0;
        a.families[inst] = t;
      }
    }
    return Verdict::invalid(Method::TruthTable, checked,
                            make_witness(std::move(model), std::move(a), "false under " + note));
  }
  return Verdict::valid(Method::TruthTable, checked);
}

}  // namespace

bool eval_extreme(const SetExpr& e, const ExtremeAssignment& a) { return extreme(e, a); }

Extent eval_model(const SetExpr& e, const FiniteModel& m) {
  Env env;
  return model_eval(e, m, env);
}

bool eval_prop(const PropExpr& p, const Valuation& v) {
  Env env;
  return prop_eval(p, v, env);
}

bool holds(const Statement& s, const FiniteModel& m) {
  if (!s.is_set()) throw EvaluationError("a logical statement needs a truth valuation");
  const Extent l = eval_model(s.set_left(), m);
  const Extent r = eval_model(s.set_right(), m);
  if (l.rank != r.rank) throw EvaluationError("sides of different rank");
  if (s.kind() == StatementKind::SetEq) return l.bits == r.bits;
  return (l.bits & ~r.bits) == 0;
}

bool holds(const Statement& s, const Valuation& v) {
  switch (s.kind()) {
    case StatementKind::Taut:
      return eval_prop(s.formula(), v);
    case StatementKind::PropEquiv:
      return eval_prop(s.prop_left(), v) == eval_prop(s.prop_right(), v);
    default:
      throw EvaluationError("a set statement needs a finite model");
  }
}

Valuation valuation_of(const FiniteModel& m) {
  Valuation v;
  v.index_set_sizes = m.index_set_sizes;
  for (const auto& [name, set] : m.variables) v.truth[{name, {}}] = (set & 1) != 0;
  for (const auto& [inst, set] : m.families) v.truth[inst] = (set & 1) != 0;
  return v;
}

bool falsifies(const Statement& s, const Witness& w) {
  if (s.is_set()) return !holds(s, w.model);
  return !holds(s, valuation_of(w.model));
}

std::uint64_t oracle_model_count(const Statement& s, const OracleOptions& o) {
  const auto sym = free_symbols(s);
  std::uint64_t total = 0;
  const unsigned max_n = s.is_set() ? o.max_universe : 1;
  for (unsigned n = 1; n <= max_n; ++n)
    for (const auto& sizes : size_tuples(sym.index_sets, o)) {
      const auto m = sym.variables.size() + instances(sym.families, sizes).size();
      total = saturating_add(total, pow2(static_cast<unsigned>(std::min<std::size_t>(m * n, 64))));
    }
  return total;
}

Verdict check_by_model(const Statement& s, const OracleOptions& o) {
  if (o.max_universe < 1 || o.max_universe > kMaxUniverse)
    throw UnsupportedError("universe size must be between 1 and " + std::to_string(kMaxUniverse));
  const auto sym = free_symbols(s);
  check_symbols(s, sym);
  const auto total = oracle_model_count(s, o);
  if (total > o.budget)
    throw BudgetExceeded("oracle budget exceeded: " +
                         (total == std::numeric_limits<std::uint64_t>::max() ? std::string("more than 2^64")
                                                                             : std::to_string(total)) +
                         " models > budget " + std::to_string(o.budget));
  return s.is_set() ? check_sets(s, sym, o) : check_logic(s, sym, o);
}

}  // namespace extremes
