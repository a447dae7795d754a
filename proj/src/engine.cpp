#include "extremes/engine.hpp"

#include <limits>
#include <string>

#include "extremes/error.hpp"
#include "extremes/parallel.hpp"
#include "point_program.hpp"

namespace extremes {

namespace {

constexpr unsigned kMaxWidth = 62;

struct Prepared {
  Statement statement;
  Symbols symbols;
  detail::PointProgram program;
  int left;
  int right;
};

Prepared prepare(const Statement& s) {
  auto d = desugar(s);
  if (!d.is_set()) throw UnsupportedError("expected a set statement");
  if (contains_product(d))
    throw UnsupportedError("statement has cartesian products; decide it with the two-point product decider");
  for (const auto& v : well_formed(d)) throw UnsupportedError(v.message);
  auto sym = free_symbols(d);
  detail::PointProgram program(sym.variables, sym.families, sym.index_sets);
  const int l = program.add(d.set_left());
  const int r = program.add(d.set_right());
  return Prepared{std::move(d), std::move(sym), std::move(program), l, r};
}

ExtremeAssignment decode(const detail::PointProgram& p, const detail::Layout& layout, std::uint64_t bits) {
  auto bit = [&](unsigned pos) { return ((bits >> (layout.width - 1 - pos)) & 1U) != 0; };
  ExtremeAssignment a;
  for (std::size_t i = 0; i < p.variables().size(); ++i) a.variables[p.variables()[i]] = bit(layout.var_pos[i]);
  for (std::size_t s = 0; s < p.index_sets().size(); ++s) a.index_set_sizes[p.index_sets()[s]] = layout.set_size[s];
  for (std::size_t f = 0; f < p.families().size(); ++f) {
    const auto& sig = p.families()[f];
    const auto& sets = p.family_sets()[f];
    const unsigned n0 = layout.set_size[static_cast<std::size_t>(sets[0])];
    const unsigned n1 = sets.size() == 2 ? layout.set_size[static_cast<std::size_t>(sets[1])] : 1;
    for (unsigned i = 0; i < n0; ++i)
      for (unsigned j = 0; j < n1; ++j) {
        Instance inst{sig.name, {{sig.index_sets[0], i}}};
        if (sets.size() == 2) inst.indices.push_back({sig.index_sets[1], j});
        a.families[inst] = bit(layout.fam_start[f] + i * layout.fam_stride[f] + j);
      }
  }
  return a;
}

Witness point_witness(ExtremeAssignment a, bool left) {
  auto model = one_point_model(a);
  std::string note = left ? "x1 lies in the left side but not the right side"
                          : "x1 lies in the right side but not the left side";
  return make_witness(std::move(model), std::move(a), std::move(note));
}

void check_width(unsigned width) {
  if (width > kMaxWidth)
    throw BudgetExceeded("too many symbols to enumerate: " + std::to_string(width) + " extreme values");
}

std::uint64_t cases_for(unsigned width) { return std::uint64_t{1} << width; }

void check_budget(std::uint64_t total, const EngineOptions& o) {
  if (total > o.budget)
    throw BudgetExceeded("enumeration budget exceeded: " + std::to_string(total) + " cases > budget " +
                         std::to_string(o.budget));
}

// Size tuples over the index sets, first set most significant; each set runs
// through 1..bound, then 0 when empty index sets are requested.
std::vector<std::vector<unsigned>> size_tuples(std::size_t sets, unsigned bound, bool with_empty) {
  std::vector<unsigned> seq;
  for (unsigned k = 1; k <= bound; ++k) seq.push_back(k);
  if (with_empty) seq.push_back(0);
  std::vector<std::vector<unsigned>> out;
  std::vector<std::size_t> odo(sets, 0);
  if (sets == 0) return {{}};
  if (seq.empty()) return out;
  for (;;) {
    std::vector<unsigned> t;
    for (auto i : odo) t.push_back(seq[i]);
    out.push_back(std::move(t));
    std::size_t k = sets;
    for (;;) {
      if (k == 0) return out;
      --k;
      if (++odo[k] < seq.size()) break;
      odo[k] = 0;
    }
  }
}

}  // namespace

Verdict decide_flat(const Statement& s, const EngineOptions& options) {
  auto p = prepare(s);
  if (!p.symbols.families.empty() || contains_family(p.statement))
    throw UnsupportedError("statement has indexed families; decide it with the indexed decider");
  const auto layout = p.program.layout({});
  check_width(layout.width);
  const auto count = cases_for(layout.width);
  check_budget(count, options);

  auto found = first_failure(count, options.jobs, [&] {
    return [&](std::uint64_t c) { return p.program.eval(p.left, c, layout) != p.program.eval(p.right, c, layout); };
  });
  if (!found) return Verdict::valid(Method::Extremes, count);
  const bool left = p.program.eval(p.left, *found, layout);
  return Verdict::invalid(Method::Extremes, *found + 1, point_witness(decode(p.program, layout, *found), left));
}

unsigned index_bound(const Statement& s, unsigned dyadic_bound) {
  const auto sym = free_symbols(desugar(s));
  bool monadic = true;
  for (const auto& f : sym.families) monadic = monadic && f.arity() <= 1;
  if (!monadic) return dyadic_bound;
  if (sym.families.size() >= 31) return std::numeric_limits<unsigned>::max();
  return 1U << sym.families.size();
}

Verdict decide_indexed(const Statement& s, unsigned dyadic_bound, const EngineOptions& options) {
  auto p = prepare(s);
  bool monadic = true;
  for (const auto& f : p.symbols.families) {
    if (f.arity() > 2) throw UnsupportedError("family '" + f.name + "' has arity above 2");
    monadic = monadic && f.arity() <= 1;
  }
  const unsigned bound = index_bound(p.statement, dyadic_bound);
  if (monadic && p.symbols.families.size() > 5)
    throw BudgetExceeded("too many unary families for a complete decision: " +
                         std::to_string(p.symbols.families.size()));

  const auto tuples = size_tuples(p.symbols.index_sets.size(), bound, options.empty_index_sets);
  std::vector<detail::Layout> layouts;
  std::uint64_t total = 0;
  for (const auto& t : tuples) {
    layouts.push_back(p.program.layout(t));
    check_width(layouts.back().width);
    total += cases_for(layouts.back().width);
    check_budget(total, options);
  }

  const Method method = monadic ? Method::MonadicBound : Method::Extremes;
  std::uint64_t checked = 0;
  for (const auto& layout : layouts) {
    const auto count = cases_for(layout.width);
    auto found = first_failure(count, options.jobs, [&] {
      return [&](std::uint64_t c) {
        return p.program.eval(p.left, c, layout) != p.program.eval(p.right, c, layout);
      };
    });
    if (!found) {
      checked += count;
      continue;
    }
    checked += *found + 1;
    const bool left = p.program.eval(p.left, *found, layout);
    return Verdict::invalid(method, checked, point_witness(decode(p.program, layout, *found), left));
  }
  if (monadic) return Verdict::valid(Method::MonadicBound, checked);
  return Verdict::valid_up_to_bound(bound, checked);
}

std::vector<CaseRow> explain(const Statement& s, const EngineOptions& options) {
  auto p = prepare(s);
  if (!p.symbols.families.empty() || contains_family(p.statement))
    throw UnsupportedError("explain needs a statement without products or indexed families");
  const auto layout = p.program.layout({});
  check_width(layout.width);
  const auto count = cases_for(layout.width);
  check_budget(count, options);
  std::vector<CaseRow> rows;
  rows.reserve(count);
  for (std::uint64_t c = 0; c < count; ++c)
    rows.push_back({decode(p.program, layout, c), p.program.eval(p.left, c, layout), p.program.eval(p.right, c, layout)});
  return rows;
}

}  // namespace extremes
