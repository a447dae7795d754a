#include "point_program.hpp"

#include "extremes/error.hpp"

namespace extremes::detail {

PointProgram::PointProgram(std::vector<std::string> variables, std::vector<FamilySignature> families,
                           std::vector<std::string> index_sets)
    : variables_(std::move(variables)), families_(std::move(families)), index_sets_(std::move(index_sets)) {
  for (std::size_t i = 0; i < variables_.size(); ++i) var_slot_[variables_[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < index_sets_.size(); ++i) set_slot_[index_sets_[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < families_.size(); ++i) {
    fam_slot_[families_[i].name] = static_cast<int>(i);
    std::vector<int> sets;
    for (const auto& s : families_[i].index_sets) sets.push_back(set_slot_.at(s));
    family_sets_.push_back(std::move(sets));
  }
}

int PointProgram::add(const SetExpr& e) {
  std::vector<std::string> scope;
  return compile(e, scope);
}

int PointProgram::compile(const SetExpr& e, std::vector<std::string>& scope) {
  Node n{e.op()};
  switch (e.op()) {
    case SetOp::Var:
      n.symbol = var_slot_.at(e.name());
      break;
    case SetOp::Empty:
    case SetOp::Universe:
      break;
    case SetOp::FamVar: {
      n.symbol = fam_slot_.at(e.name());
      const auto& idx = e.indices();
      for (std::size_t k = 0; k < idx.size(); ++k) {
        int d = static_cast<int>(scope.size()) - 1;
        while (d >= 0 && scope[static_cast<std::size_t>(d)] != idx[k]) --d;
        if (d < 0) throw UnsupportedError("unbound index '" + idx[k] + "'");
        n.index_depth[k] = d;
      }
      break;
    }
    case SetOp::FamUnion:
    case SetOp::FamInter:
      if (scope.size() >= kMaxBinderDepth) throw UnsupportedError("indexed operators nested too deeply");
      n.symbol = set_slot_.at(e.index_set());
      n.depth = static_cast<int>(scope.size());
      scope.push_back(e.index());
      n.a = compile(e.body(), scope);
      scope.pop_back();
      break;
    case SetOp::Complement:
      n.a = compile(e.operand(), scope);
      break;
    case SetOp::Product:
      throw UnsupportedError("cartesian product in a single-point evaluation");
    default:
      n.a = compile(e.left(), scope);
      n.b = compile(e.right(), scope);
      break;
  }
  nodes_.push_back(n);
  return static_cast<int>(nodes_.size()) - 1;
}

bool PointProgram::eval(int id, std::uint64_t bits, const Layout& layout,
                        std::array<unsigned, kMaxBinderDepth>& env) const {
  const Node& n = nodes_[static_cast<std::size_t>(id)];
  auto bit = [&](unsigned pos) { return ((bits >> (layout.width - 1 - pos)) & 1U) != 0; };
  switch (n.op) {
    case SetOp::Var:
      return bit(layout.var_pos[static_cast<std::size_t>(n.symbol)]);
    case SetOp::Empty:
      return false;
    case SetOp::Universe:
      return true;
    case SetOp::FamVar: {
      const auto f = static_cast<std::size_t>(n.symbol);
      unsigned pos = layout.fam_start[f] + env[static_cast<std::size_t>(n.index_depth[0])] * layout.fam_stride[f];
      if (n.index_depth[1] >= 0) pos += env[static_cast<std::size_t>(n.index_depth[1])];
      return bit(pos);
    }
    case SetOp::FamUnion:
    case SetOp::FamInter: {
      const bool is_union = n.op == SetOp::FamUnion;
      const unsigned size = layout.set_size[static_cast<std::size_t>(n.symbol)];
      auto& slot = env[static_cast<std::size_t>(n.depth)];
      for (unsigned i = 0; i < size; ++i) {
        slot = i;
        if (eval(n.a, bits, layout, env) == is_union) return is_union;
      }
      return !is_union;
    }
    case SetOp::Complement:
      return !eval(n.a, bits, layout, env);
    case SetOp::Union:
      return eval(n.a, bits, layout, env) || eval(n.b, bits, layout, env);
    case SetOp::Inter:
      return eval(n.a, bits, layout, env) && eval(n.b, bits, layout, env);
    case SetOp::Diff:
      return eval(n.a, bits, layout, env) && !eval(n.b, bits, layout, env);
    case SetOp::SymDiff:
      return eval(n.a, bits, layout, env) != eval(n.b, bits, layout, env);
    default:
      return false;
  }
}

Layout PointProgram::layout(const std::vector<unsigned>& set_sizes) const {
  Layout l;
  l.set_size = set_sizes;
  unsigned pos = 0;
  for (std::size_t i = 0; i < variables_.size(); ++i) l.var_pos.push_back(pos++);
  for (std::size_t f = 0; f < families_.size(); ++f) {
    const auto& sets = family_sets_[f];
    unsigned count = 1;
    for (int s : sets) count *= set_sizes[static_cast<std::size_t>(s)];
    l.fam_start.push_back(pos);
    l.fam_stride.push_back(sets.size() == 2 ? set_sizes[static_cast<std::size_t>(sets[1])] : 1);
    pos += count;
  }
  l.width = pos;
  return l;
}

}  // namespace extremes::detail
