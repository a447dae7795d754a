#pragma once

// Compiled single-point evaluation of set expressions. Membership of one
// generic point in each symbol is a bit of a counter; evaluating a term at
// that point is then plain boolean arithmetic. Used by the extremes engine
// and the two-point product decider.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "extremes/ast.hpp"

namespace extremes::detail {

inline constexpr std::size_t kMaxBinderDepth = 32;

// Maps symbols to bit positions for one instantiation of the index sets.
// Position p is bit (width - 1 - p), so position 0 is the most significant.
struct Layout {
  unsigned width = 0;
  std::vector<unsigned> var_pos;
  std::vector<unsigned> fam_start;
  std::vector<unsigned> fam_stride;
  std::vector<unsigned> set_size;
};

class PointProgram {
 public:
  PointProgram(std::vector<std::string> variables, std::vector<FamilySignature> families,
               std::vector<std::string> index_sets);

  // Compiles a product-free expression; returns its root.
  int add(const SetExpr& e);

  bool eval(int root, std::uint64_t bits, const Layout& layout) const {
    std::array<unsigned, kMaxBinderDepth> env{};
    return eval(root, bits, layout, env);
  }

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<FamilySignature>& families() const { return families_; }
  const std::vector<std::string>& index_sets() const { return index_sets_; }
  // Index-set ids of each family's arguments.
  const std::vector<std::vector<int>>& family_sets() const { return family_sets_; }

  // Layout with variables first, then every family instance in
  // (family, index tuple) lexicographic order.
  Layout layout(const std::vector<unsigned>& set_sizes) const;

 private:
  struct Node {
    SetOp op;
    int a = -1;
    int b = -1;
    int symbol = -1;  // variable slot, family id, or index-set id for binders
    int depth = -1;   // binder depth
    std::array<int, 2> index_depth{-1, -1};
  };

  int compile(const SetExpr& e, std::vector<std::string>& scope);
  bool eval(int id, std::uint64_t bits, const Layout& layout, std::array<unsigned, kMaxBinderDepth>& env) const;

  std::vector<std::string> variables_;
  std::vector<FamilySignature> families_;
  std::vector<std::string> index_sets_;
  std::vector<std::vector<int>> family_sets_;
  std::map<std::string, int> var_slot_;
  std::map<std::string, int> fam_slot_;
  std::map<std::string, int> set_slot_;
  std::vector<Node> nodes_;
};

}  // namespace extremes::detail
