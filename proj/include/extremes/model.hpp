#pragma once

// Assignments, finite models, witnesses and verdicts.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace extremes {

// Bit i is point x(i+1). For pair sets over an n-point universe, bit i*n+j is
// the pair (x(i+1), x(j+1)).
using PointSet = std::uint64_t;

inline constexpr unsigned kMaxUniverse = 8;

// Element `position` (0-based) of index set `set`; renders as s1, s2, ... for S.
struct IndexElement {
  std::string set;
  unsigned position = 0;

  auto operator<=>(const IndexElement&) const = default;
};

std::string to_string(const IndexElement& e);

// A family member A[s2] or an indexed atom p[s1,t3] at concrete index elements.
struct Instance {
  std::string name;
  std::vector<IndexElement> indices;

  auto operator<=>(const Instance&) const = default;
};

std::string to_string(const Instance& i);

// Each variable and family instance sent to Empty (false) or Universe (true).
struct ExtremeAssignment {
  std::map<std::string, bool> variables;
  std::map<Instance, bool> families;
  std::map<std::string, unsigned> index_set_sizes;

  friend bool operator==(const ExtremeAssignment&, const ExtremeAssignment&) = default;
};

std::string to_string(const ExtremeAssignment& a);

struct FiniteModel {
  unsigned universe_size = 1;
  std::map<std::string, PointSet> variables;
  std::map<Instance, PointSet> families;
  std::map<std::string, unsigned> index_set_sizes;

  PointSet full() const { return universe_size >= 64 ? ~PointSet{0} : (PointSet{1} << universe_size) - 1; }

  friend bool operator==(const FiniteModel&, const FiniteModel&) = default;
};

// The one-point model in which every Universe-valued symbol is {x1}.
FiniteModel one_point_model(const ExtremeAssignment& a);

// Truth valuation for logical statements: atom instances plus index-set sizes.
struct Valuation {
  std::map<Instance, bool> truth;
  std::map<std::string, unsigned> index_set_sizes;
};

struct Witness {
  // Set for extreme-case witnesses; absent for multi-point models.
  std::optional<ExtremeAssignment> assignment;
  FiniteModel model;
  // Display names of the model's points, x1..xn unless the procedure names them.
  std::vector<std::string> points;
  std::string note;
};

Witness make_witness(FiniteModel model, std::optional<ExtremeAssignment> assignment, std::string note,
                     std::vector<std::string> points = {});

// "universe {x1}; A = {}, C = {x1}; |S| = 2"
std::string render_model(const Witness& w);
// Extension of each symbol as a sorted list of point names.
std::map<std::string, std::vector<std::string>> extents(const Witness& w);

enum class Method { Extremes, TwoPoint, MonadicBound, TruthTable };
enum class Outcome { Valid, ValidUpToBound, Invalid };

std::string_view to_string(Method m);
std::string_view to_string(Outcome o);

struct Verdict {
  Outcome outcome = Outcome::Valid;
  Method method = Method::Extremes;
  std::uint64_t cases_checked = 0;
  // Largest index-set size examined; meaningful for ValidUpToBound.
  unsigned bound = 0;
  std::optional<Witness> witness;

  static Verdict valid(Method m, std::uint64_t cases);
  static Verdict valid_up_to_bound(unsigned bound, std::uint64_t cases);
  static Verdict invalid(Method m, std::uint64_t cases, Witness w);

  bool is_invalid() const { return outcome == Outcome::Invalid; }
};

std::string describe(const Verdict& v);

}  // namespace extremes
