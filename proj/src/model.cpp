#include "extremes/model.hpp"

#include <cctype>

namespace extremes {

std::string to_string(const IndexElement& e) {
  std::string out;
  for (char c : e.set) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out + std::to_string(e.position + 1);
}

std::string to_string(const Instance& i) {
  std::string out = i.name + "[";
  for (std::size_t k = 0; k < i.indices.size(); ++k) {
    if (k) out += ",";
    out += to_string(i.indices[k]);
  }
  return out + "]";
}

std::string to_string(const ExtremeAssignment& a) {
  std::string out;
  auto add = [&](const std::string& item) {
    if (!out.empty()) out += ", ";
    out += item;
  };
  for (const auto& [set, n] : a.index_set_sizes) add("|" + set + "|=" + std::to_string(n));
  for (const auto& [name, v] : a.variables) add(name + "=" + (v ? "U" : "0"));
  for (const auto& [inst, v] : a.families) add(to_string(inst) + "=" + (v ? "U" : "0"));
  return out;
}

FiniteModel one_point_model(const ExtremeAssignment& a) {
  FiniteModel m;
  m.universe_size = 1;
  for (const auto& [name, v] : a.variables) m.variables[name] = v ? 1 : 0;
  for (const auto& [inst, v] : a.families) m.families[inst] = v ? 1 : 0;
  m.index_set_sizes = a.index_set_sizes;
  return m;
}

Witness make_witness(FiniteModel model, std::optional<ExtremeAssignment> assignment, std::string note,
                     std::vector<std::string> points) {
  if (points.empty())
    for (unsigned i = 0; i < model.universe_size; ++i) points.push_back("x" + std::to_string(i + 1));
  return Witness{std::move(assignment), std::move(model), std::move(points), std::move(note)};
}

namespace {

std::vector<std::string> members(PointSet set, const std::vector<std::string>& points) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (set >> i & 1) out.push_back(points[i]);
  return out;
}

std::string braces(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += items[i];
  }
  return out + "}";
}

}  // namespace

std::map<std::string, std::vector<std::string>> extents(const Witness& w) {
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& [name, set] : w.model.variables) out[name] = members(set, w.points);
  for (const auto& [inst, set] : w.model.families) out[to_string(inst)] = members(set, w.points);
  return out;
}

std::string render_model(const Witness& w) {
  std::string out = "universe " + braces(w.points);
  for (const auto& [set, n] : w.model.index_set_sizes) out += "; |" + set + "| = " + std::to_string(n);
  std::string symbols;
  for (const auto& [name, pts] : extents(w)) {
    if (!symbols.empty()) symbols += ", ";
    symbols += name + " = " + braces(pts);
  }
  if (!symbols.empty()) out += "; " + symbols;
  return out;
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Extremes:
      return "extremes";
    case Method::TwoPoint:
      return "two_point";
    case Method::MonadicBound:
      return "monadic_bound";
    case Method::TruthTable:
      return "truth_table";
  }
  return "?";
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Valid:
      return "valid";
    case Outcome::ValidUpToBound:
      return "valid_up_to_bound";
    case Outcome::Invalid:
      return "invalid";
  }
  return "?";
}

Verdict Verdict::valid(Method m, std::uint64_t cases) { return Verdict{Outcome::Valid, m, cases, 0, std::nullopt}; }

Verdict Verdict::valid_up_to_bound(unsigned bound, std::uint64_t cases) {
  return Verdict{Outcome::ValidUpToBound, Method::Extremes, cases, bound, std::nullopt};
}

Verdict Verdict::invalid(Method m, std::uint64_t cases, Witness w) {
  return Verdict{Outcome::Invalid, m, cases, 0, std::move(w)};
}

std::string describe(const Verdict& v) {
  switch (v.outcome) {
    case Outcome::Valid:
      return "VALID [" + std::string(to_string(v.method)) + ", " + std::to_string(v.cases_checked) + " cases]";
    case Outcome::ValidUpToBound:
      return "VALID up to index-set size " + std::to_string(v.bound) + " [" + std::to_string(v.cases_checked) +
             " cases]";
    case Outcome::Invalid:
      return "INVALID [" + std::string(to_string(v.method)) + ", " + std::to_string(v.cases_checked) + " cases]";
  }
  return "?";
}

}  // namespace extremes
