#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "extremes/bridge.hpp"
#include "extremes/decide.hpp"
#include "extremes/engine.hpp"
#include "extremes/error.hpp"
#include "extremes/parser.hpp"
#include "extremes/product.hpp"
#include "extremes/semantics.hpp"

namespace py = pybind11;
using namespace extremes;

namespace {

py::dict witness_dict(const Witness& w) {
  py::dict d;
  d["points"] = w.points;
  d["index_sets"] = w.model.index_set_sizes;
  d["extents"] = extents(w);
  d["note"] = w.note;
  return d;
}

DecideOptions decide_options(unsigned bound, unsigned jobs, std::uint64_t budget) {
  DecideOptions o;
  o.dyadic_bound = bound;
  o.engine.jobs = jobs;
  o.engine.budget = budget;
  return o;
}

Statement parse(const std::string& text, bool equiv) { return parse_statement(text, ParseOptions{equiv}); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Set identity and tautology checking by extreme cases";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<UnsupportedError>(m, "UnsupportedError", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<EvaluationError>(m, "EvaluationError", base.ptr());

  py::class_<Statement>(m, "Statement")
      .def_property_readonly("kind", [](const Statement& s) { return std::string(to_string(s.kind())); })
      .def_property_readonly("route", [](const Statement& s) { return std::string(to_string(route(s))); })
      .def("__str__", [](const Statement& s) { return render(s); })
      .def("__repr__", [](const Statement& s) { return "Statement('" + render(s) + "')"; })
      .def("__eq__", [](const Statement& a, const Statement& b) { return a == b; });

  py::class_<Verdict>(m, "Verdict")
      .def_property_readonly("outcome", [](const Verdict& v) { return std::string(to_string(v.outcome)); })
      .def_property_readonly("method", [](const Verdict& v) { return std::string(to_string(v.method)); })
      .def_readonly("cases", &Verdict::cases_checked)
      .def_readonly("bound", &Verdict::bound)
      .def_property_readonly("valid", [](const Verdict& v) { return !v.is_invalid(); })
      .def_property_readonly("witness",
                             [](const Verdict& v) -> py::object {
                               if (!v.witness) return py::none();
                               return witness_dict(*v.witness);
                             })
      .def("__repr__", [](const Verdict& v) { return describe(v); });

  m.def("parse", &parse, py::arg("text"), py::arg("equiv") = false);

  m.def(
      "decide",
      [](const std::string& text, unsigned bound, unsigned jobs, std::uint64_t budget, bool equiv) {
        const auto s = parse(text, equiv);
        py::gil_scoped_release release;
        return decide(s, decide_options(bound, jobs, budget));
      },
      py::arg("text"), py::arg("bound") = kDefaultDyadicBound, py::arg("jobs") = 1,
      py::arg("budget") = EngineOptions{}.budget, py::arg("equiv") = false);

  m.def(
      "oracle",
      [](const std::string& text, unsigned max_universe, unsigned max_index, std::uint64_t budget) {
        OracleOptions o;
        o.max_universe = max_universe;
        o.max_index_set = max_index;
        o.budget = budget;
        const auto s = parse(text, false);
        py::gil_scoped_release release;
        return check_by_model(s, o);
      },
      py::arg("text"), py::arg("max_universe") = 3, py::arg("max_index") = 3,
      py::arg("budget") = OracleOptions{}.budget);

  m.def(
      "to_logic", [](const std::string& text) { return render(set_to_logic(parse(text, false))); },
      py::arg("text"));
  m.def(
      "to_sets", [](const std::string& text, bool equiv) { return render(logic_to_set(parse(text, equiv))); },
      py::arg("text"), py::arg("equiv") = false);
  m.def(
      "reduce_product", [](const std::string& text) { return render(reduce_product(parse(text, false))); },
      py::arg("text"));
  m.def(
      "independent", [](const std::string& text) { return independence_check(parse(text, false)); },
      py::arg("text"));

  m.def(
      "explain",
      [](const std::string& text) {
        py::list rows;
        for (const auto& r : explain(parse(text, false))) {
          py::dict row;
          row["assignment"] = r.assignment.variables;
          row["left"] = r.left;
          row["right"] = r.right;
          rows.append(row);
        }
        return rows;
      },
      py::arg("text"));
}
