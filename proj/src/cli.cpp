#include "extremes/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <regex>
#include <string>
#include <vector>

#include "extremes/bridge.hpp"
#include "extremes/decide.hpp"
#include "extremes/engine.hpp"
#include "extremes/error.hpp"
#include "extremes/parser.hpp"
#include "extremes/semantics.hpp"

namespace extremes {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  bool json = false;
  bool quiet = false;
  bool equiv = false;
  unsigned bound = kDefaultDyadicBound;
  unsigned jobs = 1;
  std::uint64_t budget = EngineOptions{}.budget;

  DecideOptions decide() const {
    DecideOptions o;
    o.dyadic_bound = bound;
    o.engine.jobs = jobs;
    o.engine.budget = budget;
    return o;
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_budget = true) {
  cmd->add_flag("--json", c.json, "one JSON object per statement");
  cmd->add_flag("--quiet", c.quiet, "print the verdict only");
  cmd->add_flag("--equiv", c.equiv, "read a top-level <-> as an equivalence of two formulas");
  cmd->add_option("--bound", c.bound, "index-set bound for binary families")->check(CLI::Range(1U, 16U));
  cmd->add_option("--jobs", c.jobs, "worker threads for enumeration")->check(CLI::Range(1U, 256U));
  if (with_budget) cmd->add_option("--budget", c.budget, "maximum number of cases to enumerate");
}

struct Failure {
  int code;
  std::string kind;
  std::string message;
  std::optional<SourceSpan> span;
};

// Runs `body`, turning the library's exceptions into exit codes.
template <class F>
std::optional<Failure> guarded(F&& body) {
  try {
    body();
    return std::nullopt;
  } catch (const ParseError& e) {
    return Failure{kExitParse, "parse_error", e.what(), e.span()};
  } catch (const UnsupportedError& e) {
    return Failure{kExitUnsupported, "unsupported", e.what(), e.span()};
  } catch (const BudgetExceeded& e) {
    return Failure{kExitBudget, "budget_exceeded", e.what(), std::nullopt};
  } catch (const EvaluationError& e) {
    return Failure{kExitUnsupported, "evaluation_error", e.what(), std::nullopt};
  }
}

void print_failure(const Failure& f, const std::string& input, std::ostream& err) {
  err << "error: " << f.message << "\n";
  if (f.span) {
    const auto begin = std::min(f.span->begin, input.size());
    const auto end = std::max(begin + 1, std::min(f.span->end, input.size()));
    err << "  " << input << "\n  " << std::string(begin, ' ') << std::string(end - begin, '^') << "\n";
  }
}

Json failure_json(const Failure& f) {
  Json j;
  j["kind"] = f.kind;
  j["message"] = f.message;
  if (f.span) j["span"] = {f.span->begin, f.span->end};
  return j;
}

Json witness_json(const Witness& w) {
  Json j;
  j["points"] = w.points;
  Json sizes = Json::object();
  for (const auto& [set, n] : w.model.index_set_sizes) sizes[set] = n;
  j["index_sets"] = sizes;
  Json ext = Json::object();
  for (const auto& [name, pts] : extents(w)) ext[name] = pts;
  j["extents"] = ext;
  j["note"] = w.note;
  return j;
}

void verdict_json(Json& j, const Verdict& v) {
  j["verdict"] = std::string(to_string(v.outcome));
  j["method"] = std::string(to_string(v.method));
  j["cases"] = v.cases_checked;
  if (v.outcome == Outcome::ValidUpToBound) j["bound"] = v.bound;
  if (v.witness) j["witness"] = witness_json(*v.witness);
}

void print_verdict(const Verdict& v, std::ostream& out, const std::string& indent = "  ") {
  out << indent << describe(v) << "\n";
  if (v.witness) {
    out << indent << "witness: " << render_model(*v.witness) << "\n";
    out << indent << v.witness->note << "\n";
  }
}

double millis_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int verdict_code(const Verdict& v) { return v.is_invalid() ? kExitInvalid : kExitValid; }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// One statement per line; '#' starts a comment.
struct Line {
  std::string text;
  std::optional<std::string> expect;
};

std::vector<Line> read_lines(std::istream& in) {
  static const std::regex kExpect(R"(#\s*expect:\s*([a-z_]+))");
  std::vector<Line> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    Line l;
    l.text = trim(raw.substr(0, raw.find('#')));
    if (l.text.empty()) continue;
    std::smatch m;
    if (std::regex_search(raw, m, kExpect)) l.expect = m[1].str();
    lines.push_back(std::move(l));
  }
  return lines;
}

int cmd_check(const std::vector<Line>& lines, const Common& c, bool expect_mode, std::ostream& out,
              std::ostream& err) {
  int worst = kExitValid;
  int mismatches = 0;
  for (const auto& line : lines) {
    const auto t0 = std::chrono::steady_clock::now();
    std::optional<Statement> statement;
    std::optional<Verdict> verdict;
    auto failure = guarded([&] {
      statement = parse_statement(line.text, ParseOptions{c.equiv});
      verdict = decide(*statement, c.decide());
    });
    const double ms = millis_since(t0);

    std::string outcome = failure ? failure->kind : std::string(to_string(verdict->outcome));
    int code = failure ? failure->code : verdict_code(*verdict);
    bool mismatch = false;
    if (expect_mode && line.expect) {
      mismatch = *line.expect != outcome;
      code = mismatch ? kExitInvalid : kExitValid;
      mismatches += mismatch ? 1 : 0;
    }
    worst = std::max(worst, code);

    if (c.json) {
      Json j;
      j["input"] = line.text;
      if (statement) j["kind"] = std::string(to_string(statement->kind()));
      if (verdict) verdict_json(j, *verdict);
      if (failure) j["error"] = failure_json(*failure);
      if (expect_mode && line.expect) {
        j["expect"] = *line.expect;
        j["match"] = !mismatch;
      }
      j["elapsed_ms"] = ms;
      out << j.dump() << "\n";
      continue;
    }
    if (failure && !c.quiet) print_failure(*failure, line.text, err);
    if (c.quiet) {
      out << outcome << (mismatch ? " (expected " + *line.expect + ")" : "") << "\n";
      continue;
    }
    out << line.text << "\n";
    if (verdict) print_verdict(*verdict, out);
    if (failure) out << "  " << failure->kind << "\n";
    if (mismatch) out << "  MISMATCH: expected " << *line.expect << "\n";
  }
  if (expect_mode && !c.json && !c.quiet)
    out << lines.size() << " statements, " << mismatches << " mismatches\n";
  return worst;
}

int cmd_translate(const std::string& input, bool to_logic, bool to_sets, bool check, const Common& c,
                  std::ostream& out, std::ostream& err) {
  std::optional<Statement> source;
  std::string rendered;
  std::optional<Statement> target;
  std::optional<Verdict> verdict;
  auto failure = guarded([&] {
    source = parse_statement(input, ParseOptions{c.equiv});
    const bool logic_out = to_logic || (!to_sets && source->is_set());
    if (logic_out) {
      if (!source->is_set()) throw UnsupportedError("--to-logic needs a set statement");
      const auto p = set_to_logic(*source);
      rendered = render(p);
      target = Statement::taut(p);
    } else {
      if (source->is_set()) throw UnsupportedError("--to-sets needs a logical statement");
      target = logic_to_set(*source);
      rendered = render(*target);
    }
    if (check) verdict = decide(*target, c.decide());
  });
  if (failure) {
    if (c.json) {
      Json j;
      j["input"] = input;
      j["error"] = failure_json(*failure);
      out << j.dump() << "\n";
    } else {
      print_failure(*failure, input, err);
    }
    return failure->code;
  }
  if (c.json) {
    Json j;
    j["input"] = input;
    j["translation"] = rendered;
    j["kind"] = std::string(to_string(target->kind()));
    if (verdict) verdict_json(j, *verdict);
    out << j.dump() << "\n";
  } else {
    out << rendered << "\n";
    if (verdict) {
      if (c.quiet)
        out << to_string(verdict->outcome) << "\n";
      else
        print_verdict(*verdict, out);
    }
  }
  return verdict ? verdict_code(*verdict) : kExitValid;
}

int cmd_explain(const std::string& input, const Common& c, std::ostream& out, std::ostream& err) {
  std::vector<CaseRow> rows;
  std::vector<std::string> names;
  std::optional<Verdict> verdict;
  auto failure = guarded([&] {
    const auto s = parse_statement(input, ParseOptions{c.equiv});
    if (route(s) != Route::Flat)
      throw UnsupportedError("explain takes a set statement without products or indexed families");
    names = free_symbols(desugar(s)).variables;
    auto o = c.decide().engine;
    rows = explain(s, o);
    verdict = decide_flat(s, o);
  });
  if (failure) {
    print_failure(*failure, input, err);
    return failure->code;
  }
  if (c.json) {
    Json j;
    j["input"] = input;
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json row;
      Json a = Json::object();
      for (const auto& [name, v] : r.assignment.variables) a[name] = v ? 1 : 0;
      row["assignment"] = a;
      row["left"] = r.left ? 1 : 0;
      row["right"] = r.right ? 1 : 0;
      row["agree"] = r.agrees();
      arr.push_back(row);
    }
    j["rows"] = arr;
    verdict_json(j, *verdict);
    out << j.dump() << "\n";
    return verdict_code(*verdict);
  }
  auto cell = [](const std::string& v, std::size_t w) { return v + std::string(w - v.size() + 1, ' '); };
  std::string header;
  for (const auto& n : names) header += cell(n, n.size());
  out << header << "| L R\n";
  for (const auto& r : rows) {
    std::string line;
    for (const auto& n : names) line += cell(r.assignment.variables.at(n) ? "1" : "0", n.size());
    line += std::string("| ") + (r.left ? "1" : "0") + " " + (r.right ? "1" : "0");
    line += r.agrees() ? "  ok" : "  differs";
    out << line << "\n";
  }
  if (!c.quiet) out << describe(*verdict) << "\n";
  return verdict_code(*verdict);
}

bool within_oracle_range(const Witness& w, const OracleOptions& o) {
  if (w.model.universe_size > o.max_universe) return false;
  for (const auto& [set, n] : w.model.index_set_sizes)
    if (n > o.max_index_set || (n == 0 && !o.empty_index_sets)) return false;
  return true;
}

int cmd_oracle(const std::string& input, const Common& c, OracleOptions o, std::ostream& out, std::ostream& err) {
  std::optional<Statement> s;
  std::optional<Verdict> engine;
  std::optional<Verdict> oracle;
  o.jobs = c.jobs;
  auto failure = guarded([&] {
    s = parse_statement(input, ParseOptions{c.equiv});
    engine = decide(*s, c.decide());
    oracle = check_by_model(*s, o);
  });
  if (failure) {
    print_failure(*failure, input, err);
    return failure->code;
  }
  std::string status = "agreement";
  int code = kExitValid;
  if (engine->is_invalid() && !falsifies(*s, *engine->witness)) {
    status = "disagreement: the engine's witness does not falsify the statement";
    code = kExitDisagreement;
  } else if (engine->is_invalid() != oracle->is_invalid()) {
    if (engine->is_invalid() && !within_oracle_range(*engine->witness, o)) {
      status = "agreement within the oracle's range; the engine's counterexample lies beyond it";
    } else {
      status = "disagreement";
      code = kExitDisagreement;
    }
  }
  if (c.json) {
    Json j;
    j["input"] = input;
    Json e;
    verdict_json(e, *engine);
    Json m;
    verdict_json(m, *oracle);
    j["engine"] = e;
    j["oracle"] = m;
    j["agree"] = code == kExitValid;
    out << j.dump() << "\n";
  } else {
    out << "engine: " << describe(*engine) << "\n";
    if (engine->witness && !c.quiet) out << "  witness: " << render_model(*engine->witness) << "\n";
    out << "oracle: " << (oracle->is_invalid() ? "INVALID" : "VALID") << " [" << oracle->cases_checked
        << " models]\n";
    if (oracle->witness && !c.quiet) out << "  witness: " << render_model(*oracle->witness) << "\n";
    out << status << "\n";
  }
  if (code != kExitValid) err << "error: engine and oracle disagree on " << input << "\n";
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide set identities, tautologies and product equalities by extreme cases"};
  app.require_subcommand(1);

  Common common;
  std::vector<std::string> statements;
  std::string file;
  bool expect_mode = false;
  auto* check = app.add_subcommand("check", "decide statements");
  check->add_option("statements", statements, "statements to decide");
  check->add_option("-f,--file", file, "read one statement per line")->check(CLI::ExistingFile);
  check->add_flag("--expect", expect_mode, "compare against '# expect: <verdict>' annotations");
  add_common(check, common);

  std::string input;
  bool to_logic = false, to_sets = false, check_translation = false;
  auto* translate = app.add_subcommand("translate", "translate between set and logic notation");
  translate->add_option("statement", input)->required();
  auto* tl = translate->add_flag("--to-logic", to_logic, "set statement to formula");
  translate->add_flag("--to-sets", to_sets, "formula to set statement")->excludes(tl);
  translate->add_flag("--check", check_translation, "also decide the translation");
  add_common(translate, common);

  auto* explain_cmd = app.add_subcommand("explain", "print the table of extreme cases");
  explain_cmd->add_option("statement", input)->required();
  add_common(explain_cmd, common);

  bool format_equiv = false;
  std::vector<std::string> format_inputs;
  auto* format = app.add_subcommand("format", "print statements in canonical form");
  format->add_option("statements", format_inputs)->required();
  format->add_flag("--equiv", format_equiv, "read a top-level <-> as an equivalence of two formulas");

  OracleOptions oracle_options;
  auto* oracle = app.add_subcommand("oracle", "cross-check the deciders against brute-force models");
  oracle->add_option("statement", input)->required();
  oracle->add_option("--max-universe", oracle_options.max_universe, "largest universe")
      ->check(CLI::Range(1U, kMaxUniverse));
  oracle->add_option("--max-index", oracle_options.max_index_set, "largest index set")->check(CLI::Range(1U, 16U));
  oracle->add_option("--budget", oracle_options.budget, "maximum number of models");
  add_common(oracle, common, false);

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitValid : kExitParse;
  }

  if (*check) {
    std::vector<Line> lines;
    for (const auto& s : statements) lines.push_back({s, std::nullopt});
    if (!file.empty()) {
      std::ifstream in(file);
      auto more = read_lines(in);
      lines.insert(lines.end(), more.begin(), more.end());
    }
    if (lines.empty()) {
      err << "error: no statements given\n";
      return kExitParse;
    }
    return cmd_check(lines, common, expect_mode, out, err);
  }
  if (*translate) return cmd_translate(input, to_logic, to_sets, check_translation, common, out, err);
  if (*explain_cmd) return cmd_explain(input, common, out, err);
  if (*format) {
    int worst = kExitValid;
    for (const auto& text : format_inputs) {
      std::string rendered;
      auto failure = guarded([&] { rendered = render(parse_statement(text, ParseOptions{format_equiv})); });
      if (failure) {
        print_failure(*failure, text, err);
        worst = std::max(worst, failure->code);
      } else {
        out << rendered << "\n";
      }
    }
    return worst;
  }
  return cmd_oracle(input, common, oracle_options, out, err);
}

}  // namespace extremes
