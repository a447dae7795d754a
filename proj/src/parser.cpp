#include "extremes/parser.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

namespace extremes {

namespace {

enum class Tok {
  Upper,
  Lower,
  Zero,
  One,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Dot,
  Pipe,
  Amp,
  Backslash,
  Caret,
  Prime,
  Star,
  Eq,
  Le,
  Tilde,
  And,
  Or,
  Arrow,
  DArrow,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End:
      return "end of input";
    case Tok::Upper:
    case Tok::Lower:
      return "'" + t.text + "'";
    default:
      return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view in) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t len) {
    out.push_back({k, std::string(in.substr(i, len)), {i, i + len}});
    i += len;
  };
  auto starts = [&](std::string_view s) { return in.substr(i, s.size()) == s; };
  while (i < in.size()) {
    const auto c = static_cast<unsigned char>(in[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (c == '#') {
      while (i < in.size() && in[i] != '\n') ++i;
    } else if (std::isalpha(c)) {
      std::size_t j = i;
      while (j < in.size() && std::isalnum(static_cast<unsigned char>(in[j]))) ++j;
      push(std::isupper(c) ? Tok::Upper : Tok::Lower, j - i);
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < in.size() && std::isalnum(static_cast<unsigned char>(in[j]))) ++j;
      if (j - i != 1 || (c != '0' && c != '1'))
        throw ParseError({i, j}, "unexpected number '" + std::string(in.substr(i, j - i)) + "'",
                         {"'0'", "'1'", "identifier"});
      push(c == '0' ? Tok::Zero : Tok::One, 1);
    } else if (starts("<->")) {
      push(Tok::DArrow, 3);
    } else if (starts("<=")) {
      push(Tok::Le, 2);
    } else if (starts("->")) {
      push(Tok::Arrow, 2);
    } else if (starts("/\\")) {
      push(Tok::And, 2);
    } else if (starts("\\/")) {
      push(Tok::Or, 2);
    } else {
      static constexpr std::pair<char, Tok> single[] = {
          {'(', Tok::LParen}, {')', Tok::RParen},    {'[', Tok::LBracket}, {']', Tok::RBracket},
          {',', Tok::Comma},  {'.', Tok::Dot},       {'|', Tok::Pipe},     {'&', Tok::Amp},
          {'\\', Tok::Backslash}, {'^', Tok::Caret}, {'\'', Tok::Prime},   {'*', Tok::Star},
          {'=', Tok::Eq},     {'~', Tok::Tilde},
      };
      std::optional<Tok> kind;
      for (auto [ch, k] : single)
        if (in[i] == ch) kind = k;
      if (!kind) {
        std::size_t len = 1;
        // Report a whole UTF-8 sequence as one character.
        while (i + len < in.size() && (static_cast<unsigned char>(in[i + len]) & 0xC0) == 0x80) ++len;
        throw ParseError({i, i + len}, "unexpected character '" + std::string(in.substr(i, len)) + "'",
                         {"set or logical expression"});
      }
      push(*kind, 1);
    }
  }
  out.push_back({Tok::End, "", {in.size(), in.size()}});
  return out;
}

class Parser {
 public:
  Parser(std::string_view input, std::vector<Token> tokens) : input_(input), toks_(std::move(tokens)) {}

  Statement statement(const ParseOptions& options) {
    Statement s = is_set_statement() ? set_statement() : logic_statement(options);
    expect(Tok::End, "end of input");
    return s;
  }

 private:
  // ---- token helpers ----

  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_keyword(std::string_view kw) const {
    return (at(Tok::Upper) || at(Tok::Lower)) && peek().text == kw;
  }
  Token advance() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string msg = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += ", found " + describe(peek());
    throw ParseError(peek().span, msg, std::move(expected));
  }

  Token expect(Tok k, const std::string& what) {
    if (!at(k)) fail({what});
    return advance();
  }

  void expect_keyword(std::string_view kw) {
    if (!at_keyword(kw)) fail({"'" + std::string(kw) + "'"});
    advance();
  }

  std::size_t start() const { return peek().span.begin; }
  SourceSpan since(std::size_t begin) const { return {begin, toks_[pos_ ? pos_ - 1 : 0].span.end}; }

  // A top-level '=' or '<=' marks a set statement; so does a leading set term.
  bool is_set_statement() const {
    int depth = 0;
    for (const auto& t : toks_) {
      if (t.kind == Tok::LParen || t.kind == Tok::LBracket) ++depth;
      if (t.kind == Tok::RParen || t.kind == Tok::RBracket) --depth;
      if (depth == 0 && (t.kind == Tok::Eq || t.kind == Tok::Le)) return true;
    }
    for (const auto& t : toks_) {
      if (t.kind == Tok::LParen) continue;
      return t.kind == Tok::Upper || t.kind == Tok::Zero || t.kind == Tok::One;
    }
    return false;
  }

  // ---- shared pieces ----

  std::string index_variable() {
    if (!at(Tok::Lower) || is_keyword(peek().text)) fail({"index variable"});
    return advance().text;
  }

  std::string index_set() {
    if (!at(Tok::Upper) || is_keyword(peek().text)) fail({"index set name"});
    return advance().text;
  }

  std::vector<std::string> index_list(const std::string& owner, std::size_t begin) {
    std::vector<std::string> out;
    expect(Tok::LBracket, "'['");
    for (;;) {
      const auto span = peek().span;
      auto idx = index_variable();
      if (!bound(idx))
        throw ParseError(span, "index '" + idx + "' of '" + owner + "' is not bound by an enclosing quantifier",
                         {"bound index variable"});
      out.push_back(std::move(idx));
      if (at(Tok::Comma)) {
        advance();
        continue;
      }
      expect(Tok::RBracket, "']'");
      break;
    }
    if (out.size() > 2)
      throw UnsupportedError("'" + owner + "' has arity " + std::to_string(out.size()) + " (maximum 2)", since(begin));
    return out;
  }

  bool bound(const std::string& idx) const {
    for (const auto& s : scope_)
      if (s == idx) return true;
    return false;
  }

  // ---- set expressions ----

  Statement set_statement() {
    auto l = set_union();
    if (at(Tok::Eq)) {
      advance();
      return Statement::set_eq(std::move(l), set_union());
    }
    if (at(Tok::Le)) {
      advance();
      return Statement::set_incl(std::move(l), set_union());
    }
    fail({"'='", "'<='", "set operator"});
  }

  SetExpr set_union() {
    auto e = set_diff();
    while (at(Tok::Pipe)) {
      advance();
      e = SetExpr::union_of(std::move(e), set_diff());
    }
    return e;
  }

  SetExpr set_diff() {
    auto e = set_inter();
    while (at(Tok::Backslash) || at(Tok::Caret)) {
      const auto op = advance().kind == Tok::Backslash ? SetOp::Diff : SetOp::SymDiff;
      e = SetExpr::binary(op, std::move(e), set_inter());
    }
    return e;
  }

  SetExpr set_inter() {
    auto e = set_product();
    while (at(Tok::Amp)) {
      advance();
      e = SetExpr::inter(std::move(e), set_product());
    }
    return e;
  }

  SetExpr set_product() {
    const auto begin = start();
    auto e = set_postfix();
    while (at(Tok::Star)) {
      advance();
      auto r = set_postfix();
      if (contains_product(e) || contains_product(r))
        throw UnsupportedError("nested cartesian products are not supported", since(begin));
      e = SetExpr::product(std::move(e), std::move(r));
    }
    return e;
  }

  SetExpr set_postfix() {
    auto e = set_primary();
    while (at(Tok::Prime)) {
      advance();
      e = SetExpr::complement(std::move(e));
    }
    return e;
  }

  SetExpr set_primary() {
    const auto begin = start();
    if (at(Tok::Zero)) {
      advance();
      return SetExpr::empty();
    }
    if (at(Tok::One)) {
      advance();
      return SetExpr::universe();
    }
    if (at(Tok::LParen)) {
      advance();
      auto e = set_union();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (at_keyword("Union") || at_keyword("Inter")) {
      const bool is_union = advance().text == "Union";
      auto idx = index_variable();
      expect_keyword("in");
      auto set = index_set();
      expect(Tok::Dot, "'.'");
      scope_.push_back(idx);
      auto body = set_union();
      scope_.pop_back();
      return is_union ? SetExpr::fam_union(std::move(idx), std::move(set), std::move(body))
                      : SetExpr::fam_inter(std::move(idx), std::move(set), std::move(body));
    }
    if (at(Tok::Upper) && !is_keyword(peek().text)) {
      auto name = advance().text;
      if (at(Tok::LBracket)) return SetExpr::fam_var(name, index_list(name, begin));
      return SetExpr::var(std::move(name));
    }
    if (at(Tok::Lower) && !is_keyword(peek().text))
      throw ParseError(peek().span,
                       "'" + peek().text + "' is lower-case; set variables start with an upper-case letter",
                       {"set variable", "'0'", "'1'", "'('", "'Union'", "'Inter'"});
    fail({"set variable", "'0'", "'1'", "'('", "'Union'", "'Inter'"});
  }

  // ---- logical formulas ----

  Statement logic_statement(const ParseOptions& options) {
    auto p = formula();
    if (options.equiv && p.op() == PropOp::Iff) return Statement::prop_equiv(p.left(), p.right());
    return Statement::taut(std::move(p));
  }

  PropExpr formula() {
    auto p = implication();
    while (at(Tok::DArrow)) {
      advance();
      p = PropExpr::iff(std::move(p), implication());
    }
    return p;
  }

  PropExpr implication() {
    auto p = disjunction();
    if (at(Tok::Arrow)) {
      advance();
      return PropExpr::implies(std::move(p), implication());
    }
    return p;
  }

  PropExpr disjunction() {
    auto p = conjunction();
    while (at(Tok::Or)) {
      advance();
      p = PropExpr::disj(std::move(p), conjunction());
    }
    return p;
  }

  PropExpr conjunction() {
    auto p = unary();
    while (at(Tok::And)) {
      advance();
      p = PropExpr::conj(std::move(p), unary());
    }
    return p;
  }

  PropExpr unary() {
    if (at(Tok::Tilde)) {
      advance();
      return PropExpr::negation(unary());
    }
    return logic_primary();
  }

  PropExpr logic_primary() {
    const auto begin = start();
    if (at_keyword("true")) {
      advance();
      return PropExpr::truth();
    }
    if (at_keyword("false")) {
      advance();
      return PropExpr::falsity();
    }
    if (at(Tok::LParen)) {
      advance();
      auto p = formula();
      expect(Tok::RParen, "')'");
      return p;
    }
    if (at_keyword("forall") || at_keyword("exists")) {
      const bool universal = advance().text == "forall";
      auto idx = index_variable();
      expect_keyword("in");
      auto set = index_set();
      expect(Tok::Dot, "'.'");
      scope_.push_back(idx);
      auto body = formula();
      scope_.pop_back();
      return universal ? PropExpr::forall(std::move(idx), std::move(set), std::move(body))
                       : PropExpr::exists(std::move(idx), std::move(set), std::move(body));
    }
    if (at(Tok::Lower) && !is_keyword(peek().text)) {
      auto name = advance().text;
      if (at(Tok::LBracket)) return PropExpr::atom(name, index_list(name, begin));
      return PropExpr::atom(std::move(name));
    }
    fail({"atom", "'~'", "'('", "'true'", "'false'", "'forall'", "'exists'"});
  }

  std::string_view input_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
};

void check_well_formed(const Statement& s, std::string_view input) {
  for (const auto& v : well_formed(s)) {
    const SourceSpan whole{0, input.size()};
    switch (v.kind) {
      case ViolationKind::NestedProduct:
      case ViolationKind::ArityTooLarge:
      case ViolationKind::TooManyIndexVariables:
        throw UnsupportedError(v.message, whole);
      default:
        throw ParseError(whole, v.message, {"well-formed statement"});
    }
  }
}

// ---- rendering -------------------------------------------------------------

std::string_view set_symbol(SetOp op) {
  switch (op) {
    case SetOp::Union:
      return " | ";
    case SetOp::Inter:
      return " & ";
    case SetOp::Diff:
      return " \\ ";
    case SetOp::SymDiff:
      return " ^ ";
    case SetOp::Product:
      return " * ";
    default:
      return " ? ";
  }
}

std::string join_indices(const std::vector<std::string>& idx) {
  std::string out = "[";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ",";
    out += idx[i];
  }
  return out + "]";
}

std::string parens(std::string s) { return "(" + s + ")"; }

// Binary operands are grouped whenever operators mix, so `\` and `^` never sit
// bare inside `|`. Same-operator chains stay flat on the left.
std::string render_set(const SetExpr& e) {
  switch (e.op()) {
    case SetOp::Var:
      return e.name();
    case SetOp::Empty:
      return "0";
    case SetOp::Universe:
      return "1";
    case SetOp::FamVar:
      return e.name() + join_indices(e.indices());
    case SetOp::Complement: {
      const auto& x = e.operand();
      auto inner = render_set(x);
      if (x.is_binary() || x.is_binder() || x.op() == SetOp::Complement) inner = parens(inner);
      return inner + "'";
    }
    case SetOp::FamUnion:
    case SetOp::FamInter: {
      auto body = render_set(e.body());
      if (e.body().is_binary()) body = parens(body);
      return std::string(e.op() == SetOp::FamUnion ? "Union " : "Inter ") + e.index() + " in " + e.index_set() +
             ". " + body;
    }
    default: {
      auto operand = [&](const SetExpr& x, bool right) {
        auto s = render_set(x);
        if (x.is_binder() || (x.is_binary() && (x.op() != e.op() || right))) s = parens(s);
        return s;
      };
      return operand(e.left(), false) + std::string(set_symbol(e.op())) + operand(e.right(), true);
    }
  }
}

int precedence(const PropExpr& p) {
  switch (p.op()) {
    case PropOp::Forall:
    case PropOp::Exists:
      return 0;
    case PropOp::Iff:
      return 1;
    case PropOp::Implies:
      return 2;
    case PropOp::Or:
      return 3;
    case PropOp::And:
      return 4;
    case PropOp::Not:
      return 5;
    default:
      return 6;
  }
}

std::string_view prop_symbol(PropOp op) {
  switch (op) {
    case PropOp::Or:
      return " \\/ ";
    case PropOp::And:
      return " /\\ ";
    case PropOp::Implies:
      return " -> ";
    case PropOp::Iff:
      return " <-> ";
    default:
      return " ? ";
  }
}

// `rightmost`: nothing follows this subterm at its nesting level, so a
// quantifier here may extend to the end without parentheses.
std::string render_prop(const PropExpr& p, bool rightmost) {
  switch (p.op()) {
    case PropOp::Atom:
      return p.indices().empty() ? p.name() : p.name() + join_indices(p.indices());
    case PropOp::True:
      return "true";
    case PropOp::False:
      return "false";
    case PropOp::Not: {
      const auto& x = p.operand();
      if (x.is_binary() || x.is_quantifier()) return "~" + parens(render_prop(x, true));
      return "~" + render_prop(x, rightmost);
    }
    case PropOp::Forall:
    case PropOp::Exists:
      return std::string(p.op() == PropOp::Forall ? "forall " : "exists ") + p.index() + " in " + p.index_set() +
             ". " + render_prop(p.body(), true);
    default: {
      const int prec = precedence(p);
      const bool right_assoc = p.op() == PropOp::Implies;
      const auto& l = p.left();
      const auto& r = p.right();
      // Implications and equivalences directly under <-> are always bracketed.
      auto arrow = [&](const PropExpr& x) {
        return p.op() == PropOp::Iff && (x.op() == PropOp::Iff || x.op() == PropOp::Implies);
      };
      const bool wrap_l = precedence(l) < prec || (precedence(l) == prec && right_assoc) || arrow(l);
      const bool wrap_r = (precedence(r) < prec && !(r.is_quantifier() && rightmost)) ||
                          (precedence(r) == prec && !right_assoc) || arrow(r);
      auto ls = wrap_l ? parens(render_prop(l, true)) : render_prop(l, false);
      auto rs = wrap_r ? parens(render_prop(r, true)) : render_prop(r, rightmost);
      return ls + std::string(prop_symbol(p.op())) + rs;
    }
  }
}

}  // namespace

Statement parse_statement(std::string_view input, ParseOptions options) {
  Parser parser(input, lex(input));
  auto s = parser.statement(options);
  check_well_formed(s, input);
  return s;
}

std::string render(const SetExpr& e) { return render_set(e); }

std::string render(const PropExpr& p) { return render_prop(p, true); }

std::string render(const Statement& s) {
  switch (s.kind()) {
    case StatementKind::SetEq:
      return render_set(s.set_left()) + " = " + render_set(s.set_right());
    case StatementKind::SetIncl:
      return render_set(s.set_left()) + " <= " + render_set(s.set_right());
    case StatementKind::Taut:
      return render_prop(s.formula(), true);
    case StatementKind::PropEquiv:
      return render_prop(PropExpr::iff(s.prop_left(), s.prop_right()), true);
  }
  return {};
}

}  // namespace extremes
