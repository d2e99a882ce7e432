#include <cctype>
#include <charconv>
#include <string>

#include "autofrob/error.hpp"
#include "autofrob/logic.hpp"

namespace autofrob {

LinearTerm LinearTerm::variable(std::string name) {
  LinearTerm t;
  t.coeffs.emplace(std::move(name), 1);
  return t;
}

LinearTerm LinearTerm::number(std::int64_t value) {
  LinearTerm t;
  t.constant = value;
  return t;
}

std::optional<std::string> LinearTerm::as_variable() const {
  if (constant == 0 && coeffs.size() == 1 && coeffs.begin()->second == 1) return coeffs.begin()->first;
  return std::nullopt;
}

LinearTerm& LinearTerm::operator+=(const LinearTerm& other) {
  for (const auto& [v, c] : other.coeffs) {
    auto& slot = coeffs[v];
    slot += c;
    if (slot == 0) coeffs.erase(v);
  }
  constant += other.constant;
  return *this;
}

LinearTerm& LinearTerm::operator-=(const LinearTerm& other) {
  LinearTerm neg = other;
  neg *= -1;
  return *this += neg;
}

LinearTerm& LinearTerm::operator*=(std::int64_t factor) {
  if (factor == 0) {
    coeffs.clear();
    constant = 0;
    return *this;
  }
  for (auto& [v, c] : coeffs) c *= factor;
  constant *= factor;
  return *this;
}

namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::int64_t value = 0;
  std::size_t offset = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { lex(); }

  ParsedFormula parse(System default_system) {
    ParsedFormula out;
    out.system = default_system;
    if (peek_symbol("?")) {
      advance();
      const Token& sys = expect_ident("numeration system after '?'");
      try {
        out.system = parse_system(sys.text);
      } catch (const Error&) {
        fail(sys.offset, "unknown numeration system '" + sys.text + "'");
      }
    }
    out.root = parse_iff();
    if (cur().kind != Tok::End) fail(cur().offset, "unexpected '" + cur().text + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(std::size_t offset, const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, msg);
  }

  void lex() {
    static constexpr std::string_view kSymbols[] = {"<=>", "=>", "<=", ">=", "!=", "=", "<", ">", "&", "|", "~",
                                                    "+",   "-",  "*",  "(",  ")",  "[", "]", ",", "$", "@", "?"};
    std::size_t i = 0;
    while (true) {
      while (i < text_.size() && std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
      if (i >= text_.size()) break;
      const char c = text_[i];
      Token t;
      t.offset = i;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const std::size_t s = i;
        while (i < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[i])) || text_[i] == '_')) ++i;
        t.kind = Tok::Ident;
        t.text = std::string(text_.substr(s, i - s));
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        const std::size_t s = i;
        while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
        t.kind = Tok::Number;
        t.text = std::string(text_.substr(s, i - s));
        auto [p, ec] = std::from_chars(text_.data() + s, text_.data() + i, t.value);
        if (ec != std::errc()) fail(s, "number out of range");
      } else {
        bool matched = false;
        for (auto sym : kSymbols) {
          if (text_.substr(i).starts_with(sym)) {
            t.kind = Tok::Symbol;
            t.text = std::string(sym);
            i += sym.size();
            matched = true;
            break;
          }
        }
        if (!matched) fail(i, std::string("unexpected character '") + c + "'");
      }
      toks_.push_back(std::move(t));
    }
    Token end;
    end.offset = text_.size();
    end.text = "end of input";
    toks_.push_back(end);
  }

  const Token& cur() const { return toks_[pos_]; }
  const Token& at(std::size_t k) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  void advance() {
    if (pos_ + 1 < toks_.size()) ++pos_;
  }
  bool peek_symbol(std::string_view s, std::size_t k = 0) const {
    return at(k).kind == Tok::Symbol && at(k).text == s;
  }
  bool accept_symbol(std::string_view s) {
    if (!peek_symbol(s)) return false;
    advance();
    return true;
  }
  void expect_symbol(std::string_view s) {
    if (!accept_symbol(s)) fail(cur().offset, "expected '" + std::string(s) + "', got '" + cur().text + "'");
  }
  const Token& expect_ident(const std::string& what) {
    if (cur().kind != Tok::Ident) fail(cur().offset, "expected " + what + ", got '" + cur().text + "'");
    const Token& t = cur();
    advance();
    return t;
  }

  static Formula binary(Formula::Kind kind, Formula lhs, Formula rhs) {
    Formula f;
    f.kind = kind;
    f.offset = lhs.offset;
    f.children.push_back(std::move(lhs));
    f.children.push_back(std::move(rhs));
    return f;
  }

  Formula parse_iff() {
    Formula lhs = parse_implies();
    while (accept_symbol("<=>")) lhs = binary(Formula::Kind::Iff, std::move(lhs), parse_implies());
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (accept_symbol("=>")) return binary(Formula::Kind::Implies, std::move(lhs), parse_implies());
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (accept_symbol("|")) lhs = binary(Formula::Kind::Or, std::move(lhs), parse_and());
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (accept_symbol("&")) lhs = binary(Formula::Kind::And, std::move(lhs), parse_unary());
    return lhs;
  }

  static bool is_variable_name(std::string_view s) {
    return !s.empty() && (std::islower(static_cast<unsigned char>(s[0])) || s[0] == '_');
  }

  // "Ej,k", "E j", "Am" all open a quantifier; "E[...]" would be a sequence.
  bool at_quantifier() const {
    const Token& t = cur();
    if (t.kind != Tok::Ident || (t.text[0] != 'E' && t.text[0] != 'A')) return false;
    if (t.text.size() == 1) return at(1).kind == Tok::Ident;
    return is_variable_name(std::string_view(t.text).substr(1));
  }

  Formula parse_unary() {
    if (peek_symbol("~")) {
      Formula f;
      f.kind = Formula::Kind::Not;
      f.offset = cur().offset;
      advance();
      f.children.push_back(parse_unary());
      return f;
    }
    if (at_quantifier()) return parse_quantifier();
    return parse_primary();
  }

  Formula parse_quantifier() {
    Formula f;
    const Token& q = cur();
    f.offset = q.offset;
    f.kind = q.text[0] == 'E' ? Formula::Kind::Exists : Formula::Kind::ForAll;
    if (q.text.size() > 1) {
      f.vars.push_back(q.text.substr(1));
      advance();
    } else {
      advance();
      f.vars.push_back(expect_ident("quantified variable").text);
    }
    while (accept_symbol(",")) {
      const Token& v = expect_ident("quantified variable");
      if (!is_variable_name(v.text)) fail(v.offset, "variable names start with a lowercase letter");
      f.vars.push_back(v.text);
    }
    f.children.push_back(parse_iff());
    return f;
  }

  static bool is_relop(const Token& t) {
    return t.kind == Tok::Symbol &&
           (t.text == "=" || t.text == "!=" || t.text == "<" || t.text == "<=" || t.text == ">" || t.text == ">=");
  }
  static bool is_arith(const Token& t) {
    return t.kind == Tok::Symbol && (t.text == "+" || t.text == "-" || t.text == "*");
  }

  Relation parse_relop() {
    const Token& t = cur();
    if (!is_relop(t)) fail(t.offset, "expected a comparison operator, got '" + t.text + "'");
    advance();
    if (t.text == "=") return Relation::Eq;
    if (t.text == "!=") return Relation::Ne;
    if (t.text == "<") return Relation::Lt;
    if (t.text == "<=") return Relation::Le;
    if (t.text == ">") return Relation::Gt;
    return Relation::Ge;
  }

  Formula parse_primary() {
    const Token& t = cur();
    if (peek_symbol("(")) {
      const std::size_t save = pos_;
      std::optional<ParseError> formula_error;
      try {
        advance();
        Formula inner = parse_iff();
        expect_symbol(")");
        if (!is_relop(cur()) && !is_arith(cur())) return inner;
      } catch (const ParseError& e) {
        formula_error = e;
      }
      pos_ = save;
      try {
        return parse_comparison();
      } catch (const ParseError&) {
        if (formula_error) throw *formula_error;
        throw;
      }
    }
    if (accept_symbol("$")) {
      Formula f;
      f.kind = Formula::Kind::Call;
      f.offset = t.offset;
      f.name = expect_ident("predicate name").text;
      expect_symbol("(");
      if (!peek_symbol(")")) {
        f.args.push_back(parse_term());
        while (accept_symbol(",")) f.args.push_back(parse_term());
      }
      expect_symbol(")");
      return f;
    }
    if (t.kind == Tok::Ident && (t.text == "true" || t.text == "false")) {
      Formula f;
      f.kind = t.text == "true" ? Formula::Kind::True : Formula::Kind::False;
      f.offset = t.offset;
      advance();
      return f;
    }
    if (t.kind == Tok::Ident && peek_symbol("[", 1)) {
      Formula f;
      f.kind = Formula::Kind::SequenceAtom;
      f.offset = t.offset;
      f.name = t.text;
      advance();
      advance();
      f.args.push_back(parse_term());
      expect_symbol("]");
      const Token& op = cur();
      f.rel = parse_relop();
      if (f.rel != Relation::Eq && f.rel != Relation::Ne) fail(op.offset, "sequence values compare with = or !=");
      expect_symbol("@");
      bool neg = accept_symbol("-");
      if (cur().kind != Tok::Number) fail(cur().offset, "expected an output constant after '@'");
      f.output = static_cast<int>(neg ? -cur().value : cur().value);
      advance();
      return f;
    }
    return parse_comparison();
  }

  Formula parse_comparison() {
    Formula f;
    f.kind = Formula::Kind::Compare;
    f.offset = cur().offset;
    f.lhs = parse_term();
    f.rel = parse_relop();
    f.rhs = parse_term();
    return f;
  }

  LinearTerm parse_term() {
    LinearTerm t = parse_product();
    while (true) {
      if (accept_symbol("+")) {
        t += parse_product();
      } else if (accept_symbol("-")) {
        t -= parse_product();
      } else {
        return t;
      }
    }
  }

  LinearTerm parse_product() {
    LinearTerm t = parse_factor();
    while (peek_symbol("*")) {
      const std::size_t off = cur().offset;
      advance();
      LinearTerm u = parse_factor();
      if (!t.is_constant() && !u.is_constant())
        fail(off, "nonlinear term: a product of variables is not definable");
      if (t.is_constant()) std::swap(t, u);
      t *= u.constant;
    }
    return t;
  }

  LinearTerm parse_factor() {
    const Token& t = cur();
    if (t.kind == Tok::Number) {
      advance();
      return LinearTerm::number(t.value);
    }
    if (t.kind == Tok::Ident) {
      if (!is_variable_name(t.text)) fail(t.offset, "variable names start with a lowercase letter: '" + t.text + "'");
      advance();
      return LinearTerm::variable(t.text);
    }
    if (accept_symbol("(")) {
      LinearTerm inner = parse_term();
      expect_symbol(")");
      return inner;
    }
    fail(t.offset, "expected a term, got '" + t.text + "'");
  }

  std::string_view text_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  auto add_term = [&](const LinearTerm& t) {
    for (const auto& [v, c] : t.coeffs)
      if (!bound.contains(v)) out.insert(v);
  };
  switch (f.kind) {
    case Formula::Kind::Exists:
    case Formula::Kind::ForAll: {
      std::vector<std::string> added;
      for (const auto& v : f.vars)
        if (bound.insert(v).second) added.push_back(v);
      collect_free(f.children[0], bound, out);
      for (const auto& v : added) bound.erase(v);
      return;
    }
    case Formula::Kind::Compare:
      add_term(f.lhs);
      add_term(f.rhs);
      return;
    default:
      for (const auto& a : f.args) add_term(a);
      for (const auto& c : f.children) collect_free(c, bound, out);
  }
}

}  // namespace

ParsedFormula parse_formula(std::string_view text, System default_system) {
  return Parser(text).parse(default_system);
}

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

}  // namespace autofrob
