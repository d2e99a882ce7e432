#include <cctype>
#include <chrono>

#include "autofrob/error.hpp"
#include "autofrob/logic.hpp"

namespace autofrob {

std::vector<Statement> parse_script(std::string_view text) {
  std::vector<Statement> out;
  std::size_t i = 0, line = 1, line_start = 0;
  auto fail = [&](const std::string& msg) -> void { throw ParseError(line, i - line_start + 1, msg); };
  auto skip_space = [&] {
    while (i < text.size()) {
      if (text[i] == '#') {
        while (i < text.size() && text[i] != '\n') ++i;
      } else if (std::isspace(static_cast<unsigned char>(text[i]))) {
        if (text[i] == '\n') {
          ++line;
          line_start = i + 1;
        }
        ++i;
      } else {
        break;
      }
    }
  };
  auto word = [&] {
    const std::size_t s = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    return std::string(text.substr(s, i - s));
  };
  while (true) {
    skip_space();
    if (i >= text.size()) break;
    Statement st;
    st.line = line;
    const std::string kw = word();
    if (kw == "def") {
      st.kind = Statement::Kind::Def;
    } else if (kw == "eval") {
      st.kind = Statement::Kind::Eval;
    } else {
      fail(kw.empty() ? "expected 'def' or 'eval'" : "unknown statement '" + kw + "'");
    }
    skip_space();
    st.name = word();
    if (st.name.empty()) fail("expected a statement name");
    skip_space();
    if (i >= text.size() || text[i] != '"') fail("expected a quoted formula");
    ++i;
    const std::size_t s = i;
    while (i < text.size() && text[i] != '"') {
      if (text[i] == '\n') {
        ++line;
        line_start = i + 1;
      }
      ++i;
    }
    if (i >= text.size()) fail("unterminated formula");
    st.formula = std::string(text.substr(s, i - s));
    ++i;
    skip_space();
    if (i >= text.size() || text[i] != ':') fail("expected ':' after the formula");
    ++i;
    out.push_back(std::move(st));
  }
  return out;
}

bool ScriptReport::all_true() const {
  for (const auto& r : results)
    if (r.value && !*r.value) return false;
  return true;
}

ScriptReport run_script(std::string_view text, PredicateEnv env, const CompileOptions& options) {
  ScriptReport report;
  const auto statements = parse_script(text);
  for (std::size_t k = 0; k < statements.size(); ++k) {
    const Statement& st = statements[k];
    StatementResult r;
    r.index = k;
    r.statement = st;
    const auto t0 = std::chrono::steady_clock::now();
    auto where = [&] {
      return "statement " + std::to_string(k + 1) + " (" + st.name + ", line " + std::to_string(st.line) + "): ";
    };
    try {
      const ParsedFormula f = parse_formula(st.formula, options.default_system);
      if (st.kind == Statement::Kind::Def) {
        env = define(env, st.name, {}, f, options);
        r.states = env.find_predicate(st.name)->automaton.state_count();
      } else {
        CompiledRelation c = compile(f, env, options);
        if (!c.vars.empty()) {
          std::string names;
          for (const auto& v : c.vars) names += (names.empty() ? "" : ", ") + v;
          throw Error("unbound variable(s) in sentence: " + names);
        }
        r.value = c.automaton.accepting(c.automaton.initial());
        r.states = c.automaton.state_count();
      }
    } catch (const ResourceError& e) {
      throw ResourceError(where() + e.what());
    } catch (const Error& e) {
      throw Error(where() + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.results.push_back(std::move(r));
  }
  report.env = std::move(env);
  return report;
}

}  // namespace autofrob
