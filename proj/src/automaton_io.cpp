#include "autofrob/automaton_io.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "autofrob/error.hpp"

namespace autofrob {

std::string letter_label(Letter c, unsigned arity) {
  if (arity == 0) return "-";
  std::string s;
  for (unsigned j = 0; j < arity; ++j) {
    if (j) s.push_back(',');
    s.push_back((c >> j) & 1u ? '1' : '0');
  }
  return s;
}

namespace {

template <class A, class StateSuffix>
std::string write_native(const A& a, StateSuffix suffix) {
  std::ostringstream os;
  os << "system " << system_name(a.system()) << " arity " << a.arity() << '\n';
  os << "initial " << a.initial() << '\n';
  for (State q = 0; q < a.state_count(); ++q) os << "state " << q << suffix(q) << '\n';
  for (State q = 0; q < a.state_count(); ++q)
    for (Letter c = 0; c < a.alphabet_size(); ++c)
      os << "trans " << q << ' ' << letter_label(c, a.arity()) << ' ' << a.next(q, c) << '\n';
  return os.str();
}

template <class A, class NodeAttrs>
std::string write_dot(const A& a, std::string_view name, NodeAttrs attrs) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=LR;\n  start [shape=point];\n";
  for (State q = 0; q < a.state_count(); ++q) os << "  q" << q << " [" << attrs(q) << "];\n";
  os << "  start -> q" << a.initial() << ";\n";
  for (State q = 0; q < a.state_count(); ++q)
    for (Letter c = 0; c < a.alphabet_size(); ++c)
      os << "  q" << q << " -> q" << a.next(q, c) << " [label=\"" << letter_label(c, a.arity()) << "\"];\n";
  os << "}\n";
  return os.str();
}

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> split_line(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

struct RawAutomaton {
  System system = System::Base2;
  unsigned arity = 0;
  std::optional<State> initial;
  std::map<State, State> dense;  // file id -> dense id
  std::vector<bool> accept;
  std::vector<std::optional<int>> output;
  std::vector<std::optional<State>> delta;  // dense from * sigma + letter, file ids
  std::vector<std::size_t> state_line;  // where each dense state was declared
};

RawAutomaton parse_native(std::string_view text) {
  RawAutomaton raw;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto number = [&](const Token& t) -> std::uint64_t {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
      throw ParseError(line_no, t.column, "expected a non-negative integer, got '" + std::string(t.text) + "'");
    return v;
  };
  auto state_id = [&](const Token& t) {
    const auto v = number(t);
    if (v > 0xFFFFFFFEu) throw ParseError(line_no, t.column, "state id too large");
    return static_cast<State>(v);
  };
  std::vector<std::pair<std::size_t, std::vector<Token>>> transitions;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    auto toks = split_line(line);
    if (toks.empty() || toks[0].text.starts_with('#')) continue;
    const auto& kw = toks[0].text;
    if (!have_header) {
      if (kw != "system" || toks.size() != 4 || toks[2].text != "arity")
        throw ParseError(line_no, toks[0].column, "expected 'system <base2|fib> arity <k>'");
      try {
        raw.system = parse_system(toks[1].text);
      } catch (const Error& e) {
        throw ParseError(line_no, toks[1].column, e.what());
      }
      const auto k = number(toks[3]);
      if (k > kMaxArity) throw ParseError(line_no, toks[3].column, "arity exceeds the track limit");
      raw.arity = static_cast<unsigned>(k);
      have_header = true;
    } else if (kw == "initial") {
      if (toks.size() != 2) throw ParseError(line_no, toks[0].column, "expected 'initial <state>'");
      raw.initial = state_id(toks[1]);
    } else if (kw == "state") {
      if (toks.size() < 2) throw ParseError(line_no, toks[0].column, "expected 'state <id>'");
      const State id = state_id(toks[1]);
      if (!raw.dense.try_emplace(id, static_cast<State>(raw.accept.size())).second)
        throw ParseError(line_no, toks[1].column, "duplicate state " + std::to_string(id));
      raw.state_line.push_back(line_no);
      bool acc = false;
      std::optional<int> out;
      for (std::size_t i = 2; i < toks.size(); ++i) {
        if (toks[i].text == "accept") {
          acc = true;
        } else if (toks[i].text == "output" && i + 1 < toks.size()) {
          int v = 0;
          const auto& t = toks[++i];
          auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
          if (ec != std::errc() || p != t.text.data() + t.text.size())
            throw ParseError(line_no, t.column, "expected an integer output symbol");
          out = v;
        } else {
          throw ParseError(line_no, toks[i].column, "unexpected '" + std::string(toks[i].text) + "'");
        }
      }
      raw.accept.push_back(acc);
      raw.output.push_back(out);
    } else if (kw == "trans") {
      if (toks.size() != 4) throw ParseError(line_no, toks[0].column, "expected 'trans <from> <digits> <to>'");
      transitions.emplace_back(line_no, std::move(toks));
    } else {
      throw ParseError(line_no, toks[0].column, "unknown keyword '" + std::string(kw) + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, 1, "missing 'system' header");
  if (raw.accept.empty()) throw ParseError(line_no, 1, "automaton has no states");
  if (!raw.initial) throw ParseError(line_no, 1, "missing 'initial' line");
  if (!raw.dense.contains(*raw.initial)) throw ParseError(line_no, 1, "initial state is not declared");

  const std::size_t sigma = std::size_t{1} << raw.arity;
  raw.delta.assign(raw.accept.size() * sigma, std::nullopt);
  for (auto& [ln, toks] : transitions) {
    const State from = state_id(toks[1]);
    const State to = state_id(toks[3]);
    auto f = raw.dense.find(from);
    if (f == raw.dense.end()) throw ParseError(ln, toks[1].column, "transition from unknown state " + std::to_string(from));
    auto t = raw.dense.find(to);
    if (t == raw.dense.end()) throw ParseError(ln, toks[3].column, "transition to unknown state " + std::to_string(to));
    Letter c = 0;
    const auto label = toks[2].text;
    if (raw.arity == 0) {
      if (label != "-") throw ParseError(ln, toks[2].column, "zero-arity transitions are labelled '-'");
    } else {
      if (label.size() != 2 * raw.arity - 1) throw ParseError(ln, toks[2].column, "label needs one digit per track");
      for (unsigned j = 0; j < raw.arity; ++j) {
        const char d = label[2 * j];
        if ((d != '0' && d != '1') || (j + 1 < raw.arity && label[2 * j + 1] != ','))
          throw ParseError(ln, toks[2].column + 2 * j, "malformed digit label");
        if (d == '1') c |= Letter{1} << j;
      }
    }
    auto& slot = raw.delta[f->second * sigma + c];
    if (slot) throw ParseError(ln, toks[0].column, "duplicate transition");
    slot = t->second;
  }
  for (auto [id, dense] : raw.dense)
    for (Letter c = 0; c < sigma; ++c)
      if (!raw.delta[dense * sigma + c])
        throw ParseError(raw.state_line[dense], 1, "state " + std::to_string(id) + " has no transition on " +
                                         letter_label(c, raw.arity));
  return raw;
}

template <class A>
void fill_transitions(A& a, const RawAutomaton& raw) {
  a.set_initial(raw.dense.at(*raw.initial));
  for (State q = 0; q < a.state_count(); ++q)
    for (Letter c = 0; c < a.alphabet_size(); ++c) a.set_next(q, c, *raw.delta[q * a.alphabet_size() + c]);
}

}  // namespace

std::string export_native(const Dfa& a) {
  return write_native(a, [&](State q) { return a.accepting(q) ? std::string(" accept") : std::string(); });
}

std::string export_native(const Dfao& a) {
  return write_native(a, [&](State q) { return " output " + std::to_string(a.output(q)); });
}

std::string export_dot(const Dfa& a, std::string_view name) {
  return write_dot(a, name, [&](State q) {
    return std::string("shape=") + (a.accepting(q) ? "doublecircle" : "circle") + ", label=\"" + std::to_string(q) + "\"";
  });
}

std::string export_dot(const Dfao& a, std::string_view name) {
  return write_dot(a, name, [&](State q) {
    return "shape=circle, label=\"" + std::to_string(q) + "/" + std::to_string(a.output(q)) + "\"";
  });
}

Dfa import_dfa(std::string_view text) {
  const RawAutomaton raw = parse_native(text);
  Dfa a(raw.system, raw.arity, raw.accept.size());
  for (State q = 0; q < a.state_count(); ++q) a.set_accepting(q, raw.accept[q]);
  fill_transitions(a, raw);
  return a;
}

Dfao import_dfao(std::string_view text) {
  const RawAutomaton raw = parse_native(text);
  Dfao a(raw.system, raw.arity, raw.accept.size());
  for (State q = 0; q < a.state_count(); ++q) {
    if (!raw.output[q]) throw ParseError(1, 1, "state without an output symbol");
    a.set_output(q, *raw.output[q]);
  }
  fill_transitions(a, raw);
  return a;
}

}  // namespace autofrob
