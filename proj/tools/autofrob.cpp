// Command-line front end: sequence and Frobenius tables, formula scripts,
// automaton export and the verification suite.
//
// Exit codes: 0 success, 1 a check or sentence is false, 2 usage or input
// error, 3 a resource budget was exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "autofrob/automaton_io.hpp"
#include "autofrob/error.hpp"
#include "autofrob/frobenius.hpp"
#include "autofrob/logic.hpp"
#include "autofrob/predicates.hpp"
#include "autofrob/sequences.hpp"
#include "autofrob/verify.hpp"

using namespace autofrob;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFalse = 1, kUsage = 2, kResource = 3 };

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Common {
  std::string out;
  std::string format = "tsv";
  std::size_t budget = Budget{}.max_states;
  std::string system = "base2";
};

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw UsageError("cannot write " + c.out);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

CompileOptions compile_options(const Common& c) {
  CompileOptions o;
  o.budget.max_states = c.budget;
  try {
    o.default_system = parse_system(c.system);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return o;
}

int cmd_seq(const std::string& name, Natural max, const Common& c) {
  const auto seq = sequence_by_name(name);
  if (!seq) throw UsageError("unknown sequence '" + name + "'");
  std::vector<Natural> values;
  for (Natural n = 0; n <= max; ++n) values.push_back(seq->value(n));
  if (c.format == "json") {
    json j = {{"schema", 1}, {"sequence", name}, {"system", system_name(seq->system)}, {"values", values}};
    emit(c, j.dump(2) + "\n");
  } else {
    std::string s = "n\t" + name + "\n";
    for (Natural n = 0; n <= max; ++n) s += std::to_string(n) + "\t" + std::to_string(values[n]) + "\n";
    emit(c, s);
  }
  return kOk;
}

int cmd_frob(const std::string& name, Natural max, const std::string& engine, const Common& c) {
  const auto seq = sequence_by_name(name);
  if (!seq || !seq->increasing) throw UsageError("no tail Frobenius table for '" + name + "'");
  const auto family = family_by_name(name);
  const bool want_oracle = engine == "oracle" || engine == "both";
  const bool want_automaton = engine == "automaton" || engine == "both";
  if (want_automaton && !family)
    throw UsageError("'" + name +
                     "' has no automaton engine: here G(i) = 2^{2i} + 2^i + 1, whose set of values is not "
                     "2-automatic, so no synchronized predicate for G exists; use --engine oracle");
  bool agree_all = true;
  json rows = json::array();
  std::string tsv = "i";
  if (want_oracle) tsv += "\toracle";
  if (want_automaton) tsv += "\tautomaton";
  if (want_oracle && want_automaton) tsv += "\tagree";
  tsv += "\n";
  std::vector<std::string> notes;
  for (Natural i = 0; i <= max; ++i) {
    json row = {{"i", i}};
    tsv += std::to_string(i);
    std::optional<std::int64_t> a, b;
    if (want_oracle) {
      const TailFrobeniusResult r = tail_frobenius(*seq, i);
      if (!r.convention.empty()) notes.push_back(r.convention);
      a = r.value;
      row["oracle"] = *a;
      tsv += "\t" + std::to_string(*a);
    }
    if (want_automaton) {
      b = tail_frobenius_via_automaton(*family, i);
      row["automaton"] = *b;
      tsv += "\t" + std::to_string(*b);
    }
    if (a && b) {
      row["agree"] = *a == *b;
      agree_all &= *a == *b;
      tsv += *a == *b ? "\tyes" : "\tNO";
    }
    tsv += "\n";
    rows.push_back(row);
  }
  if (c.format == "json") {
    json j = {{"schema", 1}, {"sequence", name}, {"engine", engine}, {"rows", rows}, {"notes", notes}};
    emit(c, j.dump(2) + "\n");
  } else {
    emit(c, tsv);
    for (const auto& n : notes) std::cerr << "note: " << n << "\n";
  }
  return agree_all ? kOk : kFalse;
}

int cmd_logic(const std::string& path, const Common& c) {
  const std::string text = read_file(path);
  ScriptReport rep;
  try {
    rep = run_script(text, builtin_env(), compile_options(c));
  } catch (const ResourceError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (c.format == "json") {
    json stmts = json::array();
    for (const auto& r : rep.results) {
      json s = {{"index", r.index + 1},
                {"kind", r.statement.kind == Statement::Kind::Def ? "def" : "eval"},
                {"name", r.statement.name},
                {"states", r.states},
                {"seconds", r.seconds}};
      if (r.value) s["value"] = *r.value;
      stmts.push_back(s);
    }
    emit(c, json{{"schema", 1}, {"all_true", rep.all_true()}, {"statements", stmts}}.dump(2) + "\n");
  } else {
    std::string s;
    for (const auto& r : rep.results) {
      s += std::to_string(r.index + 1) + "\t" + (r.statement.kind == Statement::Kind::Def ? "def" : "eval") + "\t" +
           r.statement.name + "\t";
      s += r.value ? (*r.value ? "true" : "false") : std::to_string(r.states) + " states";
      s += "\n";
    }
    emit(c, s);
  }
  return rep.all_true() ? kOk : kFalse;
}

int cmd_verify(const std::string& only, bool corrupt_adder, const Common& c) {
  VerifyOptions o;
  o.only = only;
  o.corrupt_adder = corrupt_adder;
  const bool json_out = c.format == "json";
  const auto results = run_verify(o, [&](const CheckResult& r) {
    if (json_out) return;
    std::cerr << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  (" << r.seconds << " s)\n";
    for (const auto& d : r.details) std::cerr << "      " << d << "\n";
  });
  if (results.empty()) throw UsageError("no check matches '" + only + "'");
  bool ok = true;
  json checks = json::array();
  std::string tsv = "name\tstatus\tseconds\n";
  for (const auto& r : results) {
    ok &= r.passed;
    checks.push_back({{"name", r.name},
                      {"title", r.title},
                      {"status", r.passed ? "pass" : "fail"},
                      {"seconds", r.seconds},
                      {"details", r.details}});
    tsv += r.name + "\t" + (r.passed ? "pass" : "fail") + "\t" + std::to_string(r.seconds) + "\n";
  }
  emit(c, json_out ? json{{"schema", 1}, {"passed", ok}, {"checks", checks}}.dump(2) + "\n" : tsv);
  return ok ? kOk : kFalse;
}

const Predicate* find_named(const std::string& name, const PredicateEnv& extra) {
  if (const Predicate* p = extra.find_predicate(name)) return p;
  for (Family f : kFamilies)
    if (const Predicate* p = family_env(f).find_predicate(name)) return p;
  return nullptr;
}

int cmd_export(const std::string& name, const std::string& script, const Common& c) {
  PredicateEnv env = builtin_env();
  if (!script.empty()) {
    try {
      env = run_script(read_file(script), env, compile_options(c)).env;
    } catch (const ResourceError&) {
      throw;
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  const Predicate* p = find_named(name, env);
  if (!p) throw UsageError("no predicate named '" + name + "'");
  if (c.format == "dot") {
    emit(c, export_dot(p->automaton, name));
  } else if (c.format == "native" || c.format == "tsv") {
    std::string header = "# " + name + "(";
    for (std::size_t j = 0; j < p->params.size(); ++j) header += (j ? "," : "") + p->params[j];
    emit(c, header + ")\n" + export_native(p->automaton));
  } else {
    throw UsageError("export format must be native or dot");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tail Frobenius numbers of automatic sequences"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub, const std::string& formats) {
    sub->add_option("--out", common.out, "write output to FILE instead of stdout");
    sub->add_option("--format", common.format, "output format: " + formats);
    sub->add_option("--budget", common.budget, "state budget for automaton constructions")
        ->check(CLI::PositiveNumber);
  };

  std::string name, engine = "oracle", path, only, script;
  Natural max = 15;
  bool corrupt_adder = false;

  auto* seq = app.add_subcommand("seq", "print s_0..s_max");
  seq->add_option("name", name, "evil, odious, lower, upper, thue_morse, fib_word or pow2plus1")->required();
  seq->add_option("--max", max, "last index");
  add_common(seq, "tsv or json");

  auto* frob = app.add_subcommand("frob", "print the tail Frobenius numbers G(0..max)");
  frob->add_option("name", name, "evil, odious, lower, upper or pow2plus1")->required();
  frob->add_option("--max", max, "last index");
  frob->add_option("--engine", engine, "oracle, automaton or both")
      ->check(CLI::IsMember({"oracle", "automaton", "both"}));
  add_common(frob, "tsv or json");

  auto* logic = app.add_subcommand("logic", "run a script of def/eval statements");
  logic->add_option("script", path, "script file")->required();
  logic->add_option("--system", common.system, "system for formulas without ?msd_ (base2 or fib)");
  add_common(logic, "tsv or json");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--only", only, "run checks whose name or tag contains this text");
  verify->add_flag("--corrupt-adder", corrupt_adder, "test hook: validate a broken adder")->group("");
  add_common(verify, "tsv or json");

  auto* exp = app.add_subcommand("export", "write a defined predicate's automaton");
  exp->add_option("name", name, "predicate name")->required();
  exp->add_option("--script", script, "load extra definitions first");
  exp->add_option("--system", common.system, "system for formulas without ?msd_ (base2 or fib)");
  add_common(exp, "native or dot");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (exp->parsed() && common.format == "tsv") common.format = "native";
    if (!(common.format == "tsv" || common.format == "json" || (exp->parsed() && common.format == "dot") ||
          (exp->parsed() && common.format == "native")))
      throw UsageError("unsupported --format " + common.format);
    if (seq->parsed()) return cmd_seq(name, max, common);
    if (frob->parsed()) return cmd_frob(name, max, engine, common);
    if (logic->parsed()) return cmd_logic(path, common);
    if (verify->parsed()) return cmd_verify(only, corrupt_adder, common);
    if (exp->parsed()) return cmd_export(name, script, common);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
