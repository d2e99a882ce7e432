#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "autofrob/arith.hpp"
#include "autofrob/automata.hpp"

namespace autofrob {

/// sum of coefficient * variable, plus a constant. Coefficients are never zero.
struct LinearTerm {
  std::map<std::string, std::int64_t> coeffs;
  std::int64_t constant = 0;

  static LinearTerm variable(std::string name);
  static LinearTerm number(std::int64_t value);

  bool is_constant() const noexcept { return coeffs.empty(); }
  /// A single variable with coefficient 1 and no constant.
  std::optional<std::string> as_variable() const;

  LinearTerm& operator+=(const LinearTerm& other);
  LinearTerm& operator-=(const LinearTerm& other);
  LinearTerm& operator*=(std::int64_t factor);
  friend bool operator==(const LinearTerm&, const LinearTerm&) = default;
};

struct Formula {
  enum class Kind { True, False, Exists, ForAll, Not, And, Or, Implies, Iff, Compare, SequenceAtom, Call };

  Kind kind = Kind::True;
  std::vector<std::string> vars;     // quantified variables
  std::vector<Formula> children;     // operands / quantifier body
  LinearTerm lhs, rhs;               // Compare
  Relation rel = Relation::Eq;       // Compare, SequenceAtom (= or !=)
  std::string name;                  // SequenceAtom, Call
  std::vector<LinearTerm> args;      // SequenceAtom index (one term), Call arguments
  int output = 0;                    // SequenceAtom
  std::size_t offset = 0;            // source position
};

struct ParsedFormula {
  System system = System::Base2;
  Formula root;
};

/// Walnut-style syntax: E/A quantifiers, ~ & | => <=>, comparisons over linear
/// terms, NAME[term]=@c sequence atoms, $name(args) predicate calls, and an
/// optional leading ?msd_fib / ?msd_2 system selector (else `default_system`).
ParsedFormula parse_formula(std::string_view text, System default_system = System::Base2);

std::set<std::string> free_variables(const Formula& f);

/// Automaton over the relation's variables; track j carries vars[j].
struct CompiledRelation {
  std::vector<std::string> vars;
  Dfa automaton;
};

struct Predicate {
  std::vector<std::string> params;  // track order of `automaton`
  Dfa automaton;
};

/// Named predicates and output-automaton sequences. Copies share storage;
/// every update returns a new environment.
class PredicateEnv {
 public:
  PredicateEnv define(const std::string& name, Predicate p) const;
  PredicateEnv with_sequence(const std::string& name, Dfao d) const;

  const Predicate* find_predicate(std::string_view name) const;
  const Dfao* find_sequence(std::string_view name) const;
  std::vector<std::string> predicate_names() const;

 private:
  using PredicateMap = std::map<std::string, std::shared_ptr<const Predicate>, std::less<>>;
  using SequenceMap = std::map<std::string, std::shared_ptr<const Dfao>, std::less<>>;
  std::shared_ptr<const PredicateMap> predicates_ = std::make_shared<PredicateMap>();
  std::shared_ptr<const SequenceMap> sequences_ = std::make_shared<SequenceMap>();
};

/// T (Thue-Morse, base 2), F (Fibonacci word), fibinc and shift (Fibonacci).
PredicateEnv builtin_env();

struct CompileOptions {
  Budget budget;
  /// System of formula text without a ?msd_ selector.
  System default_system = System::Base2;
};

CompiledRelation compile(const ParsedFormula& f, const PredicateEnv& env, const CompileOptions& options = {});
CompiledRelation compile(std::string_view text, const PredicateEnv& env, const CompileOptions& options = {});

/// Truth value of a formula without free variables.
bool decide(const ParsedFormula& f, const PredicateEnv& env, const CompileOptions& options = {});
bool decide(std::string_view text, const PredicateEnv& env, const CompileOptions& options = {});

/// Compiles `f` and stores it under `name`. Empty `params` means the free
/// variables in alphabetical order; parameters not free in `f` are unconstrained.
PredicateEnv define(const PredicateEnv& env, const std::string& name, std::vector<std::string> params,
                    const ParsedFormula& f, const CompileOptions& options = {});
PredicateEnv define(const PredicateEnv& env, const std::string& name, std::string_view text,
                    const CompileOptions& options = {});

// Scripts: statements `def NAME "formula":` and `eval NAME "formula":`,
// '#' starts a comment outside quotes.

struct Statement {
  enum class Kind { Def, Eval };
  Kind kind = Kind::Eval;
  std::string name;
  std::string formula;
  std::size_t line = 0;
};

std::vector<Statement> parse_script(std::string_view text);

struct StatementResult {
  std::size_t index = 0;
  Statement statement;
  std::optional<bool> value;  // eval only
  std::size_t states = 0;
  double seconds = 0.0;
};

struct ScriptReport {
  std::vector<StatementResult> results;
  PredicateEnv env;
  bool all_true() const;
};

/// Runs statements in order. Errors are rethrown as Error naming the statement.
ScriptReport run_script(std::string_view text, PredicateEnv env, const CompileOptions& options = {});

}  // namespace autofrob
