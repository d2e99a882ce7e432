#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "autofrob/numeration.hpp"

namespace autofrob {

using State = std::uint32_t;
/// A column of k digits; bit j holds the digit on track j.
using Letter = std::uint32_t;

inline constexpr unsigned kMaxArity = 16;

/// Caps the number of states any single construction may create.
struct Budget {
  std::size_t max_states = 1'000'000;
};

/// Deterministic, total transition structure over the k-track alphabet {0,1}^k.
class TransitionSystem {
 public:
  TransitionSystem() = default;
  TransitionSystem(System system, unsigned arity, std::size_t states);

  System system() const noexcept { return system_; }
  unsigned arity() const noexcept { return arity_; }
  std::size_t alphabet_size() const noexcept { return std::size_t{1} << arity_; }
  std::size_t state_count() const noexcept { return states_; }
  State initial() const noexcept { return initial_; }
  void set_initial(State q);

  State next(State q, Letter a) const noexcept { return delta_[q * alphabet_size() + a]; }
  void set_next(State q, Letter a, State to);
  State run(std::span<const Letter> word) const noexcept;
  State run(std::span<const Letter> word, State from) const noexcept;

  const std::vector<State>& transitions() const noexcept { return delta_; }

 protected:
  State grow();

 private:
  System system_ = System::Base2;
  unsigned arity_ = 0;
  std::size_t states_ = 0;
  State initial_ = 0;
  std::vector<State> delta_;
};

/// Recognizer of a relation on N^k via padded msd-first parallel representations.
class Dfa : public TransitionSystem {
 public:
  Dfa() = default;
  /// Creates `states` states; every transition leads to state 0 and nothing accepts.
  Dfa(System system, unsigned arity, std::size_t states);

  bool accepting(State q) const noexcept { return accepting_[q] != 0; }
  void set_accepting(State q, bool value) { accepting_[q] = value ? 1 : 0; }
  State add_state(bool accepting = false);

 private:
  std::vector<std::uint8_t> accepting_;
};

/// Deterministic automaton with output: the symbol of the last state reached.
class Dfao : public TransitionSystem {
 public:
  Dfao() = default;
  Dfao(System system, unsigned arity, std::size_t states);

  int output(State q) const noexcept { return output_[q]; }
  void set_output(State q, int symbol) { output_[q] = symbol; }
  State add_state(int symbol = 0);

 private:
  std::vector<int> output_;
};

/// Nondeterministic automaton with a set of initial states.
struct Nfa {
  System system = System::Base2;
  unsigned arity = 0;
  std::vector<State> initial;
  std::vector<std::vector<State>> delta;  // indexed by state * alphabet + letter
  std::vector<std::uint8_t> accepting;

  Nfa(System sys, unsigned k, std::size_t states);
  std::size_t state_count() const noexcept { return accepting.size(); }
  std::size_t alphabet_size() const noexcept { return std::size_t{1} << arity; }
  std::vector<State>& successors(State q, Letter a) { return delta[q * alphabet_size() + a]; }
  const std::vector<State>& successors(State q, Letter a) const { return delta[q * alphabet_size() + a]; }

  static Nfa from_dfa(const Dfa& dfa);
};

enum class BoolOp { And, Or, Implies, Iff, Xor, AndNot };

bool apply(BoolOp op, bool a, bool b) noexcept;

Dfa empty_dfa(System system, unsigned arity);
Dfa universal_dfa(System system, unsigned arity);

bool accepts(const Dfa& a, std::span<const Letter> word);
/// Throws Error when the word's system or arity differs from the automaton's.
bool accepts(const Dfa& a, const TupleWord& word);
/// Accepts the padded canonical encoding of `values`.
bool accepts_values(const Dfa& a, std::span<const Natural> values);

/// Synchronous product of two automata with the same system and arity.
Dfa product(const Dfa& a, const Dfa& b, BoolOp op, const Budget& budget = {});
Dfa complement(const Dfa& a);

/// Re-indexes tracks into a wider alphabet. Track j of `a` becomes track `track_map[j]`
/// of the result; tracks that are not images of any old track are unconstrained.
Dfa cylindrify(const Dfa& a, unsigned new_arity, std::span<const unsigned> track_map);

/// Existential projection of one track, followed by the leading-zero fixup,
/// subset construction and minimization.
Dfa project_existential(const Dfa& a, unsigned track, const Budget& budget = {});

Dfa determinize(const Nfa& n, const Budget& budget = {});

/// Minimal total DFA, states numbered in BFS order from the initial state.
Dfa minimize(const Dfa& a);
Dfao minimize(const Dfao& a);

bool is_empty(const Dfa& a);
bool equivalent(const Dfa& a, const Dfa& b);

/// Restricts every track to canonical digit strings (no factor 11) in the
/// Fibonacci system; returns the automaton unchanged in base 2.
Dfa restrict_to_valid(const Dfa& a, const Budget& budget = {});

/// Accepts exactly the tuples whose every track is a valid representation.
Dfa valid_tuples(System system, unsigned arity);

/// States with an accepted continuation. Acceptance is at the end of the word.
std::vector<std::uint8_t> live_states(const Dfa& a);

/// The first `limit` accepted tuples in shortlex order of their minimally padded
/// column words (numeric order when the arity is 1). Each tuple appears once.
std::vector<std::vector<Natural>> enumerate_accepted(const Dfa& a, std::size_t limit);

/// All accepted tuples of exactly `length` columns that agree with the fixed
/// entries of `fixed`; unset entries range over every digit string. Stops after `limit`.
std::vector<std::vector<Natural>> solve(const Dfa& a, std::span<const std::optional<Natural>> fixed,
                                        std::size_t length, std::size_t limit = SIZE_MAX);

int output_of(const Dfao& d, Natural n);

/// Accepting exactly where the output equals (or, if `negate`, differs from) `symbol`.
Dfa dfao_to_dfa(const Dfao& d, int symbol, bool negate = false);

/// True if prepending one all-zero column never changes acceptance.
bool has_leading_zero_closure(const Dfa& a);

}  // namespace autofrob
