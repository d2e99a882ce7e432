#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "autofrob/automata.hpp"

namespace autofrob {

enum class Relation { Eq, Ne, Lt, Le, Gt, Ge };

std::string_view relation_symbol(Relation rel);
bool holds(std::int64_t lhs, Relation rel, std::int64_t rhs) noexcept;
Relation flip(Relation rel) noexcept;  // a REL b  <=>  b flip(REL) a
Relation negate(Relation rel) noexcept;

/// Running value of an msd-first Fibonacci linear form: the digits read so far
/// are worth a*F_{r+2} + b*F_{r+1} when r digits remain.
struct CarryState {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend bool operator==(const CarryState&, const CarryState&) = default;
};

enum class Forced { No, Greater, Less };

/// Whether every completion of `s` (any remaining length, any column values
/// in [-neg_sum, pos_sum]) ends strictly above or strictly below `constant`.
Forced forced_outcome(CarryState s, std::int64_t pos_sum, std::int64_t neg_sum, std::int64_t constant) noexcept;

/// Recognizer of  sum_j coeffs[j] * x_j  REL  constant  over one track per coefficient.
Dfa build_linear(System system, std::span<const std::int64_t> coeffs, Relation rel, std::int64_t constant,
                 const Budget& budget = {});

/// Tracks (x, y, z), accepting x + y = z.
Dfa build_adder(System system);

/// Tracks (x, y), accepting x REL y by the first differing column.
Dfa build_comparison(System system, Relation rel);

/// Tracks (x, y), accepting y = c * x.
Dfa build_const_multiple(System system, Natural c, const Budget& budget = {});

/// One track accepting exactly the value c (with any number of leading zeros).
Dfa build_constant(System system, Natural c);

/// Fibonacci tracks (x, y), accepting y = x + 1; built from the suffix identities
/// [x00(10)^i] + 1 = [x010^{2i}] and [x0(01)^i] + 1 = [x010^{2i-1}].
Dfa build_fib_incrementer();

/// Fibonacci tracks (x, y), accepting y whose representation is x's followed by 0.
Dfa build_fib_shifter();

struct Mismatch {
  std::vector<Natural> tuple;
  bool expected = false;
};

struct ValidationReport {
  std::size_t checked = 0;
  std::size_t mismatch_count = 0;
  std::vector<Mismatch> mismatches;  // first few, for diagnostics
  bool ok() const noexcept { return mismatch_count == 0; }
};

/// Exhaustive comparison against `oracle` on every tuple with entries in [0, range].
ValidationReport validate_relation(const Dfa& a, const std::function<bool(std::span<const Natural>)>& oracle,
                                   Natural range);

/// Checks that for every input tuple in [0, range]^(k-1) the automaton accepts exactly
/// one value on the last track, namely f(inputs).
ValidationReport validate_function(const Dfa& a, const std::function<Natural(std::span<const Natural>)>& f,
                                   Natural range);

}  // namespace autofrob
