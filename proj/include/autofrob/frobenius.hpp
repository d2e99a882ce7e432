#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "autofrob/automata.hpp"
#include "autofrob/predicates.hpp"
#include "autofrob/sequences.hpp"

namespace autofrob {

/// Sorted distinct positive generators. Zero is dropped on construction: it
/// contributes nothing to any combination.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  explicit GeneratorSet(std::vector<Natural> values);

  const std::vector<Natural>& values() const noexcept { return values_; }
  bool empty() const noexcept { return values_.empty(); }
  Natural min() const;
  Natural gcd() const noexcept;
  bool contains(Natural g) const noexcept;

 private:
  std::vector<Natural> values_;
};

/// coefficients[j] copies of generators[j].
struct WeightedCombination {
  std::vector<Natural> generators;
  std::vector<Natural> coefficients;

  Natural value() const;
  Natural weight() const;
};

bool is_representable(Natural n, const GeneratorSet& s, WeightedCombination* witness = nullptr);

/// Largest non-representable integer, or -1 when 1 is a generator. Uses the
/// least representable value in each residue class modulo the smallest generator.
std::int64_t frobenius_finite(const GeneratorSet& s);

struct TailFrobeniusResult {
  Natural index = 0;
  std::int64_t value = -1;
  /// Generators s_j <= bound that took part in the search.
  GeneratorSet generators_used;
  /// value+1, ..., value+certificate_length are all representable, with
  /// certificate_length = the smallest generator.
  Natural certificate_length = 0;
  Natural bound = 0;
  /// Set when the value is a fixed table convention rather than the search result.
  std::string convention;
};

struct TailOptions {
  Natural max_bound = Natural{1} << 34;
  /// Terms checked for a common divisor before searching.
  std::size_t gcd_window = 32;
};

/// Frobenius number of {s_i, s_{i+1}, ...} with a representability certificate.
TailFrobeniusResult tail_frobenius(const SequenceDef& seq, Natural i, const TailOptions& options = {});

/// Same number read off the synchronized g predicate of the family.
std::int64_t tail_frobenius_via_automaton(Family f, Natural i);

/// The tabulated G_U(0) is -1, although the tail {0, 2, 5, 7, ...} misses 1 and 3.
/// Both engines report that listed value for index 0 of the upper sequence.
std::optional<std::int64_t> index_zero_convention(std::string_view sequence);

/// Representation of n over 2^i+1, ..., 2^{2i}+1 for
/// 2^{2i}+2^i+1 < n <= 2^{2i}+2^{i+1}+2, built by repeatedly trading one
/// copy of the largest used generator 2^j+1 for two copies of 2^{j-1}+1.
WeightedCombination counterexample_witness(Natural i, Natural n);
/// Witnesses for every n in the window, in increasing order of n.
std::vector<WeightedCombination> counterexample_trace(Natural i);

/// Fibonacci automaton with output g(n+1) - g(n), built from one predicate per
/// difference value. Invalid inputs output 0.
Dfao difference_dfao(Family f);
std::vector<int> difference_values(Family f);

}  // namespace autofrob
