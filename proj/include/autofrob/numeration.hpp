#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace autofrob {

using Natural = std::uint64_t;

/// Positional numeration systems over the digit set {0,1}, most significant digit first.
enum class System { Base2, Fibonacci };

std::string_view system_name(System system);
System parse_system(std::string_view name);

/// A digit string in a numeration system. Digits are stored msd-first.
struct DigitWord {
  System system = System::Base2;
  std::vector<std::uint8_t> digits;

  static DigitWord parse(System system, std::string_view text);
  std::string to_string() const;
  std::size_t size() const noexcept { return digits.size(); }

  friend bool operator==(const DigitWord&, const DigitWord&) = default;
};

/// k digit words of a common length, padded with leading zeros.
struct TupleWord {
  System system = System::Base2;
  std::vector<DigitWord> tracks;

  std::size_t length() const noexcept { return tracks.empty() ? 0 : tracks.front().size(); }
  std::size_t arity() const noexcept { return tracks.size(); }
  /// Column letters: bit j of letter i is the i-th digit of track j.
  std::vector<std::uint32_t> columns() const;
};

/// Weight of the j-th digit from the right (j = 0 is the last digit).
Natural digit_weight(System system, std::size_t position);

/// Classical Fibonacci numbers with F_2 = 1, F_3 = 2. Throws OverflowError past 64 bits.
Natural fibonacci_number(unsigned index);

DigitWord encode(Natural n, System system);
Natural decode(const DigitWord& word);
bool is_canonical(const DigitWord& word);

/// Re-encodes the value of an arbitrary word canonically.
DigitWord normalize(const DigitWord& word);

/// Left-pads words to a common length. Throws Error on mixed systems.
TupleWord pad_align(std::span<const DigitWord> words);

/// Canonical encoding of each value, padded to a common length of at least `min_length`.
TupleWord encode_tuple(std::span<const Natural> values, System system, std::size_t min_length = 0);

/// Radix (length, then lexicographic) comparison of two digit words.
int radix_compare(const DigitWord& a, const DigitWord& b);

Natural checked_add(Natural a, Natural b);
Natural checked_mul(Natural a, Natural b);

}  // namespace autofrob
