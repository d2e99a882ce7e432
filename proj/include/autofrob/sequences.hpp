#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autofrob/automata.hpp"
#include "autofrob/numeration.hpp"

namespace autofrob {

Natural bit_sum(Natural n);
/// Parity of the binary digit sum.
int thue_morse(Natural n);

/// n-th evil number (even binary digit sum), 2n + t(n).
Natural evil(Natural n);
/// n-th odious number (odd binary digit sum), 2n + 1 - t(n).
Natural odious(Natural n);

/// Last digit of the Zeckendorf representation of n: 0,1,0,0,1,0,1,0,...
/// j >= 1 is a lower Wythoff number exactly when fibonacci_word(j - 1) = 0.
int fibonacci_word(Natural n);

__extension__ typedef unsigned __int128 UInt128;

Natural isqrt(UInt128 x);

/// floor(n * phi), computed as (n + isqrt(5 n^2)) / 2.
Natural lower_wythoff(Natural n);
/// floor(n * phi^2) = lower_wythoff(n) + n.
Natural upper_wythoff(Natural n);

/// 2^i + 1.
Natural pow2_plus1(Natural i);

Dfao thue_morse_dfao();
Dfao fibonacci_word_dfao();

/// Synchronized automata accepting (n, s_n).
Dfa build_sync_evil();
Dfa build_sync_odious();
Dfa build_sync_lower();
Dfa build_sync_upper();

struct SequenceDef {
  std::string name;
  System system = System::Base2;
  std::function<Natural(Natural)> value;
  /// Whether the values are strictly increasing (the Frobenius sequences are).
  bool increasing = true;
  /// Synchronized automaton for (n, value(n)); empty when the sequence has none.
  std::function<Dfa()> sync;
};

/// evil, odious, lower, upper, thue_morse, fib_word, pow2plus1.
std::optional<SequenceDef> sequence_by_name(std::string_view name);
std::vector<std::string> sequence_names();

}  // namespace autofrob
