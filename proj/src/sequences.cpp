#include "autofrob/sequences.hpp"

#include <bit>

#include "autofrob/error.hpp"
#include "autofrob/logic.hpp"

namespace autofrob {

Natural bit_sum(Natural n) { return static_cast<Natural>(std::popcount(n)); }

int thue_morse(Natural n) { return static_cast<int>(bit_sum(n) & 1u); }

Natural evil(Natural n) { return checked_add(checked_mul(2, n), static_cast<Natural>(thue_morse(n))); }

Natural odious(Natural n) { return checked_add(checked_mul(2, n), static_cast<Natural>(1 - thue_morse(n))); }

int fibonacci_word(Natural n) {
  const DigitWord w = encode(n, System::Fibonacci);
  return w.digits.back();
}

Natural isqrt(UInt128 x) {
  if (x == 0) return 0;
  // Newton from above: start at a power of two not below the root.
  int bits = 0;
  for (UInt128 t = x; t != 0; t >>= 1) ++bits;
  UInt128 r = UInt128{1} << ((bits + 1) / 2);
  while (true) {
    const UInt128 next = (r + x / r) / 2;
    if (next >= r) break;
    r = next;
  }
  return static_cast<Natural>(r);
}

Natural lower_wythoff(Natural n) {
  const UInt128 sq = UInt128{n} * n * 5;
  const UInt128 sum = UInt128{n} + isqrt(sq);
  const UInt128 l = sum / 2;
  if (l > UInt128{~Natural{0}}) throw OverflowError("lower Wythoff value exceeds 64 bits");
  return static_cast<Natural>(l);
}

Natural upper_wythoff(Natural n) { return checked_add(lower_wythoff(n), n); }

Natural pow2_plus1(Natural i) {
  if (i >= 64) throw OverflowError("2^" + std::to_string(i) + " + 1 exceeds 64 bits");
  return checked_add(Natural{1} << i, 1);
}

Dfao thue_morse_dfao() {
  Dfao d(System::Base2, 1, 2);
  for (State q = 0; q < 2; ++q) {
    d.set_output(q, static_cast<int>(q));
    d.set_next(q, 0, q);
    d.set_next(q, 1, 1 - q);
  }
  return d;
}

Dfao fibonacci_word_dfao() {
  // The output is the last digit read.
  Dfao d(System::Fibonacci, 1, 2);
  for (State q = 0; q < 2; ++q) {
    d.set_output(q, static_cast<int>(q));
    d.set_next(q, 0, 0);
    d.set_next(q, 1, 1);
  }
  return d;
}

namespace {

Dfa sync_from(std::string_view formula, std::vector<std::string> params, const PredicateEnv& env) {
  const PredicateEnv out = define(env, "sync", std::move(params), parse_formula(formula));
  return out.find_predicate("sync")->automaton;
}

}  // namespace

Dfa build_sync_evil() {
  return sync_from("(T[n]=@0 & s=2*n) | (T[n]=@1 & s=2*n+1)", {"n", "s"}, builtin_env());
}

Dfa build_sync_odious() {
  return sync_from("(T[n]=@1 & s=2*n) | (T[n]=@0 & s=2*n+1)", {"n", "s"}, builtin_env());
}

Dfa build_sync_lower() {
  return sync_from("?msd_fib ((s=0)&(n=0)) | Et,u $fibinc(u,n) & $shift(u,t) & $fibinc(t,s)", {"n", "s"},
                   builtin_env());
}

Dfa build_sync_upper() {
  return sync_from(
      "?msd_fib ((s=0)&(n=0)) | Et,u,v,w $fibinc(u,n) & $shift(u,t) & $shift(t,v) & $fibinc(v,w) & $fibinc(w,s)",
      {"n", "s"}, builtin_env());
}

std::optional<SequenceDef> sequence_by_name(std::string_view name) {
  if (name == "evil") return SequenceDef{"evil", System::Base2, evil, true, build_sync_evil};
  if (name == "odious") return SequenceDef{"odious", System::Base2, odious, true, build_sync_odious};
  if (name == "lower") return SequenceDef{"lower", System::Fibonacci, lower_wythoff, true, build_sync_lower};
  if (name == "upper") return SequenceDef{"upper", System::Fibonacci, upper_wythoff, true, build_sync_upper};
  if (name == "thue_morse")
    return SequenceDef{"thue_morse", System::Base2, [](Natural n) { return Natural(thue_morse(n)); }, false, {}};
  if (name == "fib_word")
    return SequenceDef{
        "fib_word", System::Fibonacci, [](Natural n) { return Natural(fibonacci_word(n)); }, false, {}};
  if (name == "pow2plus1") return SequenceDef{"pow2plus1", System::Base2, pow2_plus1, true, {}};
  return std::nullopt;
}

std::vector<std::string> sequence_names() {
  return {"evil", "odious", "lower", "upper", "thue_morse", "fib_word", "pow2plus1"};
}

}  // namespace autofrob
