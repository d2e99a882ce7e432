#include "autofrob/automata.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

#include "autofrob/error.hpp"
#include "subset_construction.hpp"

namespace autofrob {

TransitionSystem::TransitionSystem(System system, unsigned arity, std::size_t states)
    : system_(system), arity_(arity), states_(states) {
  if (arity > kMaxArity) throw ResourceError("arity " + std::to_string(arity) + " exceeds the track limit");
  delta_.assign(states * alphabet_size(), 0);
}

void TransitionSystem::set_initial(State q) {
  if (q >= states_) throw Error("initial state out of range");
  initial_ = q;
}

void TransitionSystem::set_next(State q, Letter a, State to) {
  if (q >= states_ || to >= states_ || a >= alphabet_size()) throw Error("transition out of range");
  delta_[q * alphabet_size() + a] = to;
}

State TransitionSystem::run(std::span<const Letter> word) const noexcept { return run(word, initial_); }

State TransitionSystem::run(std::span<const Letter> word, State from) const noexcept {
  State q = from;
  for (Letter a : word) q = next(q, a);
  return q;
}

State TransitionSystem::grow() {
  delta_.resize(delta_.size() + alphabet_size(), 0);
  return static_cast<State>(states_++);
}

Dfa::Dfa(System system, unsigned arity, std::size_t states)
    : TransitionSystem(system, arity, states), accepting_(states, 0) {}

State Dfa::add_state(bool accepting) {
  accepting_.push_back(accepting ? 1 : 0);
  return grow();
}

Dfao::Dfao(System system, unsigned arity, std::size_t states)
    : TransitionSystem(system, arity, states), output_(states, 0) {}

State Dfao::add_state(int symbol) {
  output_.push_back(symbol);
  return grow();
}

Nfa::Nfa(System sys, unsigned k, std::size_t states) : system(sys), arity(k), accepting(states, 0) {
  if (k > kMaxArity) throw ResourceError("arity " + std::to_string(k) + " exceeds the track limit");
  delta.resize(states * alphabet_size());
}

Nfa Nfa::from_dfa(const Dfa& dfa) {
  Nfa n(dfa.system(), dfa.arity(), dfa.state_count());
  n.initial = {dfa.initial()};
  for (State q = 0; q < dfa.state_count(); ++q) {
    n.accepting[q] = dfa.accepting(q);
    for (Letter a = 0; a < dfa.alphabet_size(); ++a) n.successors(q, a).push_back(dfa.next(q, a));
  }
  return n;
}

bool apply(BoolOp op, bool a, bool b) noexcept {
  switch (op) {
    case BoolOp::And: return a && b;
    case BoolOp::Or: return a || b;
    case BoolOp::Implies: return !a || b;
    case BoolOp::Iff: return a == b;
    case BoolOp::Xor: return a != b;
    case BoolOp::AndNot: return a && !b;
  }
  return false;
}

Dfa empty_dfa(System system, unsigned arity) { return Dfa(system, arity, 1); }

Dfa universal_dfa(System system, unsigned arity) {
  Dfa d(system, arity, 1);
  d.set_accepting(0, true);
  return d;
}

bool accepts(const Dfa& a, std::span<const Letter> word) { return a.accepting(a.run(word)); }

bool accepts(const Dfa& a, const TupleWord& word) {
  if (word.system != a.system()) throw Error("accepts: numeration system mismatch");
  if (word.arity() != a.arity()) throw Error("accepts: word has " + std::to_string(word.arity()) +
                                             " tracks, automaton expects " + std::to_string(a.arity()));
  auto cols = word.columns();
  return accepts(a, cols);
}

bool accepts_values(const Dfa& a, std::span<const Natural> values) {
  return accepts(a, encode_tuple(values, a.system()));
}

Dfa product(const Dfa& a, const Dfa& b, BoolOp op, const Budget& budget) {
  if (a.system() != b.system()) throw Error("product: numeration system mismatch");
  if (a.arity() != b.arity()) throw Error("product: arity mismatch");
  const std::size_t sigma = a.alphabet_size();
  Dfa out(a.system(), a.arity(), 0);
  std::unordered_map<std::uint64_t, State> ids;
  std::vector<std::pair<State, State>> pairs;
  auto intern = [&](State p, State q) {
    const std::uint64_t key = (std::uint64_t{p} << 32) | q;
    auto [it, fresh] = ids.try_emplace(key, static_cast<State>(pairs.size()));
    if (fresh) {
      if (pairs.size() >= budget.max_states) throw ResourceError("product exceeded the state budget");
      pairs.emplace_back(p, q);
      out.add_state(apply(op, a.accepting(p), b.accepting(q)));
    }
    return it->second;
  };
  out.set_initial(intern(a.initial(), b.initial()));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [p, q] = pairs[i];
    for (Letter c = 0; c < sigma; ++c) {
      const State to = intern(a.next(p, c), b.next(q, c));
      out.set_next(static_cast<State>(i), c, to);
    }
  }
  return minimize(out);
}

Dfa complement(const Dfa& a) {
  Dfa out = a;
  for (State q = 0; q < out.state_count(); ++q) out.set_accepting(q, !a.accepting(q));
  return out;
}

Dfa cylindrify(const Dfa& a, unsigned new_arity, std::span<const unsigned> track_map) {
  if (track_map.size() != a.arity()) throw Error("cylindrify: track map size differs from arity");
  for (unsigned t : track_map)
    if (t >= new_arity) throw Error("cylindrify: track index out of range");
  Dfa out(a.system(), new_arity, a.state_count());
  out.set_initial(a.initial());
  const std::size_t sigma = out.alphabet_size();
  std::vector<Letter> gather(sigma, 0);
  for (Letter c = 0; c < sigma; ++c)
    for (std::size_t j = 0; j < track_map.size(); ++j)
      if (c & (Letter{1} << track_map[j])) gather[c] |= Letter{1} << j;
  for (State q = 0; q < a.state_count(); ++q) {
    out.set_accepting(q, a.accepting(q));
    for (Letter c = 0; c < sigma; ++c) out.set_next(q, c, a.next(q, gather[c]));
  }
  return out;
}

Dfa determinize(const Nfa& n, const Budget& budget) {
  std::vector<State> init = n.initial;
  return detail::subset_construction(
      n.system, n.arity, std::move(init), n.state_count(),
      [&](State q) { return n.accepting[q] != 0; },
      [&](State q, Letter c, auto&& emit) {
        for (State t : n.successors(q, c)) emit(t);
      },
      budget);
}

Dfa project_existential(const Dfa& a, unsigned track, const Budget& budget) {
  if (track >= a.arity()) throw Error("project_existential: unknown track " + std::to_string(track));
  const unsigned k = a.arity() - 1;
  const Letter low_mask = (Letter{1} << track) - 1;
  // Re-insert the erased digit at position `track`.
  auto widen = [&](Letter c, Letter digit) {
    return (c & low_mask) | (digit << track) | ((c & ~low_mask) << 1);
  };
  // Leading-zero fixup: a witness may be longer than the remaining tracks, so every
  // state reachable from the initial state on columns that are zero outside the
  // erased track is also initial.
  std::vector<std::uint8_t> seen(a.state_count(), 0);
  std::vector<State> init{a.initial()};
  seen[a.initial()] = 1;
  for (std::size_t i = 0; i < init.size(); ++i) {
    for (Letter d = 0; d < 2; ++d) {
      const State t = a.next(init[i], widen(0, d));
      if (!seen[t]) {
        seen[t] = 1;
        init.push_back(t);
      }
    }
  }
  Dfa det = detail::subset_construction(
      a.system(), k, std::move(init), a.state_count(), [&](State q) { return a.accepting(q); },
      [&](State q, Letter c, auto&& emit) {
        emit(a.next(q, widen(c, 0)));
        emit(a.next(q, widen(c, 1)));
      },
      budget);
  return minimize(det);
}

bool is_empty(const Dfa& a) {
  std::vector<std::uint8_t> seen(a.state_count(), 0);
  std::vector<State> stack{a.initial()};
  seen[a.initial()] = 1;
  while (!stack.empty()) {
    const State q = stack.back();
    stack.pop_back();
    if (a.accepting(q)) return false;
    for (Letter c = 0; c < a.alphabet_size(); ++c) {
      const State t = a.next(q, c);
      if (!seen[t]) {
        seen[t] = 1;
        stack.push_back(t);
      }
    }
  }
  return true;
}

bool equivalent(const Dfa& a, const Dfa& b) { return is_empty(product(a, b, BoolOp::Xor)); }

Dfa valid_tuples(System system, unsigned arity) {
  if (system == System::Base2) return universal_dfa(system, arity);
  // State = set of tracks whose previous digit was 1; the extra last state is dead.
  const std::size_t masks = std::size_t{1} << arity;
  Dfa d(system, arity, masks + 1);
  const State dead = static_cast<State>(masks);
  for (State m = 0; m <= dead; ++m) {
    d.set_accepting(m, m != dead);
    for (Letter c = 0; c < d.alphabet_size(); ++c) d.set_next(m, c, (m == dead || (m & c)) ? dead : c);
  }
  return minimize(d);
}

Dfa restrict_to_valid(const Dfa& a, const Budget& budget) {
  if (a.system() == System::Base2) return a;
  return product(a, valid_tuples(a.system(), a.arity()), BoolOp::And, budget);
}

std::vector<std::uint8_t> live_states(const Dfa& a) {
  const std::size_t n = a.state_count();
  const std::size_t sigma = a.alphabet_size();
  std::vector<std::uint32_t> start(n + 1, 0);
  for (State q = 0; q < n; ++q)
    for (Letter c = 0; c < sigma; ++c) ++start[a.next(q, c) + 1];
  for (std::size_t i = 0; i < n; ++i) start[i + 1] += start[i];
  std::vector<State> preds(start[n]);
  auto fill = start;
  for (State q = 0; q < n; ++q)
    for (Letter c = 0; c < sigma; ++c) preds[fill[a.next(q, c)]++] = q;
  std::vector<std::uint8_t> live(n, 0);
  std::vector<State> stack;
  for (State q = 0; q < n; ++q)
    if (a.accepting(q)) {
      live[q] = 1;
      stack.push_back(q);
    }
  while (!stack.empty()) {
    const State q = stack.back();
    stack.pop_back();
    for (std::uint32_t i = start[q]; i < start[q + 1]; ++i)
      if (!live[preds[i]]) {
        live[preds[i]] = 1;
        stack.push_back(preds[i]);
      }
  }
  return live;
}

namespace {

std::vector<Natural> decode_columns(System system, unsigned arity, std::span<const Letter> word) {
  std::vector<Natural> values(arity, 0);
  const std::size_t len = word.size();
  for (std::size_t i = 0; i < len; ++i)
    for (unsigned j = 0; j < arity; ++j)
      if (word[i] & (Letter{1} << j)) values[j] = checked_add(values[j], digit_weight(system, len - 1 - i));
  return values;
}

// Letters ordered so that the digit on track 0 is compared first.
std::vector<Letter> track_major_letter_order(unsigned arity) {
  std::vector<Letter> order(std::size_t{1} << arity);
  for (Letter c = 0; c < order.size(); ++c) order[c] = c;
  auto key = [arity](Letter c) {
    Letter r = 0;
    for (unsigned j = 0; j < arity; ++j)
      if (c & (Letter{1} << j)) r |= Letter{1} << (arity - 1 - j);
    return r;
  };
  std::sort(order.begin(), order.end(), [&](Letter x, Letter y) { return key(x) < key(y); });
  return order;
}

}  // namespace

std::vector<std::vector<Natural>> enumerate_accepted(const Dfa& a, std::size_t limit) {
  std::vector<std::vector<Natural>> out;
  if (limit == 0) return out;
  const std::size_t n = a.state_count();
  const auto order = track_major_letter_order(a.arity());
  // exact[r][q]: some word of exactly r letters leads from q to acceptance.
  std::vector<std::vector<std::uint8_t>> exact{std::vector<std::uint8_t>(n)};
  for (State q = 0; q < n; ++q) exact[0][q] = a.accepting(q);
  auto ensure = [&](std::size_t r) {
    while (exact.size() <= r) {
      const auto& prev = exact.back();
      std::vector<std::uint8_t> cur(n, 0);
      for (State q = 0; q < n; ++q)
        for (Letter c = 0; c < a.alphabet_size() && !cur[q]; ++c) cur[q] = prev[a.next(q, c)];
      exact.push_back(std::move(cur));
    }
  };

  std::vector<Letter> word;
  std::size_t empty_run = 0;
  for (std::size_t len = 1; out.size() < limit && empty_run <= n + 1; ++len) {
    ensure(len);
    const std::size_t before = out.size();
    word.assign(len, 0);
    // Depth-first over words of this length in lexicographic order.
    auto dfs = [&](auto&& self, std::size_t pos, State q) -> void {
      if (out.size() >= limit) return;
      if (pos == len) {
        out.push_back(decode_columns(a.system(), a.arity(), word));
        return;
      }
      for (Letter c : order) {
        if (pos == 0 && len > 1 && c == 0) continue;  // minimal padding only
        const State t = a.next(q, c);
        if (!exact[len - pos - 1][t]) continue;
        word[pos] = c;
        self(self, pos + 1, t);
        if (out.size() >= limit) return;
      }
    };
    if (exact[len][a.initial()]) dfs(dfs, 0, a.initial());
    empty_run = out.size() == before ? empty_run + 1 : 0;
  }
  return out;
}

std::vector<std::vector<Natural>> solve(const Dfa& a, std::span<const std::optional<Natural>> fixed,
                                        std::size_t length, std::size_t limit) {
  if (fixed.size() != a.arity()) throw Error("solve: expected one entry per track");
  const std::size_t n = a.state_count();
  // Per column: which tracks are fixed and their digits.
  Letter fixed_mask = 0;
  std::vector<Letter> fixed_bits(length, 0);
  for (unsigned j = 0; j < a.arity(); ++j) {
    if (!fixed[j]) continue;
    fixed_mask |= Letter{1} << j;
    const DigitWord w = encode(*fixed[j], a.system());
    if (w.size() > length) throw Error("solve: fixed value does not fit in the requested length");
    const std::size_t pad = length - w.size();
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w.digits[i]) fixed_bits[pad + i] |= Letter{1} << j;
  }
  const Letter free_mask = static_cast<Letter>(a.alphabet_size() - 1) & ~fixed_mask;
  auto for_each_letter = [&](std::size_t pos, auto&& fn) {
    Letter sub = free_mask;
    while (true) {
      if (!fn(static_cast<Letter>(sub | fixed_bits[pos]))) return;
      if (sub == 0) break;
      sub = (sub - 1) & free_mask;
    }
  };
  // back[p][q]: acceptance reachable from q reading columns p..length-1.
  std::vector<std::vector<std::uint8_t>> back(length + 1, std::vector<std::uint8_t>(n, 0));
  for (State q = 0; q < n; ++q) back[length][q] = a.accepting(q);
  for (std::size_t p = length; p-- > 0;)
    for (State q = 0; q < n; ++q)
      for_each_letter(p, [&](Letter c) {
        if (back[p + 1][a.next(q, c)]) back[p][q] = 1;
        return !back[p][q];
      });

  std::vector<std::vector<Natural>> out;
  if (!back[0][a.initial()]) return out;
  std::vector<Letter> word(length, 0);
  auto dfs = [&](auto&& self, std::size_t pos, State q) -> void {
    if (pos == length) {
      out.push_back(decode_columns(a.system(), a.arity(), word));
      return;
    }
    for_each_letter(pos, [&](Letter c) {
      const State t = a.next(q, c);
      if (back[pos + 1][t]) {
        word[pos] = c;
        self(self, pos + 1, t);
      }
      return out.size() < limit;
    });
  };
  dfs(dfs, 0, a.initial());
  return out;
}

int output_of(const Dfao& d, Natural n) {
  if (d.arity() != 1) throw Error("output_of: output automaton must read a single track");
  const DigitWord w = encode(n, d.system());
  State q = d.initial();
  for (auto digit : w.digits) q = d.next(q, digit);
  return d.output(q);
}

Dfa dfao_to_dfa(const Dfao& d, int symbol, bool negate) {
  Dfa out(d.system(), d.arity(), d.state_count());
  out.set_initial(d.initial());
  for (State q = 0; q < d.state_count(); ++q) {
    out.set_accepting(q, (d.output(q) == symbol) != negate);
    for (Letter c = 0; c < d.alphabet_size(); ++c) out.set_next(q, c, d.next(q, c));
  }
  return out;
}

bool has_leading_zero_closure(const Dfa& a) {
  Dfa shifted = a;
  shifted.set_initial(a.next(a.initial(), 0));
  return equivalent(a, shifted);
}

}  // namespace autofrob
