#include "autofrob/arith.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "autofrob/error.hpp"

namespace autofrob {

std::string_view relation_symbol(Relation rel) {
  switch (rel) {
    case Relation::Eq: return "=";
    case Relation::Ne: return "!=";
    case Relation::Lt: return "<";
    case Relation::Le: return "<=";
    case Relation::Gt: return ">";
    case Relation::Ge: return ">=";
  }
  return "?";
}

bool holds(std::int64_t lhs, Relation rel, std::int64_t rhs) noexcept {
  switch (rel) {
    case Relation::Eq: return lhs == rhs;
    case Relation::Ne: return lhs != rhs;
    case Relation::Lt: return lhs < rhs;
    case Relation::Le: return lhs <= rhs;
    case Relation::Gt: return lhs > rhs;
    case Relation::Ge: return lhs >= rhs;
  }
  return false;
}

Relation flip(Relation rel) noexcept {
  switch (rel) {
    case Relation::Lt: return Relation::Gt;
    case Relation::Le: return Relation::Ge;
    case Relation::Gt: return Relation::Lt;
    case Relation::Ge: return Relation::Le;
    default: return rel;
  }
}

Relation negate(Relation rel) noexcept {
  switch (rel) {
    case Relation::Eq: return Relation::Ne;
    case Relation::Ne: return Relation::Eq;
    case Relation::Lt: return Relation::Ge;
    case Relation::Le: return Relation::Gt;
    case Relation::Gt: return Relation::Le;
    case Relation::Ge: return Relation::Lt;
  }
  return rel;
}

Forced forced_outcome(CarryState s, std::int64_t pos_sum, std::int64_t neg_sum, std::int64_t constant) noexcept {
  // With x = F_{r+2}, y = F_{r+1}: x/y lies in [1, 2] and y >= 1, while the
  // remaining digits contribute between -neg_sum*(x+y-2) and pos_sum*(x+y-2).
  // A linear form y*(alpha*q + beta) + gamma that is nonnegative in y-slope at
  // q = 1 and q = 2 is bounded below by its value at y = 1.
  {
    const std::int64_t alpha = s.a - neg_sum, beta = s.b - neg_sum, gamma = 2 * neg_sum - constant;
    if (alpha + beta >= 0 && 2 * alpha + beta >= 0 && alpha + beta + gamma > 0 && 2 * alpha + beta + gamma > 0)
      return Forced::Greater;
  }
  {
    const std::int64_t alpha = s.a + pos_sum, beta = s.b + pos_sum, gamma = -2 * pos_sum - constant;
    if (alpha + beta <= 0 && 2 * alpha + beta <= 0 && alpha + beta + gamma < 0 && 2 * alpha + beta + gamma < 0)
      return Forced::Less;
  }
  return Forced::No;
}

namespace {

Forced forced_outcome_base2(std::int64_t s, std::int64_t pos_sum, std::int64_t neg_sum, std::int64_t constant) {
  if (s >= neg_sum && s > constant) return Forced::Greater;
  if (s <= -pos_sum && s < constant) return Forced::Less;
  return Forced::No;
}

bool sink_accepts(Forced f, Relation rel) {
  switch (rel) {
    case Relation::Eq: return false;
    case Relation::Ne: return true;
    case Relation::Lt:
    case Relation::Le: return f == Forced::Less;
    case Relation::Gt:
    case Relation::Ge: return f == Forced::Greater;
  }
  return false;
}

}  // namespace

Dfa build_linear(System system, std::span<const std::int64_t> coeffs, Relation rel, std::int64_t constant,
                 const Budget& budget) {
  const unsigned k = static_cast<unsigned>(coeffs.size());
  if (k > kMaxArity) throw ResourceError("linear relation has too many variables");
  std::int64_t pos_sum = 0, neg_sum = 0;
  for (auto c : coeffs) (c > 0 ? pos_sum : neg_sum) += (c > 0 ? c : -c);

  Dfa out(system, k, 0);
  const std::size_t sigma = out.alphabet_size();
  std::vector<std::int64_t> column_value(sigma, 0);
  for (Letter l = 0; l < sigma; ++l)
    for (unsigned j = 0; j < k; ++j)
      if (l & (Letter{1} << j)) column_value[l] += coeffs[j];

  std::map<std::pair<std::int64_t, std::int64_t>, State> ids;
  std::vector<CarryState> states;
  State sink_greater = 0, sink_less = 0;
  bool have_greater = false, have_less = false;
  auto sink = [&](Forced f) {
    bool& have = f == Forced::Greater ? have_greater : have_less;
    State& id = f == Forced::Greater ? sink_greater : sink_less;
    if (!have) {
      id = out.add_state(sink_accepts(f, rel));
      states.push_back({});
      have = true;
      for (Letter l = 0; l < sigma; ++l) out.set_next(id, l, id);
    }
    return id;
  };
  std::vector<std::uint8_t> is_sink;
  auto intern = [&](CarryState s) -> State {
    const Forced f = system == System::Base2 ? forced_outcome_base2(s.a, pos_sum, neg_sum, constant)
                                             : forced_outcome(s, pos_sum, neg_sum, constant);
    if (f != Forced::No) {
      const State id = sink(f);
      is_sink.resize(out.state_count(), 0);
      is_sink[id] = 1;
      return id;
    }
    auto [it, fresh] = ids.try_emplace({s.a, s.b}, 0);
    if (fresh) {
      if (out.state_count() >= budget.max_states) throw ResourceError("linear relation exceeded the state budget");
      const std::int64_t final_value = system == System::Base2 ? s.a : s.a + s.b;
      it->second = out.add_state(holds(final_value, rel, constant));
      states.push_back(s);
      is_sink.resize(out.state_count(), 0);
    }
    return it->second;
  };

  out.set_initial(intern({0, 0}));
  for (State q = 0; q < out.state_count(); ++q) {
    if (is_sink[q]) continue;
    const CarryState s = states[q];
    for (Letter l = 0; l < sigma; ++l) {
      const std::int64_t c = column_value[l];
      const CarryState t = system == System::Base2 ? CarryState{2 * s.a + c, 0} : CarryState{s.a + s.b + c, s.a};
      const State to = intern(t);
      out.set_next(q, l, to);
    }
  }
  return restrict_to_valid(minimize(out), budget);
}

Dfa build_adder(System system) {
  const std::int64_t coeffs[] = {1, 1, -1};
  return build_linear(system, coeffs, Relation::Eq, 0);
}

Dfa build_comparison(System system, Relation rel) {
  // 0: equal so far, 1: x < y decided, 2: x > y decided.
  Dfa d(system, 2, 3);
  for (Letter l = 0; l < 4; ++l) {
    const unsigned dx = l & 1u, dy = (l >> 1) & 1u;
    d.set_next(0, l, dx == dy ? 0 : (dx < dy ? 1 : 2));
    d.set_next(1, l, 1);
    d.set_next(2, l, 2);
  }
  d.set_accepting(0, holds(0, rel, 0));
  d.set_accepting(1, holds(0, rel, 1));
  d.set_accepting(2, holds(1, rel, 0));
  return restrict_to_valid(minimize(d));
}

Dfa build_const_multiple(System system, Natural c, const Budget& budget) {
  if (c > 1'000'000) throw ResourceError("constant multiplier " + std::to_string(c) + " is too large");
  const std::int64_t coeffs[] = {static_cast<std::int64_t>(c), -1};
  return build_linear(system, coeffs, Relation::Eq, 0, budget);
}

Dfa build_constant(System system, Natural c) {
  if (c == 0) {
    // 0*: the empty word also denotes zero.
    Dfa d(system, 1, 2);
    d.set_accepting(0, true);
    d.set_next(0, 1, 1);
    d.set_next(1, 0, 1);
    d.set_next(1, 1, 1);
    return d;
  }
  const DigitWord w = encode(c, system);
  // State i: the first i digits of w matched after any leading zeros; the last state is dead.
  const std::size_t n = w.size();
  Dfa d(system, 1, n + 2);
  const State dead = static_cast<State>(n + 1);
  for (State i = 0; i <= n; ++i) {
    d.set_accepting(i, i == n);
    for (Letter l = 0; l < 2; ++l) d.set_next(i, l, i < n && w.digits[i] == l ? i + 1 : dead);
  }
  for (Letter l = 0; l < 2; ++l) d.set_next(dead, l, dead);
  d.set_next(0, 0, 0);
  return minimize(d);
}

Dfa build_fib_incrementer() {
  auto col = [](unsigned x, unsigned y) { return static_cast<Letter>(x | (y << 1)); };
  // copy: common prefix; opened: a 0 column chosen as the start of the rewritten
  // suffix; then (0,1) and alternating (1,0),(0,0) columns.
  enum : State { kCopy, kOpened, kAfterOne, kOdd, kEven, kCount };
  Nfa n(System::Fibonacci, 2, kCount);
  for (unsigned d = 0; d < 2; ++d) n.successors(kCopy, col(d, d)).push_back(kCopy);
  n.successors(kCopy, col(0, 0)).push_back(kOpened);
  n.successors(kOpened, col(0, 1)).push_back(kAfterOne);
  n.successors(kAfterOne, col(1, 0)).push_back(kOdd);
  n.successors(kOdd, col(0, 0)).push_back(kEven);
  n.successors(kEven, col(1, 0)).push_back(kOdd);
  n.accepting[kAfterOne] = n.accepting[kOdd] = n.accepting[kEven] = 1;
  // The leading 0 of the suffix pattern may be an implicit padding zero.
  n.initial = {kCopy, kOpened};
  return restrict_to_valid(minimize(determinize(n)));
}

Dfa build_fib_shifter() {
  // State: the digit the next x column must carry (the previous y digit).
  Dfa d(System::Fibonacci, 2, 3);
  const State dead = 2;
  for (State e = 0; e < 2; ++e)
    for (Letter l = 0; l < 4; ++l) {
      const unsigned dx = l & 1u, dy = (l >> 1) & 1u;
      d.set_next(e, l, dx == e ? dy : dead);
    }
  for (Letter l = 0; l < 4; ++l) d.set_next(dead, l, dead);
  d.set_accepting(0, true);
  return restrict_to_valid(minimize(d));
}

namespace {

template <class Fn>
void for_each_tuple(std::size_t arity, Natural range, Fn fn) {
  std::vector<Natural> t(arity, 0);
  if (arity == 0) {
    fn(t);
    return;
  }
  while (true) {
    fn(t);
    std::size_t j = 0;
    while (j < arity && t[j] == range) t[j++] = 0;
    if (j == arity) return;
    ++t[j];
  }
}

constexpr std::size_t kKeptMismatches = 32;

void record(ValidationReport& r, std::vector<Natural> tuple, bool expected) {
  ++r.mismatch_count;
  if (r.mismatches.size() < kKeptMismatches) r.mismatches.push_back({std::move(tuple), expected});
}

}  // namespace

ValidationReport validate_relation(const Dfa& a, const std::function<bool(std::span<const Natural>)>& oracle,
                                   Natural range) {
  ValidationReport r;
  const std::size_t k = a.arity();
  if (k <= 1) {
    for_each_tuple(k, range, [&](const std::vector<Natural>& t) {
      ++r.checked;
      const bool expected = oracle(t);
      if (accepts_values(a, t) != expected) record(r, t, expected);
    });
    return r;
  }
  const std::size_t length = encode(range, a.system()).size();
  for_each_tuple(k - 1, range, [&](const std::vector<Natural>& prefix) {
    std::vector<std::optional<Natural>> fixed(prefix.begin(), prefix.end());
    fixed.push_back(std::nullopt);
    std::vector<std::uint8_t> got(range + 1, 0);
    for (const auto& sol : solve(a, fixed, length))
      if (sol.back() <= range) got[sol.back()] = 1;
    std::vector<Natural> t = prefix;
    t.push_back(0);
    for (Natural z = 0; z <= range; ++z) {
      t.back() = z;
      ++r.checked;
      const bool expected = oracle(t);
      if ((got[z] != 0) != expected) record(r, t, expected);
    }
  });
  return r;
}

ValidationReport validate_function(const Dfa& a, const std::function<Natural(std::span<const Natural>)>& f,
                                   Natural range) {
  ValidationReport r;
  const std::size_t k = a.arity();
  if (k == 0) throw Error("validate_function needs at least one track");
  for_each_tuple(k - 1, range, [&](const std::vector<Natural>& inputs) {
    ++r.checked;
    const Natural want = f(inputs);
    const std::size_t length = encode(std::max(want, range), a.system()).size() + 2;
    std::vector<std::optional<Natural>> fixed(inputs.begin(), inputs.end());
    fixed.push_back(std::nullopt);
    const auto sols = solve(a, fixed, length, 2);
    std::vector<Natural> t = inputs;
    t.push_back(want);
    if (sols.size() != 1 || sols.front().back() != want) record(r, t, true);
  });
  return r;
}

}  // namespace autofrob
