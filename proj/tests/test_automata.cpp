#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>
#include <set>
#include <sstream>

#include "autofrob/arith.hpp"
#include "autofrob/automata.hpp"
#include "autofrob/automaton_io.hpp"
#include "autofrob/error.hpp"

using namespace autofrob;

namespace {

using Word = std::vector<Letter>;

Dfa random_dfa(std::mt19937_64& rng, System sys, unsigned arity, std::size_t n) {
  Dfa d(sys, arity, n);
  std::uniform_int_distribution<State> pick(0, static_cast<State>(n - 1));
  for (State q = 0; q < n; ++q) {
    d.set_accepting(q, rng() % 3 == 0);
    for (Letter c = 0; c < d.alphabet_size(); ++c) d.set_next(q, c, pick(rng));
  }
  d.set_initial(pick(rng));
  return d;
}

// Every word of length 0..max_len over an alphabet of `sigma` letters.
std::vector<Word> all_words(std::size_t sigma, std::size_t max_len) {
  std::vector<Word> out{{}};
  std::size_t from = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t to = out.size();
    for (std::size_t i = from; i < to; ++i)
      for (Letter c = 0; c < sigma; ++c) {
        Word w = out[i];
        w.push_back(c);
        out.push_back(std::move(w));
      }
    from = to;
  }
  return out;
}

bool step_accepts(const Dfa& a, const Word& w, State from) {
  State q = from;
  for (Letter c : w) q = a.next(q, c);
  return a.accepting(q);
}

bool nfa_accepts(const Nfa& n, const Word& w) {
  std::set<State> cur(n.initial.begin(), n.initial.end());
  for (Letter c : w) {
    std::set<State> nxt;
    for (State q : cur)
      for (State t : n.successors(q, c)) nxt.insert(t);
    cur = std::move(nxt);
  }
  for (State q : cur)
    if (n.accepting[q]) return true;
  return false;
}

// Reachable and no two states accept the same words up to length n.
void check_minimal(const Dfa& a) {
  const std::size_t n = a.state_count();
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<State> todo{a.initial()};
  seen[a.initial()] = 1;
  while (!todo.empty()) {
    const State q = todo.back();
    todo.pop_back();
    for (Letter c = 0; c < a.alphabet_size(); ++c)
      if (!seen[a.next(q, c)]) {
        seen[a.next(q, c)] = 1;
        todo.push_back(a.next(q, c));
      }
  }
  for (State q = 0; q < n; ++q) CHECK(seen[q]);
  const auto words = all_words(a.alphabet_size(), n);
  std::set<std::vector<bool>> sigs;
  for (State q = 0; q < n; ++q) {
    std::vector<bool> sig;
    for (const auto& w : words) sig.push_back(step_accepts(a, w, q));
    sigs.insert(sig);
  }
  CHECK(sigs.size() == n);
}

Letter widen(Letter c, unsigned track, Letter digit) {
  const Letter low = (Letter{1} << track) - 1;
  return (c & low) | (digit << track) | ((c & ~low) << 1);
}

// Word u over the remaining tracks is accepted after projection iff some
// y of length |u| + k, k >= 0, makes (0^k u, y) accepted. k < states suffices.
bool projection_oracle(const Dfa& a, unsigned track, const Word& u) {
  const std::size_t n = a.state_count();
  for (std::size_t k = 0; k <= n; ++k) {
    Word padded(k, 0);
    padded.insert(padded.end(), u.begin(), u.end());
    const std::size_t len = padded.size();
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << len); ++y) {
      Word w(len);
      for (std::size_t i = 0; i < len; ++i) w[i] = widen(padded[i], track, (y >> i) & 1u);
      if (step_accepts(a, w, a.initial())) return true;
    }
  }
  return false;
}

Word columns_of(System sys, std::vector<Natural> values) { return encode_tuple(values, sys).columns(); }

}  // namespace

TEST_CASE("minimize preserves the language and is minimal") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned arity = trial % 2 ? 2 : 1;
    const Dfa a = random_dfa(rng, System::Base2, arity, 1 + rng() % 7);
    const Dfa m = minimize(a);
    CHECK(m.state_count() <= a.state_count());
    for (const auto& w : all_words(a.alphabet_size(), arity == 1 ? 9 : 5))
      CHECK(step_accepts(a, w, a.initial()) == step_accepts(m, w, m.initial()));
    check_minimal(m);
    CHECK(m.initial() == 0);
  }
}

TEST_CASE("minimize yields identical automata for equivalent inputs") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const Dfa a = random_dfa(rng, System::Base2, 1, 6);
    // Duplicate every state; the copy is equivalent but twice the size.
    Dfa b(System::Base2, 1, 12);
    for (State q = 0; q < 6; ++q)
      for (State copy : {q, q + 6}) {
        b.set_accepting(copy, a.accepting(q));
        for (Letter c = 0; c < 2; ++c) b.set_next(copy, c, a.next(q, c) + ((q + c) % 2 ? 6 : 0));
      }
    b.set_initial(a.initial() + 6);
    CHECK(minimize(a).transitions() == minimize(b).transitions());
    CHECK(equivalent(a, b));
  }
}

TEST_CASE("determinize agrees with set simulation") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const unsigned arity = 1 + trial % 2;
    const std::size_t n = 1 + rng() % 6;
    Nfa nfa(System::Base2, arity, n);
    for (State q = 0; q < n; ++q) {
      nfa.accepting[q] = rng() % 3 == 0;
      for (Letter c = 0; c < nfa.alphabet_size(); ++c)
        for (State t = 0; t < n; ++t)
          if (rng() % 4 == 0) nfa.successors(q, c).push_back(t);
    }
    for (State q = 0; q < n; ++q)
      if (rng() % 3 == 0) nfa.initial.push_back(q);
    const Dfa d = determinize(nfa);
    for (const auto& w : all_words(nfa.alphabet_size(), arity == 1 ? 8 : 4))
      CHECK(nfa_accepts(nfa, w) == step_accepts(d, w, d.initial()));
  }
}

TEST_CASE("determinize respects the budget") {
  // The classic (n+1)-th-from-last letter language blows up to 2^(n+1) subsets.
  const std::size_t n = 12;
  Nfa nfa(System::Base2, 1, n + 1);
  nfa.initial = {0};
  nfa.successors(0, 0).push_back(0);
  nfa.successors(0, 1) = {0, 1};
  for (State q = 1; q < n; ++q) nfa.successors(q, 0) = nfa.successors(q, 1) = {q + 1};
  nfa.accepting[n] = 1;
  CHECK_THROWS_AS(determinize(nfa, Budget{100}), ResourceError);
  CHECK(determinize(nfa).state_count() == (std::size_t{1} << n));
}

TEST_CASE("product operations match the truth table") {
  std::mt19937_64 rng(14);
  for (BoolOp op : {BoolOp::And, BoolOp::Or, BoolOp::Implies, BoolOp::Iff, BoolOp::Xor, BoolOp::AndNot}) {
    for (int trial = 0; trial < 30; ++trial) {
      const Dfa a = random_dfa(rng, System::Base2, 2, 1 + rng() % 5);
      const Dfa b = random_dfa(rng, System::Base2, 2, 1 + rng() % 5);
      const Dfa p = product(a, b, op);
      for (const auto& w : all_words(4, 4))
        CHECK(step_accepts(p, w, p.initial()) ==
              apply(op, step_accepts(a, w, a.initial()), step_accepts(b, w, b.initial())));
    }
  }
  CHECK_FALSE(apply(BoolOp::Implies, true, false));
  CHECK(apply(BoolOp::AndNot, true, false));
  CHECK_FALSE(apply(BoolOp::AndNot, true, true));
}

TEST_CASE("product rejects mismatched automata") {
  CHECK_THROWS_AS(product(universal_dfa(System::Base2, 1), universal_dfa(System::Fibonacci, 1), BoolOp::And), Error);
  CHECK_THROWS_AS(product(universal_dfa(System::Base2, 1), universal_dfa(System::Base2, 2), BoolOp::And), Error);
}

TEST_CASE("complement and emptiness") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const Dfa a = random_dfa(rng, System::Base2, 1, 1 + rng() % 6);
    const Dfa c = complement(a);
    for (const auto& w : all_words(2, 7)) CHECK(step_accepts(c, w, c.initial()) != step_accepts(a, w, a.initial()));
    CHECK(is_empty(product(a, c, BoolOp::And)));
    CHECK(equivalent(complement(c), a));
  }
  CHECK(is_empty(empty_dfa(System::Fibonacci, 3)));
  CHECK_FALSE(is_empty(universal_dfa(System::Fibonacci, 0)));
}

TEST_CASE("cylindrify ignores new tracks and permutes old ones") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 40; ++trial) {
    const Dfa a = random_dfa(rng, System::Base2, 2, 1 + rng() % 5);
    const std::vector<unsigned> map{2, 0};  // old track 0 -> 2, old track 1 -> 0
    const Dfa c = cylindrify(a, 3, map);
    CHECK(c.arity() == 3);
    for (const auto& w : all_words(8, 3)) {
      Word old;
      for (Letter x : w) old.push_back(((x >> 2) & 1u) | ((x & 1u) << 1));
      CHECK(step_accepts(c, w, c.initial()) == step_accepts(a, old, a.initial()));
    }
  }
  const std::vector<unsigned> bad{5};
  CHECK_THROWS_AS(cylindrify(universal_dfa(System::Base2, 1), 2, bad), Error);
}

TEST_CASE("projection matches the padded-witness semantics") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const Dfa a = random_dfa(rng, System::Base2, 2, 1 + rng() % 5);
    const unsigned track = trial % 2;
    const Dfa p = project_existential(a, track);
    CHECK(p.arity() == 1);
    for (const auto& u : all_words(2, 5)) CHECK(step_accepts(p, u, p.initial()) == projection_oracle(a, track, u));
  }
}

TEST_CASE("projecting the adder gives the order relation") {
  for (System sys : {System::Base2, System::Fibonacci}) {
    const Dfa adder = restrict_to_valid(build_adder(sys));
    const Dfa le = project_existential(adder, 1);  // Ey x+y=z  <=>  x <= z
    for (Natural x = 0; x <= 40; ++x)
      for (Natural z = 0; z <= 40; ++z) {
        const std::vector<Natural> v{x, z};
        CHECK(accepts_values(le, v) == (x <= z));
      }
    // A witness longer than both inputs is still found.
    const Dfa ge = project_existential(adder, 2);  // Ez x+y=z, always true
    for (Natural x = 0; x <= 20; ++x) {
      const std::vector<Natural> v{x, 0};
      CHECK(accepts_values(ge, v));
    }
  }
}

TEST_CASE("restrict_to_valid forbids 11 on every Fibonacci track") {
  const Dfa u = universal_dfa(System::Fibonacci, 2);
  const Dfa r = restrict_to_valid(u);
  for (const auto& w : all_words(4, 5)) {
    bool ok = true;
    for (unsigned t = 0; t < 2; ++t)
      for (std::size_t i = 1; i < w.size(); ++i)
        if (((w[i - 1] >> t) & 1u) && ((w[i] >> t) & 1u)) ok = false;
    CHECK(step_accepts(r, w, r.initial()) == ok);
  }
  CHECK(equivalent(restrict_to_valid(universal_dfa(System::Base2, 2)), universal_dfa(System::Base2, 2)));
  CHECK(valid_tuples(System::Fibonacci, 1).state_count() == 3);
}

TEST_CASE("accepts works on encoded tuples and rejects mismatches") {
  const Dfa le = build_comparison(System::Base2, Relation::Le);
  CHECK(accepts(le, columns_of(System::Base2, {3, 9})));
  CHECK_FALSE(accepts(le, columns_of(System::Base2, {9, 3})));
  const std::vector<Natural> v{1, 2};
  CHECK_THROWS_AS(accepts(le, encode_tuple(v, System::Fibonacci)), Error);
  const std::vector<Natural> three{1, 2, 3};
  CHECK_THROWS_AS(accepts(le, encode_tuple(three, System::Base2)), Error);
}

TEST_CASE("live states") {
  Dfa d(System::Base2, 1, 3);  // 0 -1-> 1 (accept), everything else to the sink 2
  d.set_next(0, 0, 2);
  d.set_next(0, 1, 1);
  d.set_next(1, 0, 2);
  d.set_next(1, 1, 2);
  d.set_next(2, 0, 2);
  d.set_next(2, 1, 2);
  d.set_accepting(1, true);
  const auto live = live_states(d);
  CHECK(live[0]);
  CHECK(live[1]);
  CHECK_FALSE(live[2]);
  CHECK_FALSE(has_leading_zero_closure(d));
  CHECK(has_leading_zero_closure(build_adder(System::Base2)));
  CHECK(has_leading_zero_closure(build_adder(System::Fibonacci)));
}

TEST_CASE("enumerate_accepted lists values in order") {
  // Multiples of 3 in base 2, from a residue automaton.
  Dfa m3(System::Base2, 1, 3);
  for (State r = 0; r < 3; ++r)
    for (Letter c = 0; c < 2; ++c) m3.set_next(r, c, (2 * r + c) % 3);
  m3.set_accepting(0, true);
  const auto got = enumerate_accepted(m3, 10);
  REQUIRE(got.size() == 10);
  for (std::size_t i = 0; i < 10; ++i) CHECK(got[i] == std::vector<Natural>{3 * i});

  // Finite language: stops once nothing further can be accepted.
  const auto few = enumerate_accepted(build_constant(System::Fibonacci, 7), 5);
  CHECK(few == std::vector<std::vector<Natural>>{{7}});
  CHECK(enumerate_accepted(empty_dfa(System::Base2, 1), 3).empty());

  // Pairs come out in shortlex order of the padded columns, each once.
  const Dfa lt = build_comparison(System::Base2, Relation::Lt);
  const auto pairs = enumerate_accepted(lt, 30);
  std::set<std::vector<Natural>> uniq(pairs.begin(), pairs.end());
  CHECK(uniq.size() == pairs.size());
  for (const auto& p : pairs) CHECK(p[0] < p[1]);
  CHECK(pairs.front() == std::vector<Natural>{0, 1});
}

TEST_CASE("solve pins tracks and enumerates the rest") {
  const Dfa adder = build_adder(System::Base2);
  const std::vector<std::optional<Natural>> fixed{3, 4, std::nullopt};
  const auto sols = solve(adder, fixed, 5);
  CHECK(sols == std::vector<std::vector<Natural>>{{3, 4, 7}});
  const std::vector<std::optional<Natural>> free_y{5, std::nullopt, 9};
  CHECK(solve(adder, free_y, 5) == std::vector<std::vector<Natural>>{{5, 4, 9}});
  const std::vector<std::optional<Natural>> wide{100, 0, std::nullopt};
  CHECK_THROWS_AS(solve(adder, wide, 3), Error);
  const std::vector<std::optional<Natural>> wrong_size{1};
  CHECK_THROWS_AS(solve(adder, wrong_size, 3), Error);
}

TEST_CASE("dfao helpers") {
  // Parity of the number of 1 digits.
  Dfao tm(System::Base2, 1, 2);
  tm.set_next(0, 0, 0);
  tm.set_next(0, 1, 1);
  tm.set_next(1, 0, 1);
  tm.set_next(1, 1, 0);
  tm.set_output(1, 1);
  for (Natural n = 0; n < 200; ++n) CHECK(output_of(tm, n) == static_cast<int>(std::popcount(n) % 2));
  const Dfa odd = dfao_to_dfa(tm, 1);
  const Dfa even = dfao_to_dfa(tm, 1, true);
  const auto first = enumerate_accepted(odd, 6);
  CHECK(first == std::vector<std::vector<Natural>>{{1}, {2}, {4}, {7}, {8}, {11}});
  CHECK(equivalent(complement(odd), even));

  // A redundant copy of every state minimizes back to two.
  Dfao big(System::Base2, 1, 4);
  for (State q = 0; q < 4; ++q) {
    big.set_output(q, q % 2);
    big.set_next(q, 0, q);
    big.set_next(q, 1, (q + 3) % 4);
  }
  CHECK(minimize(big).state_count() == 2);
}

TEST_CASE("native export round trips") {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 40; ++trial) {
    const System sys = trial % 2 ? System::Fibonacci : System::Base2;
    const Dfa a = random_dfa(rng, sys, trial % 3, 1 + rng() % 6);
    const Dfa b = import_dfa(export_native(a));
    CHECK(b.system() == a.system());
    CHECK(b.arity() == a.arity());
    CHECK(b.initial() == a.initial());
    CHECK(b.transitions() == a.transitions());
    for (State q = 0; q < a.state_count(); ++q) CHECK(b.accepting(q) == a.accepting(q));
  }
  Dfao d(System::Fibonacci, 1, 3);
  d.set_next(0, 1, 2);
  d.set_output(2, -4);
  d.set_output(1, 7);
  const Dfao e = import_dfao(export_native(d));
  CHECK(e.transitions() == d.transitions());
  for (State q = 0; q < 3; ++q) CHECK(e.output(q) == d.output(q));
  CHECK(export_dot(build_adder(System::Base2), "add").find("digraph") != std::string::npos);
}

TEST_CASE("import reports the offending line and column") {
  auto expect = [](std::string_view text, std::size_t line, std::size_t col) {
    INFO(text);
    try {
      import_dfa(text);
      FAIL("accepted: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == col);
    }
  };
  const std::string head = "system base2 arity 1\ninitial 0\n";
  expect("initial 0\n", 1, 1);                                                    // no header first
  expect("system base3 arity 1\n", 1, 8);                                         // bad system
  expect(head + "state 0 accept\nstate 0\n", 4, 7);                               // duplicate state
  expect(head + "state 0\nfrob 1\n", 4, 1);                                       // unknown keyword
  expect(head + "state 0\ntrans 0 0 9\ntrans 0 1 0\n", 4, 11);                    // unknown target
  expect(head + "state 0\ntrans 0 0 0\ntrans 0 0 0\ntrans 0 1 0\n", 5, 1);        // duplicate transition
  expect(head + "state 0\ntrans 0 2 0\ntrans 0 1 0\n", 4, 9);                     // bad digit
  expect(head + "state 0\ntrans 0 0,1 0\n", 4, 9);                                // too many digits
  expect(head + "state 0\ntrans 0 0 0\n", 3, 1);                                  // missing letter 1
  expect("system fib arity 1\nstate 0\ntrans 0 0 0\ntrans 0 1 0\n", 5, 1);       // no initial
  expect("system fib arity 1\ninitial 3\nstate 0\ntrans 0 0 0\ntrans 0 1 0\n", 6, 1);
  expect("# nothing\n", 2, 1);
  expect(head + "state x\n", 3, 7);

  // Comments and blank lines are fine.
  const Dfa ok = import_dfa("# leading comment\n\n" + head + "state 0 accept\ntrans 0 0 0\ntrans 0 1 0\n");
  CHECK(ok.accepting(0));
}

TEST_CASE("worked examples") {
  const Dfa add = build_adder(System::Base2);
  const std::vector<DigitWord> ok{DigitWord::parse(System::Base2, "10"), DigitWord::parse(System::Base2, "01"),
                                  DigitWord::parse(System::Base2, "11")};
  CHECK(accepts(add, pad_align(ok)));
  const std::vector<DigitWord> bad{DigitWord::parse(System::Base2, "10"), DigitWord::parse(System::Base2, "01"),
                                   DigitWord::parse(System::Base2, "10")};
  CHECK_FALSE(accepts(add, pad_align(bad)));
  // Prefixing zero columns to an accepted word keeps it accepted.
  Word w = pad_align(ok).columns();
  for (int k = 0; k < 4; ++k) {
    w.insert(w.begin(), 0);
    CHECK(accepts(add, w));
  }

  CHECK(equivalent(product(add, add, BoolOp::And), add));
  CHECK(is_empty(product(add, complement(add), BoolOp::And)));
  CHECK_FALSE(is_empty(add));
  CHECK(accepts(complement(empty_dfa(System::Base2, 1)), Word{0}));

  // Ez x+y=z holds for every (x, y).
  CHECK(equivalent(project_existential(add, 2), universal_dfa(System::Base2, 2)));
  // Ey x=2y: exactly the even x.
  const std::vector<std::int64_t> two_y{1, -2};
  const Dfa even = project_existential(build_linear(System::Base2, two_y, Relation::Eq, 0), 1);
  for (Natural x = 0; x <= 64; ++x) {
    const std::vector<Natural> v{x};
    CHECK(accepts_values(even, v) == (x % 2 == 0));
  }
  // x < 0 has no solutions.
  const std::vector<std::int64_t> one{1};
  CHECK(is_empty(build_linear(System::Base2, one, Relation::Lt, 0)));

  // Equality on two tracks: an accepting loop on 00/11 and a dead state.
  const Dfa eq = minimize(build_comparison(System::Base2, Relation::Eq));
  CHECK(eq.state_count() == 2);
  check_minimal(eq);
  CHECK(minimize(minimize(add)).state_count() == minimize(add).state_count());

  // The empty NFA determinizes to one rejecting state.
  Nfa none(System::Base2, 1, 0);
  const Dfa dead = determinize(none);
  CHECK(dead.state_count() == 1);
  CHECK_FALSE(dead.accepting(0));

  // A DFA read as an NFA keeps its language.
  std::mt19937_64 rng(19);
  const Dfa r = random_dfa(rng, System::Base2, 1, 5);
  CHECK(equivalent(determinize(Nfa::from_dfa(r)), r));

  // One edge label per transition in the DOT output.
  const std::string dot = export_dot(add, "adder");
  std::size_t edges = 0;
  std::istringstream lines(dot);
  for (std::string line; std::getline(lines, line);)
    if (line.find(" -> ") != std::string::npos && line.find("label=") != std::string::npos) ++edges;
  CHECK(edges == add.state_count() * add.alphabet_size());
}
