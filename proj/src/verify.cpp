#include "autofrob/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "autofrob/arith.hpp"
#include "autofrob/error.hpp"
#include "autofrob/frobenius.hpp"
#include "autofrob/logic.hpp"
#include "autofrob/predicates.hpp"
#include "autofrob/sequences.hpp"

namespace autofrob {

namespace {

class Check {
 public:
  explicit Check(CheckResult& r) : r_(r) {}

  void fail(const std::string& msg) {
    r_.passed = false;
    r_.details.push_back("FAIL " + msg);
  }
  void note(const std::string& msg) { r_.details.push_back(msg); }
  void expect(bool ok, const std::string& msg) {
    if (!ok) fail(msg);
  }
  void time_limit(double seconds, double limit) {
    std::ostringstream s;
    s << "elapsed " << seconds << " s (limit " << limit << " s)";
    if (seconds > limit)
      fail(s.str());
    else
      note(s.str());
  }

 private:
  CheckResult& r_;
};

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SequenceDef sequence(Family f) { return *sequence_by_name(family_name(f)); }

std::string join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (auto x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

std::vector<std::int64_t> automaton_table(Family f, Natural last) {
  std::vector<std::int64_t> out;
  for (Natural i = 0; i <= last; ++i) out.push_back(tail_frobenius_via_automaton(f, i));
  return out;
}

bool decide_named(Family f, const std::string& name) {
  const auto statements = parse_script(family_checks(f));
  for (const auto& st : statements)
    if (st.name == name) return decide(st.formula, family_env(f));
  throw Error("no check named " + name);
}

void golden_tables(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::map<Family, std::vector<std::int64_t>> golden = {
      {Family::Evil, {7, 7, 13, 14, 16, 31, 31, 31, 32, 55, 55, 55, 55, 55, 61, 62}},
      {Family::Odious, {-1, 5, 10, 17, 23, 23, 24, 34, 39, 39, 45, 46, 71, 71, 71, 71}},
      {Family::Lower, {-1, -1, 5, 7, 13, 15, 15, 20, 23, 26, 31, 31, 39, 41, 41}},
      {Family::Upper, {-1, 3, 16, 19, 42, 42, 42, 55, 58, 76, 79, 79, 110, 110, 110}},
  };
  for (const auto& [f, want] : golden) {
    std::vector<std::int64_t> got;
    const SequenceDef seq = sequence(f);
    for (Natural i = 0; i < want.size(); ++i) {
      const TailFrobeniusResult r = tail_frobenius(seq, i);
      if (!r.convention.empty()) c.note(r.convention);
      got.push_back(r.value);
    }
    c.expect(got == want, std::string(family_name(f)) + ": got " + join(got) + ", want " + join(want));
  }
  c.time_limit(since(t0), 10);
}

void decisions(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::set<std::string> required = {
      "evilcheck",  "fibcheck",   "odiouscheck", "evilgdiff",         "evalmonotone", "lowerb1",
      "lowerb2",    "lowerbinf1", "lowerbinf2",  "lowerdiff",         "lowerdiffinfcheck",
      "upperb",     "upperopt",   "lowerb",      "loweropt",          "odiousupperb", "odiousupperopt",
      "odiouslowerb", "odiousloweropt"};
  std::set<std::string> seen;
  std::size_t count = 0;
  for (Family f : kFamilies) {
    const ScriptReport rep = run_script(family_checks(f), family_env(f));
    for (const auto& r : rep.results) {
      ++count;
      seen.insert(r.statement.name);
      c.expect(r.value.value_or(false), std::string(family_name(f)) + "/" + r.statement.name + " is false");
    }
  }
  for (const auto& name : required) c.expect(seen.contains(name), "sentence " + name + " was not run");
  c.note(std::to_string(count) + " sentences decided");
  c.time_limit(since(t0), 300);
}

void cross_agreement(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  constexpr Natural kLast = 300;
  for (Family f : kFamilies) {
    const SequenceDef seq = sequence(f);
    std::size_t bad = 0;
    for (Natural i = 0; i <= kLast; ++i) {
      const std::int64_t a = tail_frobenius(seq, i).value;
      const std::int64_t b = tail_frobenius_via_automaton(f, i);
      if (a != b && bad++ < 3)
        c.fail(std::string(family_name(f)) + " i=" + std::to_string(i) + ": oracle " + std::to_string(a) +
               ", automaton " + std::to_string(b));
    }
    c.expect(bad == 0, std::string(family_name(f)) + ": " + std::to_string(bad) + " disagreements");
  }
  c.time_limit(since(t0), 120);
}

struct BoundSpec {
  Family family;
  Natural first;
  std::function<std::int64_t(Natural)> low, high;
  // Exact fallbacks stating that each bound is met infinitely often.
  const char* attain_low;
  const char* attain_high;
};

void bounds(Check& c) {
  constexpr Natural kLast = 2000;
  constexpr Natural kExtended = 10000;
  using I = std::int64_t;
  const std::vector<BoundSpec> specs = {
      {Family::Evil, 0, [](Natural m) { return I(4 * m); }, [](Natural m) { return I(6 * m + 7); }, "loweropt",
       "upperopt"},
      {Family::Odious, 1, [](Natural m) { return I(4 * m); }, [](Natural m) { return I(6 * m) - 1; },
       "odiousloweropt", "odiousupperopt"},
      {Family::Lower, 0, [](Natural n) { return I(2 * lower_wythoff(n)) - 3; },
       [](Natural n) { return I(2 * lower_wythoff(n)) + 1; }, "lowerbattain1", "lowerbattain2"},
      {Family::Upper, 0, [](Natural n) { return I(3 * upper_wythoff(n)) - 5; },
       [](Natural n) { return I(3 * upper_wythoff(n)) + 20; }, "upperbattain1", "upperbattain2"},
  };
  for (const auto& s : specs) {
    const std::string name(family_name(s.family));
    const auto g = automaton_table(s.family, kExtended);
    std::optional<Natural> low_at, high_at;
    std::size_t bad = 0;
    for (Natural n = s.first; n <= kExtended; ++n) {
      const I lo = s.low(n), hi = s.high(n);
      if (n <= kLast && (g[n] < lo || g[n] > hi) && bad++ < 3)
        c.fail(name + " n=" + std::to_string(n) + ": G=" + std::to_string(g[n]) + " outside [" + std::to_string(lo) +
               ", " + std::to_string(hi) + "]");
      if (g[n] == lo && !low_at) low_at = n;
      if (g[n] == hi && !high_at) high_at = n;
    }
    c.expect(bad == 0, name + ": " + std::to_string(bad) + " values out of bounds");
    auto attained = [&](const std::optional<Natural>& at, const char* which, const char* sentence) {
      if (at && *at <= kLast) {
        c.note(name + ": " + which + " bound attained at n=" + std::to_string(*at));
        return;
      }
      if (s.family != Family::Upper) {
        c.fail(name + ": " + which + " bound not attained for n <= " + std::to_string(kLast));
        return;
      }
      // The upper Wythoff extremes may first appear late; the sentence decides it exactly.
      if (at) c.note(name + ": " + which + " bound first attained at n=" + std::to_string(*at));
      {
        const bool ok = decide_named(s.family, sentence);
        c.expect(ok, name + ": " + sentence + " is false");
        if (ok) c.note(name + ": " + sentence + " decides true (" + which + " bound met infinitely often)");
      }
    };
    attained(low_at, "lower", s.attain_low);
    attained(high_at, "upper", s.attain_high);
  }
  // Spot-check the automaton table against the oracle on a stride.
  for (Family f : kFamilies) {
    const SequenceDef seq = sequence(f);
    for (Natural n = 1; n <= kLast; n += 97) {
      const auto a = tail_frobenius(seq, n).value;
      const auto b = tail_frobenius_via_automaton(f, n);
      c.expect(a == b, std::string(family_name(f)) + " n=" + std::to_string(n) + ": oracle " + std::to_string(a) +
                           ", automaton " + std::to_string(b));
    }
  }
}

void counterexample(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const SequenceDef seq = *sequence_by_name("pow2plus1");
  for (Natural i = 1; i <= 6; ++i) {
    const std::int64_t want = std::int64_t((Natural{1} << (2 * i)) + (Natural{1} << i) + 1);
    const std::int64_t got = tail_frobenius(seq, i).value;
    c.expect(got == want, "i=" + std::to_string(i) + ": G=" + std::to_string(got) + ", want " + std::to_string(want));
  }
  for (Natural i : {2, 3}) {
    const Natural low = (Natural{1} << (2 * i)) + (Natural{1} << i) + 1;
    const Natural high = (Natural{1} << (2 * i)) + (Natural{1} << (i + 1)) + 2;
    std::vector<Natural> gens;
    for (Natural j = i; j <= 2 * i; ++j) gens.push_back(pow2_plus1(j));
    c.expect(!is_representable(low, GeneratorSet(gens)), "i=" + std::to_string(i) + ": " + std::to_string(low) +
                                                             " is representable");
    std::optional<Natural> prev_weight;
    for (Natural n = low + 1; n <= high; ++n) {
      const WeightedCombination w = counterexample_witness(i, n);
      c.expect(w.generators == gens, "i=" + std::to_string(i) + ": unexpected generators");
      c.expect(w.value() == n, "i=" + std::to_string(i) + " n=" + std::to_string(n) + ": witness has value " +
                                   std::to_string(w.value()));
      if (n < high) {
        c.expect(w.weight() == 2 + (n - low - 1),
                 "i=" + std::to_string(i) + " n=" + std::to_string(n) + ": weight " + std::to_string(w.weight()));
        if (prev_weight)
          c.expect(w.weight() == *prev_weight + 1, "i=" + std::to_string(i) + " n=" + std::to_string(n) +
                                                       ": weight did not grow by 1");
        prev_weight = w.weight();
      } else {
        c.expect(w.weight() == 2, "i=" + std::to_string(i) + ": closing representation should have weight 2");
      }
    }
    c.note("i=" + std::to_string(i) + ": witnesses for " + std::to_string(high - low) + " values");
  }
  c.time_limit(since(t0), 30);
}

void difference_sets(Check& c) {
  constexpr Natural kLast = 10000;
  for (Family f : {Family::Lower, Family::Upper}) {
    const std::string name(family_name(f));
    const auto g = automaton_table(f, kLast + 1);
    const auto allowed = difference_values(f);
    const Dfao d = difference_dfao(f);
    const Natural first = f == Family::Upper ? 1 : 0;
    std::set<std::int64_t> seen;
    std::size_t dfao_bad = 0;
    for (Natural n = first; n <= kLast; ++n) {
      const std::int64_t diff = g[n + 1] - g[n];
      seen.insert(diff);
      if (output_of(d, n) != diff && dfao_bad++ < 3)
        c.fail(name + " n=" + std::to_string(n) + ": difference automaton says " + std::to_string(output_of(d, n)) +
               ", table " + std::to_string(diff));
    }
    for (auto v : seen)
      c.expect(std::find(allowed.begin(), allowed.end(), v) != allowed.end(),
               name + ": difference " + std::to_string(v) + " outside the allowed set");
    std::vector<int> missing;
    for (int v : allowed)
      if (!seen.contains(v)) missing.push_back(v);
    if (missing.empty()) {
      c.note(name + ": all " + std::to_string(allowed.size()) + " differences occur for n <= " +
             std::to_string(kLast));
    } else {
      const char* sentence = f == Family::Lower ? "lowerdiffinfcheck" : "upperdiffinfcheck";
      const bool ok = decide_named(f, sentence);
      c.expect(ok, name + ": " + sentence + " is false");
      std::string list;
      for (int v : missing) list += " " + std::to_string(v);
      c.note(name + ": not seen up to " + std::to_string(kLast) + ":" + list + "; " + sentence + " decides " +
             (ok ? "true" : "false"));
    }
  }
}

void arith_soundness(Check& c, bool corrupt) {
  const auto t0 = std::chrono::steady_clock::now();
  Dfa adder = build_adder(System::Fibonacci);
  if (corrupt) adder.set_accepting(adder.initial(), !adder.accepting(adder.initial()));
  const auto add = validate_function(adder, [](std::span<const Natural> v) { return v[0] + v[1]; }, 500);
  c.expect(add.ok(), "adder: " + std::to_string(add.mismatch_count) + " mismatches of " +
                         std::to_string(add.checked));
  c.note("adder: " + std::to_string(add.checked) + " pairs checked");

  const Dfa inc = build_fib_incrementer();
  const auto r_inc = validate_function(inc, [](std::span<const Natural> v) { return v[0] + 1; }, 10000);
  c.expect(r_inc.ok(), "incrementer: " + std::to_string(r_inc.mismatch_count) + " mismatches");

  const Dfa shift = build_fib_shifter();
  const auto r_shift = validate_function(
      shift,
      [](std::span<const Natural> v) {
        DigitWord w = encode(v[0], System::Fibonacci);
        if (v[0] != 0) w.digits.push_back(0);
        return decode(w);
      },
      10000);
  c.expect(r_shift.ok(), "shifter: " + std::to_string(r_shift.mismatch_count) + " mismatches");

  // y = x + 1 read off the adder with its middle track fixed to 1.
  const unsigned middle[] = {1};
  Dfa fixed = product(adder, cylindrify(build_constant(System::Fibonacci, 1), 3, middle), BoolOp::And);
  const Dfa specialized = project_existential(fixed, 1);
  c.expect(equivalent(specialized, inc), "incrementer differs from the specialized adder");
  c.time_limit(since(t0), 60);
}

std::size_t live_count(const Dfa& a) {
  const auto live = live_states(a);
  return static_cast<std::size_t>(std::count(live.begin(), live.end(), std::uint8_t{1}));
}

// States reached by some canonical input.
std::size_t valid_reachable_count(const Dfao& d) {
  const Dfa valid = valid_tuples(d.system(), d.arity());
  const auto valid_live = live_states(valid);
  std::set<std::pair<State, State>> seen{{d.initial(), valid.initial()}};
  std::vector<std::pair<State, State>> stack(seen.begin(), seen.end());
  std::set<State> reached;
  while (!stack.empty()) {
    const auto [q, v] = stack.back();
    stack.pop_back();
    if (!valid_live[v]) continue;
    reached.insert(q);
    for (Letter l = 0; l < d.alphabet_size(); ++l)
      if (seen.insert({d.next(q, l), valid.next(v, l)}).second) stack.push_back({d.next(q, l), valid.next(v, l)});
  }
  return reached.size();
}

void state_counts(Check& c) {
  struct Target {
    std::string what;
    std::size_t total;
    std::size_t trimmed;
    std::size_t expected;
    const char* trimmed_as;
  };
  const Dfa& evilg = family_env(Family::Evil).find_predicate("evilg")->automaton;
  const Dfa& lowerg = family_env(Family::Lower).find_predicate("lowerg")->automaton;
  const Dfao diff = difference_dfao(Family::Lower);
  const std::vector<Target> targets = {
      {"evilg", evilg.state_count(), live_count(evilg), 58, "without the dead state"},
      {"lowerg", lowerg.state_count(), live_count(lowerg), 24, "without the dead state"},
      {"lower difference automaton", diff.state_count(), valid_reachable_count(diff), 11,
       "reached by canonical inputs"},
  };
  for (const auto& t : targets) {
    const auto off = static_cast<long>(t.total) - static_cast<long>(t.expected);
    const std::string line = t.what + ": " + std::to_string(t.total) + " states, " + std::to_string(t.trimmed) + " " +
                             t.trimmed_as + "; reference " + std::to_string(t.expected);
    if (std::labs(off) > 3)
      c.fail(line);
    else
      c.note(line);
  }
}

Dfa random_dfa(std::mt19937_64& rng, unsigned arity) {
  std::uniform_int_distribution<std::size_t> size(1, 6);
  const std::size_t n = size(rng);
  Dfa d(System::Base2, arity, n);
  std::uniform_int_distribution<State> pick(0, static_cast<State>(n - 1));
  std::bernoulli_distribution coin(0.4);
  for (State q = 0; q < n; ++q) {
    d.set_accepting(q, coin(rng));
    for (Letter l = 0; l < d.alphabet_size(); ++l) d.set_next(q, l, pick(rng));
  }
  d.set_initial(pick(rng));
  return d;
}

// Calls fn on every word of length <= max_length.
template <class Fn>
void for_each_word(std::size_t sigma, std::size_t max_length, Fn fn) {
  std::vector<Letter> w;
  for (std::size_t len = 0; len <= max_length; ++len) {
    w.assign(len, 0);
    while (true) {
      fn(std::span<const Letter>(w));
      std::size_t j = 0;
      while (j < len && w[j] + 1 == sigma) w[j++] = 0;
      if (j == len) break;
      ++w[j];
    }
  }
}

void properties(Check& c) {
  std::size_t bad = 0;
  for (System sys : {System::Base2, System::Fibonacci})
    for (Natural n = 0; n < 1'000'000; ++n) {
      const DigitWord w = encode(n, sys);
      if ((decode(w) != n || !is_canonical(w)) && bad++ < 3)
        c.fail(std::string(system_name(sys)) + ": round trip of " + std::to_string(n));
    }
  c.expect(bad == 0, "numeration round trips: " + std::to_string(bad) + " failures");
  c.note("numeration: 10^6 round trips per system");

  constexpr Natural kN = 100000;
  std::vector<std::uint8_t> hits(kN + 1, 0);
  bool sum_ok = true;
  for (Natural n = 1;; ++n) {
    const Natural l = lower_wythoff(n);
    if (l > kN) break;
    ++hits[l];
    const Natural u = upper_wythoff(n);
    sum_ok &= u == l + n;
    if (u <= kN) ++hits[u];
  }
  bool beatty = true;
  for (Natural v = 1; v <= kN; ++v) beatty &= hits[v] == 1;
  c.expect(beatty, "lower and upper Wythoff values do not partition [1, 10^5]");
  c.expect(sum_ok, "U_n != L_n + n somewhere");

  std::fill(hits.begin(), hits.end(), 0);
  for (Natural n = 0; n <= kN; ++n) {
    if (evil(n) <= kN) ++hits[evil(n)];
    if (odious(n) <= kN) ++hits[odious(n)];
  }
  bool parity = true;
  for (Natural v = 0; v <= kN; ++v) parity &= hits[v] == 1;
  c.expect(parity, "evil and odious numbers do not partition [0, 10^5]");

  std::mt19937_64 rng(20210326);
  std::size_t algebra_bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned arity = 1 + trial % 2;
    const Dfa a = random_dfa(rng, arity), b = random_dfa(rng, arity);
    const Dfa lhs = complement(product(a, b, BoolOp::And));
    const Dfa rhs = product(complement(a), complement(b), BoolOp::Or);
    const Dfa lhs2 = complement(product(a, b, BoolOp::Or));
    const Dfa rhs2 = product(complement(a), complement(b), BoolOp::And);
    const Dfa idem = product(a, a, BoolOp::And);
    const Dfa idem_or = product(a, a, BoolOp::Or);
    const std::size_t max_len = 8;
    for_each_word(a.alphabet_size(), max_len, [&](std::span<const Letter> w) {
      const bool ok = accepts(lhs, w) == accepts(rhs, w) && accepts(lhs2, w) == accepts(rhs2, w) &&
                      accepts(idem, w) == accepts(a, w) && accepts(idem_or, w) == accepts(a, w) &&
                      accepts(lhs, w) == !(accepts(a, w) && accepts(b, w));
      if (!ok) ++algebra_bad;
    });
  }
  c.expect(algebra_bad == 0, "automaton algebra: " + std::to_string(algebra_bad) + " counterexample words");
  c.note("automaton algebra: 100 random pairs, all words up to length 8");
}

// Whether [r, r + 1) lies strictly inside (centre - radius, centre + radius).
bool root_interval_inside(Natural r, std::int64_t centre, std::int64_t radius) {
  const auto rr = static_cast<std::int64_t>(r);
  return rr >= centre - radius && rr + 1 <= centre + radius;
}

void limits(Check& c) {
  constexpr Natural n = 100000;
  const std::int64_t gl_oracle = tail_frobenius(*sequence_by_name("lower"), n).value;
  const std::int64_t gl_auto = tail_frobenius_via_automaton(Family::Lower, n);
  const std::int64_t gu_oracle = tail_frobenius(*sequence_by_name("upper"), n).value;
  const std::int64_t gu_auto = tail_frobenius_via_automaton(Family::Upper, n);
  c.expect(gl_oracle == gl_auto, "G_L(10^5): oracle " + std::to_string(gl_oracle) + ", automaton " +
                                     std::to_string(gl_auto));
  c.expect(gu_oracle == gu_auto, "G_U(10^5): oracle " + std::to_string(gu_oracle) + ", automaton " +
                                     std::to_string(gu_auto));
  const auto N = static_cast<std::int64_t>(n);
  // |G/n - (1 + sqrt5)| < 1/1000  <=>  1000 n sqrt5 in (1000 (G - n) - n, 1000 (G - n) + n).
  const Natural r_lower = isqrt(UInt128{5'000'000} * n * n);
  c.expect(root_interval_inside(r_lower, 1000 * (gl_oracle - N), N),
           "G_L(10^5)/10^5 = " + std::to_string(gl_oracle) + "/10^5 is not within 10^-3 of 1 + sqrt5");
  // |G/n - (9 + 3 sqrt5)/2| < 1/1000  <=>  3000 n sqrt5 in (2000 G - 9000 n - 2n, 2000 G - 9000 n + 2n).
  const Natural r_upper = isqrt(UInt128{45'000'000} * n * n);
  c.expect(root_interval_inside(r_upper, 2000 * gu_oracle - 9000 * N, 2 * N),
           "G_U(10^5)/10^5 = " + std::to_string(gu_oracle) + "/10^5 is not within 10^-3 of (9 + 3 sqrt5)/2");
  c.note("G_L(10^5) = " + std::to_string(gl_oracle) + ", G_U(10^5) = " + std::to_string(gu_oracle));
}

struct Entry {
  CheckInfo info;
  std::function<void(Check&, const VerifyOptions&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = {
      {{"golden-tables", "tail Frobenius tables, oracle engine", {"evil", "odious", "wythoff", "oracle"}},
       [](Check& c, const VerifyOptions&) { golden_tables(c); }},
      {{"decisions", "lemma and bound sentences decide true", {"evil", "odious", "wythoff", "logic"}},
       [](Check& c, const VerifyOptions&) { decisions(c); }},
      {{"cross-agreement", "oracle and automaton agree for i <= 300", {"evil", "odious", "wythoff", "automaton"}},
       [](Check& c, const VerifyOptions&) { cross_agreement(c); }},
      {{"bounds", "bound theorems up to 2000, with attainment", {"evil", "odious", "wythoff"}},
       [](Check& c, const VerifyOptions&) { bounds(c); }},
      {{"counterexample", "G for 2^i + 1 and the weight-increment witnesses", {"pow2plus1", "oracle"}},
       [](Check& c, const VerifyOptions&) { counterexample(c); }},
      {{"difference-sets", "first differences of G_L and G_U", {"wythoff", "automaton"}},
       [](Check& c, const VerifyOptions&) { difference_sets(c); }},
      {{"arith-soundness", "Fibonacci adder, incrementer and shifter", {"adder", "fibonacci", "automaton"}},
       [](Check& c, const VerifyOptions& o) { arith_soundness(c, o.corrupt_adder); }},
      {{"state-counts", "minimized automaton sizes", {"evil", "wythoff", "automaton"}},
       [](Check& c, const VerifyOptions&) { state_counts(c); }},
      {{"properties", "numeration, partition and automaton-algebra properties", {"numeration", "property"}},
       [](Check& c, const VerifyOptions&) { properties(c); }},
      {{"limits", "G_L(n)/n and G_U(n)/n at n = 10^5", {"wythoff", "oracle"}},
       [](Check& c, const VerifyOptions&) { limits(c); }},
  };
  return all;
}

bool selected(const CheckInfo& info, const std::string& only) {
  if (only.empty() || info.name.find(only) != std::string::npos) return true;
  return std::any_of(info.tags.begin(), info.tags.end(),
                     [&](const std::string& t) { return t.find(only) != std::string::npos; });
}

}  // namespace

std::vector<CheckInfo> verify_checks() {
  std::vector<CheckInfo> out;
  for (const auto& e : entries()) out.push_back(e.info);
  return out;
}

std::vector<CheckResult> run_verify(const VerifyOptions& options,
                                    const std::function<void(const CheckResult&)>& on_result) {
  std::vector<CheckResult> out;
  for (const auto& e : entries()) {
    if (!selected(e.info, options.only)) continue;
    CheckResult r;
    r.name = e.info.name;
    r.title = e.info.title;
    r.passed = true;
    const auto t0 = std::chrono::steady_clock::now();
    Check c(r);
    try {
      e.run(c, options);
    } catch (const std::exception& ex) {
      c.fail(std::string("error: ") + ex.what());
    }
    r.seconds = since(t0);
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace autofrob
