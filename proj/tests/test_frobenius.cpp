#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "autofrob/error.hpp"
#include "autofrob/frobenius.hpp"
#include "autofrob/predicates.hpp"
#include "autofrob/sequences.hpp"

using namespace autofrob;

namespace {

// Published tables of G for i = 0, 1, ...
const std::vector<std::int64_t> kEvil{7, 7, 13, 14, 16, 31, 31, 31, 32, 55, 55, 55, 55, 55, 61, 62};
const std::vector<std::int64_t> kOdious{-1, 5, 10, 17, 23, 23, 24, 34, 39, 39, 45, 46, 71, 71, 71, 71};
const std::vector<std::int64_t> kLower{-1, -1, 5, 7, 13, 15, 15, 20, 23, 26, 31, 31, 39, 41, 41};
const std::vector<std::int64_t> kUpper{-1, 3, 16, 19, 42, 42, 42, 55, 58, 76, 79, 79, 110, 110, 110};

// Representable values up to `bound` by unbounded sums.
std::vector<std::uint8_t> reachable(const std::vector<Natural>& gens, Natural bound) {
  std::vector<std::uint8_t> rep(bound + 1, 0);
  rep[0] = 1;
  for (Natural v = 1; v <= bound; ++v)
    for (Natural g : gens)
      if (g <= v && rep[v - g]) {
        rep[v] = 1;
        break;
      }
  return rep;
}

// Brute force: gcd is 1, so past (max)^2 everything is representable.
std::int64_t naive_frobenius(const std::vector<Natural>& gens) {
  const Natural top = *std::max_element(gens.begin(), gens.end());
  const auto rep = reachable(gens, top * top + top);
  std::int64_t last = -1;
  for (Natural v = 0; v < rep.size(); ++v)
    if (!rep[v]) last = static_cast<std::int64_t>(v);
  return last;
}

void check_witness(const WeightedCombination& w, const GeneratorSet& s, Natural n) {
  CHECK(w.generators.size() == w.coefficients.size());
  Natural sum = 0;
  for (std::size_t j = 0; j < w.generators.size(); ++j) {
    CHECK(s.contains(w.generators[j]));
    sum += w.generators[j] * w.coefficients[j];
  }
  CHECK(sum == n);
  CHECK(w.value() == n);
}

}  // namespace

TEST_CASE("generator sets") {
  const GeneratorSet s({20, 0, 6, 9, 6});
  CHECK(s.values() == std::vector<Natural>{6, 9, 20});
  CHECK(s.min() == 6);
  CHECK(s.gcd() == 1);
  CHECK(s.contains(9));
  CHECK_FALSE(s.contains(0));
  CHECK(GeneratorSet({0}).empty());
  CHECK_THROWS_AS(GeneratorSet().min(), Error);
  CHECK(GeneratorSet({4, 6, 10}).gcd() == 2);
}

TEST_CASE("finite Frobenius numbers") {
  const GeneratorSet mcnugget({6, 9, 20});
  CHECK(frobenius_finite(mcnugget) == 43);
  CHECK(frobenius_finite(GeneratorSet({1})) == -1);
  CHECK(frobenius_finite(GeneratorSet({2, 3})) == 1);
  CHECK_THROWS_AS(frobenius_finite(GeneratorSet({4, 6})), Error);
  CHECK_THROWS_AS(frobenius_finite(GeneratorSet()), Error);

  WeightedCombination w;
  CHECK_FALSE(is_representable(43, mcnugget, &w));
  REQUIRE(is_representable(44, mcnugget, &w));
  check_witness(w, mcnugget, 44);
  REQUIRE(is_representable(0, mcnugget, &w));
  CHECK(w.weight() == 0);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Natural> gens;
    const int k = 1 + rng() % 4;
    for (int j = 0; j < k; ++j) gens.push_back(1 + rng() % 40);
    Natural g = 0;
    for (Natural x : gens) g = std::gcd(g, x);
    const GeneratorSet s(gens);
    if (g != 1) {
      CHECK_THROWS_AS(frobenius_finite(s), Error);
      continue;
    }
    const std::int64_t f = naive_frobenius(gens);
    CHECK(frobenius_finite(s) == f);
    const auto rep = reachable(gens, 200);
    for (Natural n = 0; n <= 200; ++n) {
      WeightedCombination wc;
      const bool r = is_representable(n, s, &wc);
      CHECK(r == bool(rep[n]));
      if (r) check_witness(wc, s, n);
    }
  }
}

TEST_CASE("tail Frobenius, oracle engine, against the published tables") {
  const std::pair<const char*, const std::vector<std::int64_t>*> tables[] = {
      {"evil", &kEvil}, {"odious", &kOdious}, {"lower", &kLower}, {"upper", &kUpper}};
  for (const auto& [name, table] : tables) {
    const auto seq = sequence_by_name(name);
    REQUIRE(seq);
    for (Natural i = 0; i < table->size(); ++i) {
      INFO(name << " i=" << i);
      const TailFrobeniusResult r = tail_frobenius(*seq, i);
      CHECK(r.index == i);
      CHECK(r.value == (*table)[i]);
      CHECK(r.convention.empty() == !(std::string(name) == "upper" && i == 0));

      // Check the certificate independently: a run of min-generator representable values.
      const auto& gens = r.generators_used.values();
      CHECK(r.certificate_length == r.generators_used.min());
      CHECK(r.generators_used.min() == seq->value(i) + (seq->value(i) == 0 ? seq->value(i + 1) : 0));
      if (!r.convention.empty()) continue;
      const Natural top = static_cast<Natural>(r.value + 1) + r.certificate_length;
      const auto rep = reachable(gens, top);
      if (r.value >= 0) CHECK_FALSE(rep[static_cast<Natural>(r.value)]);
      for (Natural v = static_cast<Natural>(r.value + 1); v < top; ++v) CHECK(rep[v]);
    }
  }
  // G_e is constant at 55 on a block of five.
  for (Natural i = 9; i <= 13; ++i) CHECK(tail_frobenius(*sequence_by_name("evil"), i).value == 55);
}

TEST_CASE("index zero of the upper sequence") {
  CHECK(index_zero_convention("upper") == -1);
  CHECK_FALSE(index_zero_convention("lower"));
  CHECK_FALSE(index_zero_convention("evil"));
  // The plain search over {0, 2, 5, 7, 10, ...} would give 3; 1 and 3 are missed.
  const auto rep = reachable({2, 5, 7, 10, 13, 15}, 40);
  CHECK_FALSE(rep[3]);
  for (Natural v = 4; v <= 40; ++v) CHECK(rep[v]);
}

TEST_CASE("tail Frobenius, automaton engine") {
  CHECK(tail_frobenius_via_automaton(Family::Evil, 5) == 31);
  CHECK(tail_frobenius_via_automaton(Family::Odious, 3) == 17);
  CHECK(tail_frobenius_via_automaton(Family::Upper, 12) == 110);
  CHECK(tail_frobenius_via_automaton(Family::Lower, 4) == 13);
  for (Natural i = 0; i < 15; ++i) {
    CHECK(tail_frobenius_via_automaton(Family::Evil, i) == kEvil[i]);
    CHECK(tail_frobenius_via_automaton(Family::Odious, i) == kOdious[i]);
    CHECK(tail_frobenius_via_automaton(Family::Lower, i) == kLower[i]);
    CHECK(tail_frobenius_via_automaton(Family::Upper, i) == kUpper[i]);
  }
}

TEST_CASE("powers of two plus one") {
  const auto seq = sequence_by_name("pow2plus1");
  REQUIRE(seq);
  for (Natural i = 1; i <= 8; ++i) {
    const Natural expect = (Natural{1} << (2 * i)) + (Natural{1} << i) + 1;
    CHECK(tail_frobenius(*seq, i).value == static_cast<std::int64_t>(expect));
  }
  CHECK(tail_frobenius(*seq, 2).value == 21);

  // Witnesses for 22..26 at i = 2, one step per increment.
  std::vector<Natural> gens;
  for (Natural j = 2; j <= 4; ++j) gens.push_back((Natural{1} << j) + 1);
  const GeneratorSet s(gens);
  const WeightedCombination first = counterexample_witness(2, 22);
  check_witness(first, s, 22);
  CHECK(first.weight() == 2);
  const WeightedCombination last = counterexample_witness(2, 26);
  check_witness(last, s, 26);
  std::vector<Natural> used;
  for (std::size_t j = 0; j < last.generators.size(); ++j)
    for (Natural c = 0; c < last.coefficients[j]; ++c) used.push_back(last.generators[j]);
  std::sort(used.begin(), used.end());
  CHECK(used == std::vector<Natural>{9, 17});
  CHECK_THROWS_AS(counterexample_witness(2, 21), Error);
  CHECK_THROWS_AS(counterexample_witness(2, 27), Error);

  for (Natural i = 1; i <= 12; ++i) {
    const Natural low = (Natural{1} << (2 * i)) + (Natural{1} << i) + 1;
    const auto trace = counterexample_trace(i);
    std::vector<Natural> gi;
    for (Natural j = i; j <= 2 * i; ++j) gi.push_back((Natural{1} << j) + 1);
    const GeneratorSet si(gi);
    for (std::size_t k = 0; k < trace.size(); ++k) {
      const Natural n = low + 1 + k;
      check_witness(trace[k], si, n);
      // Trading runs out one short of the top of the window, which uses the two-term form.
      if (k + 1 < trace.size()) CHECK(trace[k].weight() == 2 + (n - (low + 1)));
      else CHECK(trace[k].weight() == 2);
    }
    CHECK(low + trace.size() == (Natural{1} << (2 * i)) + (Natural{1} << (i + 1)) + 2);
  }
}

TEST_CASE("difference automata") {
  CHECK(difference_values(Family::Lower) == std::vector<int>{0, 2, 3, 5, 6, 8});
  CHECK(difference_values(Family::Upper) == std::vector<int>{0, 3, 5, 8, 11, 13, 18, 21, 23, 26, 31});
  const Dfao lower = difference_dfao(Family::Lower);
  CHECK(output_of(lower, 2) == 2);
  for (Natural n = 1; n + 1 < kLower.size(); ++n) CHECK(output_of(lower, n) == kLower[n + 1] - kLower[n]);
  const Dfao upper = difference_dfao(Family::Upper);
  for (Natural n = 1; n + 1 < kUpper.size(); ++n) CHECK(output_of(upper, n) == kUpper[n + 1] - kUpper[n]);
  CHECK_THROWS_AS(difference_dfao(Family::Evil), Error);
}
