#include "autofrob/frobenius.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <queue>

#include "autofrob/error.hpp"

namespace autofrob {

GeneratorSet::GeneratorSet(std::vector<Natural> values) {
  std::erase(values, Natural{0});
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  values_ = std::move(values);
}

Natural GeneratorSet::min() const {
  if (values_.empty()) throw Error("empty generator set");
  return values_.front();
}

Natural GeneratorSet::gcd() const noexcept {
  Natural g = 0;
  for (Natural v : values_) g = std::gcd(g, v);
  return g;
}

bool GeneratorSet::contains(Natural g) const noexcept { return std::binary_search(values_.begin(), values_.end(), g); }

Natural WeightedCombination::value() const {
  Natural v = 0;
  for (std::size_t j = 0; j < generators.size(); ++j) v = checked_add(v, checked_mul(generators[j], coefficients[j]));
  return v;
}

Natural WeightedCombination::weight() const {
  Natural w = 0;
  for (Natural c : coefficients) w = checked_add(w, c);
  return w;
}

namespace {

// Representable values in [0, limit] under unbounded use of the added generators.
class Reach {
 public:
  explicit Reach(Natural limit) : limit_(limit), words_(limit / 64 + 1, 0) {
    words_[0] = 1;
    const unsigned tail = static_cast<unsigned>(limit % 64) + 1;
    last_mask_ = tail == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << tail) - 1;
  }

  bool test(Natural x) const { return x <= limit_ && ((words_[x / 64] >> (x % 64)) & 1u); }

  void add(Natural g) {
    if (g == 0 || g > limit_ || test(g)) return;  // already a combination of earlier generators
    const std::size_t q = g / 64;
    const unsigned r = g % 64;
    const std::size_t n = words_.size();
    if (q == 0) {
      for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t v = words_[k];
        if (k > 0) v |= words_[k - 1] >> (64 - r);
        for (unsigned s = r; s < 64; s *= 2) v |= v << s;
        words_[k] = v;
      }
    } else {
      for (std::size_t k = q; k < n; ++k) {
        std::uint64_t v = words_[k - q] << r;
        if (r != 0 && k > q) v |= words_[k - q - 1] >> (64 - r);
        words_[k] |= v;
      }
    }
    words_.back() &= last_mask_;
  }

  /// Largest value in [0, limit] that is not representable, if any.
  std::optional<Natural> largest_gap() const {
    for (std::size_t k = words_.size(); k-- > 0;) {
      const std::uint64_t full = k + 1 == words_.size() ? last_mask_ : ~std::uint64_t{0};
      const std::uint64_t missing = ~words_[k] & full;
      if (missing != 0) return Natural{k} * 64 + (63 - static_cast<unsigned>(std::countl_zero(missing)));
    }
    return std::nullopt;
  }

 private:
  Natural limit_;
  std::vector<std::uint64_t> words_;
  std::uint64_t last_mask_;
};

}  // namespace

bool is_representable(Natural n, const GeneratorSet& s, WeightedCombination* witness) {
  if (!witness) {
    Reach reach(n);
    for (Natural g : s.values()) reach.add(g);
    return reach.test(n);
  }
  const auto& gens = s.values();
  std::vector<std::int32_t> last(n + 1, -1);
  std::vector<std::uint8_t> ok(n + 1, 0);
  ok[0] = 1;
  for (Natural x = 1; x <= n; ++x)
    for (std::size_t j = 0; j < gens.size() && gens[j] <= x; ++j)
      if (ok[x - gens[j]]) {
        ok[x] = 1;
        last[x] = static_cast<std::int32_t>(j);
        break;
      }
  if (!ok[n]) return false;
  witness->generators = gens;
  witness->coefficients.assign(gens.size(), 0);
  for (Natural x = n; x > 0; x -= gens[static_cast<std::size_t>(last[x])])
    ++witness->coefficients[static_cast<std::size_t>(last[x])];
  return true;
}

std::int64_t frobenius_finite(const GeneratorSet& s) {
  if (s.empty()) throw Error("Frobenius undefined: no generators");
  if (s.gcd() != 1) throw Error("Frobenius undefined: generators have gcd " + std::to_string(s.gcd()));
  const Natural a = s.min();
  if (a == 1) return -1;
  if (a > 50'000'000) throw ResourceError("smallest generator too large for the residue table");
  constexpr Natural kInf = ~Natural{0};
  std::vector<Natural> least(a, kInf);
  least[0] = 0;
  using Item = std::pair<Natural, Natural>;  // value, residue
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.push({0, 0});
  while (!heap.empty()) {
    auto [v, r] = heap.top();
    heap.pop();
    if (v != least[r]) continue;
    for (Natural g : s.values()) {
      if (g == a) continue;
      const Natural w = checked_add(v, g);
      const Natural t = (r + g) % a;
      if (w < least[t]) {
        least[t] = w;
        heap.push({w, t});
      }
    }
  }
  const Natural top = *std::max_element(least.begin(), least.end());
  return static_cast<std::int64_t>(top) - static_cast<std::int64_t>(a);
}

std::optional<std::int64_t> index_zero_convention(std::string_view sequence) {
  if (sequence == "upper") return -1;
  return std::nullopt;
}

TailFrobeniusResult tail_frobenius(const SequenceDef& seq, Natural i, const TailOptions& options) {
  if (!seq.increasing) throw Error("sequence '" + seq.name + "' is not increasing");
  TailFrobeniusResult out;
  out.index = i;

  // Nonzero terms from index i while they fit in 64 bits.
  auto term = [&](Natural j) -> std::optional<Natural> {
    try {
      return seq.value(j);
    } catch (const OverflowError&) {
      return std::nullopt;
    }
  };
  Natural g = 0, smallest = 0;
  std::size_t seen = 0;
  for (Natural j = i; seen < options.gcd_window; ++j) {
    auto v = term(j);
    if (!v) break;
    if (*v == 0) continue;
    if (smallest == 0) smallest = *v;
    g = std::gcd(g, *v);
    ++seen;
  }
  if (smallest == 0) throw Error("tail of '" + seq.name + "' has no positive terms");
  if (g != 1) throw Error("Frobenius undefined: tail of '" + seq.name + "' has gcd " + std::to_string(g));
  out.certificate_length = smallest;

  Natural bound = std::max<Natural>(8 * smallest + 64, 256);
  while (true) {
    if (bound > options.max_bound)
      throw ResourceError("tail Frobenius search for '" + seq.name + "' exceeded bound " +
                          std::to_string(options.max_bound));
    Reach reach(bound);
    std::vector<Natural> used;
    for (Natural j = i;; ++j) {
      auto v = term(j);
      if (!v || *v > bound) break;
      if (*v == 0) continue;
      reach.add(*v);
      used.push_back(*v);
    }
    const auto gap = reach.largest_gap();
    const Natural certified_from = gap ? *gap + 1 : 0;
    if (certified_from + smallest - 1 <= bound) {
      out.value = gap ? static_cast<std::int64_t>(*gap) : -1;
      out.generators_used = GeneratorSet(std::move(used));
      out.bound = bound;
      break;
    }
    bound *= 2;
  }
  if (i == 0) {
    if (auto c = index_zero_convention(seq.name)) {
      out.convention = "index 0 of '" + seq.name + "' reports the tabulated " + std::to_string(*c) +
                       " (search gives " + std::to_string(out.value) + ")";
      out.value = *c;
    }
  }
  return out;
}

std::int64_t tail_frobenius_via_automaton(Family f, Natural i) {
  if (i == 0)
    if (auto c = index_zero_convention(family_name(f))) return *c;
  const Predicate* g = family_env(f).find_predicate(g_predicate(f));
  if (!g) throw Error("missing predicate " + std::string(g_predicate(f)));
  // Every family satisfies G(i) < 16 i + 64, so this many digits hold the partner.
  const System sys = family_system(f);
  const Natural reach = std::max(i, checked_add(checked_mul(16, i), 64));
  const std::size_t length = encode(reach, sys).size() + 2;
  const std::optional<Natural> fixed[] = {i, std::nullopt};
  const auto sols = solve(g->automaton, fixed, length, 2);
  if (sols.size() != 1)
    throw Error("predicate " + std::string(g_predicate(f)) + " has " + std::to_string(sols.size()) +
                " partners for m = " + std::to_string(i));
  const Natural n = sols[0][1];
  return n == 0 ? -1 : static_cast<std::int64_t>(n);
}

std::vector<WeightedCombination> counterexample_trace(Natural i) {
  if (i < 1 || i > 24) throw Error("counterexample trace needs 1 <= i <= 24");
  WeightedCombination c;
  for (Natural j = 0; j <= i; ++j) c.generators.push_back(pow2_plus1(i + j));
  c.coefficients.assign(i + 1, 0);
  c.coefficients[0] = 1;
  c.coefficients[i] += 1;
  std::vector<WeightedCombination> out{c};
  while (true) {
    std::size_t j = c.coefficients.size() - 1;
    while (j > 0 && c.coefficients[j] == 0) --j;
    if (j == 0) break;
    --c.coefficients[j];
    c.coefficients[j - 1] += 2;
    out.push_back(c);
  }
  WeightedCombination last;
  last.generators = c.generators;
  last.coefficients.assign(i + 1, 0);
  last.coefficients[1] += 1;
  last.coefficients[i] += 1;
  out.push_back(last);
  return out;
}

WeightedCombination counterexample_witness(Natural i, Natural n) {
  if (i < 1 || i > 24) throw Error("counterexample witness needs 1 <= i <= 24");
  const Natural low = pow2_plus1(2 * i) + (Natural{1} << i);  // 2^{2i} + 2^i + 1
  const Natural high = (Natural{1} << (2 * i)) + (Natural{1} << (i + 1)) + 2;
  if (n <= low || n > high)
    throw Error(std::to_string(n) + " is outside the window (" + std::to_string(low) + ", " + std::to_string(high) +
                "]");
  return counterexample_trace(i)[n - low - 1];
}

std::vector<int> difference_values(Family f) {
  switch (f) {
    case Family::Lower: return {0, 2, 3, 5, 6, 8};
    case Family::Upper: return {0, 3, 5, 8, 11, 13, 18, 21, 23, 26, 31};
    default: throw Error("no difference automaton for " + std::string(family_name(f)));
  }
}

Dfao difference_dfao(Family f) {
  const std::vector<int> ds = difference_values(f);
  const std::string g(g_predicate(f));
  // The predicate's 0 stands for -1.
  std::vector<Dfa> parts;
  for (int d : ds) {
    const std::string dd = std::to_string(d);
    const std::string text = "?msd_fib Eu,v $" + g + "(n,u) & $" + g + "(n+1,v) & ((u>0 & v=u+" + dd +
                             ") | (u=0 & v>0 & v+1=" + dd + ") | (u=0 & v=0 & " + dd + "=0))";
    parts.push_back(compile(text, family_env(f)).automaton);
  }
  const Dfa valid = valid_tuples(System::Fibonacci, 1);

  // Breadth-first product over (valid, P_d0, P_d1, ...).
  using Key = std::vector<State>;
  std::map<Key, State> ids;
  std::vector<Key> keys;
  Dfao out(System::Fibonacci, 1, 0);
  auto intern = [&](const Key& k) {
    auto [it, fresh] = ids.try_emplace(k, 0);
    if (fresh) {
      int symbol = 0;
      if (valid.accepting(k[0])) {
        int hits = 0;
        for (std::size_t j = 0; j < ds.size(); ++j)
          if (parts[j].accepting(k[j + 1])) {
            symbol = ds[j];
            ++hits;
          }
        if (hits != 1)
          throw Error("difference automaton: an input matches " + std::to_string(hits) + " difference values");
      }
      it->second = out.add_state(symbol);
      keys.push_back(k);
    }
    return it->second;
  };
  Key start{valid.initial()};
  for (const auto& p : parts) start.push_back(p.initial());
  out.set_initial(intern(start));
  for (State q = 0; q < out.state_count(); ++q) {
    for (Letter l = 0; l < 2; ++l) {
      Key k = keys[q];
      k[0] = valid.next(k[0], l);
      for (std::size_t j = 0; j < parts.size(); ++j) k[j + 1] = parts[j].next(k[j + 1], l);
      out.set_next(q, l, intern(k));
    }
  }
  return minimize(out);
}

}  // namespace autofrob
