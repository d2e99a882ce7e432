#include "autofrob/numeration.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "autofrob/error.hpp"

namespace autofrob {

namespace {

// F_2 .. F_93; F_94 no longer fits in 64 bits.
constexpr std::size_t kFibCount = 92;

constexpr std::array<Natural, kFibCount> make_fib_table() {
  std::array<Natural, kFibCount> t{};
  t[0] = 1;
  t[1] = 2;
  for (std::size_t i = 2; i < kFibCount; ++i) t[i] = t[i - 1] + t[i - 2];
  return t;
}

constexpr auto kFib = make_fib_table();

}  // namespace

std::string_view system_name(System system) {
  return system == System::Base2 ? "base2" : "fib";
}

System parse_system(std::string_view name) {
  if (name == "base2" || name == "2" || name == "msd_2") return System::Base2;
  if (name == "fib" || name == "msd_fib" || name == "fibonacci") return System::Fibonacci;
  throw Error("unknown numeration system '" + std::string(name) + "'");
}

DigitWord DigitWord::parse(System system, std::string_view text) {
  DigitWord w{system, {}};
  w.digits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw Error("digit word contains '" + std::string(1, c) + "'");
    w.digits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return w;
}

std::string DigitWord::to_string() const {
  std::string s;
  s.reserve(digits.size());
  for (auto d : digits) s.push_back(static_cast<char>('0' + d));
  return s;
}

std::vector<std::uint32_t> TupleWord::columns() const {
  std::vector<std::uint32_t> cols(length(), 0);
  for (std::size_t j = 0; j < tracks.size(); ++j)
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (tracks[j].digits[i]) cols[i] |= (std::uint32_t{1} << j);
  return cols;
}

Natural checked_add(Natural a, Natural b) {
  if (a > std::numeric_limits<Natural>::max() - b) throw OverflowError("natural addition overflows 64 bits");
  return a + b;
}

Natural checked_mul(Natural a, Natural b) {
  if (a != 0 && b > std::numeric_limits<Natural>::max() / a)
    throw OverflowError("natural multiplication overflows 64 bits");
  return a * b;
}

Natural fibonacci_number(unsigned index) {
  if (index < 2) throw Error("Fibonacci weights start at index 2");
  if (index - 2 >= kFibCount) throw OverflowError("F_" + std::to_string(index) + " overflows 64 bits");
  return kFib[index - 2];
}

Natural digit_weight(System system, std::size_t position) {
  if (system == System::Base2) {
    if (position >= 64) throw OverflowError("2^" + std::to_string(position) + " overflows 64 bits");
    return Natural{1} << position;
  }
  return fibonacci_number(static_cast<unsigned>(position + 2));
}

DigitWord encode(Natural n, System system) {
  DigitWord w{system, {}};
  if (n == 0) {
    w.digits.push_back(0);
    return w;
  }
  if (system == System::Base2) {
    for (int bit = 63 - __builtin_clzll(n); bit >= 0; --bit) w.digits.push_back((n >> bit) & 1u);
    return w;
  }
  // Greedy Zeckendorf expansion.
  auto top = std::upper_bound(kFib.begin(), kFib.end(), n) - 1;
  for (auto it = top;; --it) {
    if (*it <= n) {
      w.digits.push_back(1);
      n -= *it;
    } else {
      w.digits.push_back(0);
    }
    if (it == kFib.begin()) break;
  }
  return w;
}

Natural decode(const DigitWord& word) {
  Natural value = 0;
  const std::size_t len = word.digits.size();
  for (std::size_t i = 0; i < len; ++i)
    if (word.digits[i]) value = checked_add(value, digit_weight(word.system, len - 1 - i));
  return value;
}

bool is_canonical(const DigitWord& word) {
  const auto& d = word.digits;
  if (d.empty()) return false;
  if (d.size() == 1) return true;
  if (d.front() != 1) return false;
  if (word.system == System::Fibonacci)
    for (std::size_t i = 1; i < d.size(); ++i)
      if (d[i] && d[i - 1]) return false;
  return true;
}

DigitWord normalize(const DigitWord& word) { return encode(decode(word), word.system); }

TupleWord pad_align(std::span<const DigitWord> words) {
  TupleWord t;
  if (words.empty()) return t;
  t.system = words.front().system;
  std::size_t len = 0;
  for (const auto& w : words) {
    if (w.system != t.system) throw Error("pad_align: words use different numeration systems");
    len = std::max(len, w.size());
  }
  for (const auto& w : words) {
    DigitWord padded{t.system, std::vector<std::uint8_t>(len - w.size(), 0)};
    padded.digits.insert(padded.digits.end(), w.digits.begin(), w.digits.end());
    t.tracks.push_back(std::move(padded));
  }
  return t;
}

TupleWord encode_tuple(std::span<const Natural> values, System system, std::size_t min_length) {
  std::vector<DigitWord> words;
  words.reserve(values.size() + 1);
  for (Natural v : values) words.push_back(encode(v, system));
  words.push_back(DigitWord{system, std::vector<std::uint8_t>(std::max<std::size_t>(min_length, 1), 0)});
  TupleWord t = pad_align(words);
  t.tracks.pop_back();
  t.system = system;
  return t;
}

int radix_compare(const DigitWord& a, const DigitWord& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  auto c = std::lexicographical_compare_three_way(a.digits.begin(), a.digits.end(), b.digits.begin(), b.digits.end());
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

}  // namespace autofrob
