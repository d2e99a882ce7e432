#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "autofrob/error.hpp"
#include "autofrob/numeration.hpp"

using namespace autofrob;

namespace {

// Every digit string of length <= len with no leading zero and no "11",
// valued with weights 1, 2, 3, 5, ... computed here from scratch.
std::map<Natural, std::string> zeckendorf_table(std::size_t len) {
  std::vector<Natural> w{1, 2};
  while (w.size() < len) w.push_back(w[w.size() - 1] + w[w.size() - 2]);
  std::map<Natural, std::string> out{{0, "0"}};
  for (std::size_t l = 1; l <= len; ++l) {
    for (Natural bits = Natural{1} << (l - 1); bits < (Natural{1} << l); ++bits) {
      if (bits & (bits >> 1)) continue;
      Natural v = 0;
      std::string s;
      for (std::size_t p = l; p-- > 0;) {
        const bool one = (bits >> p) & 1u;
        s.push_back(one ? '1' : '0');
        if (one) v += w[p];
      }
      CHECK(out.emplace(v, s).second);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("fibonacci encoding matches the enumerated canonical strings") {
  const auto table = zeckendorf_table(20);
  // 20 digits cover every value below F_22 = 17711 exactly once.
  CHECK(table.size() == 17711);
  for (const auto& [v, s] : table) {
    REQUIRE(v < 17711);
    CHECK(encode(v, System::Fibonacci).to_string() == s);
    CHECK(decode(DigitWord::parse(System::Fibonacci, s)) == v);
  }
}

TEST_CASE("small encodings") {
  CHECK(encode(0, System::Fibonacci).to_string() == "0");
  CHECK(encode(0, System::Base2).to_string() == "0");
  CHECK(encode(4, System::Fibonacci).to_string() == "101");
  CHECK(encode(12, System::Fibonacci).to_string() == "10101");
  CHECK(encode(13, System::Fibonacci).to_string() == "100000");
  CHECK(encode(10, System::Base2).to_string() == "1010");
  CHECK(encode(~Natural{0}, System::Base2).size() == 64);
}

TEST_CASE("base 2 against bit arithmetic") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 20000; ++k) {
    const Natural n = rng() >> (rng() % 64);
    const DigitWord w = encode(n, System::Base2);
    Natural v = 0;
    for (auto d : w.digits) v = 2 * v + d;
    CHECK(v == n);
    CHECK((w.digits.front() == 1 || n == 0));
  }
}

TEST_CASE("fibonacci numbers and overflow") {
  CHECK(fibonacci_number(2) == 1);
  CHECK(fibonacci_number(3) == 2);
  CHECK(fibonacci_number(12) == 144);
  CHECK(fibonacci_number(93) == 12200160415121876738ull);
  CHECK_THROWS_AS(fibonacci_number(94), OverflowError);
  CHECK_THROWS_AS(fibonacci_number(1), Error);
  CHECK(digit_weight(System::Fibonacci, 0) == 1);
  CHECK(digit_weight(System::Fibonacci, 3) == 5);
  CHECK(digit_weight(System::Base2, 5) == 32);
}

TEST_CASE("random 64-bit fibonacci round trips") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 20000; ++k) {
    const Natural n = rng() >> (rng() % 64);
    const DigitWord w = encode(n, System::Fibonacci);
    CHECK(is_canonical(w));
    CHECK(decode(w) == n);
  }
  CHECK(decode(encode(~Natural{0}, System::Fibonacci)) == ~Natural{0});
}

TEST_CASE("non-canonical words") {
  const DigitWord w = DigitWord::parse(System::Fibonacci, "0110");
  CHECK_FALSE(is_canonical(w));
  CHECK(decode(w) == 5);
  CHECK(normalize(w).to_string() == "1000");
  CHECK_FALSE(is_canonical(DigitWord::parse(System::Fibonacci, "01")));
  CHECK(is_canonical(DigitWord::parse(System::Fibonacci, "0")));
  CHECK_THROWS_AS(DigitWord::parse(System::Base2, "102"), Error);
  CHECK(decode(DigitWord::parse(System::Base2, "")) == 0);
  // 64 ones overflow in base 2 only once a 65th digit appears.
  CHECK_THROWS_AS(decode(DigitWord::parse(System::Base2, std::string(65, '1'))), OverflowError);
}

TEST_CASE("padding and tuples") {
  const DigitWord a = encode(3, System::Fibonacci), b = encode(12, System::Fibonacci);
  const DigitWord both[] = {a, b};
  const TupleWord t = pad_align(both);
  CHECK(t.length() == 5);
  CHECK(t.tracks[0].to_string() == "00100");
  const auto cols = t.columns();
  CHECK(cols.size() == 5);
  CHECK(cols[0] == 2u);  // only track 1 has a leading 1
  CHECK(cols[2] == 3u);
  const DigitWord mixed[] = {a, encode(3, System::Base2)};
  CHECK_THROWS_AS(pad_align(mixed), Error);
  const Natural values[] = {1, 0};
  CHECK(encode_tuple(values, System::Base2, 4).length() == 4);
}

TEST_CASE("radix order") {
  CHECK(radix_compare(encode(5, System::Base2), encode(6, System::Base2)) < 0);
  CHECK(radix_compare(encode(9, System::Base2), encode(6, System::Base2)) > 0);
  CHECK(radix_compare(encode(7, System::Fibonacci), encode(7, System::Fibonacci)) == 0);
}

TEST_CASE("checked arithmetic") {
  CHECK(checked_add(2, 3) == 5);
  CHECK_THROWS_AS(checked_add(~Natural{0}, 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(Natural{1} << 33, Natural{1} << 31), OverflowError);
  CHECK(checked_mul(Natural{1} << 32, Natural{1} << 31) == Natural{1} << 63);
}

TEST_CASE("system names") {
  CHECK(parse_system("msd_fib") == System::Fibonacci);
  CHECK(parse_system("msd_2") == System::Base2);
  CHECK(system_name(System::Fibonacci) == "fib");
  CHECK_THROWS_AS(parse_system("msd_3"), Error);
}
