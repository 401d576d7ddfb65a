#include <doctest.h>

#include "lyndon/debruijn.hpp"
#include "lyndon/oracle.hpp"
#include "lyndon/ranking.hpp"
#include "support.hpp"

using namespace lyndon;
using lyndon::test::S;
using lyndon::test::W;

namespace {

LyndonInLn L(const std::string& text, std::size_t n, std::uint32_t sigma = 2) { return {W(text, sigma), n}; }

}  // namespace

TEST_CASE("LyndonInLn validation") {
  CHECK_THROWS_AS(L("0011", 6), std::invalid_argument);
  CHECK_THROWS_AS(L("10", 6), std::invalid_argument);
  CHECK(L("01", 6).expanded() == W("010101"));
}

TEST_CASE("fkm_successor fixtures") {
  CHECK(fkm_successor(L("000001", 6))->word() == W("000011"));
  CHECK(fkm_successor(L("001", 6))->word() == W("001011"));
  CHECK(fkm_successor(L("01", 6))->word() == W("010111"));
  CHECK(fkm_successor(L("0", 6))->word() == W("000001"));
  CHECK_FALSE(fkm_successor(L("1", 6)).has_value());
}

TEST_CASE("ln_predecessor fixtures") {
  CHECK(ln_predecessor(L("01", 6))->word() == W("001111"));
  CHECK(ln_predecessor(L("000001", 6))->word() == W("0"));
  CHECK_FALSE(ln_predecessor(L("0", 6)).has_value());
  CHECK(ln_predecessor(L("1", 6))->word() == W("011111"));
}

TEST_CASE("successor walk visits the sorted blocks and covers sigma^n symbols") {
  for (std::uint32_t sigma : {2u, 3u, 4u}) {
    const std::size_t max_n = sigma == 2 ? 12 : (sigma == 3 ? 7 : 5);
    for (std::size_t n = 1; n <= max_n; ++n) {
      const Alphabet ab(sigma);
      const auto expected = oracle::enumerate_lyndon(n, ab, true);
      std::optional<LyndonInLn> cur = LyndonInLn(Word(ab, {0}), n);
      std::size_t idx = 0;
      std::size_t symbols = 0;
      while (cur) {
        REQUIRE(idx < expected.size());
        REQUIRE(cur->word() == expected[idx]);
        if (idx > 0) REQUIRE(ln_predecessor(*cur)->word() == expected[idx - 1]);
        symbols += cur->word().size();
        cur = fkm_successor(*cur);
        ++idx;
      }
      REQUIRE(idx == expected.size());
      REQUIRE(BigCount(symbols) == BigCount::pow(sigma, n));
    }
  }
}

TEST_CASE("prefix_end_position") {
  CHECK(prefix_end_position(L("0", 4)) == BigCount(1));
  CHECK(prefix_end_position(L("1", 4)) == BigCount(16));
  CHECK(prefix_end_position(L("2", 5, 3)) == BigCount::pow(3, 5));
  const std::string db6 = S(oracle::brute_db(6, Alphabet(2)));
  std::size_t end = 0;
  for (const Word& lam : oracle::enumerate_lyndon(6, Alphabet(2), true)) {
    end += lam.size();
    if (lam == W("01")) CHECK(end == 48);
    REQUIRE(prefix_end_position(LyndonInLn(lam, 6)) == BigCount(end));
  }
  CHECK(end == db6.size());
}

TEST_CASE("decode fixtures") {
  CHECK(decode(W("1001")) == BigCount(5));
  CHECK(decode(W("0101")) == BigCount(10));
  CHECK(decode(W("1100")) == BigCount(15));
  CHECK(decode(W("111000")) == BigCount(62));
  CHECK(decode(W("001100")) == BigCount(10));
  CHECK(decode(W("110110")) == BigCount(53));
  CHECK(decode(W("110010")) == BigCount(24));
  CHECK(decode(W("0000")) == BigCount(1));
  CHECK(decode(W("0001")) == BigCount(2));
  CHECK(decode(W("1111")) == BigCount(13));
  CHECK(decode(W("0")) == BigCount(1));
  CHECK(decode(W("1")) == BigCount(2));

  CHECK(decode_case(W("111000")) == DecodeCase::wraparound);
  CHECK(decode_case(W("001100")) == DecodeCase::adjacent_pair);
  CHECK(decode_case(W("110110")) == DecodeCase::around_root);
  CHECK(decode_case(W("110010")) == DecodeCase::around_predecessor);
  // The block before a^(n-1)z is a itself: the left neighbour is missing.
  CHECK(decode_case(W("0001")) == DecodeCase::around_predecessor);
}

TEST_CASE("wraparound words decode in closed form") {
  for (std::size_t n = 2; n <= 12; ++n) {
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Symbol> s(n, 0);
      for (std::size_t j = 0; j < i; ++j) s[j] = 1;
      const Word w(Alphabet(2), s);
      REQUIRE(decode(w) == BigCount::pow(2, n) - BigCount(i) + BigCount(1));
      REQUIRE(decode(w) == oracle::brute_occ(w));
    }
  }
}

TEST_CASE("decode is the inverse of the explicit sequence") {
  for (std::uint32_t sigma : {2u, 3u, 5u}) {
    const std::size_t max_n = sigma == 2 ? 10 : (sigma == 3 ? 6 : 4);
    for (std::size_t n = 1; n <= max_n; ++n) {
      const Alphabet ab(sigma);
      const Word db = oracle::brute_db(n, ab);
      for (const Word& w : oracle::all_words(n, ab)) REQUIRE(decode(w) == oracle::brute_occ(w, db));
    }
  }
}

TEST_CASE("db_symbol") {
  CHECK(db_symbol(4, BigCount(5), Alphabet(2)) == 1);
  CHECK(db_symbol(4, BigCount(1), Alphabet(2)) == 0);
  std::string readout;
  for (unsigned long k = 1; k <= 16; ++k) readout += static_cast<char>('0' + db_symbol(4, BigCount(k), Alphabet(2)));
  CHECK(readout == "0000100110101111");
  CHECK_THROWS_AS(db_symbol(4, BigCount(0), Alphabet(2)), std::out_of_range);
  CHECK_THROWS_AS(db_symbol(4, BigCount(17), Alphabet(2)), std::out_of_range);

  for (std::size_t n = 1; n <= 5; ++n) {
    const Alphabet ab(3);
    const Word db = oracle::brute_db(n, ab);
    for (std::size_t k = 1; k <= db.size(); ++k) REQUIRE(db_symbol(n, BigCount(k), ab) == db[k - 1]);
  }
}

TEST_CASE("db_prime_symbol") {
  const Alphabet two(2);
  CHECK(db_prime_symbol(6, BigCount(7), two) == 0);
  CHECK(db_prime_symbol(6, BigCount(12), two) == 1);
  CHECK(db_prime_symbol(6, BigCount(54), two) == 1);
  CHECK_THROWS_AS(db_prime_symbol(6, BigCount(55), two), std::out_of_range);
  CHECK_THROWS_AS(db_prime_symbol(6, BigCount(0), two), std::out_of_range);
  const Word seq = oracle::brute_db_prime(4, Alphabet(3));
  for (std::size_t k = 1; k <= seq.size(); ++k) REQUIRE(db_prime_symbol(4, BigCount(k), Alphabet(3)) == seq[k - 1]);
}

TEST_CASE("find_occurrences") {
  const std::vector<Symbol> text{0, 1, 0, 1, 0};
  const std::vector<Symbol> pat{0, 1, 0};
  CHECK(find_occurrences(text, pat) == std::vector<std::size_t>{0, 2});
  CHECK(find_occurrences(pat, text).empty());
}
