#include <doctest.h>

#include "lyndon/oracle.hpp"
#include "support.hpp"

using namespace lyndon;
using lyndon::test::W;

TEST_CASE("automaton transitions for aabaabab") {
  const PrefixAutomaton a(W("aabaabab"));
  const Symbol A = 0, B = 1;
  CHECK(a.accepting() == 8);
  CHECK(a.step(2, A) == a.accepting());
  CHECK(a.step(7, A) == a.accepting());
  CHECK(a.step(7, B) == a.accepting());
  CHECK(a.step(0, B) == 0);
  CHECK(a.step(0, A) == 1);
  CHECK(a.step(2, B) == 3);
  CHECK(a.step(5, A) == a.accepting());
  CHECK(a.step(a.accepting(), B) == a.accepting());
  CHECK_THROWS_AS(PrefixAutomaton(W("ba")), std::invalid_argument);
}

TEST_CASE("automaton edge multiplicities sum to sigma") {
  std::mt19937_64 rng(1);
  for (int iter = 0; iter < 50; ++iter) {
    const std::uint32_t sigma = 2 + iter % 5;
    const PrefixAutomaton a(test::random_self_minimal(rng, 1 + iter % 12, sigma));
    const std::size_t n = a.length();
    for (State q = 0; q <= n; ++q) {
      std::size_t to_zero = 0, to_next = 0, to_acc = 0;
      for (Symbol c = 0; c < sigma; ++c) {
        const State r = a.step(q, c);
        if (r == 0 && q < n) ++to_zero;
        else if (r == q + 1 && r < n) ++to_next;
        else if (r == n) ++to_acc;
      }
      if (q == n) {
        REQUIRE(to_acc == sigma);
      } else if (q + 1 < n) {
        REQUIRE(to_zero == a.a(q + 1));
        REQUIRE(to_next == 1);
        REQUIRE(to_acc == a.a_prime(q + 1));
      } else {
        REQUIRE(to_zero == a.a(n));
        REQUIRE(to_acc == sigma - a.a(n));
      }
      REQUIRE(a.a(std::min(q, n - 1) + 1) + a.a_prime(std::min(q, n - 1) + 1) == sigma - 1);
    }
  }
}

TEST_CASE("run traces") {
  const PrefixAutomaton a(W("aabaabab"));
  const Word x = W("aabbabba");
  const Word xx = x.concat(x);
  const auto trace = run(a, 0, xx.symbols());
  const std::vector<State> expected{0, 1, 2, 3, 0, 1, 0, 0, 1, 2, 8, 8, 8, 8, 8, 8, 8};
  CHECK(trace == expected);
  CHECK(run(a, 0, x.symbols()).back() == 1);
  CHECK(run(a, 0, std::span<const Symbol>{}) == std::vector<State>{0});
  CHECK_THROWS_AS(run(a, 9, x.symbols()), std::out_of_range);
}

TEST_CASE("automaton recognises words with a small factor") {
  for (std::uint32_t sigma : {2u, 3u}) {
    const std::size_t max_len = sigma == 2 ? 12 : 7;
    for (std::size_t wn = 1; wn <= (sigma == 2 ? 5u : 3u); ++wn) {
      for (const Word& w : oracle::all_words(wn, Alphabet(sigma))) {
        if (!is_self_minimal(w)) continue;
        const PrefixAutomaton a(w);
        for (std::size_t len = 1; len <= max_len; len += (sigma == 2 ? 1 : 2)) {
          for (const Word& x : oracle::all_words(len, Alphabet(sigma))) {
            const std::vector<Symbol> xs(x.symbols().begin(), x.symbols().end());
            const bool accepted = run(a, 0, x.symbols()).back() == a.accepting();
            REQUIRE(accepted == test::has_small_factor(xs, w));
          }
        }
      }
    }
  }
}

TEST_CASE("paths_to_initial") {
  const PrefixAutomaton ab(W("ab"));
  const auto table = paths_to_initial(ab, 8);
  for (std::size_t j = 0; j <= 8; ++j) CHECK(table.at(j, 0) == 1);

  const auto aba = PrefixAutomaton::from_any_word(W("aba"));
  const auto t = paths_to_initial(aba, 12);
  for (std::size_t j = 0; j <= 12; ++j) {
    for (State i = 0; i < 3; ++i) REQUIRE(t.at(j, i) == test::dfs_paths(aba, i, 0, j));
  }

  std::mt19937_64 rng(4);
  for (int iter = 0; iter < 20; ++iter) {
    const PrefixAutomaton a(test::random_self_minimal(rng, 1 + iter % 7, 2 + iter % 3));
    const std::size_t m = 7;
    const auto p = paths_to_initial(a, m);
    CHECK(p.at(0, 0) == 1);
    for (State i = 1; i < a.length(); ++i) CHECK(p.at(0, i) == 0);
    for (std::size_t j = 1; j <= m; ++j) {
      for (State i = 0; i < a.length(); ++i) REQUIRE(p.at(j, i) == test::dfs_paths(a, i, 0, j));
      REQUIRE(p.at(j, a.length() - 1) == p.at(j - 1, 0) * a.a(a.length()));
    }
  }
}

TEST_CASE("paths_initial_to_accepting") {
  CHECK(paths_initial_to_accepting(PrefixAutomaton(W("ab")), 2) == BigCount(2));
  CHECK(paths_initial_to_accepting(PrefixAutomaton(W("ab")), 0) == BigCount(0));
  const auto aba = PrefixAutomaton::from_any_word(W("aba"));
  unsigned long brute = 0;
  for (const Word& x : oracle::all_words(3, Alphabet(2))) {
    brute += test::has_small_factor(std::vector<Symbol>(x.symbols().begin(), x.symbols().end()), W("aba"));
  }
  CHECK(brute == 4);
  CHECK(paths_initial_to_accepting(aba, 3) == BigCount(brute));
}

TEST_CASE("forward path counts conserve sigma^j") {
  std::mt19937_64 rng(8);
  for (int iter = 0; iter < 20; ++iter) {
    const std::uint32_t sigma = 2 + iter % 4;
    const PrefixAutomaton a(test::random_self_minimal(rng, 1 + iter % 15, sigma));
    for (std::size_t j = 0; j <= 20; ++j) {
      mpz_class total;
      for (const auto& v : forward_distribution(a, j)) total += v;
      REQUIRE(BigCount(total) == BigCount::pow(sigma, j));
    }
  }
}
