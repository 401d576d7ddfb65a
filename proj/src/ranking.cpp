#include "lyndon/ranking.hpp"

#include <stdexcept>

namespace lyndon {

int mobius(unsigned long m) {
  if (m < 1) throw std::domain_error("mobius: argument must be positive");
  int result = 1;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return 0;
    result = -result;
  }
  if (m > 1) result = -result;
  return result;
}

std::vector<std::size_t> divisors(std::size_t m) {
  std::vector<std::size_t> small, large;
  for (std::size_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    small.push_back(d);
    if (d != m / d) large.push_back(m / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

RankResult rank_lyndon(const Word& w, CsEngine engine) {
  const Word normalized = prev_self_minimal(w);
  const std::size_t n = normalized.size();
  mpz_class sum;
  for (std::size_t d : divisors(n)) {
    const int mu = mobius(n / d);
    if (mu == 0) continue;
    const Word v = d == n ? normalized : prev_self_minimal(normalized.prefix(d));
    const BigCount cs = cs_count(v, engine);
    if (mu > 0) {
      sum += cs.value();
    } else {
      sum -= cs.value();
    }
  }
  if (sgn(sum) < 0 || !mpz_divisible_ui_p(sum.get_mpz_t(), n)) {
    throw InvariantViolation("Moebius sum not divisible by n");
  }
  mpz_class rank;
  mpz_divexact_ui(rank.get_mpz_t(), sum.get_mpz_t(), n);
  return {BigCount(rank), normalized};
}

BigCount count_lyndon(std::size_t n, const Alphabet& alphabet) {
  if (n < 1) throw std::domain_error("count_lyndon: n must be positive");
  return rank_lyndon(Word::repeated(alphabet, alphabet.max_symbol(), n)).rank;
}

BigCount count_lyndon_closed_form(std::size_t n, const Alphabet& alphabet) {
  if (n < 1) throw std::domain_error("count_lyndon: n must be positive");
  mpz_class sum;
  for (std::size_t d : divisors(n)) {
    const int mu = mobius(n / d);
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), alphabet.sigma(), d);
    sum += mu * power;
  }
  return BigCount(sum).exact_divide(BigCount(n));
}

Word word_from_numeral(const BigCount& value, std::size_t n, const Alphabet& alphabet) {
  if (value >= BigCount::pow(alphabet.sigma(), n)) throw std::out_of_range("numeral exceeds sigma^n");
  std::vector<Symbol> symbols(n, 0);
  mpz_class rest = value.value();
  for (std::size_t i = n; i-- > 0 && sgn(rest) != 0;) {
    symbols[i] = static_cast<Symbol>(mpz_tdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), alphabet.sigma()));
  }
  return Word(alphabet, std::move(symbols));
}

BigCount numeral_of(const Word& w) {
  mpz_class v;
  for (Symbol s : w.symbols()) v = v * w.sigma() + s;
  return BigCount(v);
}

Word unrank_lyndon(std::size_t n, const BigCount& k, const Alphabet& alphabet) {
  if (n < 1) throw std::domain_error("unrank_lyndon: n must be positive");
  if (k < BigCount(1) || k > count_lyndon(n, alphabet)) throw std::out_of_range("rank out of range");
  // Least numeral v with rank(word(v)) >= k.
  BigCount lo(0);
  BigCount hi = BigCount::pow(alphabet.sigma(), n) - BigCount(1);
  while (lo < hi) {
    const BigCount mid = (lo + hi).div_floor(BigCount(2));
    if (rank_lyndon(word_from_numeral(mid, n, alphabet)).rank >= k) {
      hi = mid;
    } else {
      lo = mid + BigCount(1);
    }
  }
  Word result = word_from_numeral(lo, n, alphabet);
  if (!is_lyndon(result)) throw InvariantViolation("unrank produced a non-Lyndon word");
  return result;
}

}  // namespace lyndon
