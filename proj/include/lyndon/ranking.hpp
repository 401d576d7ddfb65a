#pragma once

#include <cstddef>
#include <vector>

#include "lyndon/bigarith.hpp"
#include "lyndon/cscount.hpp"
#include "lyndon/words.hpp"

namespace lyndon {

/// Moebius function; throws std::domain_error for m < 1.
int mobius(unsigned long m);

/// Divisors of m in increasing order.
std::vector<std::size_t> divisors(std::size_t m);

struct RankResult {
  BigCount rank;
  /// The self-minimal word that was actually ranked.
  Word normalized_word;
};

/// Number of Lyndon words of length |w| that are <= w. Any w is accepted.
RankResult rank_lyndon(const Word& w, CsEngine engine = CsEngine::fast);

/// Lyndon words of length n over the alphabet.
BigCount count_lyndon(std::size_t n, const Alphabet& alphabet);

/// (1/n) sum_{d|n} mu(n/d) sigma^d, independent of the ranking machinery.
BigCount count_lyndon_closed_form(std::size_t n, const Alphabet& alphabet);

/// The word of length n whose base-sigma numeral is `value` (< sigma^n).
Word word_from_numeral(const BigCount& value, std::size_t n, const Alphabet& alphabet);
BigCount numeral_of(const Word& w);

/// The k-th smallest (1-based) Lyndon word of length n.
/// Throws std::out_of_range unless 1 <= k <= count_lyndon(n).
Word unrank_lyndon(std::size_t n, const BigCount& k, const Alphabet& alphabet);

}  // namespace lyndon
