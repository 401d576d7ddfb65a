#pragma once

// Deliberately naive reference implementations used to check the fast
// paths. Nothing here shares code with the ranking or decoding engines
// beyond the basic word predicates.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lyndon/bigarith.hpp"
#include "lyndon/words.hpp"

namespace lyndon::oracle {

inline constexpr std::uint64_t kDefaultSizeLimit = 20'000'000;

/// Thrown when sigma^n exceeds the configured limit.
class SizeGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Sorted Lyndon words of length n, or of every length dividing n.
std::vector<Word> enumerate_lyndon(std::size_t n, const Alphabet& alphabet, bool divisors_only,
                                   std::uint64_t limit = kDefaultSizeLimit);

/// The minimal de Bruijn sequence of order n as one word of length sigma^n.
Word brute_db(std::size_t n, const Alphabet& alphabet, std::uint64_t limit = kDefaultSizeLimit);

/// Sorted Lyndon words of length n concatenated.
Word brute_db_prime(std::size_t n, const Alphabet& alphabet, std::uint64_t limit = kDefaultSizeLimit);

/// #{x in Sigma^|w| : minimal rotation of x <= w}, by exhaustive scan.
BigCount brute_cs(const Word& w, std::uint64_t limit = kDefaultSizeLimit);

/// 1-based cyclic position of w in `sequence`; throws InvariantViolation
/// unless there is exactly one occurrence.
BigCount brute_occ(const Word& w, const Word& sequence);
BigCount brute_occ(const Word& w, std::uint64_t limit = kDefaultSizeLimit);

/// All words of length n in lexicographic order.
std::vector<Word> all_words(std::size_t n, const Alphabet& alphabet, std::uint64_t limit = kDefaultSizeLimit);

}  // namespace lyndon::oracle
