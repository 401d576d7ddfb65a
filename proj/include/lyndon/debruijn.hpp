#pragma once

#include <cstddef>
#include <optional>
#include <vector>
#include <span>

#include "lyndon/bigarith.hpp"
#include "lyndon/words.hpp"

namespace lyndon {

/// A Lyndon word whose length divides n, i.e. one block of the minimal
/// de Bruijn sequence of order n.
class LyndonInLn {
 public:
  /// Throws std::invalid_argument unless `word` is Lyndon and |word| divides n.
  LyndonInLn(Word word, std::size_t n);

  const Word& word() const noexcept { return word_; }
  std::size_t n() const noexcept { return n_; }
  /// word^(n/|word|), the self-minimal word of length n it stands for.
  Word expanded() const { return word_.power(n_ / word_.size()); }

  friend bool operator==(const LyndonInLn&, const LyndonInLn&) = default;

 private:
  Word word_;
  std::size_t n_;
};

/// Next block in lexicographic order (FKM step), none after the maximal symbol.
std::optional<LyndonInLn> fkm_successor(const LyndonInLn& lambda);

/// Previous block, none before the minimal symbol.
std::optional<LyndonInLn> ln_predecessor(const LyndonInLn& lambda);

/// 1-based position in the sequence where the block ends.
BigCount prefix_end_position(const LyndonInLn& lambda);

/// 1-based cyclic position of w in the minimal de Bruijn sequence of order |w|.
BigCount decode(const Word& w);

/// Which block structure placed w; exposed for tests.
enum class DecodeCase { minimal_word, wraparound, adjacent_pair, around_root, around_predecessor };
DecodeCase decode_case(const Word& w);

/// k-th symbol (1-based) of the minimal de Bruijn sequence of order n.
Symbol db_symbol(std::size_t n, const BigCount& k, const Alphabet& alphabet);

/// k-th symbol (1-based) of the concatenation of the sorted Lyndon words of
/// length exactly n.
Symbol db_prime_symbol(std::size_t n, const BigCount& k, const Alphabet& alphabet);

/// 0-based offsets of all occurrences of pattern in text (KMP).
std::vector<std::size_t> find_occurrences(std::span<const Symbol> text, std::span<const Symbol> pattern);

}  // namespace lyndon
