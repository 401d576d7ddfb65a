#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lyndon {

using Symbol = std::uint32_t;

/// Raised when an internal invariant fails (never expected on valid input).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Ordered alphabet {0, ..., sigma-1}; 0 is the minimal and sigma-1 the
/// maximal symbol.
class Alphabet {
 public:
  explicit Alphabet(std::uint32_t sigma);

  std::uint32_t sigma() const noexcept { return sigma_; }
  Symbol min_symbol() const noexcept { return 0; }
  Symbol max_symbol() const noexcept { return sigma_ - 1; }
  bool contains(Symbol s) const noexcept { return s < sigma_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::uint32_t sigma_;
};

/// Nonempty word over an Alphabet. Immutable once constructed.
class Word {
 public:
  Word(Alphabet alphabet, std::vector<Symbol> symbols);
  Word(Alphabet alphabet, std::initializer_list<Symbol> symbols)
      : Word(alphabet, std::vector<Symbol>(symbols)) {}

  /// symbol^length
  static Word repeated(Alphabet alphabet, Symbol symbol, std::size_t length);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::uint32_t sigma() const noexcept { return alphabet_.sigma(); }
  std::size_t size() const noexcept { return symbols_.size(); }

  /// 0-based access; w[i] here is w[i+1] in 1-based notation.
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  /// The prefix of length len, 1 <= len <= size().
  Word prefix(std::size_t len) const;
  /// The factor starting at 0-based `pos` of length len >= 1.
  Word factor(std::size_t pos, std::size_t len) const;
  /// this^times
  Word power(std::size_t times) const;
  Word concat(const Word& other) const;

  bool is_constant(Symbol s) const noexcept;

  friend bool operator==(const Word& u, const Word& v) {
    return u.alphabet_ == v.alphabet_ && u.symbols_ == v.symbols_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Symbol> symbols_;
};

/// Lexicographic order; a proper prefix compares less.
/// Throws std::invalid_argument when the alphabets differ.
std::strong_ordering compare_lex(const Word& u, const Word& v);

inline bool operator<(const Word& u, const Word& v) { return compare_lex(u, v) < 0; }
inline bool operator<=(const Word& u, const Word& v) { return compare_lex(u, v) <= 0; }
inline bool operator>(const Word& u, const Word& v) { return compare_lex(u, v) > 0; }
inline bool operator>=(const Word& u, const Word& v) { return compare_lex(u, v) >= 0; }

/// Moves (c mod |w|) leading symbols to the end. Negative c rotates right.
Word rotate(const Word& w, long long c);

/// Start offset of the lexicographically least rotation (Booth, O(n)).
/// For periodic words the smallest such offset is returned.
std::size_t min_rotation_offset(std::span<const Symbol> s);

Word min_rotation(const Word& w);
bool is_self_minimal(const Word& w);

struct PrimitiveRoot {
  Word root;
  std::size_t exponent;
};

/// Shortest period dividing |s|, from the KMP failure function.
std::size_t primitive_period(std::span<const Symbol> s);

PrimitiveRoot primitive_root(const Word& w);
bool is_primitive(const Word& w);
bool is_lyndon(const Word& w);

/// Largest self-minimal word of the same length that is <= w.
Word prev_self_minimal(const Word& w);

/// Neighbours of w in lexicographic order on words of length |w|, i.e. the
/// base-sigma numeral minus / plus one. Throw std::domain_error at the ends.
Word word_pred(const Word& w);
Word word_succ(const Word& w);

}  // namespace lyndon
