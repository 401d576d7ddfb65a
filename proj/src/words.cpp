#include "lyndon/words.hpp"

#include <algorithm>

namespace lyndon {

Alphabet::Alphabet(std::uint32_t sigma) : sigma_(sigma) {
  if (sigma < 2) throw std::invalid_argument("alphabet size must be at least 2");
}

Word::Word(Alphabet alphabet, std::vector<Symbol> symbols)
    : alphabet_(alphabet), symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("empty word");
  for (Symbol s : symbols_) {
    if (!alphabet_.contains(s)) {
      throw std::invalid_argument("symbol " + std::to_string(s) +
                                  " outside alphabet of size " +
                                  std::to_string(alphabet_.sigma()));
    }
  }
}

Word Word::repeated(Alphabet alphabet, Symbol symbol, std::size_t length) {
  return Word(alphabet, std::vector<Symbol>(length, symbol));
}

Word Word::prefix(std::size_t len) const { return factor(0, len); }

Word Word::factor(std::size_t pos, std::size_t len) const {
  if (len == 0 || pos + len > symbols_.size()) throw std::out_of_range("factor out of range");
  return Word(alphabet_, std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                                             symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word Word::power(std::size_t times) const {
  if (times == 0) throw std::invalid_argument("empty power");
  std::vector<Symbol> out;
  out.reserve(symbols_.size() * times);
  for (std::size_t t = 0; t < times; ++t) out.insert(out.end(), symbols_.begin(), symbols_.end());
  return Word(alphabet_, std::move(out));
}

Word Word::concat(const Word& other) const {
  if (!(alphabet_ == other.alphabet_)) throw std::invalid_argument("alphabet mismatch");
  std::vector<Symbol> out(symbols_);
  out.insert(out.end(), other.symbols_.begin(), other.symbols_.end());
  return Word(alphabet_, std::move(out));
}

bool Word::is_constant(Symbol s) const noexcept {
  return std::all_of(symbols_.begin(), symbols_.end(), [s](Symbol c) { return c == s; });
}

std::strong_ordering compare_lex(const Word& u, const Word& v) {
  if (!(u.alphabet() == v.alphabet())) throw std::invalid_argument("alphabet mismatch");
  auto a = u.symbols();
  auto b = v.symbols();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

Word rotate(const Word& w, long long c) {
  const auto n = static_cast<long long>(w.size());
  const auto shift = static_cast<std::size_t>(((c % n) + n) % n);
  std::vector<Symbol> out(w.symbols().begin(), w.symbols().end());
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift), out.end());
  return Word(w.alphabet(), std::move(out));
}

std::size_t min_rotation_offset(std::span<const Symbol> s) {
  // Two-candidate scan: i and j are competing starts, k the matched length.
  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Symbol a = s[(i + k) % n];
    const Symbol b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

Word min_rotation(const Word& w) {
  return rotate(w, static_cast<long long>(min_rotation_offset(w.symbols())));
}

bool is_self_minimal(const Word& w) { return min_rotation_offset(w.symbols()) == 0; }

std::size_t primitive_period(std::span<const Symbol> s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> border(n + 1, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t b = border[i];
    while (b > 0 && s[i] != s[b]) b = border[b];
    if (s[i] == s[b]) ++b;
    border[i + 1] = b;
  }
  const std::size_t period = n - border[n];
  return n % period == 0 ? period : n;
}

PrimitiveRoot primitive_root(const Word& w) {
  const std::size_t p = primitive_period(w.symbols());
  return {w.prefix(p), w.size() / p};
}

bool is_primitive(const Word& w) { return primitive_period(w.symbols()) == w.size(); }

bool is_lyndon(const Word& w) { return is_primitive(w) && is_self_minimal(w); }

Word prev_self_minimal(const Word& w) {
  if (is_self_minimal(w)) return w;
  const std::size_t n = w.size();
  const Symbol z = w.alphabet().max_symbol();
  std::vector<Symbol> cand(w.symbols().begin(), w.symbols().end());
  // Candidates w[0..k) (w[k]-1) z^{n-k-1} grow with k, so the first
  // self-minimal one from the right is the maximum.
  for (std::size_t k = n; k-- > 0;) {
    if (w[k] == 0) continue;
    std::copy(w.symbols().begin(), w.symbols().end(), cand.begin());
    cand[k] = w[k] - 1;
    std::fill(cand.begin() + static_cast<std::ptrdiff_t>(k + 1), cand.end(), z);
    if (min_rotation_offset(cand) == 0) return Word(w.alphabet(), cand);
  }
  throw InvariantViolation("prev_self_minimal: no candidate found");
}

Word word_pred(const Word& w) {
  std::vector<Symbol> out(w.symbols().begin(), w.symbols().end());
  for (std::size_t i = out.size(); i-- > 0;) {
    if (out[i] > 0) {
      --out[i];
      return Word(w.alphabet(), std::move(out));
    }
    out[i] = w.alphabet().max_symbol();
  }
  throw std::domain_error("word_pred: word is minimal");
}

Word word_succ(const Word& w) {
  std::vector<Symbol> out(w.symbols().begin(), w.symbols().end());
  const Symbol z = w.alphabet().max_symbol();
  for (std::size_t i = out.size(); i-- > 0;) {
    if (out[i] < z) {
      ++out[i];
      return Word(w.alphabet(), std::move(out));
    }
    out[i] = 0;
  }
  throw std::domain_error("word_succ: word is maximal");
}

}  // namespace lyndon
