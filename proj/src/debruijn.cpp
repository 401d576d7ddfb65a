#include "lyndon/debruijn.hpp"

#include <stdexcept>
#include <vector>

#include "lyndon/cscount.hpp"
#include "lyndon/ranking.hpp"

namespace lyndon {

LyndonInLn::LyndonInLn(Word word, std::size_t n) : word_(std::move(word)), n_(n) {
  if (n_ == 0 || n_ % word_.size() != 0) throw std::invalid_argument("block length must divide n");
  if (!is_lyndon(word_)) throw std::invalid_argument("block must be a Lyndon word");
}

std::optional<LyndonInLn> fkm_successor(const LyndonInLn& lambda) {
  const std::size_t n = lambda.n();
  const Symbol z = lambda.word().alphabet().max_symbol();
  std::vector<Symbol> x(lambda.word().symbols().begin(), lambda.word().symbols().end());
  for (;;) {
    const std::size_t t = x.size();
    x.resize(n);
    for (std::size_t i = t; i < n; ++i) x[i] = x[i - t];
    std::size_t len = n;
    while (len > 0 && x[len - 1] == z) --len;
    if (len == 0) return std::nullopt;
    ++x[len - 1];
    x.resize(len);
    if (n % len == 0) return LyndonInLn(Word(lambda.word().alphabet(), std::move(x)), n);
  }
}

std::optional<LyndonInLn> ln_predecessor(const LyndonInLn& lambda) {
  const Word full = lambda.expanded();
  if (full.is_constant(full.alphabet().min_symbol())) return std::nullopt;
  // Self-minimal words of length n are exactly the powers of blocks, in the
  // same order as the blocks themselves.
  const Word below = prev_self_minimal(word_pred(full));
  return LyndonInLn(primitive_root(below).root, lambda.n());
}

BigCount prefix_end_position(const LyndonInLn& lambda) { return cs_count_fast(lambda.expanded()); }

std::vector<std::size_t> find_occurrences(std::span<const Symbol> text, std::span<const Symbol> pattern) {
  std::vector<std::size_t> hits;
  const std::size_t m = pattern.size();
  if (m == 0 || m > text.size()) return hits;
  std::vector<std::size_t> border(m + 1, 0);
  for (std::size_t i = 1; i < m; ++i) {
    std::size_t b = border[i];
    while (b > 0 && pattern[i] != pattern[b]) b = border[b];
    if (pattern[i] == pattern[b]) ++b;
    border[i + 1] = b;
  }
  std::size_t matched = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    while (matched > 0 && text[i] != pattern[matched]) matched = border[matched];
    if (text[i] == pattern[matched]) ++matched;
    if (matched == m) {
      hits.push_back(i + 1 - m);
      matched = border[matched];
    }
  }
  return hits;
}

namespace {

/// Length of the leading run of `s` in w.
std::size_t leading_run(const Word& w, Symbol s) {
  std::size_t i = 0;
  while (i < w.size() && w[i] == s) ++i;
  return i;
}

bool is_wraparound(const Word& w) {
  const Alphabet& ab = w.alphabet();
  const std::size_t i = leading_run(w, ab.max_symbol());
  if (i == 0) return false;
  for (std::size_t j = i; j < w.size(); ++j) {
    if (w[j] != ab.min_symbol()) return false;
  }
  return true;
}

struct Decomposition {
  Word lambda;        // beta alpha
  std::size_t power;  // d in w = (alpha beta)^d
  std::size_t alpha_length;
  bool alpha_is_max_run;
};

Decomposition decompose(const Word& w) {
  const PrimitiveRoot root = primitive_root(w);
  const std::size_t shift = min_rotation_offset(root.root.symbols());
  const Word lambda = rotate(root.root, static_cast<long long>(shift));
  const Symbol z = w.alphabet().max_symbol();
  bool all_max = true;
  for (std::size_t i = 0; i < shift; ++i) all_max = all_max && root.root[i] == z;
  return {lambda, root.exponent, shift, all_max};
}

/// Block sequence around `middle`, with the 1-based sequence position of
/// the window's first symbol.
struct Window {
  std::vector<Symbol> text;
  BigCount start;
};

Window build_window(const LyndonInLn& middle, bool with_predecessor) {
  Window win;
  const BigCount end = prefix_end_position(middle);
  BigCount start = end + BigCount(1) - BigCount(middle.word().size());
  if (with_predecessor) {
    if (auto prev = ln_predecessor(middle)) {
      start = start - BigCount(prev->word().size());
      win.text.assign(prev->word().symbols().begin(), prev->word().symbols().end());
    }
  }
  win.text.insert(win.text.end(), middle.word().symbols().begin(), middle.word().symbols().end());
  if (auto next = fkm_successor(middle)) {
    win.text.insert(win.text.end(), next->word().symbols().begin(), next->word().symbols().end());
  }
  win.start = start;
  return win;
}

}  // namespace

DecodeCase decode_case(const Word& w) {
  if (w.is_constant(w.alphabet().min_symbol())) return DecodeCase::minimal_word;
  if (is_wraparound(w)) return DecodeCase::wraparound;
  const Decomposition dec = decompose(w);
  if (!dec.alpha_is_max_run) return DecodeCase::adjacent_pair;
  return dec.power > 1 ? DecodeCase::around_root : DecodeCase::around_predecessor;
}

BigCount decode(const Word& w) {
  const std::size_t n = w.size();
  const Alphabet& ab = w.alphabet();
  const DecodeCase kind = decode_case(w);
  if (kind == DecodeCase::minimal_word) return BigCount(1);
  if (kind == DecodeCase::wraparound) {
    // z^i a^(n-i) starts i symbols before the end of the cyclic sequence.
    return BigCount::pow(ab.sigma(), n) - BigCount(leading_run(w, ab.max_symbol())) + BigCount(1);
  }
  const Decomposition dec = decompose(w);
  Window win;
  if (kind == DecodeCase::adjacent_pair) {
    win = build_window(LyndonInLn(dec.lambda, n), false);
  } else if (kind == DecodeCase::around_root) {
    win = build_window(LyndonInLn(dec.lambda, n), true);
  } else {
    // Largest block whose expansion is strictly below beta a^|alpha|.
    const Word beta = dec.lambda.prefix(dec.lambda.size() - dec.alpha_length);
    std::vector<Symbol> target(beta.symbols().begin(), beta.symbols().end());
    target.resize(n, ab.min_symbol());
    Word best = primitive_root(prev_self_minimal(word_pred(Word(ab, std::move(target))))).root;
    // a Lyndon proper prefix of beta is below beta even when its expansion is not
    for (std::size_t d = beta.size() - 1; d >= 1; --d) {
      if (n % d != 0) continue;
      const Word head = beta.prefix(d);
      if (is_lyndon(head)) {
        if (best < head) best = head;
        break;
      }
    }
    win = build_window(LyndonInLn(best, n), true);
  }
  const auto hits = find_occurrences(win.text, w.symbols());
  if (hits.size() != 1) {
    throw InvariantViolation("decode: expected exactly one occurrence in window, found " +
                             std::to_string(hits.size()));
  }
  return win.start + BigCount(hits.front());
}

Symbol db_symbol(std::size_t n, const BigCount& k, const Alphabet& alphabet) {
  if (n < 1) throw std::domain_error("db_symbol: n must be positive");
  const BigCount total = BigCount::pow(alphabet.sigma(), n);
  if (k < BigCount(1) || k > total) throw std::out_of_range("position out of range");
  // Least numeral whose self-minimal floor v has |CS(v)| >= k.
  BigCount lo(0);
  BigCount hi = total - BigCount(1);
  while (lo < hi) {
    const BigCount mid = (lo + hi).div_floor(BigCount(2));
    if (cs_count_fast(prev_self_minimal(word_from_numeral(mid, n, alphabet))) >= k) {
      hi = mid;
    } else {
      lo = mid + BigCount(1);
    }
  }
  const Word v = prev_self_minimal(word_from_numeral(lo, n, alphabet));
  const BigCount from_end = cs_count_fast(v) - k + BigCount(1);
  if (from_end > BigCount(n)) throw InvariantViolation("db_symbol: position outside located block");
  return v[n - from_end.to_ulong()];
}

Symbol db_prime_symbol(std::size_t n, const BigCount& k, const Alphabet& alphabet) {
  if (n < 1) throw std::domain_error("db_prime_symbol: n must be positive");
  const BigCount total = BigCount(n) * count_lyndon(n, alphabet);
  if (k < BigCount(1) || k > total) throw std::out_of_range("position out of range");
  const BigCount zero_based = k - BigCount(1);
  const std::size_t i = zero_based.mod(BigCount(n)).to_ulong();
  const BigCount j = zero_based.div_floor(BigCount(n)) + BigCount(1);
  return unrank_lyndon(n, j, alphabet)[i];
}

}  // namespace lyndon
