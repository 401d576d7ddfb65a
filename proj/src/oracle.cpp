#include "lyndon/oracle.hpp"

#include <algorithm>
#include <string>

namespace lyndon::oracle {

namespace {

void guard(std::size_t n, const Alphabet& alphabet, std::uint64_t limit) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > limit / alphabet.sigma()) {
      throw SizeGuardError("sigma^n exceeds the oracle size limit of " + std::to_string(limit));
    }
    total *= alphabet.sigma();
  }
}

/// Advances `x` to the next word in lexicographic order; false after the last.
bool next_word(std::vector<Symbol>& x, std::uint32_t sigma) {
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i] + 1 < sigma) {
      ++x[i];
      return true;
    }
    x[i] = 0;
  }
  return false;
}

/// Strictly smaller than every nontrivial rotation.
bool lyndon_by_rotations(const std::vector<Symbol>& x) {
  const std::size_t n = x.size();
  for (std::size_t c = 1; c < n; ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      const Symbol a = x[i];
      const Symbol b = x[(i + c) % n];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == n) return false;  // equal rotation: not primitive
    }
  }
  return true;
}

}  // namespace

std::vector<Word> all_words(std::size_t n, const Alphabet& alphabet, std::uint64_t limit) {
  guard(n, alphabet, limit);
  std::vector<Word> out;
  std::vector<Symbol> x(n, 0);
  do {
    out.emplace_back(alphabet, x);
  } while (next_word(x, alphabet.sigma()));
  return out;
}

std::vector<Word> enumerate_lyndon(std::size_t n, const Alphabet& alphabet, bool divisors_only, std::uint64_t limit) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  guard(n, alphabet, limit);
  std::vector<Word> out;
  for (std::size_t d = 1; d <= n; ++d) {
    if (divisors_only ? n % d != 0 : d != n) continue;
    std::vector<Symbol> x(d, 0);
    do {
      if (lyndon_by_rotations(x)) out.emplace_back(alphabet, x);
    } while (next_word(x, alphabet.sigma()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Word brute_db(std::size_t n, const Alphabet& alphabet, std::uint64_t limit) {
  std::vector<Symbol> seq;
  for (const Word& w : enumerate_lyndon(n, alphabet, true, limit)) {
    seq.insert(seq.end(), w.symbols().begin(), w.symbols().end());
  }
  return Word(alphabet, std::move(seq));
}

Word brute_db_prime(std::size_t n, const Alphabet& alphabet, std::uint64_t limit) {
  std::vector<Symbol> seq;
  for (const Word& w : enumerate_lyndon(n, alphabet, false, limit)) {
    seq.insert(seq.end(), w.symbols().begin(), w.symbols().end());
  }
  return Word(alphabet, std::move(seq));
}

BigCount brute_cs(const Word& w, std::uint64_t limit) {
  const std::size_t n = w.size();
  guard(n, w.alphabet(), limit);
  const auto target = w.symbols();
  unsigned long count = 0;
  std::vector<Symbol> x(n, 0);
  do {
    // Some rotation of x is <= w iff the minimal rotation is.
    for (std::size_t c = 0; c < n; ++c) {
      bool le = true;
      for (std::size_t i = 0; i < n; ++i) {
        const Symbol a = x[(i + c) % n];
        if (a != target[i]) {
          le = a < target[i];
          break;
        }
      }
      if (le) {
        ++count;
        break;
      }
    }
  } while (next_word(x, w.sigma()));
  return BigCount(count);
}

BigCount brute_occ(const Word& w, const Word& sequence) {
  const std::size_t len = sequence.size();
  const std::size_t n = w.size();
  std::size_t found = 0;
  std::size_t where = 0;
  for (std::size_t p = 0; p < len; ++p) {
    std::size_t i = 0;
    while (i < n && sequence[(p + i) % len] == w[i]) ++i;
    if (i == n) {
      ++found;
      where = p;
    }
  }
  if (found != 1) {
    throw InvariantViolation("brute_occ: expected one occurrence, found " + std::to_string(found));
  }
  return BigCount(where + 1);
}

BigCount brute_occ(const Word& w, std::uint64_t limit) {
  return brute_occ(w, brute_db(w.size(), w.alphabet(), limit));
}

}  // namespace lyndon::oracle
