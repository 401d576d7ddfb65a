#pragma once

// Test-only helpers and independent reference computations.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lyndon/automaton.hpp"
#include "lyndon/bigarith.hpp"
#include "lyndon/text_format.hpp"
#include "lyndon/words.hpp"

namespace lyndon::test {

/// Word from chars notation; letters a,b,... alias 0,1,... for sigma <= 10.
inline Word W(const std::string& text, std::uint32_t sigma = 2) {
  return parse_word(text, Alphabet(sigma), WordFormat::chars);
}

inline std::string S(const Word& w) { return format_word(w, WordFormat::chars); }

inline Word random_word(std::mt19937_64& rng, std::size_t n, std::uint32_t sigma) {
  std::uniform_int_distribution<Symbol> sym(0, sigma - 1);
  std::vector<Symbol> s(n);
  for (auto& c : s) c = sym(rng);
  return Word(Alphabet(sigma), std::move(s));
}

inline Word random_self_minimal(std::mt19937_64& rng, std::size_t n, std::uint32_t sigma) {
  return min_rotation(random_word(rng, n, sigma));
}

/// Quadratic schoolbook product.
inline Polynomial schoolbook_mul(const Polynomial& f, const Polynomial& g) {
  if (f.size() == 0 || g.size() == 0) return Polynomial{};
  Polynomial out(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  }
  return out;
}

/// T_k = a_1 T_{k-1} + ... + a_n T_{k-n}, T_0 = 1.
inline std::vector<mpz_class> t_recurrence(const PrefixAutomaton& a, std::size_t m) {
  std::vector<mpz_class> t(m + 1);
  t[0] = 1;
  for (std::size_t k = 1; k <= m; ++k) {
    for (std::size_t i = 1; i <= a.length() && i <= k; ++i) t[k] += t[k - i] * a.a(i);
  }
  return t;
}

/// Words of length `len` leading from `from` to `to`, by enumerating every
/// symbol sequence through step().
inline std::uint64_t dfs_paths(const PrefixAutomaton& a, State from, State to, std::size_t len) {
  if (len == 0) return from == to ? 1 : 0;
  std::uint64_t total = 0;
  for (Symbol c = 0; c < a.sigma(); ++c) total += dfs_paths(a, a.step(from, c), to, len - 1);
  return total;
}

/// x contains a factor u*s (u proper prefix of w, s < next symbol) or w.
inline bool has_small_factor(const std::vector<Symbol>& x, const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t start = 0; start < x.size(); ++start) {
    for (std::size_t i = 0; i < n && start + i < x.size(); ++i) {
      const Symbol c = x[start + i];
      if (c < w[i]) return true;
      if (c > w[i]) break;
      if (i + 1 == n) return true;
    }
  }
  return false;
}

}  // namespace lyndon::test
