#include "lyndon/cscount.hpp"

#include <numeric>
#include <stdexcept>

namespace lyndon {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw InvariantViolation("coefficient overflow");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw InvariantViolation("coefficient overflow");
  return r;
}

}  // namespace

std::uint64_t CoefficientTable::total() const {
  std::uint64_t sum = 0;
  for (auto v : cells_) sum = checked_add(sum, v);
  return sum;
}

std::uint32_t gamma(const PrefixAutomaton& automaton, std::size_t k, std::size_t l, State q) {
  const Word& w = automaton.word();
  const std::size_t n = w.size();
  // Symbols a < limit drive state k to the accepting state.
  const std::uint32_t limit = k + 1 < n ? w[k] : w[n - 1] + 1;
  const Symbol next = w[l];
  if (q == 0) return limit > next + 1 ? limit - next - 1 : 0;
  if (q == l + 1 && q < n) return next < limit ? 1 : 0;
  throw std::invalid_argument("gamma: q must be 0 or l+1 < n");
}

CoefficientTable alpha_coefficients(const PrefixAutomaton& automaton) {
  const Word& w = automaton.word();
  const std::size_t n = w.size();
  CoefficientTable alpha(n);
  // states[s]: state after reading w[s..k-1] from 0; one column per k
  std::vector<State> states(n, 0);
  for (std::size_t k = 1; k < n; ++k) {
    const std::size_t j = n - k - 1;
    for (std::size_t s = 1; s <= k; ++s) {
      State& l = states[s];
      if (s < k && l != automaton.accepting()) l = automaton.step(l, w[k - 1]);
      if (l == automaton.accepting()) continue;
      alpha.at(0, j) += gamma(automaton, k, l, 0);
      if (l + 1 < n) alpha.at(l + 1, j) += gamma(automaton, k, l, l + 1);
    }
  }
  return alpha;
}

CoefficientTable reduce_coefficients(const PrefixAutomaton& automaton, CoefficientTable beta,
                                     const ReductionObserver& observer) {
  const std::size_t n = automaton.length();
  const std::uint64_t bound = checked_mul(checked_mul(automaton.sigma(), n), std::max<std::uint64_t>(beta.total(), 1));
  std::uint64_t head_total = 0;
  for (std::size_t j = 0; j < n; ++j) head_total = checked_add(head_total, beta.at(0, j));
  for (std::size_t j = n; j-- > 1;) {
    for (std::size_t i = 1; i < n; ++i) {
      const std::uint64_t v = beta.at(i, j);
      if (v != 0) {
        // pi_j(n,0) is identically zero, so flow past the last prefix state is dropped.
        if (i + 1 < n) beta.at(i + 1, j - 1) = checked_add(beta.at(i + 1, j - 1), v);
        const std::uint64_t moved = checked_mul(automaton.a(i + 1), v);
        beta.at(0, j - 1) = checked_add(beta.at(0, j - 1), moved);
        head_total = checked_add(head_total, moved);
        if (head_total > bound) throw InvariantViolation("reduced coefficients exceed sigma*n*sum(alpha)");
        beta.at(i, j) = 0;
      }
      if (observer) observer(beta);
    }
  }
  return beta;
}

std::vector<mpz_class> t_values(const PrefixAutomaton& automaton, std::size_t m) {
  const std::size_t n = automaton.length();
  Polynomial h(std::min(n, m) + 1);
  h[0] = 1;
  for (std::size_t i = 1; i < h.size(); ++i) h[i] = -static_cast<long>(automaton.a(i));
  return series_inverse(h, m + 1).coeffs;
}

std::vector<mpz_class> c_values(const PrefixAutomaton& automaton) {
  const std::size_t n = automaton.length();
  std::vector<mpz_class> c(n);
  mpz_class cur = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    cur = cur * automaton.sigma() + automaton.a_prime(j);
    c[j - 1] = cur;
    // reading w[n-1] in the last prefix state also accepts
    if (j == n) c[j - 1] += 1;
  }
  return c;
}

BigCount pi_initial_to_accepting_convolution(const PrefixAutomaton& automaton, std::span<const mpz_class> t) {
  const std::size_t n = automaton.length();
  if (t.size() < n) throw std::invalid_argument("need T_0..T_{n-1}");
  Polynomial f(std::vector<mpz_class>(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(n)));
  Polynomial g(c_values(automaton));
  return BigCount(poly_mul_truncated(f, g, n)[n - 1]);
}

BigCount pi_initial_to_accepting_convolution(const PrefixAutomaton& automaton) {
  return pi_initial_to_accepting_convolution(automaton, t_values(automaton, automaton.length()));
}

BigCount cs_count_matrix(const Word& w) {
  const PrefixAutomaton automaton(w);
  const std::size_t n = w.size();
  const CoefficientTable alpha = alpha_coefficients(automaton);
  const PathCountTable paths = paths_to_initial(automaton, n - 1);
  mpz_class sum;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t c = alpha.at(i, j);
      if (c != 0) sum += paths.at(j, i) * static_cast<unsigned long>(c);
    }
  }
  return paths_initial_to_accepting(automaton, n) + BigCount(sum);
}

BigCount cs_count_fast(const Word& w) {
  const PrefixAutomaton automaton(w);
  const std::size_t n = w.size();
  const CoefficientTable beta = reduce_coefficients(automaton, alpha_coefficients(automaton));
  const std::vector<mpz_class> t = t_values(automaton, n);
  mpz_class sum;
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t c = beta.at(0, j);
    if (c != 0) sum += t[j] * static_cast<unsigned long>(c);
  }
  return pi_initial_to_accepting_convolution(automaton, t) + BigCount(sum);
}

BigCount cs_count(const Word& w, CsEngine engine) {
  return engine == CsEngine::fast ? cs_count_fast(w) : cs_count_matrix(w);
}

BigCount cs_size(const Word& v, CsEngine engine) { return cs_count(prev_self_minimal(v), engine); }

}  // namespace lyndon
