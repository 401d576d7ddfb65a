#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "lyndon/automaton.hpp"
#include "lyndon/bigarith.hpp"
#include "lyndon/words.hpp"

namespace lyndon {

/// Small nonnegative coefficients c[i][j] (state i in 0..n-1, path length j
/// in 0..n-1) of a linear combination  sum c[i][j] * pi_j(i,0).
class CoefficientTable {
 public:
  explicit CoefficientTable(std::size_t n) : n_(n), cells_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return cells_[j * n_ + i]; }
  std::uint64_t& at(std::size_t i, std::size_t j) { return cells_[j * n_ + i]; }
  std::uint64_t total() const;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> cells_;
};

/// Coefficients alpha with
///   #{x in Sigma^n : x not accepted, xx accepted} = sum alpha[i][j] pi_j(i,0).
/// For every split x = x1 x2 x3 with |x3| = s, |x1| = p, the contribution
/// gamma(k, l, q) with k = s+p-1 goes to alpha[q][n-k-1], q in {0, l+1}.
CoefficientTable alpha_coefficients(const PrefixAutomaton& automaton);

/// Number of a in Sigma with step(l, a) == q and step(k, a) == accepting.
/// q must be 0 or l+1; O(1) from the symbol values.
std::uint32_t gamma(const PrefixAutomaton& automaton, std::size_t k, std::size_t l, State q);

/// Called after every inner step of the reduction with the current table.
using ReductionObserver = std::function<void(const CoefficientTable&)>;

/// Rewrites the coefficients using pi_j(i,0) = pi_{j-1}(i+1,0) + a_{i+1} pi_{j-1}(0,0)
/// until only row 0 is populated; the weighted sum is preserved.
/// Throws InvariantViolation if a value exceeds sigma * n * sum(alpha).
CoefficientTable reduce_coefficients(const PrefixAutomaton& automaton, CoefficientTable table,
                                     const ReductionObserver& observer = {});

/// T_k = pi_k(0,0) for k = 0..m, from the inverse of 1 - sum a_i x^i.
std::vector<mpz_class> t_values(const PrefixAutomaton& automaton, std::size_t m);

/// c_1..c_n (index 0 holds c_1): paths of length j from 0 to the accepting
/// state that never return to 0. c_{j+1} = sigma c_j + a'(j+1), plus one
/// for j+1 = n (w[n-1] itself leads to the accepting state).
std::vector<mpz_class> c_values(const PrefixAutomaton& automaton);

/// pi_n(0, accepting) = sum_{i<n} T_i c_{n-i}, evaluated as one coefficient
/// of a Kronecker product. `t` must hold at least T_0..T_{n-1}.
BigCount pi_initial_to_accepting_convolution(const PrefixAutomaton& automaton, std::span<const mpz_class> t);
BigCount pi_initial_to_accepting_convolution(const PrefixAutomaton& automaton);

/// |CS(w)| = #{x in Sigma^n : minimal rotation of x <= w} for self-minimal w.
/// Transfer-matrix engine: explicit path tables, O(n^2) big-number operations.
BigCount cs_count_matrix(const Word& w);

/// Same value; big numbers enter only through T_j (series inversion) and one
/// convolution, the quadratic part runs on machine words.
BigCount cs_count_fast(const Word& w);

enum class CsEngine { fast, matrix };

/// Dispatches to one engine; w must be self-minimal.
BigCount cs_count(const Word& w, CsEngine engine = CsEngine::fast);

/// |CS(v)| for any v: the set only depends on the largest self-minimal word
/// <= v, which is what gets counted.
BigCount cs_size(const Word& v, CsEngine engine = CsEngine::fast);

}  // namespace lyndon
