#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lyndon/bigarith.hpp"
#include "lyndon/words.hpp"

namespace lyndon {

using State = std::size_t;

/// Deterministic automaton with states 0..n recognizing the words that contain
/// a factor u*s (u a proper prefix of w, s < the next symbol of w) or w itself.
/// State i < n stands for the prefix of w of length i; state n is the
/// absorbing accepting state.
///
/// Transitions from state i < n on symbol c:
///   c >  w[i]                -> 0
///   c == w[i] and i < n-1    -> i+1
///   otherwise                -> accepting
///
/// Only the edge multiplicities are stored; no dense matrix is built.
class PrefixAutomaton {
 public:
  /// Throws std::invalid_argument unless w is self-minimal.
  explicit PrefixAutomaton(Word w);

  /// Same transition rule for an arbitrary word. The recognized language
  /// has the property above only when w is self-minimal.
  static PrefixAutomaton from_any_word(Word w);

  const Word& word() const noexcept { return w_; }
  std::size_t length() const noexcept { return w_.size(); }
  std::uint32_t sigma() const noexcept { return w_.sigma(); }
  State initial() const noexcept { return 0; }
  State accepting() const noexcept { return w_.size(); }

  /// Number of symbols greater than w[i] (1-based i in 1..n).
  std::uint32_t a(std::size_t i) const { return up_[i - 1]; }
  /// sigma - 1 - a(i).
  std::uint32_t a_prime(std::size_t i) const { return sigma() - 1 - up_[i - 1]; }

  State step(State q, Symbol c) const;

 private:
  PrefixAutomaton(Word w, bool checked);

  Word w_;
  std::vector<std::uint32_t> up_;
};

/// States after each symbol, starting with `start`; size |x|+1.
std::vector<State> run(const PrefixAutomaton& automaton, State start, std::span<const Symbol> x);

/// Paths of each length that end in the initial state:
/// at(j, i) = number of words of length j leading from state i to state 0,
/// for i in 0..n-1 and j in 0..m.
class PathCountTable {
 public:
  PathCountTable(std::size_t states, std::size_t max_length)
      : states_(states), max_length_(max_length), values_(states * (max_length + 1)) {}

  std::size_t states() const noexcept { return states_; }
  std::size_t max_length() const noexcept { return max_length_; }
  const mpz_class& at(std::size_t j, std::size_t i) const { return values_[j * states_ + i]; }
  mpz_class& at(std::size_t j, std::size_t i) { return values_[j * states_ + i]; }

 private:
  std::size_t states_;
  std::size_t max_length_;
  std::vector<mpz_class> values_;
};

/// Backward sparse iteration:
///   pi_j(i,0) = a_{i+1} pi_{j-1}(0,0) + [i < n-1] pi_{j-1}(i+1,0).
PathCountTable paths_to_initial(const PrefixAutomaton& automaton, std::size_t m);

/// Number of words of length m leading from the initial to the accepting state.
BigCount paths_initial_to_accepting(const PrefixAutomaton& automaton, std::size_t m);

/// Forward distribution over all n+1 states after m steps from state 0.
std::vector<mpz_class> forward_distribution(const PrefixAutomaton& automaton, std::size_t m);

}  // namespace lyndon
