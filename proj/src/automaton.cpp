#include "lyndon/automaton.hpp"

#include <stdexcept>

namespace lyndon {

PrefixAutomaton::PrefixAutomaton(Word w) : PrefixAutomaton(std::move(w), true) {}

PrefixAutomaton PrefixAutomaton::from_any_word(Word w) { return PrefixAutomaton(std::move(w), false); }

PrefixAutomaton::PrefixAutomaton(Word w, bool checked) : w_(std::move(w)) {
  if (checked && !is_self_minimal(w_)) throw std::invalid_argument("automaton requires a self-minimal word");
  up_.reserve(w_.size());
  for (Symbol s : w_.symbols()) up_.push_back(w_.alphabet().max_symbol() - s);
}

State PrefixAutomaton::step(State q, Symbol c) const {
  const std::size_t n = length();
  if (q >= n) return n;
  const Symbol next = w_[q];
  if (c > next) return 0;
  if (c == next && q + 1 < n) return q + 1;
  return n;
}

std::vector<State> run(const PrefixAutomaton& automaton, State start, std::span<const Symbol> x) {
  if (start > automaton.accepting()) throw std::out_of_range("invalid start state");
  std::vector<State> trace;
  trace.reserve(x.size() + 1);
  trace.push_back(start);
  State q = start;
  for (Symbol c : x) {
    q = automaton.step(q, c);
    trace.push_back(q);
  }
  return trace;
}

PathCountTable paths_to_initial(const PrefixAutomaton& automaton, std::size_t m) {
  const std::size_t n = automaton.length();
  PathCountTable table(n, m);
  table.at(0, 0) = 1;
  for (std::size_t j = 1; j <= m; ++j) {
    const mpz_class& to_zero = table.at(j - 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      mpz_class& cell = table.at(j, i);
      cell = to_zero * automaton.a(i + 1);
      if (i + 1 < n) cell += table.at(j - 1, i + 1);
    }
  }
  return table;
}

std::vector<mpz_class> forward_distribution(const PrefixAutomaton& automaton, std::size_t m) {
  const std::size_t n = automaton.length();
  const std::uint32_t sigma = automaton.sigma();
  std::vector<mpz_class> cur(n + 1), next(n + 1);
  cur[0] = 1;
  for (std::size_t step = 0; step < m; ++step) {
    for (auto& v : next) v = 0;
    next[n] = cur[n] * sigma;
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(cur[i]) == 0) continue;
      next[0] += cur[i] * automaton.a(i + 1);
      if (i + 1 < n) {
        next[i + 1] += cur[i];
        next[n] += cur[i] * automaton.a_prime(i + 1);
      } else {
        next[n] += cur[i] * (sigma - automaton.a(i + 1));
      }
    }
    std::swap(cur, next);
  }
  return cur;
}

BigCount paths_initial_to_accepting(const PrefixAutomaton& automaton, std::size_t m) {
  return BigCount(forward_distribution(automaton, m)[automaton.accepting()]);
}

}  // namespace lyndon
