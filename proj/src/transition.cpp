#include "riffle/transition.hpp"

#include <stdexcept>
#include <string>

namespace riffle {

TransitionMatrix::TransitionMatrix(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("deck size must be positive");
  entries_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
}

std::size_t TransitionMatrix::index(int card, int position) const {
  if (card < 1 || card > n_ || position < 1 || position > n_) {
    throw std::out_of_range("transition index (" + std::to_string(card) + "," + std::to_string(position) +
                            ") outside 1.." + std::to_string(n_));
  }
  return static_cast<std::size_t>(card - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(position - 1);
}

Rational transition_entry(int n, int card, int position) {
  if (n < 1 || card < 1 || card > n || position < 1 || position > n) {
    throw std::out_of_range("transition index outside the deck");
  }
  const auto i = static_cast<unsigned>(card);
  const auto j = static_cast<unsigned>(position);
  const auto un = static_cast<unsigned>(n);
  if (i < j) return Rational(binomial(j - 1, j - i), pow2(j));
  if (i == j) return Rational(pow2(j - 1) + pow2(un - j), pow2(un));
  return Rational(binomial(un - j, i - j), pow2(un - j + 1));
}

TransitionMatrix transition_matrix(int n) {
  TransitionMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) m.at(i, j) = transition_entry(n, i, j);
  }
  return m;
}

}  // namespace riffle
