#ifndef RIFFLE_TRANSITION_HPP
#define RIFFLE_TRANSITION_HPP

#include <vector>

#include "riffle/rational.hpp"

namespace riffle {

/// n x n matrix of exact probabilities; at(i, j) is the probability that
/// card i ends at position j after one riffle shuffle (both 1-based).
class TransitionMatrix {
 public:
  explicit TransitionMatrix(int n);

  int size() const { return n_; }
  const Rational& at(int card, int position) const { return entries_[index(card, position)]; }
  Rational& at(int card, int position) { return entries_[index(card, position)]; }

  bool operator==(const TransitionMatrix&) const = default;

 private:
  std::size_t index(int card, int position) const;

  int n_;
  std::vector<Rational> entries_;
};

/// Closed-form entry:
///   C(j-1, j-i) / 2^j              for i < j
///   (2^(j-1) + 2^(n-j)) / 2^n      for i = j
///   C(n-j, i-j) / 2^(n-j+1)        for i > j
Rational transition_entry(int n, int card, int position);

TransitionMatrix transition_matrix(int n);

}  // namespace riffle

#endif  // RIFFLE_TRANSITION_HPP
