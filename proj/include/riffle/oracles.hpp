#ifndef RIFFLE_ORACLES_HPP
#define RIFFLE_ORACLES_HPP

// Brute-force enumeration oracles. Each one reaches its answer by listing
// outcomes (all of S_n, or all 2^n riffle words) and never calls the closed
// forms or recursions it is used to check. Sizes are kept small.

#include <vector>

#include "riffle/distribution.hpp"
#include "riffle/permutation.hpp"
#include "riffle/rational.hpp"
#include "riffle/strategy.hpp"
#include "riffle/transition.hpp"

namespace riffle::oracle {

/// Rising-sequence count by walking the deck once per run, independent of
/// the library routine.
int count_rising_sequences(const std::vector<Card>& arrangement);

/// Every permutation of 1..n with its rising-sequence count. n <= 9.
std::vector<std::pair<Permutation, int>> symmetric_group(int n);

/// Each of the 2^n words pushed through word_to_permutation, weight 2^-n.
ExplicitDistribution word_distribution(int n);

/// Number of words producing each arrangement.
std::map<Permutation, int> word_multiplicities(int n);

/// P(card i at position j), accumulated word by word.
TransitionMatrix word_transition_matrix(int n);

/// One riffle of n+1 cards conditioned on card 1 on top, remaining deck
/// relabeled down by one.
ExplicitDistribution conditioned_on_top_card_one(int n);

/// P(position m holds m | positions 1..m-1 hold 1..m-1) from the word table.
Rational consecutive_conditional(int n, int m);

/// Expected reward of strategy under an explicit table.
Rational expected_reward(const Strategy& strategy, const ExplicitDistribution& table);

/// Expected square of the reward under an explicit table.
Rational expected_square_reward(const Strategy& strategy, const ExplicitDistribution& table);

}  // namespace riffle::oracle

#endif  // RIFFLE_ORACLES_HPP
