#ifndef RIFFLE_STRATEGY_HPP
#define RIFFLE_STRATEGY_HPP

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "riffle/distribution.hpp"
#include "riffle/permutation.hpp"
#include "riffle/rational.hpp"

namespace riffle {

/// Raised when a revealed card cannot follow the history under one riffle.
class ImpossibleRevealError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Contiguous run of card labels first..last; empty when first > last.
struct CardRange {
  Card first = 1;
  Card last = 0;

  bool empty() const { return first > last; }
  int size() const { return empty() ? 0 : last - first + 1; }
  Card head() const { return first; }
  bool operator==(const CardRange&) const = default;
};

/// Which pile head to guess when both remaining piles have equal size.
enum class TieBreak { low_pile, high_pile };

/// What the riffle-optimal player knows after some reveals.
///
/// While the revealed cards are exactly 1..m the game is in the consecutive
/// phase. The first reveal k != m+1 fixes the cut: the rest of the deck is
/// a uniform interleaving of low = m+1..k-1 and high = k+1..n, and the state
/// tracks what is left of each pile.
class GameState {
 public:
  enum class Phase { consecutive, interleave };

  static GameState initial(int n);
  static GameState interleaving(int n, CardRange low, CardRange high);

  int size() const { return n_; }
  Phase phase() const { return phase_; }
  int prefix_length() const { return m_; }
  const CardRange& low_pile() const { return low_; }
  const CardRange& high_pile() const { return high_; }
  int remaining() const;

  bool operator==(const GameState&) const = default;

 private:
  GameState(int n, Phase phase, int m, CardRange low, CardRange high)
      : n_(n), phase_(phase), m_(m), low_(low), high_(high) {}

  int n_;
  Phase phase_;
  int m_;
  CardRange low_;
  CardRange high_;

  friend GameState advance_state(const GameState&, Card);
};

/// Consecutive phase: m+1. Interleave phase: head of the longer pile, ties
/// resolved by tie_break. Throws std::logic_error on an exhausted deck.
Card algo1_next_guess(const GameState& state, TieBreak tie_break = TieBreak::low_pile);

/// Throws ImpossibleRevealError if revealed cannot be the next card.
GameState advance_state(const GameState& state, Card revealed);

/// Incremental player for one game.
class Guesser {
 public:
  virtual ~Guesser() = default;
  virtual Card guess() = 0;
  virtual void reveal(Card card) = 0;
};

/// A deterministic complete-feedback strategy: produces a fresh player per game.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  virtual std::unique_ptr<Guesser> start(int n) const = 0;
};

/// The consecutive-then-longer-pile strategy.
class RiffleStrategy final : public Strategy {
 public:
  explicit RiffleStrategy(TieBreak tie_break = TieBreak::low_pile) : tie_break_(tie_break) {}
  std::string name() const override;
  std::unique_ptr<Guesser> start(int n) const override;
  TieBreak tie_break() const { return tie_break_; }

 private:
  TieBreak tie_break_;
};

/// Guesses the posterior argmax under one riffle by enumerating all 2^n
/// interleaving words; ties go to the smallest card. Limited to n <= 16.
class GreedyBayesStrategy final : public Strategy {
 public:
  static constexpr int kMaxSize = 16;
  std::string name() const override { return "greedy-bayes"; }
  std::unique_ptr<Guesser> start(int n) const override;
};

struct Step {
  Card guess;
  Card revealed;
  bool correct;
  bool operator==(const Step&) const = default;
};

struct GameTranscript {
  Permutation truth;
  std::vector<Step> steps;
  int reward = 0;
};

/// Plays one full game: guess, reveal truth's next card, score.
/// Throws std::logic_error if the strategy repeats a revealed card.
GameTranscript play_with_feedback(const Strategy& strategy, const Permutation& truth);

/// Reward only, without recording the transcript.
int play_reward(const Strategy& strategy, std::span<const Card> truth);

/// Exact expectation of the strategy's reward under d, summed over the 2^n
/// word support. Throws std::length_error for n > 24.
Rational expected_reward(const Strategy& strategy, const ShuffleDistribution& d);
inline constexpr int kMaxEnumerationSize = 24;

/// Number of riffle words (weight 2^-n each) consistent with history whose
/// next card is c, indexed by c (entry 0 unused).
std::vector<long long> greedy_bayes_posterior(std::span<const Card> history, int n);

/// Argmax of greedy_bayes_posterior, smallest card on ties. Throws
/// ImpossibleRevealError when no riffle arrangement extends history.
Card greedy_bayes_guess(std::span<const Card> history, int n);

/// Sum over positions of the largest single-card probability in that column
/// of the transition matrix: the value of guessing, with no feedback, the
/// most likely card at every position.
Rational zero_feedback_value(int n);
double zero_feedback_value_float(int n);

}  // namespace riffle

#endif  // RIFFLE_STRATEGY_HPP
