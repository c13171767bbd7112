#include "riffle/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "riffle/gsr.hpp"
#include "riffle/transition.hpp"

namespace riffle {

// ---------------------------------------------------------------------------
// Game state machine

GameState GameState::initial(int n) {
  if (n < 1) throw std::invalid_argument("deck size must be positive");
  return GameState(n, Phase::consecutive, 0, CardRange{}, CardRange{});
}

GameState GameState::interleaving(int n, CardRange low, CardRange high) {
  if (n < 1) throw std::invalid_argument("deck size must be positive");
  const bool low_ok = low.empty() || (low.first >= 1 && low.last <= n);
  const bool high_ok = high.empty() || (high.first >= 1 && high.last <= n);
  const bool disjoint = low.empty() || high.empty() || low.last < high.first;
  if (!low_ok || !high_ok || !disjoint) {
    throw std::invalid_argument("piles must be disjoint ranges inside 1..n with the low pile first");
  }
  return GameState(n, Phase::interleave, 0, low, high);
}

int GameState::remaining() const {
  return phase_ == Phase::consecutive ? n_ - m_ : low_.size() + high_.size();
}

Card algo1_next_guess(const GameState& state, TieBreak tie_break) {
  if (state.remaining() == 0) throw std::logic_error("no cards left to guess");
  if (state.phase() == GameState::Phase::consecutive) return state.prefix_length() + 1;
  const CardRange& low = state.low_pile();
  const CardRange& high = state.high_pile();
  if (low.size() > high.size()) return low.head();
  if (high.size() > low.size()) return high.head();
  return tie_break == TieBreak::low_pile ? low.head() : high.head();
}

GameState advance_state(const GameState& state, Card revealed) {
  const int n = state.size();
  if (state.phase() == GameState::Phase::consecutive) {
    const int m = state.prefix_length();
    if (revealed <= m || revealed > n) {
      throw ImpossibleRevealError("card " + std::to_string(revealed) + " is not an unrevealed card of 1.." +
                                  std::to_string(n));
    }
    if (revealed == m + 1) return GameState(n, GameState::Phase::consecutive, m + 1, {}, {});
    return GameState(n, GameState::Phase::interleave, m, CardRange{m + 1, revealed - 1},
                     CardRange{revealed + 1, n});
  }
  GameState next = state;
  if (!next.low_.empty() && next.low_.head() == revealed) {
    ++next.low_.first;
  } else if (!next.high_.empty() && next.high_.head() == revealed) {
    ++next.high_.first;
  } else {
    throw ImpossibleRevealError("card " + std::to_string(revealed) +
                                " is impossible under one riffle shuffle: it heads neither remaining pile");
  }
  return next;
}

// ---------------------------------------------------------------------------
// Strategies

namespace {

class RiffleGuesser final : public Guesser {
 public:
  RiffleGuesser(int n, TieBreak tie_break) : state_(GameState::initial(n)), tie_break_(tie_break) {}
  Card guess() override { return algo1_next_guess(state_, tie_break_); }
  void reveal(Card card) override { state_ = advance_state(state_, card); }

 private:
  GameState state_;
  TieBreak tie_break_;
};

class GreedyBayesGuesser final : public Guesser {
 public:
  explicit GreedyBayesGuesser(int n) : n_(n) { history_.reserve(static_cast<std::size_t>(n)); }
  Card guess() override { return greedy_bayes_guess(history_, n_); }
  void reveal(Card card) override { history_.push_back(card); }

 private:
  int n_;
  std::vector<Card> history_;
};

}  // namespace

std::string RiffleStrategy::name() const {
  return tie_break_ == TieBreak::low_pile ? "riffle" : "riffle-high-tie";
}

std::unique_ptr<Guesser> RiffleStrategy::start(int n) const {
  return std::make_unique<RiffleGuesser>(n, tie_break_);
}

std::unique_ptr<Guesser> GreedyBayesStrategy::start(int n) const {
  if (n < 1 || n > kMaxSize) {
    throw std::length_error("greedy-Bayes enumeration is limited to 1 <= n <= " + std::to_string(kMaxSize));
  }
  return std::make_unique<GreedyBayesGuesser>(n);
}

// ---------------------------------------------------------------------------
// Play-out

GameTranscript play_with_feedback(const Strategy& strategy, const Permutation& truth) {
  const int n = truth.size();
  auto guesser = strategy.start(n);
  std::vector<bool> revealed(static_cast<std::size_t>(n) + 1, false);
  GameTranscript transcript{truth, {}, 0};
  transcript.steps.reserve(static_cast<std::size_t>(n));
  for (Card card : truth.cards()) {
    const Card g = guesser->guess();
    if (g < 1 || g > n || revealed[static_cast<std::size_t>(g)]) {
      throw std::logic_error(strategy.name() + " guessed unavailable card " + std::to_string(g));
    }
    const bool correct = g == card;
    transcript.steps.push_back({g, card, correct});
    transcript.reward += correct;
    revealed[static_cast<std::size_t>(card)] = true;
    guesser->reveal(card);
  }
  return transcript;
}

int play_reward(const Strategy& strategy, std::span<const Card> truth) {
  auto guesser = strategy.start(static_cast<int>(truth.size()));
  int reward = 0;
  for (Card card : truth) {
    reward += guesser->guess() == card;
    guesser->reveal(card);
  }
  return reward;
}

Rational expected_reward(const Strategy& strategy, const ShuffleDistribution& d) {
  const int n = d.size();
  if (n > kMaxEnumerationSize) {
    throw std::length_error("enumeration is limited to n <= " + std::to_string(kMaxEnumerationSize) +
                            "; use the exact ladder (exact_g) for larger decks");
  }
  BigInt rs2_total = 0;
  int identity_reward = -1;
  for_each_word(n, [&](std::uint64_t, std::span<const Card> cards) {
    const bool identity = std::is_sorted(cards.begin(), cards.end());
    if (identity) {
      if (identity_reward < 0) identity_reward = play_reward(strategy, cards);
      return;
    }
    rs2_total += play_reward(strategy, cards);
  });
  return Rational(rs2_total) * d.rs2_probability() + Rational(identity_reward) * d.identity_probability();
}

// ---------------------------------------------------------------------------
// Greedy-Bayes oracle

std::vector<long long> greedy_bayes_posterior(std::span<const Card> history, int n) {
  if (n < 1 || n > GreedyBayesStrategy::kMaxSize) {
    throw std::length_error("greedy-Bayes enumeration is limited to 1 <= n <= " +
                            std::to_string(GreedyBayesStrategy::kMaxSize));
  }
  if (history.size() >= static_cast<std::size_t>(n)) throw std::logic_error("no cards left to guess");
  std::vector<long long> mass(static_cast<std::size_t>(n) + 1, 0);
  const std::size_t depth = history.size();
  for_each_word(n, [&](std::uint64_t, std::span<const Card> cards) {
    if (std::equal(history.begin(), history.end(), cards.begin())) ++mass[static_cast<std::size_t>(cards[depth])];
  });
  return mass;
}

Card greedy_bayes_guess(std::span<const Card> history, int n) {
  const auto mass = greedy_bayes_posterior(history, n);
  const auto best = std::max_element(mass.begin() + 1, mass.end());
  if (*best == 0) {
    throw ImpossibleRevealError("history is inconsistent with every arrangement reachable by one riffle shuffle");
  }
  return static_cast<Card>(best - mass.begin());
}

// ---------------------------------------------------------------------------
// Zero-feedback baseline

// Column j of the transition matrix peaks at one of three rows: the central
// binomial above the diagonal, the diagonal itself, or the central binomial
// below it.
Rational zero_feedback_value(int n) {
  if (n < 1) throw std::invalid_argument("deck size must be positive");
  Rational total = 0;
  for (int j = 1; j <= n; ++j) {
    Rational best = transition_entry(n, j, j);
    if (j >= 2) best = std::max(best, transition_entry(n, j - (j / 2), j));
    if (j < n) best = std::max(best, transition_entry(n, j + (n - j + 1) / 2, j));
    total += best;
  }
  return total;
}

double zero_feedback_value_float(int n) {
  if (n < 1) throw std::invalid_argument("deck size must be positive");
  // half_central[k] = C(k, floor(k/2)) / 2^(k+1)
  std::vector<double> half_central(static_cast<std::size_t>(n));
  double a = 1.0;
  for (int k = 0; k < n; ++k) {
    if (k > 0 && k % 2 == 1) a *= static_cast<double>(k) / static_cast<double>(k + 1);
    half_central[static_cast<std::size_t>(k)] = a / 2.0;
  }
  double total = 0.0;
  for (int j = 1; j <= n; ++j) {
    double best = std::ldexp(1.0, j - 1 - n) + std::ldexp(1.0, -j);
    if (j >= 2) best = std::max(best, half_central[static_cast<std::size_t>(j - 1)]);
    if (j < n) best = std::max(best, half_central[static_cast<std::size_t>(n - j)]);
    total += best;
  }
  return total;
}

}  // namespace riffle
