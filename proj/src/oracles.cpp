#include "riffle/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace riffle::oracle {

namespace {

// Positions whose bit is clear take 1, 2, ... in order; the others take the
// remaining cards in order.
Permutation interleave(std::uint64_t mask, int n) {
  std::vector<Card> low_positions;
  std::vector<Card> high_positions;
  for (int j = 0; j < n; ++j) ((mask >> j) & 1U ? high_positions : low_positions).push_back(j);
  std::vector<Card> cards(static_cast<std::size_t>(n));
  Card next = 1;
  for (Card j : low_positions) cards[static_cast<std::size_t>(j)] = next++;
  for (Card j : high_positions) cards[static_cast<std::size_t>(j)] = next++;
  return Permutation(std::move(cards));
}

}  // namespace

int count_rising_sequences(const std::vector<Card>& arrangement) {
  const int n = static_cast<int>(arrangement.size());
  int runs = 0;
  Card next = 1;
  while (next <= n) {
    // Sweep the deck top to bottom collecting next, next+1, ...
    ++runs;
    for (Card c : arrangement) {
      if (c == next) ++next;
    }
  }
  return runs;
}

std::vector<std::pair<Permutation, int>> symmetric_group(int n) {
  if (n < 1 || n > 9) throw std::invalid_argument("symmetric group oracle limited to 1 <= n <= 9");
  std::vector<Card> cards(static_cast<std::size_t>(n));
  std::iota(cards.begin(), cards.end(), 1);
  std::vector<std::pair<Permutation, int>> out;
  do {
    out.emplace_back(Permutation(cards), count_rising_sequences(cards));
  } while (std::next_permutation(cards.begin(), cards.end()));
  return out;
}

std::map<Permutation, int> word_multiplicities(int n) {
  if (n < 1 || n > 20) throw std::invalid_argument("word oracle limited to 1 <= n <= 20");
  std::map<Permutation, int> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ++out[interleave(mask, n)];
  }
  return out;
}

ExplicitDistribution word_distribution(int n) {
  ExplicitDistribution out;
  const Rational unit(BigInt(1), pow2(static_cast<unsigned>(n)));
  for (const auto& [p, count] : word_multiplicities(n)) out.emplace(p, unit * count);
  return out;
}

TransitionMatrix word_transition_matrix(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("matrix oracle limited to 1 <= n <= 16");
  std::vector<std::vector<long long>> counts(static_cast<std::size_t>(n) + 1,
                                             std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const Permutation p = interleave(mask, n);
    for (int position = 1; position <= n; ++position) {
      ++counts[static_cast<std::size_t>(p[position - 1])][static_cast<std::size_t>(position)];
    }
  }
  TransitionMatrix m(n);
  const BigInt total = pow2(static_cast<unsigned>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      m.at(i, j) = Rational(BigInt(counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]), total);
    }
  }
  return m;
}

ExplicitDistribution conditioned_on_top_card_one(int n) {
  const ExplicitDistribution full = word_distribution(n + 1);
  Rational top_one = 0;
  for (const auto& [p, mass] : full) {
    if (p[0] == 1) top_one += mass;
  }
  ExplicitDistribution out;
  for (const auto& [p, mass] : full) {
    if (p[0] != 1) continue;
    std::vector<Card> rest;
    for (int j = 1; j <= n; ++j) rest.push_back(p[j] - 1);
    out.emplace(Permutation(std::move(rest)), mass / top_one);
  }
  return out;
}

Rational consecutive_conditional(int n, int m) {
  if (m < 1 || m > n) throw std::invalid_argument("need 1 <= m <= n");
  Rational prefix = 0;
  Rational extended = 0;
  for (const auto& [p, mass] : word_distribution(n)) {
    bool ok = true;
    for (int j = 0; j < m - 1 && ok; ++j) ok = p[j] == j + 1;
    if (!ok) continue;
    prefix += mass;
    if (p[m - 1] == m) extended += mass;
  }
  return extended / prefix;
}

Rational expected_reward(const Strategy& strategy, const ExplicitDistribution& table) {
  Rational total = 0;
  for (const auto& [p, mass] : table) total += mass * play_with_feedback(strategy, p).reward;
  return total;
}

Rational expected_square_reward(const Strategy& strategy, const ExplicitDistribution& table) {
  Rational total = 0;
  for (const auto& [p, mass] : table) {
    const int r = play_with_feedback(strategy, p).reward;
    total += mass * (r * r);
  }
  return total;
}

}  // namespace riffle::oracle
