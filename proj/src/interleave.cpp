#include "riffle/interleave.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "riffle/strategy.hpp"

namespace riffle {

InterleaveRewardTable::InterleaveRewardTable(int max_size) : max_size_(max_size) {
  if (max_size < 0) throw std::invalid_argument("table size must be nonnegative");
  values_.resize(static_cast<std::size_t>(max_size) + 1);
  for (int a = 0; a <= max_size; ++a) values_[static_cast<std::size_t>(a)].resize(static_cast<std::size_t>(max_size - a) + 1);
  auto at = [this](int a, int b) -> Rational& {
    return values_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  };
  for (int total = 0; total <= max_size; ++total) {
    for (int a = 0; a <= total; ++a) {
      const int b = total - a;
      if (a == 0 || b == 0) {
        at(a, b) = total;
        continue;
      }
      at(a, b) = (Rational(std::max(a, b)) + Rational(a) * at(a - 1, b) + Rational(b) * at(a, b - 1)) / total;
    }
  }
}

const Rational& InterleaveRewardTable::operator()(int a, int b) const {
  if (a < 0 || b < 0 || a + b > max_size_) {
    throw std::out_of_range("f(" + std::to_string(a) + "," + std::to_string(b) + ") outside table of size " +
                            std::to_string(max_size_));
  }
  return values_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

Rational f_dp(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("pile sizes must be nonnegative");
  return InterleaveRewardTable(a + b)(a, b);
}

Rational f_bruteforce(int a, int b) {
  if (a < 0 || b < 0 || a + b > kMaxBruteforcePiles) {
    throw std::invalid_argument("brute force needs nonnegative piles with a + b <= " +
                                std::to_string(kMaxBruteforcePiles));
  }
  const int n = a + b;
  if (n == 0) return 0;
  // Cards 1..a form the low pile and a+1..n the high pile; bit j of the
  // mask set means position j is taken from the high pile.
  long long total = 0;
  long long count = 0;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) != b) continue;
    GameState state = GameState::interleaving(n, CardRange{1, a}, CardRange{a + 1, n});
    Card next_low = 1;
    Card next_high = a + 1;
    for (int j = 0; j < n; ++j) {
      const Card card = ((mask >> j) & 1U) ? next_high++ : next_low++;
      total += algo1_next_guess(state) == card;
      state = advance_state(state, card);
    }
    ++count;
  }
  return Rational(total, count);
}

}  // namespace riffle
