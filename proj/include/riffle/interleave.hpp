#ifndef RIFFLE_INTERLEAVE_HPP
#define RIFFLE_INTERLEAVE_HPP

#include <vector>

#include "riffle/rational.hpp"

namespace riffle {

/// Optimal expected reward f(a, b) for guessing a uniform interleaving of a
/// low pile of a cards and a high pile of b cards, for all a + b <= max_size.
///
/// f(a, 0) = f(0, a) = a, and otherwise
///   f(a, b) = max(a, b)/(a+b) + a/(a+b) f(a-1, b) + b/(a+b) f(a, b-1).
class InterleaveRewardTable {
 public:
  explicit InterleaveRewardTable(int max_size);

  int max_size() const { return max_size_; }

  /// Throws std::out_of_range when a + b exceeds max_size or either is negative.
  const Rational& operator()(int a, int b) const;

 private:
  int max_size_;
  std::vector<std::vector<Rational>> values_;  // values_[a][b], b <= max_size - a
};

Rational f_dp(int a, int b);

/// Averages the longer-pile strategy's reward over all C(a+b, a)
/// interleavings, each weighted 1/C(a+b, a). Requires a + b <= 20.
Rational f_bruteforce(int a, int b);
inline constexpr int kMaxBruteforcePiles = 20;

}  // namespace riffle

#endif  // RIFFLE_INTERLEAVE_HPP
