#ifndef RIFFLE_LADDER_HPP
#define RIFFLE_LADDER_HPP

#include <span>
#include <vector>

#include "riffle/rational.hpp"
#include "riffle/strategy.hpp"

namespace riffle {

/// Exact optimal reward via the conditioning ladder.
///
/// Consider the family of laws on m cards that give the identity weight w and
/// each two-rising-sequence arrangement weight 1 (total mass w + R_m). If
/// the top card is 1, the rest is the same family on m-1 cards with the same
/// w. If the top card is k >= 2, the rest is a uniform interleaving of
/// 1..k-1 with k+1..m, worth f(k-1, m-k). Summing over k with weights
/// C(m-1, k-1) gives S(m-1), so
///
///   E(1, w) = 1
///   E(m, w) = [(w + R_{m-1}) (1 + E(m-1, w)) + S(m-1)] / (R_m + w).
///
/// One riffle of n cards is the member w = n+1 at m = n; the deck left after
/// revealing card 1 on top of n+1 cards is w = n+2.
struct LadderState {
  int target_n = 0;
  int identity_weight = 0;
  NumericMode mode = NumericMode::rational;
  std::vector<Rational> exact;  // E(m, w) at index m-1, rational mode
  std::vector<double> approx;   // E(m, w) at index m-1, float mode

  double value(int m) const;
};

inline constexpr int kMaxExactLadder = 200;

/// Rational mode needs n <= 200; float mode reads F(1..n-1) from f_float
/// (big_f_float output with size > n - 1) when supplied.
LadderState run_ladder(int n, int identity_weight, NumericMode mode, std::span<const double> f_float = {});

/// G(n) = R*(f_n), exact. n <= 200.
Rational exact_g(int n);
/// R*(g_n), the optimum for the deck left after a top card of 1, exact.
Rational exact_g_conditional(int n);

double float_g(int n);
/// G(1..max_n) in float mode (index 0 unused), O(max_n^2) overall.
std::vector<double> float_g_table(int max_n);

/// The recursion G(n) = G(n-1)/2 + F(n-1) + 1/2 with its o(1) term dropped,
/// G(1) = 1. Index 0 unused.
std::vector<double> approx_g_table(int max_n);
double approx_g_recursion(int n);

/// n/2 + sqrt(2/pi) sqrt(n).
double asymptotic_target(int n);

/// P(card m is m | cards 1..m-1 were 1..m-1) = (2^(n-m) + m) / (2^(n-m+1) + m - 1).
Rational consecutive_stage_probability(int n, int m);

struct SecondMoment {
  Rational mean;           // G(n)
  Rational second_moment;  // T*(f_n)
  Rational variance;
};

/// Exact first and second moments of the riffle strategy's reward under one
/// riffle, by enumerating all 2^n words. n <= 20.
SecondMoment second_moment_enumeration(int n, TieBreak tie_break = TieBreak::low_pile);
inline constexpr int kMaxSecondMoment = 20;

}  // namespace riffle

#endif  // RIFFLE_LADDER_HPP
