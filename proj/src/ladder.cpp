#include "riffle/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "riffle/distribution.hpp"
#include "riffle/gsr.hpp"
#include "riffle/series.hpp"

namespace riffle {

namespace {

void require_positive(int n) {
  if (n < 1) throw std::invalid_argument("deck size must be positive, got " + std::to_string(n));
}

// Past this many cards the ladder ratios are replaced by their limits 1/2
// and F(m-1) once the correction (n-m)/2^m drops below double resolution.
constexpr int kLimitCutover = 60;

}  // namespace

double LadderState::value(int m) const {
  if (m < 1 || m > target_n) throw std::out_of_range("ladder rung outside 1..n");
  const auto i = static_cast<std::size_t>(m - 1);
  return mode == NumericMode::rational ? to_double(exact[i]) : approx[i];
}

LadderState run_ladder(int n, int identity_weight, NumericMode mode, std::span<const double> f_float) {
  require_positive(n);
  if (identity_weight < 1) throw std::invalid_argument("identity weight must be positive");
  LadderState state{n, identity_weight, mode, {}, {}};
  const int w = identity_weight;

  if (mode == NumericMode::rational) {
    if (n > kMaxExactLadder) {
      throw std::out_of_range("rational ladder is limited to n <= " + std::to_string(kMaxExactLadder) +
                              "; use float mode");
    }
    state.exact.reserve(static_cast<std::size_t>(n));
    state.exact.emplace_back(1);
    BigInt s_prev = 1;  // S(m-1)
    for (int m = 2; m <= n; ++m) {
      const auto um = static_cast<unsigned>(m);
      if (m > 2) {
        s_prev = pow2(um - 2) + binomial(um - 2, (um - 2) / 2) + (m - 3) + 2 * s_prev;
      }
      const BigInt r_prev = count_rs2(m - 1);
      const BigInt r_m = count_rs2(m);
      const Rational& e_prev = state.exact.back();
      Rational next = (Rational(w + r_prev) * (1 + e_prev) + Rational(s_prev)) / Rational(r_m + w);
      state.exact.push_back(std::move(next));
    }
    return state;
  }

  std::vector<double> owned;
  if (f_float.size() < static_cast<std::size_t>(n)) {
    owned = big_f_float(std::max(n, 1));
    f_float = owned;
  }
  state.approx.reserve(static_cast<std::size_t>(n));
  state.approx.push_back(1.0);
  for (int m = 2; m <= n; ++m) {
    // offset = w - m - 1 so that R_m + w = 2^m + offset.
    const double offset = static_cast<double>(w) - m - 1;
    const double f_prev = f_float[static_cast<std::size_t>(m - 1)];
    double keep;
    double branch;
    if (m > kLimitCutover && std::ldexp(std::abs(offset) + 1.0, -m) < 1e-16) {
      keep = 0.5;
      branch = f_prev;
    } else {
      const double scaled = std::ldexp(offset, -m);
      keep = (0.5 + std::ldexp(offset + 1.0, -m)) / (1.0 + scaled);
      branch = f_prev / (1.0 + scaled);
    }
    state.approx.push_back(keep * (1.0 + state.approx.back()) + branch);
  }
  return state;
}

Rational exact_g(int n) {
  return run_ladder(n, n + 1, NumericMode::rational).exact.back();
}

Rational exact_g_conditional(int n) {
  return run_ladder(n, n + 2, NumericMode::rational).exact.back();
}

double float_g(int n) {
  return run_ladder(n, n + 1, NumericMode::floating).approx.back();
}

std::vector<double> float_g_table(int max_n) {
  require_positive(max_n);
  const auto f = big_f_float(max_n);
  std::vector<double> g(static_cast<std::size_t>(max_n) + 1, 0.0);
  for (int n = 1; n <= max_n; ++n) {
    g[static_cast<std::size_t>(n)] = run_ladder(n, n + 1, NumericMode::floating, f).approx.back();
  }
  return g;
}

std::vector<double> approx_g_table(int max_n) {
  require_positive(max_n);
  const auto f = big_f_float(max_n);
  std::vector<double> g(static_cast<std::size_t>(max_n) + 1, 0.0);
  g[1] = 1.0;
  for (int n = 2; n <= max_n; ++n) {
    g[static_cast<std::size_t>(n)] = 0.5 * g[static_cast<std::size_t>(n - 1)] + f[static_cast<std::size_t>(n - 1)] + 0.5;
  }
  return g;
}

double approx_g_recursion(int n) {
  return approx_g_table(n).back();
}

double asymptotic_target(int n) {
  require_positive(n);
  return n / 2.0 + std::sqrt(2.0 / std::numbers::pi) * std::sqrt(static_cast<double>(n));
}

Rational consecutive_stage_probability(int n, int m) {
  if (m < 1 || m > n) throw std::invalid_argument("need 1 <= m <= n");
  const auto gap = static_cast<unsigned>(n - m);
  return Rational(pow2(gap) + m, pow2(gap + 1) + (m - 1));
}

SecondMoment second_moment_enumeration(int n, TieBreak tie_break) {
  require_positive(n);
  if (n > kMaxSecondMoment) {
    throw std::length_error("second-moment enumeration is limited to n <= " + std::to_string(kMaxSecondMoment));
  }
  const RiffleStrategy strategy(tie_break);
  // Every word carries weight 2^-n; the identity arises from n+1 words,
  // matching its probability (n+1)/2^n.
  BigInt sum = 0;
  BigInt sum_squares = 0;
  for_each_word(n, [&](std::uint64_t, std::span<const Card> cards) {
    const int r = play_reward(strategy, cards);
    sum += r;
    sum_squares += r * r;
  });
  const BigInt scale = pow2(static_cast<unsigned>(n));
  SecondMoment out{Rational(sum, scale), Rational(sum_squares, scale), 0};
  out.variance = out.second_moment - out.mean * out.mean;
  return out;
}

}  // namespace riffle
