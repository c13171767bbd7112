#include "riffle/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "riffle/distribution.hpp"
#include "riffle/gsr.hpp"
#include "riffle/interleave.hpp"
#include "riffle/ladder.hpp"
#include "riffle/oracles.hpp"
#include "riffle/series.hpp"
#include "riffle/strategy.hpp"
#include "riffle/transition.hpp"

namespace riffle {

namespace {

// A check returns an empty string on success, otherwise what went wrong.
using Check = std::function<std::string()>;

std::string at_n(int n) { return " at n=" + std::to_string(n); }

std::string distribution_law(int cap) {
  for (int n = 1; n <= cap; ++n) {
    if (closed_form_q(n).explicit_table() != oracle::word_distribution(n)) return "closed form differs" + at_n(n);
  }
  for (int n = 1; n <= std::min(cap, 8); ++n) {
    long long direct = 0;
    for (const auto& [p, rs] : oracle::symmetric_group(n)) direct += rs == 2;
    if (count_rs2(n) != direct) return "R_n differs from S_n count" + at_n(n);
  }
  return {};
}

std::string transition(int cap) {
  for (int n = 1; n <= cap; ++n) {
    const auto m = transition_matrix(n);
    if (m != oracle::word_transition_matrix(n)) return "closed form differs from enumeration" + at_n(n);
    for (int k = 1; k <= n; ++k) {
      Rational row = 0;
      Rational column = 0;
      for (int l = 1; l <= n; ++l) {
        row += m.at(k, l);
        column += m.at(l, k);
      }
      if (row != 1 || column != 1) return "not doubly stochastic" + at_n(n);
    }
  }
  return {};
}

std::string conditional(int cap) {
  for (int n = 1; n <= cap; ++n) {
    if (conditional_q_g(n).explicit_table() != oracle::conditioned_on_top_card_one(n)) {
      return "Q_g differs from conditioned enumeration" + at_n(n);
    }
  }
  return {};
}

std::string total_variation(int cap) {
  for (int n = 1; n <= 30; ++n) {
    const BigInt two_n = pow2(static_cast<unsigned>(n));
    if (tv_distance(closed_form_q(n), conditional_q_g(n)) != Rational(two_n - n - 1, (two_n + 1) * two_n)) {
      return "closed form TV differs" + at_n(n);
    }
  }
  for (int n = 1; n <= cap; ++n) {
    const auto f = closed_form_q(n);
    const auto g = conditional_q_g(n);
    if (tv_distance(f, g) != tv_distance(f.explicit_table(), g.explicit_table())) return "table L1 differs" + at_n(n);
  }
  return {};
}

std::string entropy_check(int cap) {
  using boost::multiprecision::abs;
  for (int n = 1; n <= cap; ++n) {
    if (abs(entropy_q(n) - entropy(oracle::word_distribution(n))) > HighPrecision("1e-12")) {
      return "entropy differs" + at_n(n);
    }
  }
  return {};
}

std::string drop_uniformity() {
  for (int a = 0; a <= 5; ++a) {
    for (int b = 0; b <= 5; ++b) {
      if (a + b == 0) continue;
      const Rational uniform(BigInt(1), binomial(static_cast<unsigned>(a + b), static_cast<unsigned>(a)));
      for (const auto& [word, mass] : drop_tree_probabilities(a, b)) {
        if (mass != uniform) return "non-uniform interleaving at a=" + std::to_string(a) + ", b=" + std::to_string(b);
      }
    }
  }
  return {};
}

std::string optimality(int cap) {
  for (int n = 1; n <= cap; ++n) {
    const auto q = closed_form_q(n);
    const Rational algo = expected_reward(RiffleStrategy(), q);
    if (algo != expected_reward(GreedyBayesStrategy(), q)) return "greedy-Bayes oracle differs" + at_n(n);
    if (algo != expected_reward(RiffleStrategy(TieBreak::high_pile), q)) return "tie-break changes reward" + at_n(n);
  }
  return {};
}

std::string ladder(int cap) {
  if (exact_g(1) != 1 || exact_g(2) != Rational(7, 4) || exact_g(3) != Rational(19, 8)) return "spot values wrong";
  const RiffleStrategy algo;
  for (int n = 1; n <= cap; ++n) {
    if (exact_g(n) != expected_reward(algo, closed_form_q(n))) return "ladder differs from enumeration" + at_n(n);
  }
  return {};
}

std::string dynamic_programs() {
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) {
      if (f_dp(a, b) != f_bruteforce(a, b)) return "f_dp differs at (" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
  }
  if (f_dp(1, 1) != Rational(3, 2) || f_dp(1, 2) != Rational(7, 3) || f_dp(2, 2) != Rational(17, 6)) {
    return "f spot values wrong";
  }
  const InterleaveRewardTable table(40);
  for (int n = 1; n <= 40; ++n) {
    if (Rational(s_sequence(n)) != s_definitional(n, table)) return "S recursion differs" + at_n(n);
  }
  const auto f = big_f_float(200);
  for (int n = 1; n <= 200; ++n) {
    if (std::abs(f[static_cast<std::size_t>(n)] - to_double(big_f(n))) > 1e-12) return "F dual mode differs" + at_n(n);
  }
  return {};
}

std::string consecutive(int cap) {
  for (int n = 1; n <= std::max(cap, 30); ++n) {
    for (int m = 1; m < n; ++m) {
      if (consecutive_stage_probability(n, m) <= Rational(1, 2)) return "probability not above 1/2" + at_n(n);
    }
  }
  for (int n = 1; n <= std::min(cap, 10); ++n) {
    for (int m = 1; m <= n; ++m) {
      if (consecutive_stage_probability(n, m) != oracle::consecutive_conditional(n, m)) {
        return "differs from enumeration" + at_n(n);
      }
    }
  }
  return {};
}

std::string second_moment(int cap) {
  const auto three = second_moment_enumeration(3);
  if (three.second_moment != Rational(49, 8) || three.variance != Rational(31, 64)) return "T*(3) wrong";
  for (int n = 1; n <= cap; ++n) {
    if (second_moment_enumeration(n).second_moment != second_moment_enumeration(n, TieBreak::high_pile).second_moment) {
      return "tie-break changes the second moment" + at_n(n);
    }
  }
  return {};
}

std::string numerical_remark() {
  const auto g = float_g_table(10000);
  double worst = 0.0;
  for (int n = 1; n <= 10000; ++n) worst = std::max(worst, std::abs(g[static_cast<std::size_t>(n)] - asymptotic_target(n)));
  if (worst >= 0.5) return "max error " + format_float(worst) + " is not below 0.5";
  return {};
}

std::string worked_examples() {
  const RiffleStrategy algo;
  if (play_with_feedback(algo, Permutation({2, 3, 1})).reward != 1) return "trace of 2,3,1 wrong";
  if (play_with_feedback(algo, Permutation({2, 1})).reward != 1) return "trace of 2,1 wrong";
  if (word_to_permutation(BinaryWord::parse("0101")) != Permutation({1, 3, 2, 4})) return "word 0101 wrong";
  if (rising_sequence_count(Permutation({1, 4, 2, 5, 3, 6})) != 2) return "rs example wrong";
  const std::vector<Card> history{1, 2, 5, 6};
  const auto mass = greedy_bayes_posterior(history, 7);
  if (greedy_bayes_guess(history, 7) != 3 || Rational(mass[3], mass[3] + mass[7]) != Rational(2, 3)) {
    return "posterior after 1,2,5,6 wrong";
  }
  if (zero_feedback_value(2) != Rational(3, 2)) return "zero-feedback value at n=2 wrong";
  if (f_prime_series(3) != Rational(17, 2)) return "F'(3) wrong";
  return {};
}

std::string zero_feedback(int cap) {
  for (int n = 1; n <= cap; ++n) {
    const auto m = transition_matrix(n);
    Rational direct = 0;
    for (int j = 1; j <= n; ++j) {
      Rational best = 0;
      for (int i = 1; i <= n; ++i) best = std::max(best, m.at(i, j));
      direct += best;
    }
    if (zero_feedback_value(n) != direct) return "column maxima differ" + at_n(n);
  }
  return {};
}

}  // namespace

std::vector<CheckResult> run_verification_suite(int max_n) {
  if (max_n < 1) throw std::invalid_argument("--max-n must be positive");
  const auto cap = [max_n](int limit) { return std::min(max_n, limit); };
  const std::vector<std::pair<std::string, Check>> checks = {
      {"distribution-law", [&] { return distribution_law(cap(12)); }},
      {"transition-matrix", [&] { return transition(cap(10)); }},
      {"conditional-distribution", [&] { return conditional(cap(10)); }},
      {"total-variation", [&] { return total_variation(cap(10)); }},
      {"entropy", [&] { return entropy_check(cap(10)); }},
      {"drop-process-uniformity", [] { return drop_uniformity(); }},
      {"optimality", [&] { return optimality(cap(10)); }},
      {"ladder-vs-enumeration", [&] { return ladder(cap(16)); }},
      {"interleave-dp-and-series", [] { return dynamic_programs(); }},
      {"consecutive-stage", [&] { return consecutive(cap(30)); }},
      {"second-moment", [&] { return second_moment(cap(10)); }},
      {"error-below-half", [] { return numerical_remark(); }},
      {"worked-examples", [] { return worked_examples(); }},
      {"zero-feedback-column-max", [&] { return zero_feedback(cap(32)); }},
  };
  std::vector<CheckResult> results;
  for (const auto& [name, check] : checks) {
    CheckResult r{name, false, {}};
    try {
      r.detail = check();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace riffle
