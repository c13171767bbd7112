#include <doctest.h>

#include <cmath>

#include "riffle/distribution.hpp"
#include "riffle/interleave.hpp"
#include "riffle/ladder.hpp"
#include "riffle/oracles.hpp"
#include "riffle/series.hpp"
#include "riffle/strategy.hpp"

using namespace riffle;

TEST_CASE("interleave reward table") {
  CHECK(f_dp(3, 0) == 3);
  CHECK(f_dp(0, 3) == 3);
  CHECK(f_dp(1, 1) == Rational(3, 2));
  CHECK(f_dp(1, 2) == Rational(7, 3));
  CHECK(f_dp(2, 2) == Rational(17, 6));

  const InterleaveRewardTable table(24);
  for (int a = 0; a <= 24; ++a) {
    for (int b = 0; a + b <= 24; ++b) {
      REQUIRE(table(a, b) == table(b, a));
      REQUIRE(table(a, b) >= std::max(a, b));
      REQUIRE(table(a, b) <= a + b);
    }
    REQUIRE(table(a, 0) == a);
  }
  CHECK_THROWS_AS(table(20, 5), std::out_of_range);
  CHECK_THROWS_AS(table(-1, 2), std::out_of_range);
}

TEST_CASE("f_dp matches brute force over interleavings") {
  CHECK(f_bruteforce(0, 4) == 4);
  CHECK(f_bruteforce(2, 2) == Rational(17, 6));
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) REQUIRE(f_dp(a, b) == f_bruteforce(a, b));
  }
}

TEST_CASE("S(n)") {
  CHECK(s_sequence(1) == 1);
  CHECK(s_sequence(2) == 5);
  // Frozen from the definitional sum in an independent enumeration.
  const long long frozen[] = {1, 5, 17, 47, 119, 284, 657};
  for (int n = 1; n <= 7; ++n) CHECK(s_sequence(n) == frozen[n - 1]);
  const InterleaveRewardTable table(40);
  for (int n = 1; n <= 40; ++n) REQUIRE(Rational(s_sequence(n)) == s_definitional(n, table));
}

TEST_CASE("a_i and A_n") {
  CHECK(a_sequence(0) == 1);
  CHECK(a_sequence(3) == Rational(3, 8));
  const auto a = a_sequence_float(400);
  const auto sums = a_partial_sums_float(400);
  Rational running = 0;
  for (int i = 0; i <= 60; ++i) {
    running += a_sequence(i);
    REQUIRE(std::abs(a[static_cast<std::size_t>(i)] - to_double(a_sequence(i))) < 1e-15);
    REQUIRE(a_partial_sum(i) == running);
    REQUIRE(std::abs(sums[static_cast<std::size_t>(i)] - to_double(running)) < 1e-12);
  }
  for (int i = 1; i <= 200; ++i) {
    REQUIRE(a_sequence(2 * i) == a_sequence(2 * i - 1));
    REQUIRE(sums[static_cast<std::size_t>(i)] >= sums[static_cast<std::size_t>(i - 1)]);
  }
}

TEST_CASE("F(n) in both modes") {
  CHECK(big_f(1) == Rational(1, 4));
  CHECK(big_f(2) == Rational(5, 8));
  const auto f = big_f_float(200);
  for (int n = 1; n <= 200; ++n) REQUIRE(std::abs(f[static_cast<std::size_t>(n)] - to_double(big_f(n))) < 1e-12);
}

TEST_CASE("exact ladder") {
  CHECK(exact_g(1) == 1);
  CHECK(exact_g(2) == Rational(7, 4));
  CHECK(exact_g(3) == Rational(19, 8));
  const auto ladder = run_ladder(3, 4, NumericMode::rational);
  CHECK(ladder.exact[1] == Rational(9, 5));
  CHECK(ladder.exact[2] == Rational(19, 8));
  // Frozen from an independent brute-force enumeration over S_n.
  CHECK(exact_g(4) == 3);
  CHECK(exact_g(5) == Rational(29, 8));
  CHECK(exact_g(6) == Rational(273, 64));
  CHECK(exact_g(7) == Rational(157, 32));
  CHECK(exact_g(8) == Rational(1421, 256));
  CHECK_THROWS_AS(exact_g(201), std::out_of_range);
}

TEST_CASE("ladder agrees with enumeration for n <= 12") {
  const RiffleStrategy algo;
  for (int n = 1; n <= 12; ++n) {
    REQUIRE(exact_g(n) == expected_reward(algo, closed_form_q(n)));
    REQUIRE(exact_g_conditional(n) == expected_reward(algo, conditional_q_g(n)));
  }
}

TEST_CASE("ladder values stay within [m/2, m]") {
  const auto ladder = run_ladder(120, 121, NumericMode::rational);
  for (int m = 1; m <= 120; ++m) {
    REQUIRE(ladder.exact[static_cast<std::size_t>(m - 1)] >= Rational(m, 2));
    REQUIRE(ladder.exact[static_cast<std::size_t>(m - 1)] <= m);
  }
}

TEST_CASE("float ladder agrees with rational ladder") {
  for (int n : {1, 2, 3, 10, 59, 60, 61, 62, 100, 150, 200}) {
    const double exact = to_double(exact_g(n));
    REQUIRE(std::abs(float_g(n) - exact) < 1e-9);
  }
  const auto table = float_g_table(200);
  for (int n = 1; n <= 200; n += 13) REQUIRE(std::abs(table[static_cast<std::size_t>(n)] - to_double(exact_g(n))) < 1e-9);
}

TEST_CASE("conditional optimum stays within the total-variation bound") {
  for (int n = 1; n <= 30; ++n) {
    const Rational gap = abs(exact_g(n) - exact_g_conditional(n));
    REQUIRE(gap <= 2 * n * tv_distance(closed_form_q(n), conditional_q_g(n)));
  }
}

TEST_CASE("approximate recursion") {
  CHECK(approx_g_recursion(1) == 1.0);
  CHECK(approx_g_recursion(2) == 1.25);
  const auto approx = approx_g_table(200);
  const auto exact = float_g_table(200);
  for (int n = 20; n <= 200; ++n) {
    REQUIRE(std::abs(approx[static_cast<std::size_t>(n)] - exact[static_cast<std::size_t>(n)]) < 0.01);
  }
}

TEST_CASE("asymptotic target") {
  CHECK(asymptotic_target(10000) == doctest::Approx(5079.788456).epsilon(1e-9));
  CHECK(asymptotic_target(1) == doctest::Approx(1.2978845608).epsilon(1e-9));
  CHECK(std::abs(asymptotic_target(1) - 1.0) < 0.5);
}

TEST_CASE("consecutive stage probability") {
  for (int n = 1; n <= 12; ++n) CHECK(consecutive_stage_probability(n, n) == 1);
  CHECK(consecutive_stage_probability(3, 2) == Rational(4, 5));
  for (int n = 1; n <= 8; ++n) {
    for (int m = 1; m <= n; ++m) REQUIRE(consecutive_stage_probability(n, m) == oracle::consecutive_conditional(n, m));
  }
  CHECK_THROWS_AS(consecutive_stage_probability(3, 4), std::invalid_argument);
}

TEST_CASE("second moment") {
  const auto one = second_moment_enumeration(1);
  CHECK(one.second_moment == 1);
  CHECK(one.variance == 0);
  const auto two = second_moment_enumeration(2);
  CHECK(two.second_moment == Rational(13, 4));
  CHECK(two.variance == Rational(3, 16));
  const auto three = second_moment_enumeration(3);
  CHECK(three.second_moment == Rational(49, 8));
  CHECK(three.variance == Rational(31, 64));
  // Frozen from an independent brute-force enumeration over S_n.
  CHECK(second_moment_enumeration(8).second_moment == Rational(8127, 256));
  const RiffleStrategy algo;
  for (int n = 1; n <= 8; ++n) {
    const auto m = second_moment_enumeration(n);
    REQUIRE(m.mean == exact_g(n));
    REQUIRE(m.second_moment == oracle::expected_square_reward(algo, oracle::word_distribution(n)));
    REQUIRE(second_moment_enumeration(n, TieBreak::high_pile).second_moment == m.second_moment);
  }
}

TEST_CASE("F' series") {
  CHECK(f_prime_series(2) == 1);
  CHECK(f_prime_series(3) == Rational(17, 2));
  CHECK(f_prime_series(4) == Rational(125, 3));
  const InterleaveRewardTable table(40);
  Rational previous = 0;
  for (int n = 2; n <= 40; ++n) {
    const Rational value = f_prime_series(n, table);
    REQUIRE(value > previous);
    previous = value;
  }
  CHECK_THROWS_AS(f_prime_series(1), std::invalid_argument);
}
