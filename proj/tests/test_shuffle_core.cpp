#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "riffle/distribution.hpp"
#include "riffle/gsr.hpp"
#include "riffle/oracles.hpp"
#include "riffle/permutation.hpp"
#include "riffle/transition.hpp"

using namespace riffle;

TEST_CASE("rising sequences") {
  CHECK(rising_sequence_count(Permutation({1, 4, 2, 5, 3, 6})) == 2);
  CHECK(rising_sequence_count(Permutation({3, 2, 1})) == 3);
  for (int n = 1; n <= 10; ++n) CHECK(rising_sequence_count(Permutation::identity(n)) == 1);
}

TEST_CASE("rising sequence count agrees with the sweep oracle on S_n") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& [p, rs] : oracle::symmetric_group(n)) REQUIRE(rising_sequence_count(p) == rs);
  }
}

TEST_CASE("permutation validation and parsing") {
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({}), std::invalid_argument);
  CHECK(Permutation::parse("2,3,1") == Permutation({2, 3, 1}));
  CHECK(Permutation::parse(" 1, 2 ") == Permutation({1, 2}));
  CHECK_THROWS_AS(Permutation::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("1,3"), std::invalid_argument);
  CHECK(Permutation({4, 1, 3, 2}).to_string() == "4,1,3,2");
}

TEST_CASE("word to permutation") {
  CHECK(word_to_permutation(BinaryWord::parse("0000")).is_identity());
  CHECK(word_to_permutation(BinaryWord::parse("1111")).is_identity());
  CHECK(word_to_permutation(BinaryWord::parse("0101")) == Permutation({1, 3, 2, 4}));
  CHECK_THROWS_AS(BinaryWord::parse("012"), std::invalid_argument);
  CHECK_THROWS_AS(BinaryWord::parse(""), std::invalid_argument);

  // Mask fast path equals the BinaryWord path.
  for (int n = 1; n <= 8; ++n) {
    for_each_word(n, [&](std::uint64_t mask, std::span<const Card> cards) {
      const Permutation p = word_to_permutation(BinaryWord::from_mask(mask, n));
      REQUIRE(std::equal(cards.begin(), cards.end(), p.cards().begin()));
    });
  }
}

TEST_CASE("n = 3 words give identity four times and each rs=2 arrangement once") {
  std::map<Permutation, int> seen;
  for (std::uint64_t mask = 0; mask < 8; ++mask) ++seen[word_to_permutation(BinaryWord::from_mask(mask, 3))];
  CHECK(seen.size() == 5);
  CHECK(seen[Permutation::identity(3)] == 4);
  for (auto cards : {std::vector<Card>{1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}}) CHECK(seen[Permutation(cards)] == 1);
}

TEST_CASE("word images are exactly the rs <= 2 arrangements with the riffle multiplicities") {
  for (int n = 1; n <= 8; ++n) {
    const auto images = oracle::word_multiplicities(n);
    std::size_t rs_le_2 = 0;
    for (const auto& [p, rs] : oracle::symmetric_group(n)) {
      if (rs > 2) {
        REQUIRE_FALSE(images.contains(p));
        continue;
      }
      ++rs_le_2;
      REQUIRE(images.at(p) == (rs == 1 ? n + 1 : 1));
    }
    CHECK(images.size() == rs_le_2);
  }
}

TEST_CASE("count_rs2") {
  CHECK(count_rs2(1) == 0);
  CHECK(count_rs2(3) == 4);
  for (int n = 1; n <= 8; ++n) {
    long long direct = 0;
    for (const auto& [p, rs] : oracle::symmetric_group(n)) direct += rs == 2;
    CHECK(count_rs2(n) == direct);
  }
  CHECK(count_rs2(64) == pow2(64) - 65);
}

TEST_CASE("closed form Q") {
  const auto q2 = closed_form_q(2);
  CHECK(q2.identity_probability() == Rational(3, 4));
  CHECK(q2.rs2_probability() == Rational(1, 4));
  CHECK(closed_form_q(1).identity_probability() == 1);
  for (int n = 1; n <= 8; ++n) CHECK(closed_form_q(n).explicit_table() == oracle::word_distribution(n));
  CHECK(closed_form_q(3).probability(Permutation({3, 2, 1})) == 0);
  CHECK_THROWS_AS(closed_form_q(0), std::invalid_argument);
}

TEST_CASE("conditional Q_g") {
  const auto g2 = conditional_q_g(2);
  CHECK(g2.identity_probability() == Rational(4, 5));
  CHECK(g2.rs2_probability() == Rational(1, 5));
  for (int n = 1; n <= 30; ++n) {
    const auto g = conditional_q_g(n);
    CHECK(g.identity_probability() + Rational(count_rs2(n)) * g.rs2_probability() == 1);
  }
  for (int n = 1; n <= 8; ++n) CHECK(conditional_q_g(n).explicit_table() == oracle::conditioned_on_top_card_one(n));
}

TEST_CASE("distribution invariants are enforced") {
  CHECK_THROWS_AS(ShuffleDistribution(3, Rational(1, 2), Rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(ShuffleDistribution(1, Rational(3, 2), Rational(-1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(ShuffleDistribution(25, Rational(1), Rational(0)).explicit_table(), std::length_error);
}

TEST_CASE("transition matrix") {
  for (int n = 1; n <= 12; ++n) {
    CHECK(transition_entry(n, 1, 1) == Rational(1 + pow2(static_cast<unsigned>(n - 1)), pow2(static_cast<unsigned>(n))));
  }
  const auto m10 = transition_matrix(10);
  for (int i = 1; i <= 10; ++i) {
    Rational row = 0;
    for (int j = 1; j <= 10; ++j) row += m10.at(i, j);
    CHECK(row == 1);
  }
  for (int n = 1; n <= 8; ++n) CHECK(transition_matrix(n) == oracle::word_transition_matrix(n));
  CHECK_THROWS_AS(m10.at(0, 1), std::out_of_range);
  CHECK_THROWS_AS(m10.at(1, 11), std::out_of_range);
}

TEST_CASE("transition matrix is doubly stochastic and centrally symmetric for n <= 64") {
  for (int n = 1; n <= 64; n += (n < 16 ? 1 : 7)) {
    const auto m = transition_matrix(n);
    for (int k = 1; k <= n; ++k) {
      Rational row = 0;
      Rational column = 0;
      for (int l = 1; l <= n; ++l) {
        row += m.at(k, l);
        column += m.at(l, k);
        REQUIRE(m.at(k, l) == m.at(n + 1 - k, n + 1 - l));
      }
      REQUIRE(row == 1);
      REQUIRE(column == 1);
    }
  }
}

TEST_CASE("total variation distance") {
  const auto q = closed_form_q(6);
  CHECK(tv_distance(q, q) == 0);
  for (int n = 1; n <= 30; ++n) {
    const BigInt two_n = pow2(static_cast<unsigned>(n));
    CHECK(tv_distance(closed_form_q(n), conditional_q_g(n)) == Rational(two_n - n - 1, (two_n + 1) * two_n));
  }
  for (int n = 1; n <= 10; ++n) {
    CHECK(tv_distance(closed_form_q(n), conditional_q_g(n)) ==
          tv_distance(closed_form_q(n).explicit_table(), conditional_q_g(n).explicit_table()));
  }
  CHECK_THROWS_AS(tv_distance(closed_form_q(3), closed_form_q(4)), std::invalid_argument);
}

TEST_CASE("entropy of Q") {
  using boost::multiprecision::abs;
  using boost::multiprecision::log;
  CHECK(abs(entropy_q(1)) < HighPrecision("1e-40"));
  const HighPrecision expected2 = 2 * log(HighPrecision(2)) - HighPrecision(3) / 4 * log(HighPrecision(3));
  CHECK(abs(entropy_q(2) - expected2) < HighPrecision("1e-40"));
  for (int n = 1; n <= 10; ++n) {
    CHECK(abs(entropy_q(n) - entropy(oracle::word_distribution(n))) < HighPrecision("1e-12"));
  }
}

TEST_CASE("drop process assigns each interleaving probability 1/C(a+b,a)") {
  for (int a = 0; a <= 5; ++a) {
    for (int b = 0; b <= 5; ++b) {
      if (a + b == 0) continue;
      const auto law = drop_tree_probabilities(a, b);
      REQUIRE(law.size() == static_cast<std::size_t>(binomial(static_cast<unsigned>(a + b), static_cast<unsigned>(a))));
      for (const auto& [word, mass] : law) {
        REQUIRE(word.zeros() == a);
        REQUIRE(mass == Rational(BigInt(1), binomial(static_cast<unsigned>(a + b), static_cast<unsigned>(a))));
      }
    }
  }
  const auto law22 = drop_tree_probabilities(2, 2);
  CHECK(law22.size() == 6);
  for (const auto& [word, mass] : law22) CHECK(mass == Rational(1, 6));
}

TEST_CASE("samplers") {
  Rng rng(7);
  for (int i = 0; i < 100; ++i) CHECK(gsr_sample_two_step(1, rng).is_identity());
  for (int i = 0; i < 1000; ++i) {
    const auto p = gsr_sample_two_step(20, rng);
    REQUIRE(rising_sequence_count(p) <= 2);
    const auto w = sequential_drop(3, 4, rng);
    REQUIRE(w.zeros() == 3);
    REQUIRE(sample_uniform_word(70, rng).size() == 70);
  }
}

TEST_CASE("two-step sampler frequencies at n = 2 and n = 3") {
  constexpr int kSamples = 1'000'000;
  Rng rng(2024);
  int identity2 = 0;
  for (int i = 0; i < kSamples; ++i) identity2 += gsr_sample_two_step(2, rng).is_identity();
  // sd of the frequency is sqrt(3/16 / 1e6) ~ 4.3e-4
  CHECK(std::abs(identity2 / double(kSamples) - 0.75) < 5 * 4.33e-4);

  std::map<Permutation, int> counts;
  for (int i = 0; i < kSamples; ++i) ++counts[gsr_sample_two_step(3, rng)];
  const double sd = std::sqrt(0.125 * 0.875 / kSamples);
  for (auto cards : {std::vector<Card>{1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}}) {
    CHECK(std::abs(counts[Permutation(cards)] / double(kSamples) - 0.125) < 5 * sd);
  }
}
