#ifndef RIFFLE_DISTRIBUTION_HPP
#define RIFFLE_DISTRIBUTION_HPP

#include <map>

#include "riffle/permutation.hpp"
#include "riffle/rational.hpp"

namespace riffle {

using ExplicitDistribution = std::map<Permutation, Rational>;

/// R_n = 2^n - n - 1, the number of permutations of n cards with exactly two
/// rising sequences.
BigInt count_rs2(int n);

/// A law on S_n that depends on a permutation only through whether it is the
/// identity or has two rising sequences; everything else has mass zero.
class ShuffleDistribution {
 public:
  static constexpr int kMaxExplicitSize = 24;

  /// Throws std::invalid_argument unless both values lie in [0,1] and
  /// identity + R_n * rs2 == 1.
  ShuffleDistribution(int n, Rational identity_probability, Rational rs2_probability);

  int size() const { return n_; }
  const Rational& identity_probability() const { return identity_; }
  const Rational& rs2_probability() const { return rs2_; }

  Rational probability(const Permutation& p) const;

  /// Materializes the support. Throws std::length_error for n > 24.
  ExplicitDistribution explicit_table() const;

 private:
  int n_;
  Rational identity_;
  Rational rs2_;
};

/// One riffle shuffle of n cards: identity (n+1)/2^n, each rs=2 arrangement 1/2^n.
ShuffleDistribution closed_form_q(int n);

/// The remaining n cards after one riffle of n+1 cards revealed card 1 on top,
/// relabeled down by one: identity (n+2)/(2^n+1), each rs=2 arrangement 1/(2^n+1).
ShuffleDistribution conditional_q_g(int n);

/// Half the L1 distance, from the parametric pairs alone.
/// Throws std::invalid_argument when sizes differ.
Rational tv_distance(const ShuffleDistribution& a, const ShuffleDistribution& b);

/// Half the L1 distance between two explicit tables (missing keys are zero).
Rational tv_distance(const ExplicitDistribution& a, const ExplicitDistribution& b);

/// n log 2 - ((n+1)/2^n) log(n+1), natural log.
HighPrecision entropy_q(int n);

/// -sum p log p over the table's support, natural log.
HighPrecision entropy(const ExplicitDistribution& table);

}  // namespace riffle

#endif  // RIFFLE_DISTRIBUTION_HPP
