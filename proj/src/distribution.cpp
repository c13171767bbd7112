#include "riffle/distribution.hpp"

#include <stdexcept>
#include <string>

#include "riffle/gsr.hpp"

namespace riffle {

namespace {

void require_positive(int n) {
  if (n < 1) throw std::invalid_argument("deck size must be positive, got " + std::to_string(n));
}

HighPrecision to_high_precision(const Rational& q) {
  return HighPrecision(numerator(q).str()) / HighPrecision(denominator(q).str());
}

}  // namespace

BigInt count_rs2(int n) {
  require_positive(n);
  return pow2(static_cast<unsigned>(n)) - n - 1;
}

ShuffleDistribution::ShuffleDistribution(int n, Rational identity_probability, Rational rs2_probability)
    : n_(n), identity_(std::move(identity_probability)), rs2_(std::move(rs2_probability)) {
  require_positive(n);
  if (identity_ < 0 || identity_ > 1 || rs2_ < 0 || rs2_ > 1) {
    throw std::invalid_argument("probabilities must lie in [0,1]");
  }
  if (identity_ + Rational(count_rs2(n)) * rs2_ != 1) {
    throw std::invalid_argument("identity + R_n * rs2 probability must equal 1");
  }
}

Rational ShuffleDistribution::probability(const Permutation& p) const {
  if (p.size() != n_) throw std::invalid_argument("permutation size does not match distribution");
  switch (rising_sequence_count(p)) {
    case 1:
      return identity_;
    case 2:
      return rs2_;
    default:
      return 0;
  }
}

ExplicitDistribution ShuffleDistribution::explicit_table() const {
  if (n_ > kMaxExplicitSize) {
    throw std::length_error("explicit tables are limited to n <= " + std::to_string(kMaxExplicitSize));
  }
  ExplicitDistribution table;
  for_each_word(n_, [&](std::uint64_t, std::span<const Card> cards) {
    Permutation p(std::vector<Card>(cards.begin(), cards.end()));
    const bool id = p.is_identity();
    table.emplace(std::move(p), id ? identity_ : rs2_);
  });
  return table;
}

ShuffleDistribution closed_form_q(int n) {
  require_positive(n);
  const BigInt scale = pow2(static_cast<unsigned>(n));
  return ShuffleDistribution(n, Rational(BigInt(n + 1), scale), Rational(BigInt(1), scale));
}

ShuffleDistribution conditional_q_g(int n) {
  require_positive(n);
  const BigInt scale = pow2(static_cast<unsigned>(n)) + 1;
  return ShuffleDistribution(n, Rational(BigInt(n + 2), scale), Rational(BigInt(1), scale));
}

Rational tv_distance(const ShuffleDistribution& a, const ShuffleDistribution& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("total variation needs distributions on the same deck size");
  }
  const Rational id_gap = abs(a.identity_probability() - b.identity_probability());
  const Rational rs2_gap = abs(a.rs2_probability() - b.rs2_probability());
  return (id_gap + Rational(count_rs2(a.size())) * rs2_gap) / 2;
}

Rational tv_distance(const ExplicitDistribution& a, const ExplicitDistribution& b) {
  Rational total = 0;
  for (const auto& [p, mass] : a) {
    auto it = b.find(p);
    total += abs(mass - (it == b.end() ? Rational(0) : it->second));
  }
  for (const auto& [p, mass] : b) {
    if (!a.contains(p)) total += mass;
  }
  return total / 2;
}

HighPrecision entropy_q(int n) {
  require_positive(n);
  using boost::multiprecision::log;
  const Rational weight(BigInt(n + 1), pow2(static_cast<unsigned>(n)));
  return HighPrecision(n) * log(HighPrecision(2)) - to_high_precision(weight) * log(HighPrecision(n + 1));
}

HighPrecision entropy(const ExplicitDistribution& table) {
  using boost::multiprecision::log;
  HighPrecision total = 0;
  for (const auto& [p, mass] : table) {
    if (mass == 0) continue;
    const HighPrecision x = to_high_precision(mass);
    total -= x * log(x);
  }
  return total;
}

}  // namespace riffle
