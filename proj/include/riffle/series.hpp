#ifndef RIFFLE_SERIES_HPP
#define RIFFLE_SERIES_HPP

#include <vector>

#include "riffle/interleave.hpp"
#include "riffle/rational.hpp"

namespace riffle {

/// S(n) = sum_{k=1}^{n} C(n,k) f(k, n-k), evaluated by the closed recursion
///   S(n) = 2^(n-1) + C(n-1, floor((n-1)/2)) + n - 2 + 2 S(n-1),  S(1) = 1.
/// The recursion shows S(n) is an integer.
BigInt s_sequence(int n);

/// The same quantity straight from its definition. table.max_size() >= n.
Rational s_definitional(int n, const InterleaveRewardTable& table);

/// a_i = C(i, floor(i/2)) / 2^i.
Rational a_sequence(int i);
/// a_0..a_max by the multiplicative recurrence a_{2i} = a_{2i-1},
/// a_{2i+1} = a_{2i} (2i+1)/(2i+2).
std::vector<double> a_sequence_float(int max_index);

/// A_n = sum_{i=0}^{n} a_i.
Rational a_partial_sum(int n);
std::vector<double> a_partial_sums_float(int max_index);

/// F(n) = S(n) / 2^(n+1).
Rational big_f(int n);
/// F(1..max_n) (index 0 holds F(0) = 0) by the additive recursion
///   F(n) = F(n-1) + 1/4 + (n-2)/2^(n+1) + a_{n-1}/4,
/// which never forms 2^n-sized values.
std::vector<double> big_f_float(int max_n);

/// F'(n) = sum_{k=2}^{n} C(n-1, k-1) f(k-1, n-k)^2, n >= 2.
Rational f_prime_series(int n, const InterleaveRewardTable& table);
Rational f_prime_series(int n);

}  // namespace riffle

#endif  // RIFFLE_SERIES_HPP
