#ifndef RIFFLE_RATIONAL_HPP
#define RIFFLE_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace riffle {

/// Arbitrary-precision integer and rational used by every exact computation.
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// 50 decimal digits; used where a value is irrational (entropy).
using HighPrecision = boost::multiprecision::cpp_bin_float_50;

enum class NumericMode { rational, floating };

NumericMode parse_numeric_mode(const std::string& text);
std::string to_string(NumericMode mode);

BigInt pow2(unsigned exponent);
BigInt binomial(unsigned n, unsigned k);

/// Lowest-terms "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
Rational parse_rational(const std::string& text);

double to_double(const Rational& value);

/// Shortest decimal rendering with 12 significant digits.
std::string format_float(double value);
/// The double nearest to the 12-significant-digit rendering of value.
double round_to_12_digits(double value);

}  // namespace riffle

#endif  // RIFFLE_RATIONAL_HPP
