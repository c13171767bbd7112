#include "riffle/rational.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>

namespace riffle {

NumericMode parse_numeric_mode(const std::string& text) {
  if (text == "rational" || text == "exact") return NumericMode::rational;
  if (text == "float" || text == "floating") return NumericMode::floating;
  throw std::invalid_argument("unknown numeric mode '" + text + "' (expected rational or float)");
}

std::string to_string(NumericMode mode) {
  return mode == NumericMode::rational ? "rational" : "float";
}

BigInt pow2(unsigned exponent) {
  BigInt result = 1;
  result <<= exponent;
  return result;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::string to_string(const Rational& value) {
  return value.str();
}

Rational parse_rational(const std::string& text) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

double to_double(const Rational& value) {
  return value.convert_to<double>();
}

std::string format_float(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

double round_to_12_digits(double value) {
  return std::stod(format_float(value));
}

}  // namespace riffle
