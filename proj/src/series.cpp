#include "riffle/series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace riffle {

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + " needs n >= 1, got " + std::to_string(n));
}

}  // namespace

BigInt s_sequence(int n) {
  require_positive(n, "S(n)");
  BigInt s = 1;
  for (int m = 2; m <= n; ++m) {
    const auto um = static_cast<unsigned>(m);
    s = pow2(um - 1) + binomial(um - 1, (um - 1) / 2) + (m - 2) + 2 * s;
  }
  return s;
}

Rational s_definitional(int n, const InterleaveRewardTable& table) {
  require_positive(n, "S(n)");
  Rational total = 0;
  for (int k = 1; k <= n; ++k) {
    total += Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))) * table(k, n - k);
  }
  return total;
}

Rational a_sequence(int i) {
  if (i < 0) throw std::invalid_argument("a_i needs i >= 0");
  const auto ui = static_cast<unsigned>(i);
  return Rational(binomial(ui, ui / 2), pow2(ui));
}

std::vector<double> a_sequence_float(int max_index) {
  if (max_index < 0) throw std::invalid_argument("a_i needs i >= 0");
  std::vector<double> a(static_cast<std::size_t>(max_index) + 1);
  a[0] = 1.0;
  for (int i = 1; i <= max_index; ++i) {
    const double prev = a[static_cast<std::size_t>(i - 1)];
    a[static_cast<std::size_t>(i)] = (i % 2 == 0) ? prev : prev * i / (i + 1);
  }
  return a;
}

Rational a_partial_sum(int n) {
  if (n < 0) throw std::invalid_argument("A_n needs n >= 0");
  // Sum over the common denominator 2^n: a_i = C(i, floor(i/2)) 2^(n-i) / 2^n.
  BigInt numerator = 0;
  BigInt central = 1;  // C(i, floor(i/2))
  for (int i = 0; i <= n; ++i) {
    if (i > 0) {
      // C(i, floor(i/2)) from C(i-1, floor((i-1)/2)).
      if (i % 2 == 1) {
        central = central * i / ((i + 1) / 2);
      } else {
        central = central * i / (i / 2);
      }
    }
    numerator += central << static_cast<unsigned>(n - i);
  }
  return Rational(numerator, pow2(static_cast<unsigned>(n)));
}

std::vector<double> a_partial_sums_float(int max_index) {
  auto a = a_sequence_float(max_index);
  double running = 0.0;
  for (auto& x : a) {
    running += x;
    x = running;
  }
  return a;
}

Rational big_f(int n) {
  require_positive(n, "F(n)");
  return Rational(s_sequence(n), pow2(static_cast<unsigned>(n) + 1));
}

std::vector<double> big_f_float(int max_n) {
  require_positive(max_n, "F(n)");
  const auto a = a_sequence_float(max_n);
  std::vector<double> f(static_cast<std::size_t>(max_n) + 1, 0.0);
  f[1] = 0.25;
  for (int n = 2; n <= max_n; ++n) {
    f[static_cast<std::size_t>(n)] = f[static_cast<std::size_t>(n - 1)] + 0.25 + std::ldexp(n - 2.0, -(n + 1)) +
                                     a[static_cast<std::size_t>(n - 1)] / 4.0;
  }
  return f;
}

Rational f_prime_series(int n, const InterleaveRewardTable& table) {
  if (n < 2) throw std::invalid_argument("F'(n) needs n >= 2");
  Rational total = 0;
  for (int k = 2; k <= n; ++k) {
    const Rational& f = table(k - 1, n - k);
    total += Rational(binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(k - 1))) * f * f;
  }
  return total;
}

Rational f_prime_series(int n) {
  if (n < 2) throw std::invalid_argument("F'(n) needs n >= 2");
  return f_prime_series(n, InterleaveRewardTable(n - 1));
}

}  // namespace riffle
