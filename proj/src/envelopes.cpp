#include "riffle/envelopes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "riffle/series.hpp"
#include "riffle/strategy.hpp"

namespace riffle {

EnvelopeMeasurement measure_envelopes(int max_n) {
  if (max_n < 1) throw std::invalid_argument("max_n must be positive");
  const double pi = std::numbers::pi;
  const auto sums = a_partial_sums_float(max_n);
  const auto f = big_f_float(max_n);
  EnvelopeMeasurement out;
  for (int n = 1; n <= max_n; ++n) {
    const double root = std::sqrt(static_cast<double>(n));
    const auto i = static_cast<std::size_t>(n);
    out.a_partial_sum = std::max(out.a_partial_sum, std::abs(sums[i] - std::sqrt(8.0 / pi) * root));
    out.big_f = std::max(out.big_f, std::abs(f[i] - n / 4.0 - std::sqrt(n / (2.0 * pi))));
    out.zero_feedback = std::max(out.zero_feedback, std::abs(zero_feedback_value_float(n) - 2.0 / std::sqrt(pi) * root));
  }
  return out;
}

}  // namespace riffle
