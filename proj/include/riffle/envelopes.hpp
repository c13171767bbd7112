#ifndef RIFFLE_ENVELOPES_HPP
#define RIFFLE_ENVELOPES_HPP

namespace riffle {

/// Largest absolute deviation over 1 <= n <= max_n of
///   A_n from sqrt(8/pi) sqrt(n),
///   F(n) from n/4 + sqrt(n/(2 pi)),
///   the zero-feedback column value from (2/sqrt(pi)) sqrt(n).
struct EnvelopeMeasurement {
  double a_partial_sum = 0.0;
  double big_f = 0.0;
  double zero_feedback = 0.0;
};

EnvelopeMeasurement measure_envelopes(int max_n);

}  // namespace riffle

#endif  // RIFFLE_ENVELOPES_HPP
