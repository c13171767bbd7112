#ifndef RIFFLE_RNG_HPP
#define RIFFLE_RNG_HPP

#include <cstdint>
#include <limits>

namespace riffle {

/// SplitMix64: output k is a bijective mix of seed + k * golden gamma, so
/// any (seed, counter) pair can be jumped to directly. Satisfies
/// UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    state_ += kGamma;
    return mix(state_);
  }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

 private:
  std::uint64_t state_;
};

using Rng = SplitMix64;

/// Independent stream for one trial, keyed only by (master seed, index).
inline Rng substream(std::uint64_t master_seed, std::uint64_t index) {
  return Rng(SplitMix64::mix(master_seed ^ SplitMix64::mix(index + SplitMix64::kGamma)));
}

}  // namespace riffle

#endif  // RIFFLE_RNG_HPP
