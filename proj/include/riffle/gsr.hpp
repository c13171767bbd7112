#ifndef RIFFLE_GSR_HPP
#define RIFFLE_GSR_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "riffle/permutation.hpp"
#include "riffle/rational.hpp"
#include "riffle/rng.hpp"

namespace riffle {

/// Canonical encoding of one cut-and-interleave. Bit j says which pile the
/// card at position j (from the top) came from: 0 for the top pile
/// (cards 1..k), 1 for the bottom pile (cards k+1..n), where k is the number
/// of 0 bits.
class BinaryWord {
 public:
  explicit BinaryWord(std::vector<std::uint8_t> bits);

  /// Bit j of the word is bit j of mask. Requires 1 <= n <= 64.
  static BinaryWord from_mask(std::uint64_t mask, int n);
  /// Parses a string of '0'/'1', top position first.
  static BinaryWord parse(std::string_view text);

  int size() const { return static_cast<int>(bits_.size()); }
  bool operator[](int position) const { return bits_[static_cast<std::size_t>(position)] != 0; }
  int zeros() const;
  std::string to_string() const;

  auto operator<=>(const BinaryWord&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

Permutation word_to_permutation(const BinaryWord& word);

/// Allocation-free variant for enumeration loops: writes the permutation
/// encoded by the low n bits of mask into out (out.size() == n).
void word_to_permutation(std::uint64_t mask, std::span<Card> out);

/// Calls visit(mask, arrangement) for each of the 2^n words. n <= 30.
template <class Visitor>
void for_each_word(int n, Visitor&& visit) {
  std::vector<Card> cards(static_cast<std::size_t>(n));
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    word_to_permutation(mask, cards);
    visit(mask, std::span<const Card>(cards));
  }
}

/// Uniform word of length n; induces the riffle distribution on permutations.
BinaryWord sample_uniform_word(int n, Rng& rng);

/// GSR step (2): repeatedly drop the bottom card of the low pile (size low)
/// or of the high pile (size high) with probability proportional to the
/// pile's remaining size. Returns the resulting interleaving as a word.
BinaryWord sequential_drop(int low, int high, Rng& rng);

/// GSR step (1) then step (2): binomial cut, proportional drops.
Permutation gsr_sample_two_step(int n, Rng& rng);

/// Exact law of sequential_drop, built by walking the drop tree.
std::map<BinaryWord, Rational> drop_tree_probabilities(int low, int high);

}  // namespace riffle

#endif  // RIFFLE_GSR_HPP
