#ifndef RIFFLE_PERMUTATION_HPP
#define RIFFLE_PERMUTATION_HPP

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace riffle {

/// Card labels are 1-based; the unshuffled deck reads 1..n from the top.
using Card = int;

/// A deck arrangement in one-line notation: cards()[j] is the card at
/// position j from the top (0-based position, 1-based label).
class Permutation {
 public:
  /// Throws std::invalid_argument unless arrangement is a bijection on 1..n.
  explicit Permutation(std::vector<Card> arrangement);

  static Permutation identity(int n);

  /// Parses "c1,c2,...,cn" (1-based, top to bottom).
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(cards_.size()); }
  Card operator[](int position) const { return cards_[static_cast<std::size_t>(position)]; }
  std::span<const Card> cards() const { return cards_; }

  bool is_identity() const;
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Card> cards_;
};

/// Number of maximal runs of consecutive values v, v+1, ... that appear in
/// left-to-right order. A new run starts at every v whose successor v+1 sits
/// above it in the deck.
int rising_sequence_count(std::span<const Card> arrangement);
inline int rising_sequence_count(const Permutation& p) { return rising_sequence_count(p.cards()); }

}  // namespace riffle

#endif  // RIFFLE_PERMUTATION_HPP
