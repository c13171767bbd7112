#include "riffle/permutation.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace riffle {

Permutation::Permutation(std::vector<Card> arrangement) : cards_(std::move(arrangement)) {
  const int n = size();
  if (n < 1) throw std::invalid_argument("permutation must contain at least one card");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (Card c : cards_) {
    if (c < 1 || c > n) {
      throw std::invalid_argument("card " + std::to_string(c) + " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(c)]) {
      throw std::invalid_argument("card " + std::to_string(c) + " appears twice");
    }
    seen[static_cast<std::size_t>(c)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("deck size must be positive");
  std::vector<Card> cards(static_cast<std::size_t>(n));
  std::iota(cards.begin(), cards.end(), 1);
  return Permutation(std::move(cards));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<Card> cards;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    Card value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("invalid card '" + std::string(token) + "' in permutation '" +
                                  std::string(text) + "'");
    }
    cards.push_back(value);
    start = end + 1;
  }
  return Permutation(std::move(cards));
}

bool Permutation::is_identity() const {
  for (int j = 0; j < size(); ++j) {
    if (cards_[static_cast<std::size_t>(j)] != j + 1) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < cards_.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(cards_[j]);
  }
  return out;
}

int rising_sequence_count(std::span<const Card> arrangement) {
  const std::size_t n = arrangement.size();
  std::vector<std::size_t> position(n + 1);
  for (std::size_t j = 0; j < n; ++j) position[static_cast<std::size_t>(arrangement[j])] = j;
  int runs = n ? 1 : 0;
  for (std::size_t v = 1; v < n; ++v) {
    if (position[v + 1] < position[v]) ++runs;
  }
  return runs;
}

}  // namespace riffle
