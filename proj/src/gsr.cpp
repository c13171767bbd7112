#include "riffle/gsr.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

namespace riffle {

BinaryWord::BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw std::invalid_argument("binary word must have positive length");
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("binary word symbols must be 0 or 1");
  }
}

BinaryWord BinaryWord::from_mask(std::uint64_t mask, int n) {
  if (n < 1 || n > 64) throw std::invalid_argument("mask words support 1 <= n <= 64");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) bits[static_cast<std::size_t>(j)] = (mask >> j) & 1U;
  return BinaryWord(std::move(bits));
}

BinaryWord BinaryWord::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("binary word may only contain 0 and 1: '" + std::string(text) + "'");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BinaryWord(std::move(bits));
}

int BinaryWord::zeros() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), std::uint8_t{0}));
}

std::string BinaryWord::to_string() const {
  std::string out;
  for (auto b : bits_) out += static_cast<char>('0' + b);
  return out;
}

Permutation word_to_permutation(const BinaryWord& word) {
  const int n = word.size();
  std::vector<Card> cards(static_cast<std::size_t>(n));
  Card next_low = 1;
  Card next_high = word.zeros() + 1;
  for (int j = 0; j < n; ++j) cards[static_cast<std::size_t>(j)] = word[j] ? next_high++ : next_low++;
  return Permutation(std::move(cards));
}

void word_to_permutation(std::uint64_t mask, std::span<Card> out) {
  const int n = static_cast<int>(out.size());
  const std::uint64_t used = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  Card next_low = 1;
  Card next_high = n - std::popcount(mask & used) + 1;
  for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] = ((mask >> j) & 1U) ? next_high++ : next_low++;
}

BinaryWord sample_uniform_word(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("deck size must be positive");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  std::uint64_t pool = 0;
  for (int j = 0; j < n; ++j) {
    if (j % 64 == 0) pool = rng();
    bits[static_cast<std::size_t>(j)] = pool & 1U;
    pool >>= 1;
  }
  return BinaryWord(std::move(bits));
}

BinaryWord sequential_drop(int low, int high, Rng& rng) {
  if (low < 0 || high < 0 || low + high < 1) {
    throw std::invalid_argument("piles must be nonnegative with at least one card");
  }
  const int n = low + high;
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  // Drops build the new deck from the bottom up.
  for (int position = n - 1; position >= 0; --position) {
    std::uniform_int_distribution<int> pick(0, low + high - 1);
    if (pick(rng) < low) {
      bits[static_cast<std::size_t>(position)] = 0;
      --low;
    } else {
      bits[static_cast<std::size_t>(position)] = 1;
      --high;
    }
  }
  return BinaryWord(std::move(bits));
}

Permutation gsr_sample_two_step(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("deck size must be positive");
  // Cut: the number of heads in n fair flips is Binomial(n, 1/2).
  int cut = 0;
  std::uint64_t pool = 0;
  for (int j = 0; j < n; ++j) {
    if (j % 64 == 0) pool = rng();
    cut += static_cast<int>(pool & 1U);
    pool >>= 1;
  }
  return word_to_permutation(sequential_drop(cut, n - cut, rng));
}

namespace {

void walk_drop_tree(int low, int high, int position, std::vector<std::uint8_t>& bits, const Rational& mass,
                    std::map<BinaryWord, Rational>& out) {
  if (position < 0) {
    out.emplace(BinaryWord(bits), mass);
    return;
  }
  const int remaining = low + high;
  if (low > 0) {
    bits[static_cast<std::size_t>(position)] = 0;
    walk_drop_tree(low - 1, high, position - 1, bits, mass * Rational(low, remaining), out);
  }
  if (high > 0) {
    bits[static_cast<std::size_t>(position)] = 1;
    walk_drop_tree(low, high - 1, position - 1, bits, mass * Rational(high, remaining), out);
  }
}

}  // namespace

std::map<BinaryWord, Rational> drop_tree_probabilities(int low, int high) {
  if (low < 0 || high < 0 || low + high < 1) {
    throw std::invalid_argument("piles must be nonnegative with at least one card");
  }
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(low + high));
  std::map<BinaryWord, Rational> out;
  walk_drop_tree(low, high, low + high - 1, bits, Rational(1), out);
  return out;
}

}  // namespace riffle
