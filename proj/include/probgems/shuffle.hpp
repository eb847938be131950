#pragma once

#include <cstdint>
#include <vector>

namespace probgems {

/// A deck of 2n cards; order()[i] is the card at position i+1 (top first).
class Deck {
 public:
  /// Cards 1..size from the top. size must be even and positive.
  explicit Deck(std::size_t size);
  /// Throws DomainError unless `order` is a permutation of 1..order.size()
  /// with even size.
  static Deck from_order(std::vector<std::uint32_t> order);

  std::size_t size() const { return order_.size(); }
  const std::vector<std::uint32_t>& order() const { return order_; }
  bool is_identity() const;

  bool operator==(const Deck&) const = default;

 private:
  Deck() = default;
  std::vector<std::uint32_t> order_;
};

/// Perfect in-shuffle: the card at position i moves to 2i mod (2n+1).
Deck perfect_in_shuffle(const Deck& deck);

/// Over-under shuffle: the top card starts a new pile, then the following
/// cards go alternately on top of and beneath it.
Deck monge_shuffle(const Deck& deck);

/// Multiplicative order of 2 modulo 2n+1 (the number of in-shuffles that
/// restore a deck of two_n cards).
std::uint64_t shuffle_order(std::uint64_t two_n);

/// Multiplicative order of a modulo m, gcd(a, m) = 1, via the prime
/// factorization of phi(m).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

/// Applies `shuffle` until the deck returns to the identity.
template <typename Shuffle>
std::uint64_t iteration_order(std::size_t size, Shuffle shuffle) {
  Deck deck(size);
  std::uint64_t k = 0;
  do {
    deck = shuffle(deck);
    ++k;
  } while (!deck.is_identity());
  return k;
}

/// Among primes 2n+1 <= limit (2n >= 2), how many need the full 2n shuffles,
/// i.e. have 2 as a primitive root. Statistics only.
struct PrimitiveRootStats {
  std::uint64_t primes = 0;
  std::uint64_t full_order = 0;
};
PrimitiveRootStats primitive_root_two_stats(std::uint64_t limit);

}  // namespace probgems
