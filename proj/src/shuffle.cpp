#include "probgems/shuffle.hpp"

#include <algorithm>
#include <numeric>

#include "probgems/errors.hpp"

namespace probgems {

Deck::Deck(std::size_t size) : order_(size) {
  if (size == 0 || size % 2 != 0) throw DomainError("deck size must be even and positive");
  std::iota(order_.begin(), order_.end(), 1u);
}

Deck Deck::from_order(std::vector<std::uint32_t> order) {
  if (order.empty() || order.size() % 2 != 0) throw DomainError("deck size must be even and positive");
  std::vector<bool> seen(order.size() + 1, false);
  for (auto card : order) {
    if (card < 1 || card > order.size() || seen[card]) throw DomainError("deck order is not a permutation");
    seen[card] = true;
  }
  Deck d;
  d.order_ = std::move(order);
  return d;
}

bool Deck::is_identity() const {
  for (std::size_t i = 0; i < order_.size(); ++i)
    if (order_[i] != i + 1) return false;
  return true;
}

Deck perfect_in_shuffle(const Deck& deck) {
  const std::size_t size = deck.size();
  const std::size_t modulus = size + 1;
  std::vector<std::uint32_t> next(size);
  for (std::size_t i = 1; i <= size; ++i) next[(2 * i) % modulus - 1] = deck.order()[i - 1];
  return Deck::from_order(std::move(next));
}

Deck monge_shuffle(const Deck& deck) {
  const auto& src = deck.order();
  const std::size_t size = src.size();
  // Card 1 lands in the middle; even-indexed deals stack upward, odd ones downward.
  std::vector<std::uint32_t> next(size);
  const std::size_t mid = size / 2;  // 0-based slot of the first card
  next[mid] = src[0];
  for (std::size_t i = 1; i < size; ++i) {
    if (i % 2 == 1)
      next[mid - (i + 1) / 2] = src[i];  // on top
    else
      next[mid + i / 2] = src[i];  // beneath
  }
  return Deck::from_order(std::move(next));
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
    if (n % f != 0) continue;
    int e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    out.emplace_back(f, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m < 2) throw DomainError("multiplicative_order: modulus must be at least 2");
  if (std::gcd(a, m) != 1) throw DomainError("multiplicative_order: base not invertible");
  std::uint64_t phi = m;
  for (auto [prime, e] : factorize(m)) phi = phi / prime * (prime - 1);
  // The order divides phi: strip prime factors while the power stays 1.
  std::uint64_t order = phi;
  for (auto [prime, e] : factorize(phi)) {
    for (int i = 0; i < e && order % prime == 0; ++i) {
      if (pow_mod(a, order / prime, m) != 1) break;
      order /= prime;
    }
  }
  return order;
}

std::uint64_t shuffle_order(std::uint64_t two_n) {
  if (two_n < 2 || two_n % 2 != 0) throw DomainError("shuffle_order: deck size must be even and positive");
  return multiplicative_order(2, two_n + 1);
}

PrimitiveRootStats primitive_root_two_stats(std::uint64_t limit) {
  PrimitiveRootStats stats;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    if (i < 3) continue;
    ++stats.primes;
    if (multiplicative_order(2, i) == i - 1) ++stats.full_order;
  }
  return stats;
}

}  // namespace probgems
