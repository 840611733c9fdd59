#pragma once

// Modular arithmetic primitives and the admissible-prime criterion for
// automorphism orders of smooth cubic hypersurfaces.

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace cubiclass {

/// Largest dimension admissible_primes() will sieve for (bound 2^(n+1)).
inline constexpr int kMaxSieveDimension = 28;

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t value);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Reduce a signed integer into [0, m).
std::uint64_t reduce_mod(std::int64_t value, std::uint64_t m);

/// A primality-checked modulus.
class Prime {
 public:
  /// Throws std::invalid_argument if `value` is not prime.
  explicit Prime(std::uint64_t value);

  std::uint64_t value() const { return value_; }
  operator std::uint64_t() const { return value_; }

  friend bool operator==(Prime, Prime) = default;
  friend auto operator<=>(Prime, Prime) = default;

 private:
  std::uint64_t value_;
};

/// Multiplicative inverse of a unit mod p.
std::uint64_t inverse_mod(std::uint64_t a, Prime p);

/// Smallest l >= 1 with a^l = 1 mod p; nullopt when a = 0 mod p.
std::optional<std::uint64_t> mult_order(std::int64_t a, Prime p);

/// p = 2, or the order of -2 mod p is at most n + 2. Throws for n < 2.
bool is_admissible(Prime p, int n);

/// Every admissible prime in dimension n, ascending. All of them lie below 2^(n+1).
std::vector<Prime> admissible_primes(int n);

Prime max_admissible_prime(int n);

}  // namespace cubiclass
