#include "cubiclass/admissibility.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace cubiclass {

namespace {

void require_dimension(int n) {
  if (n < 2) {
    throw std::invalid_argument("dimension must be at least 2, got " + std::to_string(n));
  }
}

// Distinct prime factors by trial division; the inputs here are p - 1 for small p.
std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> factors;
  for (std::uint64_t d = 2; d * d <= m; d += (d == 2 ? 1 : 2)) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  return factors;
}

}  // namespace

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

std::uint64_t reduce_mod(std::int64_t value, std::uint64_t m) {
  const auto sm = static_cast<std::int64_t>(m);
  std::int64_t r = value % sm;
  if (r < 0) r += sm;
  return static_cast<std::uint64_t>(r);
}

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  // These witnesses are exhaustive below 2^64.
  static constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t w : kWitnesses) {
    if (value % w == 0) return value == w;
  }
  std::uint64_t d = value - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t w : kWitnesses) {
    std::uint64_t x = pow_mod(w, d, value);
    if (x == 1 || x == value - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, value);
      if (x == value - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
  if (!is_prime(value)) {
    throw std::invalid_argument(std::to_string(value) + " is not prime");
  }
}

std::uint64_t inverse_mod(std::uint64_t a, Prime p) {
  a %= p.value();
  if (a == 0) throw std::domain_error("zero has no inverse mod " + std::to_string(p.value()));
  return pow_mod(a, p.value() - 2, p.value());
}

std::optional<std::uint64_t> mult_order(std::int64_t a, Prime p) {
  const std::uint64_t m = p.value();
  const std::uint64_t x = reduce_mod(a, m);
  if (x == 0) return std::nullopt;
  if (m < 64) {
    std::uint64_t acc = x;
    for (std::uint64_t l = 1;; ++l) {
      if (acc == 1) return l;
      acc = mul_mod(acc, x, m);
    }
  }
  // Strip each prime factor of p - 1 while the power stays 1.
  std::uint64_t order = m - 1;
  for (std::uint64_t q : prime_factors(m - 1)) {
    while (order % q == 0 && pow_mod(x, order / q, m) == 1) order /= q;
  }
  return order;
}

bool is_admissible(Prime p, int n) {
  require_dimension(n);
  if (p.value() == 2) return true;
  return *mult_order(-2, p) <= static_cast<std::uint64_t>(n) + 2;
}

std::vector<Prime> admissible_primes(int n) {
  require_dimension(n);
  if (n > kMaxSieveDimension) {
    throw std::invalid_argument("admissible_primes supports n <= " + std::to_string(kMaxSieveDimension));
  }
  const std::uint64_t bound = std::uint64_t{1} << (n + 1);
  std::vector<bool> composite(bound, false);
  std::vector<Prime> result;
  for (std::uint64_t i = 2; i < bound; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j < bound; j += i) composite[j] = true;
    // order of -2 is at most n + 2 iff some power (-2)^l, l <= n + 2, is 1
    bool admissible = i == 2;
    std::uint64_t acc = 1;
    for (int l = 1; l <= n + 2 && !admissible; ++l) {
      acc = acc * (i - 2 % i) % i;
      admissible = acc == 1;
    }
    if (admissible) result.emplace_back(i);
  }
  return result;
}

Prime max_admissible_prime(int n) { return admissible_primes(n).back(); }

}  // namespace cubiclass
