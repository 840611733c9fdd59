#pragma once

// Signatures of diagonal automorphisms and the affine-permutation action
// sigma -> a * pi(sigma) + b * (1, ..., 1) that identifies conjugate cyclic groups.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cubiclass/admissibility.hpp"

namespace cubiclass {

using Residue = std::uint32_t;

/// Exponent vector of x_i -> xi^{sigma_i} x_i, with n + 2 entries reduced mod p.
class Signature {
 public:
  /// Entries are reduced mod p; throws when fewer than four entries are given.
  Signature(Prime p, const std::vector<std::int64_t>& values);

  /// Values must already lie in [0, p).
  static Signature from_residues(Prime p, std::vector<Residue> values);
  static Signature zero(Prime p, int n);

  Prime prime() const { return p_; }
  int dimension() const { return static_cast<int>(values_.size()) - 2; }
  std::size_t size() const { return values_.size(); }
  const std::vector<Residue>& values() const { return values_; }
  Residue operator[](std::size_t i) const { return values_[i]; }

  bool is_zero() const;
  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend bool operator<(const Signature& a, const Signature& b) {
    if (a.p_ != b.p_) return a.p_ < b.p_;
    return a.values_ < b.values_;
  }

 private:
  Signature(Prime p, std::vector<Residue> values, bool) : p_(p), values_(std::move(values)) {}

  Prime p_;
  std::vector<Residue> values_;
};

/// sigma -> scale * pi(sigma) + shift. `perm[j]` is the slot that entry j moves to.
struct AffinePermAction {
  Residue scale = 1;
  Residue shift = 0;
  std::vector<std::size_t> perm;

  static AffinePermAction identity(std::size_t length);
};

/// h o g: applying the result equals applying g, then h.
AffinePermAction compose(const AffinePermAction& h, const AffinePermAction& g, Prime p);

class SignatureMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Entry perm[j] of the result is scale * sigma_j + shift.
Signature act(const Signature& sigma, const AffinePermAction& g);

/// Lexicographically least sort(a * sigma + b) over a in [1, p), b in [0, p).
Signature canonicalize(const Signature& sigma);

/// Lexicographically least sort(a * sigma) over a in [1, p); the translation is kept.
///
/// Pairs (sigma, weight 0) are identified exactly by this form, and it is the
/// representative used for classified families when p != 3.
Signature canonicalize_scaling(const Signature& sigma);

/// Lexicographically least sort(sigma + b) over b; scaling is kept.
Signature canonicalize_translation(const Signature& sigma);

bool equivalent(const Signature& lhs, const Signature& rhs);

/// sigma + b with 3b = -weight mod p, so the translated generator fixes the form.
/// Throws std::domain_error for p = 3.
Signature normalize_weight(const Signature& sigma, Residue weight);

enum class EnumerationStrategy { exhaustive, chain_pruned };

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

/// Number of nondecreasing vectors of length n + 2 over [0, p), saturating at UINT64_MAX.
std::uint64_t multiset_count(Prime p, int n);

/// Emits the canonical representative of every nonzero class exactly once, in
/// lexicographic order.
///
/// chain_pruned (p > 3) keeps only classes with a translate whose nonzero values
/// form a union of full cosets of <-2> in the multiplicative group.
void for_each_orbit(Prime p, int n, EnumerationStrategy strategy, std::uint64_t budget,
                    const std::function<void(const Signature&)>& emit);

std::vector<Signature> enumerate_orbits(Prime p, int n, EnumerationStrategy strategy,
                                        std::uint64_t budget = kDefaultEnumerationBudget);

/// Weight-0 representatives closed under v -> -2v, each canonical under scaling.
/// Requires p > 3. Sorted and free of duplicates.
std::vector<Signature> chain_closed_signatures(Prime p, int n);

}  // namespace cubiclass
