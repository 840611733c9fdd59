#pragma once

// Certified smoothness of cubic hypersurfaces through the Jacobian criterion.
//
// The partials of F cut out the singular locus. Over F_q that locus is empty in
// projective space exactly when the Jacobian ideal contains a power of every
// variable, which a Groebner basis exposes as pure-power leading terms. Smooth
// reduction at one prime q implies smoothness over the rationals.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cubiclass/forms.hpp"
#include "cubiclass/polynomial.hpp"

namespace cubiclass {

inline const std::vector<std::uint64_t> kDefaultModuli = {10007, 30011, 65537, 104729};

struct SmoothnessCertificate {
  std::uint64_t modulus = 0;
  /// pure_powers[i] = d with x_i^d a leading monomial of the reduced basis.
  std::vector<unsigned> pure_powers;
  std::size_t basis_size = 0;

  friend bool operator==(const SmoothnessCertificate&, const SmoothnessCertificate&) = default;
};

/// A projective point where every partial vanishes.
struct SingularWitness {
  std::vector<std::int64_t> point;
};

std::vector<PolyModQ> jacobian_generators(const CubicForm& form, Prime q);

/// Throws std::invalid_argument for q in {2, 3} or when F vanishes mod q.
std::optional<SmoothnessCertificate> is_smooth_mod_q(const CubicForm& form, Prime q);

/// First modulus that certifies wins; nullopt means inconclusive, never singular.
/// Moduli where F reduces to zero are skipped. Throws on an empty list.
std::optional<SmoothnessCertificate> certify_smooth_over_q(const CubicForm& form,
                                                           const std::vector<std::uint64_t>& moduli = kDefaultModuli);

/// Coordinate point e_i for the first variable of degree < 2 in F.
std::optional<SingularWitness> singular_point_from_lemma_base(const CubicForm& form);

/// True when every partial of F vanishes at the integer point.
bool partials_vanish_at(const CubicForm& form, const std::vector<std::int64_t>& point);

struct SmoothMember {
  std::vector<std::int64_t> coefficients;  // aligned with the eigenspace basis
  CubicForm form;
  SmoothnessCertificate certificate;
  int trial = 0;  // 1-based; trial 1 is all ones
};

inline constexpr std::int64_t kMaxRandomCoefficient = 50;

/// All-ones first, then seeded uniform coefficients in [1, 50]. Short-circuits to
/// nullopt when the eigenspace fails the degree-2 test.
std::optional<SmoothMember> find_smooth_member(const Signature& sigma, Residue weight, int trials, std::uint64_t seed,
                                               const std::vector<std::uint64_t>& moduli = kDefaultModuli);

}  // namespace cubiclass
