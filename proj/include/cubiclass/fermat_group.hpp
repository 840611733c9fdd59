#pragma once

// Automorphisms of the Fermat cubic: coordinate permutations composed with
// cube-root-of-unity scalings, taken modulo global scalars.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cubiclass/classify.hpp"

namespace cubiclass {

/// Sends basis vector v_i to omega^{exponents[i]} v_{perm[i]}, omega = exp(2 pi i / 3).
struct FermatGroupElement {
  std::vector<std::size_t> perm;
  std::vector<std::uint8_t> exponents;
};

struct FermatSpectrum {
  std::uint64_t projective_order = 0;
  /// Signature and eigenweight of a lift phi with phi^p = 1, when the order is prime.
  std::optional<std::pair<Signature, Residue>> diagonalized;
};

/// Eigenvalues are computed exactly as fractions of a full turn over 3 * lcm(cycle lengths).
FermatSpectrum fermat_element_spectrum(const FermatGroupElement& g);

/// Some element of prime projective order p whose (signature, weight) family equals
/// the given one, or nullopt. Supports 2 <= n <= 4.
std::optional<FermatGroupElement> fermat_membership_witness(int n, const Signature& sigma, Residue weight);

/// Throws std::invalid_argument for unsupported n.
bool fermat_membership(int n, const FamilyRecord& family);

}  // namespace cubiclass
