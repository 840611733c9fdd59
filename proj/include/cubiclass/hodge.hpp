#pragma once

// Characters of a diagonal automorphism on graded pieces of the Jacobian ring
// S / (dF/dx_0, ..., dF/dx_{n+1}), and the tangent spectrum of the Klein
// intermediate jacobians read off from them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubiclass/forms.hpp"
#include "cubiclass/smoothness.hpp"

namespace cubiclass {

/// Multiset of exponents e, standing for the eigenvalues xi^e.
struct SpectrumSet {
  Prime p;
  std::vector<Residue> exponents;  // sorted

  std::size_t size() const { return exponents.size(); }
  SpectrumSet negated() const;
  bool multiplicity_free() const;

  friend bool operator==(const SpectrumSet&, const SpectrumSet&) = default;
};

SpectrumSet make_spectrum(Prime p, std::vector<Residue> exponents);

class BadReduction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Weights of all degree-d monomials minus the weights of the degree-d piece of the
/// Jacobian ideal; the ideal's weight-w part has dimension equal to the F_q-rank of
/// {m * dF/dx_i : deg m = d - 2} restricted to weight w.
///
/// F must be smooth and satisfy weight_of(F, sigma) = 0; throws std::invalid_argument otherwise
/// for the weight condition.
SpectrumSet jacobian_ring_character(const CubicForm& form, const Signature& sigma, unsigned degree, Prime q);

/// Same computation at two moduli; throws BadReduction when they disagree.
SpectrumSet jacobian_ring_character_checked(const CubicForm& form, const Signature& sigma, unsigned degree,
                                            Prime q1, Prime q2);

enum class SpectrumConvention { raw, negated };

std::string to_string(SpectrumConvention c);

struct KleinSpectrum {
  int n;
  unsigned degree;         // 1 for n = 3, 2 for n = 5
  SpectrumSet raw;         // the Jacobian-ring character
  SpectrumSet negated;     // its conjugate
  std::optional<SpectrumConvention> matched;  // which one equals the reference set, if any

  const SpectrumSet& tangent() const { return matched == SpectrumConvention::negated ? negated : raw; }
};

/// Published tangent spectrum of the order-43 automorphism of the Klein 5-fold.
const std::vector<Residue>& klein_fivefold_reference_spectrum();

/// n in {3, 5}; throws std::invalid_argument otherwise.
KleinSpectrum klein_tangent_spectrum(int n);

/// {m * e mod p} equals S as multisets. Throws for m = 0 mod p.
bool is_stable_under(const SpectrumSet& spectrum, std::int64_t multiplier);

}  // namespace cubiclass
