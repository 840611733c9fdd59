#pragma once

// Buchberger's algorithm over F_q with the Gebauer-Moeller pair criteria.

#include <cstddef>
#include <vector>

#include "cubiclass/polynomial.hpp"

namespace cubiclass {

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

/// Reduced Groebner basis in degrevlex, monic, sorted by ascending leading term.
/// Throws std::invalid_argument when generators disagree on modulus or variable count.
std::vector<PolyModQ> groebner_basis(const std::vector<PolyModQ>& generators, GroebnerStats* stats = nullptr);

/// Full remainder of f on division by `divisors` (each must be monic).
PolyModQ normal_form(const PolyModQ& f, const std::vector<PolyModQ>& divisors);

}  // namespace cubiclass
