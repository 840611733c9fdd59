#pragma once

// Sparse multivariate polynomials over a prime field F_q, ordered by degrevlex.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cubiclass/admissibility.hpp"
#include "cubiclass/forms.hpp"

namespace cubiclass {

inline constexpr std::size_t kMaxPolyVars = 16;

struct Exponent {
  std::array<std::uint8_t, kMaxPolyVars> e{};
  std::uint16_t degree = 0;

  static Exponent variable(std::size_t var, unsigned power = 1);

  bool divides(const Exponent& other) const;
  bool coprime(const Exponent& other) const;
  /// Pure power of a single variable; returns that variable, or kMaxPolyVars.
  std::size_t pure_power_variable() const;

  friend Exponent operator*(const Exponent& a, const Exponent& b);
  /// Requires divisor.divides(*this).
  Exponent operator/(const Exponent& divisor) const;
  friend Exponent lcm(const Exponent& a, const Exponent& b);

  friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Negative, zero, positive as a <, =, > b in degrevlex.
int compare_degrevlex(const Exponent& a, const Exponent& b);

struct ExponentHash {
  std::size_t operator()(const Exponent& x) const;
};

enum class MonomialOrder { degrevlex };

struct Term {
  Exponent exp;
  std::uint32_t coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

class PolyModQ {
 public:
  PolyModQ(Prime q, std::size_t num_vars);

  /// Combines like terms, drops zeros and sorts descending.
  static PolyModQ from_terms(Prime q, std::size_t num_vars, std::vector<Term> terms);
  /// Terms must already be strictly descending with nonzero reduced coefficients.
  static PolyModQ from_sorted_terms(Prime q, std::size_t num_vars, std::vector<Term> terms);
  static PolyModQ from_quadratic(const QuadraticForm& form, Prime q);
  static PolyModQ from_cubic(const CubicForm& form, Prime q);

  Prime modulus() const { return q_; }
  std::size_t num_vars() const { return num_vars_; }
  MonomialOrder order() const { return MonomialOrder::degrevlex; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading() const { return terms_.front(); }

  bool is_homogeneous() const;
  void make_monic();
  std::uint32_t evaluate(const std::vector<std::uint32_t>& point) const;
  std::string to_string() const;

  friend bool operator==(const PolyModQ&, const PolyModQ&) = default;

 private:
  Prime q_;
  std::size_t num_vars_;
  std::vector<Term> terms_;
};

}  // namespace cubiclass
