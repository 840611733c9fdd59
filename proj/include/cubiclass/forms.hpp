#pragma once

// Cubic monomials and forms in x_0, ..., x_{n+1}, eigenspaces of a diagonal
// automorphism on S^3(V), and the two named hypersurfaces (Fermat and Klein).

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cubiclass/signature.hpp"

namespace cubiclass {

/// x_i x_j x_k with i <= j <= k.
struct Monomial {
  std::array<std::uint8_t, 3> idx{};

  Monomial() = default;
  /// Sorts the indices.
  Monomial(std::size_t i, std::size_t j, std::size_t k);

  /// Exponent of x_var.
  int degree_in(std::size_t var) const;
  Residue weight(const Signature& sigma) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// x_i x_j with i <= j.
struct QuadMonomial {
  std::array<std::uint8_t, 2> idx{};

  QuadMonomial() = default;
  QuadMonomial(std::size_t i, std::size_t j);

  friend auto operator<=>(const QuadMonomial&, const QuadMonomial&) = default;
  friend bool operator==(const QuadMonomial&, const QuadMonomial&) = default;
};

/// Sparse integer cubic form in n + 2 variables; zero coefficients are never stored.
class CubicForm {
 public:
  explicit CubicForm(int n);

  /// Throws std::invalid_argument on duplicate or out-of-range monomials, or a zero coefficient.
  static CubicForm from_terms(int n, const std::vector<std::pair<Monomial, std::int64_t>>& terms);

  int dimension() const { return n_; }
  std::size_t num_vars() const { return static_cast<std::size_t>(n_) + 2; }
  const std::map<Monomial, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c to the coefficient of m (with overflow checks); drops zero results.
  void add(const Monomial& m, std::int64_t c);
  std::int64_t coefficient(const Monomial& m) const;

  /// Highest exponent of x_var over all terms.
  int degree_in(std::size_t var) const;

  friend bool operator==(const CubicForm&, const CubicForm&) = default;

 private:
  void check_monomial(const Monomial& m) const;

  int n_;
  std::map<Monomial, std::int64_t> terms_;
};

struct QuadraticForm {
  std::size_t num_vars = 0;
  std::map<QuadMonomial, std::int64_t> terms;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

/// Monomials of weight `weight` under sigma, in lexicographic order.
struct EigenspaceBasis {
  Signature sigma;
  Residue weight;
  std::vector<Monomial> monomials;

  std::size_t dimension() const { return monomials.size(); }
};

/// C(n + 4, 3).
std::size_t s3_dimension(int n);

/// Every cubic monomial in n + 2 variables, lexicographic.
std::vector<Monomial> all_cubic_monomials(int n);

EigenspaceBasis eigenspace_basis(const Signature& sigma, Residue weight);

/// First variable i with no weight-`weight` monomial of degree >= 2 in x_i, or nullopt.
///
/// Any form in an eigenspace with such a variable is singular at the i-th coordinate point.
std::optional<std::size_t> lemma_base_obstruction(const Signature& sigma, Residue weight);
bool lemma_base_feasible(const Signature& sigma, Residue weight);

CubicForm fermat(int n);

/// x_0^2 x_1 + x_1^2 x_2 + ... + x_{n+1}^2 x_0.
CubicForm klein(int n);

/// The prime with (-2)^(n+2) = 1 maximal among admissible primes, and the signature
/// ((-2)^i mod p). Throws std::domain_error when the maximal admissible prime has
/// a smaller order of -2.
std::pair<Prime, Signature> klein_signature(int n);

/// Common weight of every term, or nullopt for mixed weights or the zero form.
std::optional<Residue> weight_of(const CubicForm& form, const Signature& sigma);

std::vector<QuadraticForm> partials(const CubicForm& form);

/// Form with the given coefficients on a basis of monomials.
CubicForm form_from_basis(int n, const std::vector<Monomial>& basis, const std::vector<std::int64_t>& coeffs);

/// Relabels variables: x_i becomes x_{perm[i]}.
CubicForm relabel(const CubicForm& form, const std::vector<std::size_t>& perm);

/// True when the form is sum x_i^2 x_{c(i)} with unit coefficients for a single
/// (n + 2)-cycle c, i.e. the Klein form after renaming variables.
bool is_klein_up_to_relabeling(const CubicForm& form);

}  // namespace cubiclass
