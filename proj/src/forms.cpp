#include "cubiclass/forms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cubiclass {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

}  // namespace

Monomial::Monomial(std::size_t i, std::size_t j, std::size_t k) {
  if (i > 255 || j > 255 || k > 255) throw std::invalid_argument("variable index out of range");
  std::array<std::size_t, 3> v{i, j, k};
  std::sort(v.begin(), v.end());
  idx = {static_cast<std::uint8_t>(v[0]), static_cast<std::uint8_t>(v[1]), static_cast<std::uint8_t>(v[2])};
}

int Monomial::degree_in(std::size_t var) const {
  return static_cast<int>(std::count(idx.begin(), idx.end(), var));
}

Residue Monomial::weight(const Signature& sigma) const {
  const std::uint64_t p = sigma.prime().value();
  return static_cast<Residue>((std::uint64_t{sigma[idx[0]]} + sigma[idx[1]] + sigma[idx[2]]) % p);
}

QuadMonomial::QuadMonomial(std::size_t i, std::size_t j) {
  if (i > 255 || j > 255) throw std::invalid_argument("variable index out of range");
  idx = {static_cast<std::uint8_t>(std::min(i, j)), static_cast<std::uint8_t>(std::max(i, j))};
}

CubicForm::CubicForm(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  if (n + 2 > 255) throw std::invalid_argument("too many variables");
}

CubicForm CubicForm::from_terms(int n, const std::vector<std::pair<Monomial, std::int64_t>>& terms) {
  CubicForm f(n);
  for (const auto& [m, c] : terms) {
    f.check_monomial(m);
    if (c == 0) throw std::invalid_argument("zero coefficient in term list");
    if (!f.terms_.emplace(m, c).second) throw std::invalid_argument("duplicate monomial in term list");
  }
  return f;
}

void CubicForm::check_monomial(const Monomial& m) const {
  if (!(m.idx[0] <= m.idx[1] && m.idx[1] <= m.idx[2])) throw std::invalid_argument("monomial indices not sorted");
  if (m.idx[2] >= num_vars()) {
    throw std::invalid_argument("monomial uses x_" + std::to_string(m.idx[2]) + " but n = " + std::to_string(n_));
  }
}

void CubicForm::add(const Monomial& m, std::int64_t c) {
  check_monomial(m);
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

std::int64_t CubicForm::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

int CubicForm::degree_in(std::size_t var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(var));
  return d;
}

std::size_t s3_dimension(int n) {
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  const auto k = static_cast<std::size_t>(n) + 4;
  return k * (k - 1) * (k - 2) / 6;
}

std::vector<Monomial> all_cubic_monomials(int n) {
  const auto vars = static_cast<std::size_t>(n) + 2;
  std::vector<Monomial> out;
  out.reserve(s3_dimension(n));
  for (std::size_t i = 0; i < vars; ++i)
    for (std::size_t j = i; j < vars; ++j)
      for (std::size_t k = j; k < vars; ++k) out.emplace_back(i, j, k);
  return out;
}

EigenspaceBasis eigenspace_basis(const Signature& sigma, Residue weight) {
  const Residue a = static_cast<Residue>(weight % sigma.prime().value());
  EigenspaceBasis basis{sigma, a, {}};
  for (const auto& m : all_cubic_monomials(sigma.dimension())) {
    if (m.weight(sigma) == a) basis.monomials.push_back(m);
  }
  return basis;
}

std::optional<std::size_t> lemma_base_obstruction(const Signature& sigma, Residue weight) {
  const std::uint64_t p = sigma.prime().value();
  const std::uint64_t a = weight % p;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    bool has_square = false;
    for (std::size_t j = 0; j < sigma.size() && !has_square; ++j) {
      has_square = (2 * std::uint64_t{sigma[i]} + sigma[j]) % p == a;
    }
    if (!has_square) return i;
  }
  return std::nullopt;
}

bool lemma_base_feasible(const Signature& sigma, Residue weight) {
  return !lemma_base_obstruction(sigma, weight).has_value();
}

CubicForm fermat(int n) {
  CubicForm f(n);
  for (std::size_t i = 0; i < f.num_vars(); ++i) f.add(Monomial(i, i, i), 1);
  return f;
}

CubicForm klein(int n) {
  CubicForm f(n);
  const std::size_t vars = f.num_vars();
  for (std::size_t i = 0; i < vars; ++i) f.add(Monomial(i, i, (i + 1) % vars), 1);
  return f;
}

std::pair<Prime, Signature> klein_signature(int n) {
  const Prime p = max_admissible_prime(n);
  const auto vars = static_cast<std::uint64_t>(n) + 2;
  if (p.value() == 2 || *mult_order(-2, p) != vars) {
    throw std::domain_error("no prime of order " + std::to_string(vars) + " for -2 is maximal in dimension " +
                            std::to_string(n));
  }
  std::vector<std::int64_t> values;
  std::uint64_t x = 1;
  for (std::uint64_t i = 0; i < vars; ++i) {
    values.push_back(static_cast<std::int64_t>(x));
    x = mul_mod(x, p.value() - 2, p.value());
  }
  return {p, Signature(p, values)};
}

std::optional<Residue> weight_of(const CubicForm& form, const Signature& sigma) {
  if (form.num_vars() != sigma.size()) throw SignatureMismatch("form and signature have different variable counts");
  std::optional<Residue> w;
  for (const auto& [m, c] : form.terms()) {
    const Residue mw = m.weight(sigma);
    if (w && *w != mw) return std::nullopt;
    w = mw;
  }
  return w;
}

std::vector<QuadraticForm> partials(const CubicForm& form) {
  const std::size_t vars = form.num_vars();
  std::vector<QuadraticForm> out(vars, QuadraticForm{vars, {}});
  for (const auto& [m, c] : form.terms()) {
    for (std::size_t var = 0; var < vars; ++var) {
      const int d = m.degree_in(var);
      if (d == 0) continue;
      // Remove one copy of var from the triple.
      std::array<std::size_t, 2> rest{};
      std::size_t r = 0;
      bool removed = false;
      for (auto v : m.idx) {
        if (!removed && v == var) {
          removed = true;
          continue;
        }
        rest[r++] = v;
      }
      const QuadMonomial q(rest[0], rest[1]);
      auto& slot = out[var].terms[q];
      slot = checked_add(slot, checked_mul(c, d));
      if (slot == 0) out[var].terms.erase(q);
    }
  }
  return out;
}

CubicForm form_from_basis(int n, const std::vector<Monomial>& basis, const std::vector<std::int64_t>& coeffs) {
  if (basis.size() != coeffs.size()) throw std::invalid_argument("basis and coefficient lengths differ");
  CubicForm f(n);
  for (std::size_t i = 0; i < basis.size(); ++i) f.add(basis[i], coeffs[i]);
  return f;
}

CubicForm relabel(const CubicForm& form, const std::vector<std::size_t>& perm) {
  if (perm.size() != form.num_vars()) throw std::invalid_argument("permutation length does not match form");
  CubicForm out(form.dimension());
  for (const auto& [m, c] : form.terms()) out.add(Monomial(perm[m.idx[0]], perm[m.idx[1]], perm[m.idx[2]]), c);
  return out;
}

bool is_klein_up_to_relabeling(const CubicForm& form) {
  const std::size_t vars = form.num_vars();
  if (form.terms().size() != vars) return false;
  std::vector<std::size_t> next(vars, vars);
  for (const auto& [m, c] : form.terms()) {
    if (c != 1) return false;
    // Shape x_i^2 x_j with i != j.
    std::size_t sq, other;
    if (m.idx[0] == m.idx[1] && m.idx[1] != m.idx[2]) {
      sq = m.idx[0];
      other = m.idx[2];
    } else if (m.idx[1] == m.idx[2] && m.idx[0] != m.idx[1]) {
      sq = m.idx[1];
      other = m.idx[0];
    } else {
      return false;
    }
    if (next[sq] != vars) return false;
    next[sq] = other;
  }
  std::size_t at = 0;
  for (std::size_t step = 1; step <= vars; ++step) {
    at = next[at];
    if (at == 0) return step == vars;
  }
  return false;
}

}  // namespace cubiclass
