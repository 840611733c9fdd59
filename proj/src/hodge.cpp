#include "cubiclass/hodge.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "cubiclass/polynomial.hpp"

namespace cubiclass {

namespace {

void monomials_of_degree(std::size_t vars, unsigned degree, std::size_t from, Exponent& cur,
                         std::vector<Exponent>& out) {
  if (degree == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < vars; ++i) {
    ++cur.e[i];
    ++cur.degree;
    monomials_of_degree(vars, degree - 1, i, cur, out);
    --cur.e[i];
    --cur.degree;
  }
}

std::vector<Exponent> monomials_of_degree(std::size_t vars, unsigned degree) {
  std::vector<Exponent> out;
  Exponent cur;
  monomials_of_degree(vars, degree, 0, cur, out);
  return out;
}

Residue weight_of_exponent(const Exponent& x, const Signature& sigma) {
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) w += static_cast<std::uint64_t>(x.e[i]) * sigma[i];
  return static_cast<Residue>(w % sigma.prime().value());
}

// Row echelon rank over F_q; rows are dense vectors of residues.
std::size_t rank_mod_q(std::vector<std::vector<std::uint32_t>> rows, std::size_t cols, Prime q) {
  const std::uint64_t m = q.value();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint64_t inv = inverse_mod(rows[rank][c], q);
    for (auto& v : rows[rank]) v = static_cast<std::uint32_t>(v * inv % m);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::uint64_t f = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) {
        rows[r][k] = static_cast<std::uint32_t>((rows[r][k] + (m - f) * rows[rank][k]) % m);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

SpectrumSet SpectrumSet::negated() const {
  std::vector<Residue> out;
  out.reserve(exponents.size());
  const auto m = p.value();
  for (Residue e : exponents) out.push_back(static_cast<Residue>((m - e) % m));
  return make_spectrum(p, std::move(out));
}

bool SpectrumSet::multiplicity_free() const {
  return std::adjacent_find(exponents.begin(), exponents.end()) == exponents.end();
}

SpectrumSet make_spectrum(Prime p, std::vector<Residue> exponents) {
  for (auto& e : exponents) e = static_cast<Residue>(e % p.value());
  std::sort(exponents.begin(), exponents.end());
  return SpectrumSet{p, std::move(exponents)};
}

SpectrumSet jacobian_ring_character(const CubicForm& form, const Signature& sigma, unsigned degree, Prime q) {
  const std::size_t vars = form.num_vars();
  if (sigma.size() != vars) throw SignatureMismatch("signature length does not match form");
  if (vars > kMaxPolyVars) throw std::invalid_argument("too many variables");
  const auto w = weight_of(form, sigma);
  if (!w || *w != 0) throw std::invalid_argument("form is not invariant: mixed or nonzero eigenweight");

  const auto top = monomials_of_degree(vars, degree);
  std::map<Residue, std::vector<std::size_t>> columns_by_weight;  // weight -> indices into top
  std::unordered_map<Exponent, std::size_t, ExponentHash> column_of;
  for (std::size_t i = 0; i < top.size(); ++i) {
    auto& cols = columns_by_weight[weight_of_exponent(top[i], sigma)];
    column_of.emplace(top[i], cols.size());
    cols.push_back(i);
  }

  std::map<Residue, std::vector<std::vector<std::uint32_t>>> rows_by_weight;
  if (degree >= 2) {
    const auto gens = jacobian_generators(form, q);
    const auto multipliers = monomials_of_degree(vars, degree - 2);
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      for (const auto& mult : multipliers) {
        const Residue rw = weight_of_exponent(mult * g.leading().exp, sigma);
        std::vector<std::uint32_t> row(columns_by_weight[rw].size(), 0);
        for (const auto& t : g.terms()) row[column_of.at(mult * t.exp)] = t.coeff;
        rows_by_weight[rw].push_back(std::move(row));
      }
    }
  }

  std::vector<Residue> exponents;
  for (const auto& [wt, cols] : columns_by_weight) {
    std::size_t rank = 0;
    if (auto it = rows_by_weight.find(wt); it != rows_by_weight.end()) {
      rank = rank_mod_q(std::move(it->second), cols.size(), q);
    }
    exponents.insert(exponents.end(), cols.size() - rank, wt);
  }
  return make_spectrum(sigma.prime(), std::move(exponents));
}

SpectrumSet jacobian_ring_character_checked(const CubicForm& form, const Signature& sigma, unsigned degree,
                                            Prime q1, Prime q2) {
  auto a = jacobian_ring_character(form, sigma, degree, q1);
  auto b = jacobian_ring_character(form, sigma, degree, q2);
  if (!(a == b)) {
    throw BadReduction("character differs between moduli " + std::to_string(q1.value()) + " and " +
                       std::to_string(q2.value()) + "; retry with other primes");
  }
  return a;
}

std::string to_string(SpectrumConvention c) { return c == SpectrumConvention::raw ? "raw" : "negated"; }

const std::vector<Residue>& klein_fivefold_reference_spectrum() {
  static const std::vector<Residue> ref = {2,  3,  5,  8,  9,  12, 13, 14, 15, 17, 19,
                                           20, 22, 25, 27, 32, 33, 36, 37, 39, 42};
  return ref;
}

KleinSpectrum klein_tangent_spectrum(int n) {
  if (n != 3 && n != 5) throw std::invalid_argument("Klein tangent spectrum is defined here for n = 3 or 5");
  const unsigned degree = n == 3 ? 1 : 2;
  const auto [p, sigma] = klein_signature(n);
  const auto form = klein(n);
  const Prime q1(kDefaultModuli[0]), q2(kDefaultModuli[1]);
  auto raw = jacobian_ring_character_checked(form, sigma, degree, q1, q2);
  auto neg = raw.negated();
  KleinSpectrum out{n, degree, raw, neg, std::nullopt};
  if (n == 5) {
    const auto ref = make_spectrum(p, klein_fivefold_reference_spectrum());
    if (raw == ref) out.matched = SpectrumConvention::raw;
    else if (neg == ref) out.matched = SpectrumConvention::negated;
  }
  return out;
}

bool is_stable_under(const SpectrumSet& spectrum, std::int64_t multiplier) {
  const std::uint64_t m = reduce_mod(multiplier, spectrum.p.value());
  if (m == 0) throw std::invalid_argument("multiplier must be a unit mod p");
  std::vector<Residue> scaled;
  scaled.reserve(spectrum.size());
  for (Residue e : spectrum.exponents) scaled.push_back(static_cast<Residue>(m * e % spectrum.p.value()));
  return make_spectrum(spectrum.p, std::move(scaled)) == spectrum;
}

}  // namespace cubiclass
