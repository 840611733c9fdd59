#include "cubiclass/smoothness.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "cubiclass/groebner.hpp"

namespace cubiclass {

std::vector<PolyModQ> jacobian_generators(const CubicForm& form, Prime q) {
  std::vector<PolyModQ> gens;
  for (const auto& d : partials(form)) gens.push_back(PolyModQ::from_quadratic(d, q));
  return gens;
}

std::optional<SmoothnessCertificate> is_smooth_mod_q(const CubicForm& form, Prime q) {
  if (q.value() == 2 || q.value() == 3) throw std::invalid_argument("smoothness modulus must not be 2 or 3");
  if (PolyModQ::from_cubic(form, q).is_zero()) {
    throw std::invalid_argument("form vanishes mod " + std::to_string(q.value()));
  }
  const auto basis = groebner_basis(jacobian_generators(form, q));
  const std::size_t vars = form.num_vars();
  std::vector<unsigned> powers(vars, 0);
  for (const auto& g : basis) {
    const auto& lt = g.leading().exp;
    const std::size_t v = lt.pure_power_variable();
    if (v >= vars) continue;
    if (powers[v] == 0 || lt.degree < powers[v]) powers[v] = lt.degree;
  }
  for (unsigned d : powers) {
    if (d == 0) return std::nullopt;
  }
  return SmoothnessCertificate{q.value(), std::move(powers), basis.size()};
}

std::optional<SmoothnessCertificate> certify_smooth_over_q(const CubicForm& form,
                                                           const std::vector<std::uint64_t>& moduli) {
  if (moduli.empty()) throw std::invalid_argument("empty modulus list");
  for (std::uint64_t value : moduli) {
    const Prime q(value);
    if (PolyModQ::from_cubic(form, q).is_zero()) continue;
    if (auto cert = is_smooth_mod_q(form, q)) return cert;
  }
  return std::nullopt;
}

std::optional<SingularWitness> singular_point_from_lemma_base(const CubicForm& form) {
  for (std::size_t i = 0; i < form.num_vars(); ++i) {
    if (form.degree_in(i) < 2) {
      SingularWitness w{std::vector<std::int64_t>(form.num_vars(), 0)};
      w.point[i] = 1;
      return w;
    }
  }
  return std::nullopt;
}

bool partials_vanish_at(const CubicForm& form, const std::vector<std::int64_t>& point) {
  if (point.size() != form.num_vars()) throw std::invalid_argument("point has the wrong number of coordinates");
  for (const auto& d : partials(form)) {
    __int128 sum = 0;
    for (const auto& [m, c] : d.terms) sum += static_cast<__int128>(c) * point[m.idx[0]] * point[m.idx[1]];
    if (sum != 0) return false;
  }
  return true;
}

std::optional<SmoothMember> find_smooth_member(const Signature& sigma, Residue weight, int trials, std::uint64_t seed,
                                               const std::vector<std::uint64_t>& moduli) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (!lemma_base_feasible(sigma, weight)) return std::nullopt;
  const auto basis = eigenspace_basis(sigma, weight);
  // mt19937_64 output is fixed by the standard; the modulo mapping keeps draws portable.
  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> coeffs(basis.monomials.size(), 1);
  for (int trial = 1; trial <= trials; ++trial) {
    if (trial > 1) {
      for (auto& c : coeffs) c = static_cast<std::int64_t>(rng() % kMaxRandomCoefficient) + 1;
    }
    CubicForm f = form_from_basis(sigma.dimension(), basis.monomials, coeffs);
    if (auto cert = certify_smooth_over_q(f, moduli)) {
      return SmoothMember{coeffs, std::move(f), std::move(*cert), trial};
    }
  }
  return std::nullopt;
}

}  // namespace cubiclass
