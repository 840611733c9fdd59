#include "cubiclass/fermat_group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace cubiclass {

namespace {

using FamilyKey = std::tuple<std::uint64_t, std::vector<Residue>, Residue>;

void require_supported(int n) {
  if (n < 2 || n > 4) throw std::invalid_argument("Fermat membership supports 2 <= n <= 4, got " + std::to_string(n));
}

std::vector<std::vector<std::size_t>> cycles_of(const std::vector<std::size_t>& perm) {
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t at = start; !seen[at]; at = perm[at]) {
      seen[at] = true;
      cycle.push_back(at);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

// Every family realized by a prime-order element, with one witness each.
const std::map<FamilyKey, FermatGroupElement>& fermat_families(int n) {
  static std::mutex mutex;
  static std::map<int, std::map<FamilyKey, FermatGroupElement>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(n);
  if (!inserted) return it->second;
  const std::size_t vars = static_cast<std::size_t>(n) + 2;
  FermatGroupElement g;
  g.perm.resize(vars);
  std::iota(g.perm.begin(), g.perm.end(), 0);
  do {
    // Exponent vectors with exponents[0] = 0 represent the quotient by global scalars.
    g.exponents.assign(vars, 0);
    while (true) {
      const auto spectrum = fermat_element_spectrum(g);
      if (spectrum.diagonalized) {
        const auto& [sigma, weight] = *spectrum.diagonalized;
        auto key = canonical_family(sigma, weight);
        it->second.try_emplace(FamilyKey{sigma.prime().value(), key.first.values(), key.second}, g);
      }
      std::size_t i = vars;
      while (i > 1 && g.exponents[i - 1] == 2) g.exponents[--i] = 0;
      if (i <= 1) break;
      ++g.exponents[i - 1];
    }
  } while (std::next_permutation(g.perm.begin(), g.perm.end()));
  return it->second;
}

}  // namespace

FermatSpectrum fermat_element_spectrum(const FermatGroupElement& g) {
  const std::size_t vars = g.perm.size();
  if (g.exponents.size() != vars) throw std::invalid_argument("exponent vector length mismatch");
  const auto cycles = cycles_of(g.perm);
  std::uint64_t l = 1;
  for (const auto& c : cycles) l = std::lcm(l, static_cast<std::uint64_t>(c.size()));
  const std::uint64_t denom = 3 * l;

  // A cycle of length L with exponent sum s has eigenvalues exp(2 pi i (s + 3k) / (3L)).
  std::vector<std::uint64_t> turns;
  for (const auto& c : cycles) {
    std::uint64_t s = 0;
    for (std::size_t i : c) s += g.exponents[i] % 3;
    const std::uint64_t len = c.size();
    for (std::uint64_t k = 0; k < len; ++k) turns.push_back((s + 3 * k) * (denom / (3 * len)) % denom);
  }
  std::uint64_t common = denom;
  for (auto t : turns) common = std::gcd(common, (t + denom - turns.front()) % denom);
  FermatSpectrum out;
  out.projective_order = denom / common;
  if (!is_prime(out.projective_order)) return out;

  const Prime p(out.projective_order);
  const std::uint64_t step = denom / p.value();
  std::vector<Residue> sigma;
  for (auto t : turns) sigma.push_back(static_cast<Residue>(((t + denom - turns.front()) % denom) / step));
  // g fixes F, so the lift phi = exp(-2 pi i t0 / denom) g with phi^p = 1 scales F by exp(-6 pi i t0 / denom).
  const std::uint64_t scaled = 3 * p.value() * turns.front();
  if (scaled % denom != 0) throw std::logic_error("non-integral eigenweight");
  const auto weight = static_cast<Residue>((p.value() - (scaled / denom) % p.value()) % p.value());
  out.diagonalized = std::make_pair(Signature::from_residues(p, std::move(sigma)), weight);
  return out;
}

std::optional<FermatGroupElement> fermat_membership_witness(int n, const Signature& sigma, Residue weight) {
  require_supported(n);
  if (sigma.size() != static_cast<std::size_t>(n) + 2) throw SignatureMismatch("signature length does not match n");
  const auto key = canonical_family(sigma, weight);
  const auto& families = fermat_families(n);
  auto it = families.find(FamilyKey{sigma.prime().value(), key.first.values(), key.second});
  if (it == families.end()) return std::nullopt;
  return it->second;
}

bool fermat_membership(int n, const FamilyRecord& family) {
  return fermat_membership_witness(n, family.sigma, family.weight).has_value();
}

}  // namespace cubiclass
