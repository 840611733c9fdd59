#include "cubiclass/signature.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cubiclass {

namespace {

void require_same_modulus(const Signature& a, const Signature& b) {
  if (a.prime() != b.prime() || a.size() != b.size()) {
    throw SignatureMismatch("signatures differ in modulus or length: " + a.to_string() + " vs " + b.to_string());
  }
}

std::vector<Residue> affine_sorted(const std::vector<Residue>& v, std::uint64_t a, std::uint64_t b,
                                   std::uint64_t p) {
  std::vector<Residue> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<Residue>((a * v[i] + b) % p);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Residue> distinct_values(const std::vector<Residue>& v) {
  std::vector<Residue> d(v);
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

// Advances a nondecreasing vector over [0, p); false once exhausted.
bool next_multiset(std::vector<Residue>& v, Residue p) {
  std::size_t i = v.size();
  while (i > 0 && v[i - 1] == p - 1) --i;
  if (i == 0) return false;
  const Residue next = v[i - 1] + 1;
  std::fill(v.begin() + static_cast<std::ptrdiff_t>(i - 1), v.end(), next);
  return true;
}

}  // namespace

Signature::Signature(Prime p, const std::vector<std::int64_t>& values) : p_(p) {
  if (values.size() < 4) throw std::invalid_argument("a signature needs n + 2 >= 4 entries");
  values_.reserve(values.size());
  for (std::int64_t v : values) values_.push_back(static_cast<Residue>(reduce_mod(v, p.value())));
}

Signature Signature::from_residues(Prime p, std::vector<Residue> values) {
  if (values.size() < 4) throw std::invalid_argument("a signature needs n + 2 >= 4 entries");
  for (Residue v : values) {
    if (v >= p.value()) throw std::invalid_argument("signature entry " + std::to_string(v) + " not reduced mod p");
  }
  return Signature(p, std::move(values), true);
}

Signature Signature::zero(Prime p, int n) {
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  return Signature(p, std::vector<Residue>(static_cast<std::size_t>(n) + 2, 0), true);
}

bool Signature::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](Residue v) { return v == 0; });
}

std::string Signature::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? "," : "") << values_[i];
  os << ") mod " << p_.value();
  return os.str();
}

AffinePermAction AffinePermAction::identity(std::size_t length) {
  AffinePermAction g;
  g.perm.resize(length);
  for (std::size_t i = 0; i < length; ++i) g.perm[i] = i;
  return g;
}

AffinePermAction compose(const AffinePermAction& h, const AffinePermAction& g, Prime p) {
  if (h.perm.size() != g.perm.size()) throw std::invalid_argument("permutation lengths differ");
  const std::uint64_t m = p.value();
  AffinePermAction out;
  out.scale = static_cast<Residue>(std::uint64_t{h.scale} * g.scale % m);
  out.shift = static_cast<Residue>((std::uint64_t{h.scale} * g.shift + h.shift) % m);
  out.perm.resize(g.perm.size());
  for (std::size_t j = 0; j < g.perm.size(); ++j) out.perm[j] = h.perm[g.perm[j]];
  return out;
}

Signature act(const Signature& sigma, const AffinePermAction& g) {
  const std::uint64_t m = sigma.prime().value();
  if (g.scale % m == 0) throw std::invalid_argument("action scale must be a unit");
  if (g.perm.size() != sigma.size()) throw SignatureMismatch("permutation length does not match signature");
  std::vector<Residue> out(sigma.size());
  std::vector<bool> hit(sigma.size(), false);
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    const std::size_t target = g.perm[j];
    if (target >= sigma.size() || hit[target]) throw std::invalid_argument("not a permutation");
    hit[target] = true;
    out[target] = static_cast<Residue>((std::uint64_t{g.scale % m} * sigma[j] + g.shift % m) % m);
  }
  return Signature::from_residues(sigma.prime(), std::move(out));
}

Signature canonicalize(const Signature& sigma) {
  const std::uint64_t p = sigma.prime().value();
  // The least sorted image starts with 0, so some entry value v is sent to 0: b = -a v.
  const auto values = distinct_values(sigma.values());
  std::vector<Residue> best;
  for (std::uint64_t a = 1; a < p; ++a) {
    for (Residue v : values) {
      const std::uint64_t b = (p - a * v % p) % p;
      auto candidate = affine_sorted(sigma.values(), a, b, p);
      if (best.empty() || candidate < best) best = std::move(candidate);
    }
  }
  return Signature::from_residues(sigma.prime(), std::move(best));
}

Signature canonicalize_scaling(const Signature& sigma) {
  const std::uint64_t p = sigma.prime().value();
  std::vector<Residue> best;
  for (std::uint64_t a = 1; a < p; ++a) {
    auto candidate = affine_sorted(sigma.values(), a, 0, p);
    if (best.empty() || candidate < best) best = std::move(candidate);
  }
  return Signature::from_residues(sigma.prime(), std::move(best));
}

Signature canonicalize_translation(const Signature& sigma) {
  const std::uint64_t p = sigma.prime().value();
  std::vector<Residue> best;
  for (Residue v : distinct_values(sigma.values())) {
    auto candidate = affine_sorted(sigma.values(), 1, (p - v) % p, p);
    if (best.empty() || candidate < best) best = std::move(candidate);
  }
  return Signature::from_residues(sigma.prime(), std::move(best));
}

bool equivalent(const Signature& lhs, const Signature& rhs) {
  require_same_modulus(lhs, rhs);
  return canonicalize(lhs) == canonicalize(rhs);
}

Signature normalize_weight(const Signature& sigma, Residue weight) {
  const Prime p = sigma.prime();
  if (p.value() == 3) throw std::domain_error("weight normalization needs 3 invertible; p = 3");
  const std::uint64_t m = p.value();
  const std::uint64_t b = mul_mod((m - weight % m) % m, inverse_mod(3, p), m);
  std::vector<Residue> out(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) out[i] = static_cast<Residue>((sigma[i] + b) % m);
  return Signature::from_residues(p, std::move(out));
}

std::uint64_t multiset_count(Prime p, int n) {
  // C(p + n + 1, n + 2) computed incrementally as C(p - 1 + k, k).
  const std::uint64_t k_max = static_cast<std::uint64_t>(n) + 2;
  unsigned __int128 c = 1;
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    c = c * (p.value() - 1 + k) / k;
    if (c > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(c);
}

std::vector<Signature> chain_closed_signatures(Prime p, int n) {
  if (p.value() <= 3) throw std::domain_error("chain pruning requires p > 3");
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  const std::uint64_t m = p.value();
  const std::size_t slots = static_cast<std::size_t>(n) + 2;

  // Cosets of <-2> in the multiplicative group, the subgroup itself first.
  std::vector<std::vector<Residue>> cosets;
  std::vector<bool> seen(m, false);
  for (std::uint64_t start = 1; start < m; ++start) {
    if (seen[start]) continue;
    std::vector<Residue> coset;
    std::uint64_t x = start;
    do {
      seen[x] = true;
      coset.push_back(static_cast<Residue>(x));
      x = mul_mod(x, m - 2, m);
    } while (x != start);
    cosets.push_back(std::move(coset));
  }
  const std::size_t orbit = cosets.front().size();
  if (orbit > slots) return {};

  std::set<std::vector<Residue>> found;
  const std::size_t max_extra = slots / orbit - 1;
  std::vector<std::size_t> chosen;

  auto distribute = [&](const std::vector<Residue>& base) {
    // Fill the remaining slots with a multiset drawn from {0} and the chosen values.
    std::vector<Residue> pool(base);
    pool.push_back(0);
    std::sort(pool.begin(), pool.end());
    const std::size_t extra = slots - base.size();
    std::vector<std::size_t> pick(extra, 0);
    while (true) {
      std::vector<Residue> v(base);
      for (std::size_t idx : pick) v.push_back(pool[idx]);
      found.insert(canonicalize_scaling(Signature::from_residues(p, v)).values());
      std::size_t i = extra;
      while (i > 0 && pick[i - 1] == pool.size() - 1) --i;
      if (i == 0) break;
      const std::size_t next = pick[i - 1] + 1;
      std::fill(pick.begin() + static_cast<std::ptrdiff_t>(i - 1), pick.end(), next);
    }
  };

  std::function<void(std::size_t)> choose = [&](std::size_t from) {
    std::vector<Residue> base(cosets.front());
    for (std::size_t c : chosen) base.insert(base.end(), cosets[c].begin(), cosets[c].end());
    distribute(base);
    if (chosen.size() == max_extra) return;
    for (std::size_t c = from; c < cosets.size(); ++c) {
      chosen.push_back(c);
      choose(c + 1);
      chosen.pop_back();
    }
  };
  choose(1);

  std::vector<Signature> out;
  out.reserve(found.size());
  for (const auto& v : found) out.push_back(Signature::from_residues(p, v));
  return out;
}

void for_each_orbit(Prime p, int n, EnumerationStrategy strategy, std::uint64_t budget,
                    const std::function<void(const Signature&)>& emit) {
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  if (strategy == EnumerationStrategy::chain_pruned) {
    std::set<std::vector<Residue>> classes;
    for (const auto& sigma : chain_closed_signatures(p, n)) classes.insert(canonicalize(sigma).values());
    for (const auto& v : classes) emit(Signature::from_residues(p, v));
    return;
  }
  const std::uint64_t count = multiset_count(p, n);
  if (count > budget) {
    throw BudgetExceeded("exhaustive enumeration of " + std::to_string(count) + " multisets exceeds budget " +
                         std::to_string(budget));
  }
  const auto m = static_cast<Residue>(p.value());
  std::vector<Residue> v(static_cast<std::size_t>(n) + 2, 0);
  // A sorted vector is its class representative exactly when canonicalization fixes it.
  while (next_multiset(v, m)) {
    if (v.front() != 0) break;
    auto sigma = Signature::from_residues(p, v);
    if (canonicalize(sigma) == sigma) emit(sigma);
  }
}

std::vector<Signature> enumerate_orbits(Prime p, int n, EnumerationStrategy strategy, std::uint64_t budget) {
  std::vector<Signature> out;
  for_each_orbit(p, n, strategy, budget, [&](const Signature& s) { out.push_back(s); });
  return out;
}

}  // namespace cubiclass
