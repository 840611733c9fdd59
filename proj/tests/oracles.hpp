#pragma once

// Brute-force reference implementations used only by tests. They share no code
// paths with the library beyond the value types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "cubiclass/forms.hpp"
#include "cubiclass/groebner.hpp"
#include "cubiclass/smoothness.hpp"

namespace oracle {

using cubiclass::CubicForm;
using cubiclass::Residue;

inline bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

inline std::optional<std::uint64_t> mult_order(std::int64_t a, std::uint64_t p) {
  const auto m = static_cast<std::int64_t>(p);
  const std::uint64_t r = static_cast<std::uint64_t>(((a % m) + m) % m);
  if (r == 0) return std::nullopt;
  std::uint64_t x = r;
  for (std::uint64_t l = 1;; ++l, x = x * r % p) {
    if (x == 1) return l;
  }
}

inline bool is_admissible(std::uint64_t p, int n) {
  if (p == 2) return true;
  return *mult_order(-2, p) <= static_cast<std::uint64_t>(n) + 2;
}

/// min over all (a, b) of sort(a * sigma + b).
inline std::vector<Residue> canonicalize(const std::vector<Residue>& s, std::uint64_t p) {
  std::vector<Residue> best;
  for (std::uint64_t a = 1; a < p; ++a) {
    for (std::uint64_t b = 0; b < p; ++b) {
      std::vector<Residue> v;
      for (Residue x : s) v.push_back(static_cast<Residue>((a * x + b) % p));
      std::sort(v.begin(), v.end());
      if (best.empty() || v < best) best = v;
    }
  }
  return best;
}

/// Searches every (a, b, permutation) for one taking s to t.
inline bool equivalent_by_search(const std::vector<Residue>& s, const std::vector<Residue>& t, std::uint64_t p) {
  std::vector<std::size_t> perm(s.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::uint64_t a = 1; a < p; ++a) {
      for (std::uint64_t b = 0; b < p; ++b) {
        bool ok = true;
        for (std::size_t i = 0; i < s.size() && ok; ++i) ok = (a * s[perm[i]] + b) % p == t[i];
        if (ok) return true;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::size_t eigenspace_dim(const std::vector<Residue>& s, std::uint64_t p, Residue a) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i; j < s.size(); ++j) {
      for (std::size_t k = j; k < s.size(); ++k) count += (s[i] + s[j] + s[k]) % p == a;
    }
  }
  return count;
}

/// Evaluate dF/dx_v at an integer point mod q by differentiating term by term.
inline std::uint64_t partial_at(const CubicForm& f, std::size_t v, const std::vector<std::uint64_t>& x,
                                std::uint64_t q) {
  std::uint64_t acc = 0;
  for (const auto& [m, c] : f.terms()) {
    const int d = m.degree_in(v);
    if (d == 0) continue;
    std::uint64_t t = static_cast<std::uint64_t>(((c % static_cast<std::int64_t>(q)) + static_cast<std::int64_t>(q)) %
                                                  static_cast<std::int64_t>(q));
    t = t * static_cast<std::uint64_t>(d) % q;
    bool removed = false;
    for (auto idx : m.idx) {
      if (idx == v && !removed) {
        removed = true;
        continue;
      }
      t = t * x[idx] % q;
    }
    acc = (acc + t) % q;
  }
  return acc;
}

/// Every F_q-rational projective point at which all partials vanish (first nonzero coordinate = 1).
inline std::vector<std::vector<std::uint64_t>> singular_points_fq(const CubicForm& f, std::uint64_t q) {
  const std::size_t vars = f.num_vars();
  std::vector<std::vector<std::uint64_t>> found;
  for (std::size_t lead = 0; lead < vars; ++lead) {
    std::vector<std::uint64_t> x(vars, 0);
    x[lead] = 1;
    const std::size_t free = vars - lead - 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free; ++i) total *= q;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = lead + 1; i < vars; ++i, c /= q) x[i] = c % q;
      bool singular = true;
      for (std::size_t v = 0; v < vars && singular; ++v) singular = partial_at(f, v, x, q) == 0;
      if (singular) found.push_back(x);
    }
  }
  return found;
}

/// For F = sum c_i x_i^3 the Jacobian ideal is (x_i^2), so S/J in degree d is spanned by
/// squarefree monomials of degree d.
inline std::vector<Residue> diagonal_jacobian_character(const std::vector<Residue>& s, std::uint64_t p, unsigned d) {
  std::vector<Residue> out;
  const std::size_t vars = s.size();
  for (std::uint64_t mask = 0; mask < (1ull << vars); ++mask) {
    if (static_cast<unsigned>(__builtin_popcountll(mask)) != d) continue;
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < vars; ++i) {
      if (mask >> i & 1) w += s[i];
    }
    out.push_back(static_cast<Residue>(w % p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Weights of degree-d standard monomials of a Groebner basis of the Jacobian ideal.
inline std::vector<Residue> standard_monomial_character(const CubicForm& f, const std::vector<Residue>& s,
                                                        std::uint64_t p, unsigned d, cubiclass::Prime q) {
  const auto gb = cubiclass::groebner_basis(cubiclass::jacobian_generators(f, q));
  const std::size_t vars = f.num_vars();
  std::vector<Residue> out;
  std::vector<unsigned> e(vars, 0);
  // odometer over exponent vectors with total degree d
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == vars) {
      e[i] = left;
      cubiclass::Exponent x;
      std::uint64_t w = 0;
      for (std::size_t k = 0; k < vars; ++k) {
        x.e[k] = static_cast<std::uint8_t>(e[k]);
        w += static_cast<std::uint64_t>(e[k]) * s[k];
      }
      x.degree = static_cast<std::uint16_t>(d);
      bool standard = true;
      for (const auto& g : gb) standard = standard && !g.leading().exp.divides(x);
      if (standard) out.push_back(static_cast<Residue>(w % p));
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
