#include "cubiclass/groebner.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace cubiclass {

namespace {

struct DegrevlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const { return compare_degrevlex(a, b) < 0; }
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Exponent lcm;
};

// Reduces the sum of `seed` terms against `divisors`; divisor `skip` is ignored.
PolyModQ reduce_terms(Prime q, std::size_t num_vars, const std::vector<Term>& seed,
                      const std::vector<const PolyModQ*>& divisors) {
  const std::uint64_t m = q.value();
  std::unordered_map<Exponent, std::uint32_t, ExponentHash> acc;
  std::priority_queue<Exponent, std::vector<Exponent>, DegrevlexLess> heap;
  acc.reserve(seed.size() * 4);
  for (const auto& t : seed) {
    auto [it, inserted] = acc.emplace(t.exp, 0);
    it->second = static_cast<std::uint32_t>((it->second + t.coeff) % m);
    if (inserted) heap.push(t.exp);
  }
  std::vector<Term> remainder;
  while (!heap.empty()) {
    const Exponent e = heap.top();
    heap.pop();
    const std::uint32_t c = acc[e];
    if (c == 0) continue;
    const PolyModQ* reducer = nullptr;
    for (const PolyModQ* g : divisors) {
      if (g->leading().exp.divides(e)) {
        reducer = g;
        break;
      }
    }
    if (!reducer) {
      remainder.push_back({e, c});
      continue;
    }
    // e - c * (e / LT(g)) * g; the leading term cancels exactly.
    const Exponent mult = e / reducer->leading().exp;
    const auto& gt = reducer->terms();
    for (std::size_t k = 1; k < gt.size(); ++k) {
      const Exponent key = gt[k].exp * mult;
      auto [it, inserted] = acc.emplace(key, 0);
      const std::uint64_t sub = mul_mod(c, gt[k].coeff, m);
      it->second = static_cast<std::uint32_t>((it->second + m - sub) % m);
      if (inserted) heap.push(key);
    }
  }
  return PolyModQ::from_sorted_terms(q, num_vars, std::move(remainder));
}

std::vector<const PolyModQ*> pointers(const std::vector<PolyModQ>& polys) {
  std::vector<const PolyModQ*> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(&p);
  return out;
}

std::vector<Term> s_polynomial_terms(const PolyModQ& f, const PolyModQ& g, const Exponent& l, std::uint64_t m) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size() + g.terms().size());
  const Exponent mf = l / f.leading().exp;
  const Exponent mg = l / g.leading().exp;
  for (std::size_t k = 1; k < f.terms().size(); ++k) terms.push_back({f.terms()[k].exp * mf, f.terms()[k].coeff});
  for (std::size_t k = 1; k < g.terms().size(); ++k) {
    terms.push_back({g.terms()[k].exp * mg, static_cast<std::uint32_t>((m - g.terms()[k].coeff) % m)});
  }
  return terms;
}

// Gebauer-Moeller update after appending basis element `t`.
void update_pairs(const std::vector<PolyModQ>& basis, std::vector<Pair>& pairs, std::size_t t) {
  const Exponent& lt = basis[t].leading().exp;
  std::vector<Pair> fresh;
  for (std::size_t i = 0; i < t; ++i) fresh.push_back({i, t, lcm(basis[i].leading().exp, lt)});

  // Criterion M: drop (i, t) when some (k, t) has an lcm properly dividing it.
  std::vector<bool> keep(fresh.size(), true);
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    for (std::size_t b = 0; b < fresh.size(); ++b) {
      if (a == b) continue;
      if (fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm)) {
        keep[a] = false;
        break;
      }
    }
  }
  // Criterion F: among equal lcms keep one, preferring a coprime pair so it can be dropped below.
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    if (!keep[a]) continue;
    for (std::size_t b = a + 1; b < fresh.size(); ++b) {
      if (keep[b] && fresh[b].lcm == fresh[a].lcm) {
        const bool b_coprime = basis[fresh[b].i].leading().exp.coprime(lt);
        const bool a_coprime = basis[fresh[a].i].leading().exp.coprime(lt);
        if (b_coprime && !a_coprime) {
          keep[a] = false;
          break;
        }
        keep[b] = false;
      }
    }
  }
  // Criterion B on existing pairs.
  std::vector<Pair> retained;
  retained.reserve(pairs.size());
  for (const auto& pr : pairs) {
    const bool divisible = lt.divides(pr.lcm);
    const bool differs_i = !(lcm(basis[pr.i].leading().exp, lt) == pr.lcm);
    const bool differs_j = !(lcm(basis[pr.j].leading().exp, lt) == pr.lcm);
    if (!(divisible && differs_i && differs_j)) retained.push_back(pr);
  }
  pairs = std::move(retained);
  // Product criterion.
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    if (keep[a] && !basis[fresh[a].i].leading().exp.coprime(lt)) pairs.push_back(fresh[a]);
  }
}

std::size_t select_pair(const std::vector<Pair>& pairs) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    const int c = compare_degrevlex(pairs[k].lcm, pairs[best].lcm);
    if (c < 0 || (c == 0 && std::tie(pairs[k].j, pairs[k].i) < std::tie(pairs[best].j, pairs[best].i))) best = k;
  }
  return best;
}

}  // namespace

PolyModQ normal_form(const PolyModQ& f, const std::vector<PolyModQ>& divisors) {
  for (const auto& g : divisors) {
    if (g.modulus() != f.modulus()) throw std::invalid_argument("modulus mismatch in normal_form");
    if (g.is_zero()) throw std::invalid_argument("zero divisor in normal_form");
  }
  return reduce_terms(f.modulus(), f.num_vars(), f.terms(), pointers(divisors));
}

std::vector<PolyModQ> groebner_basis(const std::vector<PolyModQ>& generators, GroebnerStats* stats) {
  if (generators.empty()) return {};
  const Prime q = generators.front().modulus();
  const std::size_t vars = generators.front().num_vars();
  for (const auto& g : generators) {
    if (g.modulus() != q) throw std::invalid_argument("generators over different moduli");
    if (g.num_vars() != vars) throw std::invalid_argument("generators in different numbers of variables");
  }
  const std::uint64_t m = q.value();
  GroebnerStats local;
  GroebnerStats& st = stats ? *stats : local;

  std::vector<PolyModQ> basis;
  std::vector<const PolyModQ*> divisors;
  std::vector<Pair> pairs;
  auto append = [&](PolyModQ h) {
    h.make_monic();
    basis.push_back(std::move(h));
    divisors = pointers(basis);
    update_pairs(basis, pairs, basis.size() - 1);
  };

  for (const auto& g : generators) {
    PolyModQ h = reduce_terms(q, vars, g.terms(), divisors);
    if (!h.is_zero()) append(std::move(h));
  }
  while (!pairs.empty()) {
    const std::size_t k = select_pair(pairs);
    const Pair pr = pairs[k];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(k));
    ++st.pairs_considered;
    auto s = s_polynomial_terms(basis[pr.i], basis[pr.j], pr.lcm, m);
    PolyModQ h = reduce_terms(q, vars, s, divisors);
    ++st.pairs_reduced;
    if (h.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    append(std::move(h));
  }

  // Minimalize: drop elements whose leading term another element's divides (first wins on ties).
  std::vector<PolyModQ> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
      if (a == b) continue;
      const auto& la = basis[a].leading().exp;
      const auto& lb = basis[b].leading().exp;
      redundant = lb.divides(la) && (!(la == lb) || b < a);
    }
    if (!redundant) minimal.push_back(basis[a]);
  }
  // Interreduce tails.
  std::vector<PolyModQ> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<const PolyModQ*> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(&minimal[b]);
    std::vector<Term> tail(minimal[a].terms().begin() + 1, minimal[a].terms().end());
    PolyModQ rest = reduce_terms(q, vars, tail, others);
    std::vector<Term> terms{minimal[a].leading()};
    terms.insert(terms.end(), rest.terms().begin(), rest.terms().end());
    reduced.push_back(PolyModQ::from_sorted_terms(q, vars, std::move(terms)));
  }
  std::sort(reduced.begin(), reduced.end(), [](const PolyModQ& a, const PolyModQ& b) {
    return compare_degrevlex(a.leading().exp, b.leading().exp) < 0;
  });
  return reduced;
}

}  // namespace cubiclass
