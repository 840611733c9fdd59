#include <doctest.h>

#include "cubiclass/hodge.hpp"
#include "../oracles.hpp"

using namespace cubiclass;

TEST_SUITE("hodge") {

TEST_CASE("klein character examples") {
  const auto [p5, s5] = klein_signature(5);
  const auto c5 = jacobian_ring_character(klein(5), s5, 2, Prime(10007));
  CHECK(c5.size() == 21);
  CHECK(c5.multiplicity_free());

  const auto [p3, s3] = klein_signature(3);
  const auto c3 = jacobian_ring_character(klein(3), s3, 1, Prime(10007));
  CHECK(c3.exponents == std::vector<Residue>{1, 3, 4, 5, 9});
  CHECK(jacobian_ring_character(klein(3), s3, 0, Prime(10007)).exponents == std::vector<Residue>{0});
  CHECK(jacobian_ring_character(fermat(4), Signature::zero(Prime(7), 4), 0, Prime(10007)).exponents ==
        std::vector<Residue>{0});
}

TEST_CASE("klein tangent spectrum") {
  const auto k5 = klein_tangent_spectrum(5);
  CHECK(k5.degree == 2);
  CHECK(k5.tangent().size() == 21);
  CHECK(k5.tangent().multiplicity_free());
  REQUIRE(k5.matched.has_value());
  CHECK(k5.tangent().exponents == klein_fivefold_reference_spectrum());
  CHECK(k5.negated == k5.raw.negated());
  CHECK(is_stable_under(k5.tangent(), 11));
  CHECK(is_stable_under(k5.raw, 11) == is_stable_under(k5.negated, 11));

  const auto k3 = klein_tangent_spectrum(3);
  CHECK(k3.tangent().size() == 5);
  CHECK(k3.tangent().multiplicity_free());
  CHECK_FALSE(k3.matched.has_value());
  CHECK_THROWS_AS(klein_tangent_spectrum(4), std::invalid_argument);
}

TEST_CASE("is_stable_under") {
  const auto ref = make_spectrum(Prime(43), klein_fivefold_reference_spectrum());
  CHECK(is_stable_under(ref, 11));
  CHECK(is_stable_under(ref, 1));
  CHECK_FALSE(is_stable_under(ref, -1));
  CHECK_THROWS_AS(is_stable_under(ref, 43), std::invalid_argument);
  CHECK(is_stable_under(make_spectrum(Prime(5), {1, 1, 2, 3}), 1));
  CHECK_FALSE(is_stable_under(make_spectrum(Prime(5), {1, 1, 2, 3}), 2));
}

TEST_CASE("errors") {
  const auto [p, s] = klein_signature(3);
  CHECK_THROWS_AS(jacobian_ring_character(fermat(3), s, 1, Prime(10007)), std::invalid_argument);
  CHECK_THROWS_AS(jacobian_ring_character(klein(3), Signature::zero(Prime(5), 4), 1, Prime(10007)),
                  SignatureMismatch);
}

TEST_CASE("diagonal forms match the squarefree-monomial oracle") {
  for (int n = 2; n <= 5; ++n) {
    const Signature s = Signature::zero(Prime(7), n);
    for (unsigned d = 0; d <= 3; ++d) {
      CHECK(jacobian_ring_character(fermat(n), s, d, Prime(10007)).exponents ==
            oracle::diagonal_jacobian_character(s.values(), 7, d));
    }
  }
  // p = 3 admits genuinely mixed diagonal signatures
  for (auto v : std::vector<std::vector<std::int64_t>>{{0, 1, 2, 0, 1}, {1, 1, 2, 2, 0, 0}, {2, 0, 1, 1}}) {
    const Signature s(Prime(3), v);
    const int n = static_cast<int>(v.size()) - 2;
    for (unsigned d = 0; d <= 4; ++d) {
      CHECK(jacobian_ring_character(fermat(n), s, d, Prime(30011)).exponents ==
            oracle::diagonal_jacobian_character(s.values(), 3, d));
    }
  }
}

TEST_CASE("character equals weights of Groebner standard monomials") {
  for (int n : {2, 3, 5}) {
    const auto [p, s] = klein_signature(n);
    for (unsigned d = 0; d <= 3; ++d) {
      CHECK(jacobian_ring_character(klein(n), s, d, Prime(10007)).exponents ==
            oracle::standard_monomial_character(klein(n), s.values(), p.value(), d, Prime(10007)));
    }
  }
}

TEST_CASE("property: two-modulus agreement and cardinality") {
  for (int n : {2, 3, 5}) {
    const auto [p, s] = klein_signature(n);
    for (unsigned d = 0; d <= 3; ++d) {
      const auto a = jacobian_ring_character(klein(n), s, d, Prime(10007));
      const auto b = jacobian_ring_character(klein(n), s, d, Prime(65537));
      CHECK(a == b);
      CHECK_NOTHROW(jacobian_ring_character_checked(klein(n), s, d, Prime(10007), Prime(30011)));
    }
    const std::size_t vars = n + 2;
    CHECK(jacobian_ring_character(klein(n), s, 2, Prime(10007)).size() == vars * (vars + 1) / 2 - vars);
  }
}

TEST_CASE("property: full monomial character is permutation invariant") {
  const auto [p, s] = klein_signature(5);
  AffinePermAction g = AffinePermAction::identity(7);
  g.perm = {3, 0, 6, 1, 5, 2, 4};
  const auto t = act(s, g);
  auto monomial_weights = [](const Signature& x) {
    std::vector<Residue> w;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = i; j < x.size(); ++j) w.push_back(static_cast<Residue>((x[i] + x[j]) % 43));
    }
    std::sort(w.begin(), w.end());
    return w;
  };
  CHECK(monomial_weights(s) == monomial_weights(t));
  CHECK(jacobian_ring_character(relabel(klein(5), g.perm), t, 2, Prime(10007)) ==
        jacobian_ring_character(klein(5), s, 2, Prime(10007)));
}

}
