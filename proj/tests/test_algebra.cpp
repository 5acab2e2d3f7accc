#include <doctest.h>

#include "support.hpp"

using namespace zt;

namespace {

const char* kZ1 = "dim 3\ne1*e1 = 1 e2\ne1*e2 = 1/2 e3\ne2*e1 = 1 e3\n";
const char* kN1 = "dim 3\ne1*e2 = 1 e3\ne2*e1 = -1 e3\n";
const char* kN1C = "dim 3\ne1*e1 = 1 e2\n";

}  // namespace

TEST_CASE("products follow the table") {
  const Algebra z1 = algebra(kZ1);
  CHECK(z1.product(unit_vector(3, 0), unit_vector(3, 1)) == Vector{0, 0, Rational(1, 2)});
  CHECK(is_zero(z1.product(zero_vector(3), vec({1, 2, 3}))));

  const Algebra n1 = algebra(kN1);
  CHECK(is_zero(n1.product(vec({1, 1, 0}), vec({1, 1, 0}))));
  CHECK(n1.product(vec({1, 0, 0}), vec({0, 1, 0})) == vec({0, 0, 1}));
  CHECK_THROWS(n1.product(vec({1, 0}), vec({0, 1, 0})));
}

TEST_CASE("Zinbiel identity checker") {
  CHECK(check_zinbiel(algebra(kZ1)).holds);
  CHECK(check_zinbiel(Algebra(4)).holds);

  const IdentityWitness w = check_zinbiel(algebra("dim 2\ne1*e1 = 1 e1\n"));
  CHECK_FALSE(w.holds);
  CHECK(w.i == 1);
  CHECK(w.j == 1);
  CHECK(w.k == 1);
  // (e1e1)e1 - e1(2 e1e1) = e1 - 2e1
  CHECK(w.defect == vec({-1, 0}));
}

TEST_CASE("annihilators") {
  CHECK(annihilator(Algebra(3)) == Subspace::full(3));
  CHECK(annihilator(algebra(kN1C)) == Subspace::span(3, {unit_vector(3, 1), unit_vector(3, 2)}));
  CHECK(annihilator(base("[Z1]^1_1")) == Subspace::span(4, {unit_vector(4, 3)}));

  const Algebra a = algebra("dim 3\ne1*e2 = 1 e3\n");
  CHECK(left_annihilator(a) == Subspace::span(3, {unit_vector(3, 1), unit_vector(3, 2)}));
  CHECK(right_annihilator(a) == Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 2)}));
}

TEST_CASE("nilpotency index") {
  CHECK(is_nilpotent(Algebra(2)).nilpotent);
  CHECK(is_nilpotent(Algebra(2)).index == 2);
  const Nilpotency c = is_nilpotent(algebra(kN1C));
  CHECK(c.nilpotent);
  CHECK(c.index == 3);
  const Nilpotency z = is_nilpotent(algebra(kZ1));
  CHECK(z.index == 4);
  CHECK(z.chain == std::vector<size_t>{3, 2, 1, 0});
  CHECK_FALSE(is_nilpotent(algebra("dim 1\ne1*e1 = 1 e1\n")).nilpotent);
}

TEST_CASE("derivations satisfy the Leibniz rule") {
  const Algebra a = algebra(kZ1);
  const Subspace der = derivations(a);
  CHECK(der.dim() > 0);
  const size_t n = a.dim();
  for (const auto& flat : der.basis()) {
    Matrix d(n, n);
    for (size_t r = 0; r < n; ++r)
      for (size_t s = 0; s < n; ++s) d(r, s) = flat[r * n + s];
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        const Vector x = unit_vector(n, i), y = unit_vector(n, j);
        Vector lhs = d.apply(a.product(x, y));
        const Vector r1 = a.product(d.apply(x), y), r2 = a.product(x, d.apply(y));
        for (size_t k = 0; k < n; ++k) CHECK(lhs[k] == r1[k] + r2[k]);
      }
  }
}

TEST_CASE("fingerprints") {
  const auto zero = fingerprint(Algebra(3));
  const auto layout = fingerprint_layout(3);
  CHECK(zero[0] == 3);
  CHECK(zero[1] == 0);  // dim A^2
  CHECK(zero[4] == 3);  // dim Ann
  CHECK(std::count(layout.begin(), layout.end(), ',') + 1 == static_cast<long>(zero.size()));

  CHECK(fingerprint(algebra(kN1)) != fingerprint(algebra(kN1C)));
  CHECK(fingerprint(base("[N1C]^1_01")) != fingerprint(base("[N1C]^1_02")));
}

TEST_CASE("transport preserves identities and fingerprints") {
  std::mt19937_64 rng(3);
  for (const auto& e : cat().instances({Rational(2)})) {
    INFO(e.display_id());
    const Algebra& a = e.algebra;
    const auto fp = fingerprint(a);
    const bool zinbiel = check_zinbiel(a).holds;
    for (int t = 0; t < 50; ++t) {
      const Algebra b = transport(a, random_unimodular(a.dim(), rng));
      CHECK(check_zinbiel(b).holds == zinbiel);
      CHECK(fingerprint(b) == fp);
    }
  }
}

TEST_CASE("transport on a non-Zinbiel algebra keeps the violation") {
  std::mt19937_64 rng(8);
  const Algebra bad = algebra("dim 3\ne1*e1 = 1 e2\ne2*e1 = 1 e3\n");
  REQUIRE_FALSE(check_zinbiel(bad).holds);
  for (int t = 0; t < 20; ++t) CHECK_FALSE(check_zinbiel(transport(bad, random_invertible(3, rng))).holds);
}

TEST_CASE("fingerprints survive rational base changes") {
  std::mt19937_64 rng(9);
  for (const char* id : {"Z1", "N1C", "N1", "[N1C]^1_01", "[N1]^1_02"}) {
    const Algebra a = base(id);
    const auto fp = fingerprint(a);
    for (int t = 0; t < 10; ++t) CHECK(fingerprint(transport(a, random_invertible(a.dim(), rng))) == fp);
  }
}

TEST_CASE("every catalog algebra is nilpotent") {
  for (const auto& e : cat().instances(default_parameter_samples())) {
    INFO(e.display_id());
    CHECK(is_nilpotent(e.algebra).nilpotent);
  }
}

TEST_CASE("algebra file format") {
  const Algebra a = parse_algebra("# N1\ndim 3\ne1*e2 = 1 e3\ne2*e1 = -1 e3\n");
  CHECK(a == algebra(kN1));
  CHECK(parse_algebra(format_algebra(a)) == a);

  const Algebra f = parse_algebra("dim 2\nfield x^2 - 2\ne1*e1 = poly(0,1) e2\n");
  REQUIRE(f.field());
  CHECK(f.c(0, 0, 1) * f.c(0, 0, 1) == FieldElement(2));
  CHECK(parse_algebra(format_algebra(f)) == f);

  CHECK_THROWS_AS(parse_algebra("e1*e2 = e3\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra("dim 2\ne1*e3 = 1 e2\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra("dim 2\ne1*e1 = 1 e2 +\n"), ParseError);
}
