#include <doctest.h>

#include "support.hpp"

using namespace zt;

namespace {

const char* kN1 = "dim 3\ne1*e2 = 1 e3\ne2*e1 = -1 e3\n";
const char* kN1C = "dim 3\ne1*e1 = 1 e2\n";
const char* kZ1 = "dim 3\ne1*e1 = 1 e2\ne1*e2 = 1/2 e3\ne2*e1 = 1 e3\n";

BilinearForm form(const char* text, size_t n) { return parse_form(text, n); }

// theta(e_i e_j, e_k) - theta(e_i, e_j e_k + e_k e_j), evaluated from the table.
bool cocycle_by_hand(const Algebra& a, const BilinearForm& t) {
  const size_t n = a.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        FieldElement lhs, rhs;
        for (size_t m = 0; m < n; ++m) {
          lhs += a.c(i, j, m) * t(m, k);
          rhs += (a.c(j, k, m) + a.c(k, j, m)) * t(i, m);
        }
        if (!(lhs == rhs)) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("cocycle spaces") {
  CHECK(cocycle_space(Algebra(2)).dim() == 4);

  const Algebra c = algebra(kN1C);
  const Subspace z = cocycle_space(c);
  CHECK(z.dim() == 5);
  // theta21 = 2 theta12 and theta22 = theta23 = theta32 = 0 cut out a 5-space.
  for (const auto& v : z.basis()) {
    const BilinearForm t = unflatten(v, 3);
    CHECK(t(1, 0) == FieldElement(2) * t(0, 1));
    CHECK(t(1, 1).is_zero());
    CHECK(t(1, 2).is_zero());
    CHECK(t(2, 1).is_zero());
    CHECK(cocycle_by_hand(c, t));
  }
  CHECK(cocycle_space(algebra(kZ1)).dim() == 3);
}

TEST_CASE("coboundary spaces") {
  CHECK(coboundary_space(Algebra(3)).is_zero());
  CHECK(coboundary_space(algebra(kN1)) == Subspace::span(9, {flatten(form("D12 - D21", 3))}));
  CHECK(coboundary_space(algebra(kN1C)) == Subspace::span(9, {flatten(delta(3, 0, 0))}));
  CHECK(coboundary(algebra(kN1C), vec({0, 5, 0})) == form("5 D11", 3));
}

TEST_CASE("second cohomology of the base algebras") {
  CHECK(Cohomology(algebra(kN1C)).dim() == 4);
  CHECK(Cohomology(algebra(kN1)).dim() == 5);
  const Cohomology z(algebra(kZ1));
  REQUIRE(z.dim() == 1);
  const BilinearForm rep = form("2 D13 + 3 D22 + 6 D31", 3);
  CHECK(is_cocycle(algebra(kZ1), rep));
  CHECK_FALSE(z.class_coordinates(rep)[0].is_zero());
}

TEST_CASE("supplied representatives are validated") {
  const Algebra c = algebra(kN1C);
  std::vector<BilinearForm> reps{form("D12 + 2 D21", 3), form("D13", 3), form("D31", 3), form("D33", 3)};
  const Cohomology h(c, reps);
  CHECK(h.class_coordinates(form("D12 + 2 D21 + D33 + 7 D11", 3)) == vec({1, 0, 0, 1}));

  reps[3] = form("D11", 3);
  CHECK_THROWS_AS(Cohomology(c, reps), std::invalid_argument);
  reps[3] = form("D22", 3);
  CHECK_THROWS_AS(Cohomology(c, reps), std::invalid_argument);
}

TEST_CASE("class subspaces") {
  const Algebra c = algebra(kN1C);
  const Cohomology h(c, {form("D12 + 2 D21", 3), form("D13", 3), form("D31", 3), form("D33", 3)});
  CHECK(class_subspace(h, {form("D11", 3), form("3 D11", 3)}).is_zero());
  CHECK(class_subspace(h, {form("D12 + 2 D21 + D33", 3)}) == Subspace::span(4, {vec({1, 0, 0, 1})}));
  for (long k : {0L, 1L, -4L}) {
    BilinearForm shifted = form("D12 + 2 D21", 3);
    shifted(0, 0) += FieldElement(k);
    CHECK(class_subspace(h, {shifted, form("D12 + 2 D21", 3)}) == Subspace::span(4, {vec({1, 0, 0, 0})}));
  }
  CHECK_THROWS(h.class_coordinates(form("D22", 3)));
}

TEST_CASE("radicals") {
  CHECK(radical(Matrix(3, 3)) == Subspace::full(3));
  CHECK(radical(form("D12 + 2 D21 + D33", 3)).is_zero());
  CHECK(radical(form("D13", 3)) == Subspace::span(3, {unit_vector(3, 1)}));
}

TEST_CASE("form text") {
  const BilinearForm f = form("1/2 D12 - D33", 3);
  CHECK(f(0, 1) == FieldElement(Rational(1, 2)));
  CHECK(f(2, 2) == FieldElement(-1));
  CHECK(parse_form(format_form(f), 3) == f);
  const std::vector<BilinearForm> nabla{form("D12 + 2 D21", 3), form("D33", 3)};
  CHECK(parse_form("N1 + 2 N2", 3, nullptr, &nabla) == form("D12 + 2 D21 + 2 D33", 3));
  CHECK_THROWS_AS(parse_form("D14", 3), ParseError);
  CHECK_THROWS_AS(parse_form("N1", 3), ParseError);
}

TEST_CASE("random cocycles agree with the hand evaluation") {
  std::mt19937_64 rng(21);
  for (const char* text : {kN1, kN1C, kZ1}) {
    const Algebra a = algebra(text);
    const Subspace z = cocycle_space(a);
    for (int t = 0; t < 40; ++t) {
      BilinearForm f(3, 3);
      if (t % 2 == 0) {
        Vector v = zero_vector(9);
        for (const auto& b : z.basis()) {
          const FieldElement c = small_rational(rng);
          for (size_t i = 0; i < 9; ++i) v[i] += c * b[i];
        }
        f = unflatten(v, 3);
      } else {
        f = random_matrix(3, rng);
      }
      CHECK(is_cocycle(a, f) == cocycle_by_hand(a, f));
      CHECK(z.contains(flatten(f)) == cocycle_by_hand(a, f));
    }
  }
}
