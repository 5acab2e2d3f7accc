#include <doctest.h>

#include "support.hpp"

using namespace zt;

TEST_CASE("reduced row echelon form") {
  CHECK(rref(Matrix::identity(3)) == Matrix::identity(3));
  CHECK(rref(mat({{2, 4}, {1, 2}})) == mat({{1, 2}, {0, 0}}));
  CHECK(rref(mat({{0, 1}, {1, 0}})) == Matrix::identity(2));
  CHECK(rank(mat({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})) == 2);
}

TEST_CASE("nullspace") {
  const Subspace a = nullspace(mat({{1, 1}}));
  REQUIRE(a.dim() == 1);
  CHECK(a.basis()[0] == vec({1, -1}));

  CHECK(nullspace(Matrix(2, 3)) == Subspace::full(3));

  const Matrix m = mat({{1, 0, -1}, {0, 1, 2}});
  const Subspace k = nullspace(m);
  REQUIRE(k.dim() == 1);
  CHECK(is_zero(m.apply(k.basis()[0])));
  CHECK(k.contains(vec({1, -2, 1})));
}

TEST_CASE("sum and intersection") {
  const Subspace e1 = Subspace::span(2, {vec({1, 0})});
  const Subspace e2 = Subspace::span(2, {vec({0, 1})});
  CHECK(subspace_sum(e1, e2) == Subspace::full(2));
  CHECK(subspace_intersect(e1, e2).is_zero());
  CHECK(subspace_sum(e1, e1) == e1);
  CHECK(subspace_intersect(e1, e1) == e1);

  const Subspace a = Subspace::span(3, {vec({1, 1, 0}), vec({0, 0, 1})});
  const Subspace b = Subspace::span(3, {vec({1, 1, 1})});
  const Subspace c = subspace_intersect(a, b);
  CHECK(c.dim() == 1);
  CHECK(membership(vec({1, 1, 1}), c));
}

TEST_CASE("membership") {
  CHECK(membership(vec({0, 0}), Subspace::span(2, {vec({1, 0})})));
  CHECK(membership(vec({0, 0}), Subspace(2)));
  CHECK_FALSE(membership(vec({1, 1}), Subspace::span(2, {vec({1, 0})})));
  CHECK(membership(vec({2, -4, 2}), Subspace::span(3, {vec({1, -2, 1})})));
}

TEST_CASE("quotient representatives") {
  const auto reps = quotient_representatives(Subspace::full(2), Subspace::span(2, {vec({1, 0})}));
  REQUIRE(reps.size() == 1);
  CHECK(reps[0] == vec({0, 1}));
  CHECK(quotient_representatives(Subspace::full(3), Subspace::full(3)).empty());
}

TEST_CASE("canonical form does not depend on the generators") {
  const Subspace a = Subspace::span(3, {vec({1, 2, 3}), vec({0, 1, 1})});
  const Subspace b = Subspace::span(3, {vec({1, 3, 4}), vec({2, 5, 7}), vec({0, 0, 0})});
  CHECK(a == b);
}

TEST_CASE("inverse, determinant and solve") {
  const Matrix m = mat({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  const auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == Matrix::identity(3));
  CHECK(determinant(m) == FieldElement(18));
  CHECK_FALSE(inverse(mat({{1, 2}, {2, 4}})));
  const auto x = solve(m, vec({1, 2, 3}));
  REQUIRE(x);
  CHECK(m.apply(*x) == vec({1, 2, 3}));
  CHECK_FALSE(solve(mat({{1, 1}, {1, 1}}), vec({0, 1})));
}

TEST_CASE("matrix text parsing") {
  CHECK(Matrix::parse("1 2\n3, 4  # comment\n") == mat({{1, 2}, {3, 4}}));
  CHECK_THROWS_AS(Matrix::parse("1 2\n3\n"), ParseError);
  CHECK_THROWS_AS(Matrix::parse("# nothing\n"), ParseError);
}

TEST_CASE("rank-nullity and intersection dimensions on random matrices") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    const size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
    Matrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) m(i, j) = (rng() % 3 == 0) ? Rational(0) : small_rational(rng);
    const Subspace k = nullspace(m);
    CHECK(rank(m) + k.dim() == cols);
    for (const auto& v : k.basis()) CHECK(is_zero(m.apply(v)));

    const Subspace a = Subspace::from_rows_of(m);
    const Subspace b = Subspace::span(cols, {unit_vector(cols, 0), unit_vector(cols, cols - 1)});
    CHECK(subspace_sum(a, b).dim() + subspace_intersect(a, b).dim() == a.dim() + b.dim());
    const Subspace both = subspace_intersect(a, b);
    for (const auto& v : both.basis()) {
      CHECK(a.contains(v));
      CHECK(b.contains(v));
    }
  }
}
