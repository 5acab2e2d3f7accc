#include <doctest.h>

#include "support.hpp"

using namespace zt;

namespace {

FieldRef field(const char* m) { return NumberField::create(RationalPolynomial::parse(m)); }

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(5, 6).inverse() == Rational(6, 5));
  CHECK(Rational(4, -6) == Rational(-2, 3));
  CHECK(Rational::parse("-12/18") == Rational(-2, 3));
  CHECK(Rational(3, 4).to_string() == "3/4");
  CHECK(Rational(-5).to_string() == "-5");
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("1/x"), ParseError);
}

TEST_CASE("rationals beyond machine words stay exact") {
  const Rational big = Rational::parse("123456789012345678901234567890/7");
  CHECK(big * Rational(7) == Rational::parse("123456789012345678901234567890"));
  CHECK(Rational(2).pow(100).numerator() == "1267650600228229401496703205376");
  CHECK(Rational(2).pow(-3) == Rational(1, 8));
}

TEST_CASE("polynomial parsing and rational roots") {
  const auto p = RationalPolynomial::parse("x^3 - 3 x^2 - 3 x + 1");
  CHECK(p.degree() == 3);
  CHECK(p.evaluate(Rational(-1)).is_zero());
  CHECK(p.rational_roots() == std::vector<Rational>{Rational(-1)});
  CHECK(RationalPolynomial::parse("2*x^2 - 1/2").rational_roots() == std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});
  RationalPolynomial q, r;
  RationalPolynomial::divmod(p, RationalPolynomial::parse("x + 1"), q, r);
  CHECK(r.is_zero());
  CHECK(q == RationalPolynomial::parse("x^2 - 4 x + 1"));
}

TEST_CASE("irreducibility up to degree four") {
  CHECK(check_irreducible(RationalPolynomial::parse("x^2 - 2")).irreducible);
  CHECK_FALSE(check_irreducible(RationalPolynomial::parse("x^2 - 4")).irreducible);
  CHECK(check_irreducible(RationalPolynomial::parse("x^3 - 2")).irreducible);
  const auto quartic = check_irreducible(RationalPolynomial::parse("x^4 + 4"));  // (x^2+2x+2)(x^2-2x+2)
  CHECK(quartic.decided);
  CHECK_FALSE(quartic.irreducible);
  CHECK(check_irreducible(RationalPolynomial::parse("x^4 - 2")).irreducible);
  CHECK_THROWS(NumberField::create(RationalPolynomial::parse("x^2 - 1")));
  CHECK_THROWS(NumberField::create(RationalPolynomial::parse("2 x^2 - 1")));
}

TEST_CASE("number field multiplication reduces by the minimal polynomial") {
  const auto f2 = field("x^2 - 2");
  const auto x = FieldElement::generator(f2);
  CHECK(x * x == FieldElement(2));
  CHECK((x * x).is_rational());

  const auto f3 = field("x^3 - 2");
  const auto y = FieldElement::generator(f3);
  const FieldElement one_plus = FieldElement(1) + y;
  CHECK(one_plus * one_plus == FieldElement(f3, {Rational(1), Rational(2), Rational(1)}));
  CHECK(y * y * y == FieldElement(2));
}

TEST_CASE("number field inverses") {
  const auto f2 = field("x^2 - 2");
  const auto x = FieldElement::generator(f2);
  CHECK(x.inverse() == FieldElement(f2, {Rational(0), Rational(1, 2)}));

  const auto f3 = field("x^3 - 2");
  const auto y = FieldElement::generator(f3);
  CHECK(y.inverse() == FieldElement(f3, {Rational(0), Rational(0), Rational(1, 2)}));
  CHECK_THROWS_AS(FieldElement(f3, {Rational(0), Rational(0), Rational(0)}).inverse(), DivisionByZero);
}

TEST_CASE("embedding rationals") {
  CHECK(embed_rational(Rational(0), nullptr).coords() == std::vector<Rational>{Rational(0)});
  CHECK(embed_rational(Rational(1), field("x^2 + 1")).coords() == std::vector<Rational>{Rational(1), Rational(0)});
  CHECK(embed_rational(Rational(-3, 7), field("x^3 - 2")).coords() ==
        std::vector<Rational>{Rational(-3, 7), Rational(0), Rational(0)});
}

TEST_CASE("mixing elements of different fields is refused") {
  const auto a = FieldElement::generator(field("x^2 - 2"));
  const auto b = FieldElement::generator(field("x^2 - 3"));
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK_NOTHROW(a + FieldElement(Rational(1, 2)));
}

TEST_CASE("field element text round trip") {
  const auto f = field("x^3 - 2");
  const FieldElement e(f, {Rational(1, 2), Rational(0), Rational(-3)});
  CHECK(FieldElement::parse(e.to_string(), f) == e);
  CHECK(FieldElement::parse("7/3") == FieldElement(Rational(7, 3)));
}

TEST_CASE("field axioms on random elements") {
  const auto f = field("x^3 - x - 1");
  std::mt19937_64 rng(11);
  auto rnd = [&] {
    return FieldElement(f, {small_rational(rng), small_rational(rng), small_rational(rng)});
  };
  for (int t = 0; t < 200; ++t) {
    const auto a = rnd(), b = rnd(), c = rnd();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
  }
}
