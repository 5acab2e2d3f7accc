#include <doctest.h>

#include "support.hpp"

using namespace zt;

namespace {

OrbitCase one(const std::string& text) {
  const auto cases = parse_orbit_cases(text);
  REQUIRE(cases.size() == 1);
  return cases[0];
}

const OrbitCase& named(const std::string& label) {
  for (const auto& c : cat().orbit_cases())
    if (c.label == label) return c;
  throw std::runtime_error("no case " + label);
}

}  // namespace

TEST_CASE("expressions") {
  const Resolver r = [](const std::string& n) -> std::optional<Value> {
    if (n == "a") return Value::of(FieldElement(Rational(1, 2)));
    if (n == "b") return Value::of(FieldElement(3));
    return std::nullopt;
  };
  CHECK(Expr::parse("2 a + b^2").evaluate_scalar(r) == FieldElement(10));
  CHECK(Expr::parse("-(a - b)/a").evaluate_scalar(r) == FieldElement(5));
  CHECK(Expr::parse("a^-2").evaluate_scalar(r) == FieldElement(4));
  CHECK_THROWS_AS(Expr::parse("c + 1").evaluate(r), EvalError);
  CHECK_THROWS_AS(Expr::parse("(a"), ParseError);
  CHECK_THROWS_AS(Expr::parse("a / (b - 3)").evaluate(r), DivisionByZero);
}

TEST_CASE("a rational cube root sample") {
  const OrbitCase c = one(
      "case cube\nbase N1C\nlet a1 = 1\nlet a2 = 0\nlet a3 = 0\nlet a4 = 8\nadjoin c: c^3 = a4/a1\n"
      "phi x = c\nphi y = 1\nphi z = 0\nphi t = (a2 - a3)/a1\nphi u = (-2 a2 + a3)/(a1 c^2)\n"
      "source a1 N1 + a2 N2 + a3 N3 + a4 N4\ntarget N1 + N4\nend\n");
  CHECK(c.is_fixed());
  std::mt19937_64 rng(1);
  CHECK(evaluate_orbit_sample(c, cat().orbit_context("N1C"), rng).status == SampleOutcome::Pass);
}

TEST_CASE("a wrong target fails with a witness") {
  const OrbitCase c = one("case wrong\nbase N1C\nphi x = 1\nphi y = 1\nphi z = 0\nphi t = 0\nphi u = 0\n"
                          "source N1\ntarget N2\nend\n");
  std::mt19937_64 rng(1);
  const SampleOutcome o = evaluate_orbit_sample(c, cat().orbit_context("N1C"), rng);
  CHECK(o.status == SampleOutcome::Fail);
  CHECK_FALSE(o.detail.empty());
}

TEST_CASE("requirements reject samples") {
  const OrbitCase c = one("case never\nbase N1C\nsample a\nrequire a == 0\nphi x = 1\nphi y = 1\nphi z = 0\n"
                          "phi t = 0\nphi u = 0\nsource N1\ntarget N1\nend\n");
  const OrbitCaseResult r = verify_orbit_case(c, cat().orbit_context("N1C"), 3, 1);
  CHECK_FALSE(r.pass);
  CHECK(r.passed == 0);
  CHECK(r.rejected > 0);
}

TEST_CASE("recipes with a sampled radical") {
  const OrbitCaseResult r = verify_orbit_case(named("N1C.s1.1"), cat().orbit_context("N1C"), 5, 7);
  CHECK(r.pass);
  CHECK(r.passed == 5);
}

TEST_CASE("fixed recipes") {
  const OrbitCaseResult r = verify_orbit_case(named("N1.s4.1b"), cat().orbit_context("N1"), 5, 7);
  CHECK(r.pass);
}

TEST_CASE("same seed, same outcome") {
  const auto& c = named("N1C.s1.1");
  const auto a = verify_orbit_case(c, cat().orbit_context("N1C"), 5, 99);
  const auto b = verify_orbit_case(c, cat().orbit_context("N1C"), 5, 99);
  CHECK(a.first_detail == b.first_detail);
  CHECK(a.passed == b.passed);
}

TEST_CASE("random nonzero rationals stay in range") {
  std::mt19937_64 rng(0);
  for (int t = 0; t < 500; ++t) {
    const Rational q = random_nonzero_rational(rng);
    CHECK_FALSE(q.is_zero());
    CHECK_FALSE(q < Rational(-9));
    CHECK(q < Rational(10));
  }
}

TEST_CASE("malformed recipes") {
  CHECK_THROWS_AS(parse_orbit_cases("case a\nbase N1C\nsource N1\n"), ParseError);
  CHECK_THROWS_AS(parse_orbit_cases("case a\nbogus\nend\n"), ParseError);
}
