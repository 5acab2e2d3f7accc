#include <doctest.h>

#include "support.hpp"

using namespace zt;

namespace {

const char* kN1C = "dim 3\ne1*e1 = 1 e2\n";
const char* kN1 = "dim 3\ne1*e2 = 1 e3\ne2*e1 = -1 e3\n";
const char* kZ1 = "dim 3\ne1*e1 = 1 e2\ne1*e2 = 1/2 e3\ne2*e1 = 1 e3\n";

ExtensionSpec spec(const char* base_text, std::vector<const char*> forms) {
  ExtensionSpec s{algebra(base_text), {}};
  for (const char* f : forms) s.cocycles.push_back(parse_form(f, s.base.dim()));
  return s;
}

}  // namespace

TEST_CASE("central extension tables") {
  const Algebra a = central_extension(spec(kN1C, {"D12 + 2 D21 + D33"}));
  CHECK(a == algebra("dim 4\ne1*e1 = 1 e2\ne1*e2 = 1 e4\ne2*e1 = 2 e4\ne3*e3 = 1 e4\n"));
  CHECK(central_extension(spec(kN1C, {})) == algebra(kN1C));

  const Algebra z = central_extension(spec(kZ1, {"2 D13 + 3 D22 + 6 D31"}));
  CHECK(z == base("[Z1]^1_1"));
  CHECK(z.c(2, 0, 3) == FieldElement(6));
}

TEST_CASE("non-cocycles are rejected with a witness") {
  try {
    central_extension(spec(kN1C, {"D13", "D22"}));
    FAIL("expected NotACocycle");
  } catch (const NotACocycle& e) {
    CHECK(e.index == 1);
    CHECK_FALSE(e.witness.holds);
  }
}

TEST_CASE("admissibility") {
  CHECK(in_T_s(spec(kN1C, {"D12 + 2 D21 + D33"})));
  CHECK_FALSE(in_T_s(spec(kN1C, {"0 D11"})));
  CHECK_FALSE(in_T_s(spec(kN1, {"0 D11"})));
  CHECK_FALSE(in_T_s(spec(kN1C, {"D12 + 2 D21", "D11"})));
}

TEST_CASE("annihilator components") {
  CHECK_FALSE(has_annihilator_component(spec(kN1C, {"D12 + 2 D21 + D33"})));
  CHECK(has_annihilator_component(spec(kN1C, {"D12 + 2 D21 + D33", "2 D12 + 4 D21 + 2 D33"})));
  CHECK(has_annihilator_component(spec(kN1C, {"D12 + 2 D21 + D33 + D11", "D12 + 2 D21 + D33"})));
  CHECK_THROWS_AS(has_annihilator_component(spec(kN1C, {"D12 + 2 D21"})), PreconditionViolated);
}

TEST_CASE("annihilator of an extension") {
  CHECK(annihilator_of_extension(spec(kN1C, {"D12 + 2 D21 + D33"})) == Subspace::span(4, {unit_vector(4, 3)}));
  CHECK(annihilator_of_extension(ExtensionSpec{Algebra(2), {}}) == Subspace::full(2));
  // Ann(N1) = <e3> and e3 is not in the radical of D13.
  const ExtensionSpec s = spec(kN1, {"D13"});
  CHECK(annihilator(central_extension(s)) == Subspace::span(4, {unit_vector(4, 3)}));
  CHECK(annihilator_formula(s) == Subspace::span(4, {unit_vector(4, 3)}));
  // D12 - D21 is a coboundary: e3 survives in the annihilator.
  const ExtensionSpec t = spec(kN1, {"D11"});
  CHECK(annihilator_of_extension(t) == Subspace::span(4, {unit_vector(4, 2), unit_vector(4, 3)}));
}

TEST_CASE("quotient by the annihilator recovers base and class") {
  const QuotientResult q = quotient_by_annihilator(base("[N1C]^1_01"));
  CHECK(q.quotient == algebra(kN1C));
  REQUIRE(q.cocycles.size() == 1);
  const Cohomology h(algebra(kN1C), cat().nabla(cat().lookup("N1C")));
  CHECK(class_subspace(h, q.cocycles) == Subspace::span(4, {vec({1, 0, 0, 1})}));

  const QuotientResult z = quotient_by_annihilator(base("[Z1]^1_1"));
  CHECK(z.quotient == algebra(kZ1));
  CHECK(class_subspace(Cohomology(algebra(kZ1)), z.cocycles).dim() == 1);

  CHECK_THROWS(quotient_by_annihilator(algebra("dim 2\ne1*e1 = 1 e2\ne1*e2 = 1 e1\n")));
}

TEST_CASE("quotient of a zero algebra") {
  const QuotientResult q = quotient_by_annihilator(Algebra(2));
  CHECK(q.quotient.dim() == 0);
  CHECK(q.cocycles.size() == 2);
}

TEST_CASE("annihilator formula on random specs") {
  std::mt19937_64 rng(17);
  for (const char* text : {kN1, kN1C, kZ1}) {
    const Algebra a = algebra(text);
    const Subspace z = cocycle_space(a);
    for (int t = 0; t < 100; ++t) {
      ExtensionSpec s{a, {}};
      const size_t count = 1 + rng() % 3;
      for (size_t c = 0; c < count; ++c) {
        Vector v = zero_vector(9);
        for (const auto& b : z.basis()) {
          const FieldElement k = (rng() % 3 == 0) ? FieldElement(0) : FieldElement(small_rational(rng));
          for (size_t i = 0; i < 9; ++i) v[i] += k * b[i];
        }
        s.cocycles.push_back(unflatten(v, 3));
      }
      CHECK(annihilator(central_extension(s)) == annihilator_formula(s));
    }
  }
}

TEST_CASE("extension is Zinbiel exactly when the form is a cocycle") {
  std::mt19937_64 rng(29);
  size_t cocycles = 0, others = 0;
  for (const char* text : {kN1, kN1C, kZ1}) {
    const Algebra a = algebra(text);
    for (int t = 0; t < 200; ++t) {
      BilinearForm f = random_matrix(3, rng);
      if (t % 2 == 0) {
        const Subspace z = cocycle_space(a);
        Vector v = zero_vector(9);
        for (const auto& b : z.basis()) {
          const FieldElement k = small_rational(rng);
          for (size_t i = 0; i < 9; ++i) v[i] += k * b[i];
        }
        f = unflatten(v, 3);
      }
      const bool cocycle = cocycle_space(a).contains(flatten(f));
      (cocycle ? cocycles : others)++;
      CHECK(check_zinbiel(central_extension_unchecked(ExtensionSpec{a, {f}})).holds == cocycle);
    }
  }
  CHECK(cocycles > 0);
  CHECK(others > 0);
}

TEST_CASE("extension spec files") {
  const auto resolve = [](const std::string& ref) { return base(ref.substr(ref.find(':') + 1)); };
  const ExtensionSpec s = parse_extension_spec("base catalog:N1C\ncocycle: D12 + 2 D21 + D33\n", resolve);
  CHECK(s.base == algebra(kN1C));
  CHECK(s.cocycles.size() == 1);
  CHECK_THROWS_AS(parse_extension_spec("cocycle: D11\n", resolve), ParseError);
  CHECK_THROWS_AS(parse_extension_spec("base catalog:N1C\nbase catalog:N1\n", resolve), ParseError);
  CHECK_THROWS_AS(parse_extension_spec("base catalog:N1C\nfoo\n", resolve), ParseError);
}
