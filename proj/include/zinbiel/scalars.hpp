#pragma once

// Exact scalars: arbitrary-precision rationals and elements of simple number
// fields Q[x]/(m(x)).

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace zinbiel {

struct FieldMismatch : std::invalid_argument {
  FieldMismatch() : std::invalid_argument("field mismatch") {}
};

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Malformed textual input (files, forms, recipes). The CLI maps it to exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : v_(static_cast<long>(value)) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

  /// Accepts `p`, `-p`, `p/q` with arbitrary-length integers.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return v_; }
  std::string numerator() const { return v_.get_num().get_str(); }
  std::string denominator() const { return v_.get_den().get_str(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  Rational inverse() const;
  Rational pow(long exponent) const;

 private:
  mpq_class v_;
};

/// Dense polynomial over Q, coefficients low degree first, no trailing zeros.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);

  /// Parses text such as `x^3 - 2`, `x^2+1`, `2*x^4 - 3/2 x + 1` in the variable `var`.
  static RationalPolynomial parse(std::string_view text, char var = 'x');

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }
  Rational evaluate(const Rational& x) const;
  std::string to_string(char var = 'x') const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws DivisionByZero on a zero divisor.
  static void divmod(const RationalPolynomial& a, const RationalPolynomial& b,
                     RationalPolynomial& quotient, RationalPolynomial& remainder);

  /// Rational roots (distinct, ascending).
  std::vector<Rational> rational_roots() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Irreducibility over Q. Decided for degree <= 4 (rational roots plus a search
/// for monic integer quadratic factors); higher degrees come back undecided.
struct IrreducibilityResult {
  bool decided = false;
  bool irreducible = false;
};
IrreducibilityResult check_irreducible(const RationalPolynomial& p);

class NumberField;
using FieldRef = std::shared_ptr<const NumberField>;

/// Q[x]/(m(x)) for a monic irreducible m of degree d >= 1.
class NumberField {
 public:
  /// Validates monicity and, up to degree 4, irreducibility. Above degree 4 the
  /// caller asserts irreducibility.
  static FieldRef create(RationalPolynomial minimal_polynomial, std::string generator = "x");

  const RationalPolynomial& minimal_polynomial() const { return m_; }
  int degree() const { return m_.degree(); }
  const std::string& generator() const { return gen_; }
  bool same_as(const NumberField& other) const { return m_ == other.m_; }

 private:
  NumberField(RationalPolynomial m, std::string gen) : m_(std::move(m)), gen_(std::move(gen)) {}
  RationalPolynomial m_;
  std::string gen_;
};

bool same_field(const FieldRef& a, const FieldRef& b);

/// Element of Q (field == nullptr) or of a number field, stored as coordinates
/// in the power basis 1, x, ..., x^{d-1}.
class FieldElement {
 public:
  FieldElement() : coords_{Rational(0)} {}
  FieldElement(const Rational& q) : coords_{q} {}  // NOLINT(google-explicit-constructor)
  FieldElement(long q) : coords_{Rational(q)} {}   // NOLINT
  FieldElement(int q) : coords_{Rational(q)} {}    // NOLINT
  FieldElement(FieldRef field, std::vector<Rational> coords);

  /// The generator x of `field`.
  static FieldElement generator(const FieldRef& field);

  const FieldRef& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  int degree() const { return static_cast<int>(coords_.size()); }
  bool is_zero() const;
  bool is_one() const;
  /// True when all non-constant coordinates vanish.
  bool is_rational() const;
  /// Constant coordinate; throws if !is_rational().
  Rational to_rational() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  FieldElement inverse() const;
  FieldElement pow(long exponent) const;

  /// `p/q` for rational values, `poly(c0,c1,...)` otherwise.
  std::string to_string() const;
  /// Inverse of to_string; `poly(...)` requires `field`.
  static FieldElement parse(std::string_view text, const FieldRef& field = nullptr);

 private:
  void promote_to(const FieldRef& field);
  FieldRef field_;
  std::vector<Rational> coords_;
};

FieldElement embed_rational(const Rational& q, const FieldRef& field);

/// Common field of two operands: the non-null one, or throws FieldMismatch.
FieldRef join_fields(const FieldRef& a, const FieldRef& b);

}  // namespace zinbiel
