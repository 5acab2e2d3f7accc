#include "zinbiel/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace zinbiel {

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty rational");
  auto valid_int = [](std::string_view t) {
    size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("malformed rational '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw DivisionByZero();
  return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

// ---------------------------------------------------------------------------
// RationalPolynomial

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void RationalPolynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational RationalPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<size_t>(i)];
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return RationalPolynomial(std::move(c));
}

void RationalPolynomial::divmod(const RationalPolynomial& a, const RationalPolynomial& b,
                                RationalPolynomial& quotient, RationalPolynomial& remainder) {
  if (b.is_zero()) throw DivisionByZero();
  std::vector<Rational> r = a.c_;
  const int db = b.degree();
  std::vector<Rational> q(a.degree() >= db ? static_cast<size_t>(a.degree() - db + 1) : 0);
  const Rational lead_inv = b.c_.back().inverse();
  for (int i = a.degree(); i >= db; --i) {
    const Rational f = r[static_cast<size_t>(i)] * lead_inv;
    if (f.is_zero()) continue;
    q[static_cast<size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(i - db + j)] -= f * b.c_[static_cast<size_t>(j)];
  }
  quotient = RationalPolynomial(std::move(q));
  remainder = RationalPolynomial(std::move(r));
}

std::string RationalPolynomial::to_string(char var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const bool unit = mag == Rational(1);
    if (i == 0 || !unit) out += mag.to_string();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

RationalPolynomial RationalPolynomial::parse(std::string_view text, char var) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty polynomial");
  std::vector<Rational> c;
  size_t i = 0;
  auto fail = [&]() { throw ParseError("malformed polynomial '" + std::string(text) + "'"); };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail();
    }
    Rational coef(1);
    bool have_coef = false;
    size_t start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    if (i > start) {
      coef = Rational::parse(s.substr(start, i - start));
      have_coef = true;
    }
    int power = 0;
    if (i < s.size() && s[i] == '*') {
      if (!have_coef) fail();
      ++i;
      if (i >= s.size() || s[i] != var) fail();
    }
    if (i < s.size() && s[i] == var) {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        size_t ps = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (ps == i) fail();
        power = std::stoi(s.substr(ps, i - ps));
      }
    } else if (!have_coef) {
      fail();
    }
    if (c.size() <= static_cast<size_t>(power)) c.resize(static_cast<size_t>(power) + 1);
    c[static_cast<size_t>(power)] += sign < 0 ? -coef : coef;
  }
  return RationalPolynomial(std::move(c));
}

namespace {

mpz_class lcm_of_denominators(const std::vector<Rational>& c) {
  mpz_class l = 1;
  for (const auto& q : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.raw().get_den_mpz_t());
  return l;
}

// Monic integer polynomial y(t) = D^d m(t/D) for monic m; roots of m are y-roots / D.
std::vector<mpz_class> scaled_monic_integer(const RationalPolynomial& monic, mpz_class& scale) {
  const auto& c = monic.coeffs();
  scale = lcm_of_denominators(c);
  const int d = monic.degree();
  std::vector<mpz_class> out(static_cast<size_t>(d) + 1);
  mpz_class pw = 1;
  for (int i = d; i >= 0; --i) {
    mpq_class v = c[static_cast<size_t>(i)].raw() * pw;
    out[static_cast<size_t>(i)] = v.get_num();  // integral by construction
    pw *= scale;
  }
  return out;
}

constexpr unsigned long kTrialLimit = 2000000;

// Positive divisors of |n| (n != 0); empty if the trial-division budget is exceeded.
std::vector<mpz_class> positive_divisors(mpz_class n, bool& complete) {
  n = abs(n);
  complete = true;
  std::vector<mpz_class> small, large;
  for (unsigned long d = 1;; ++d) {
    mpz_class dd = d;
    if (dd * dd > n) break;
    if (d > kTrialLimit) {
      complete = false;
      return {};
    }
    if (n % dd == 0) {
      small.push_back(dd);
      mpz_class other = n / dd;
      if (other != dd) large.push_back(other);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

mpz_class eval_int(const std::vector<mpz_class>& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial make_monic(const RationalPolynomial& p) {
  std::vector<Rational> c = p.coeffs();
  const Rational lead = c.back();
  for (auto& x : c) x /= lead;
  return RationalPolynomial(std::move(c));
}

}  // namespace

std::vector<Rational> RationalPolynomial::rational_roots() const {
  if (is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<Rational> roots;
  if (degree() == 0) return roots;
  RationalPolynomial m = make_monic(*this);
  // Strip zero roots.
  size_t shift = 0;
  while (m.coeffs()[shift].is_zero()) ++shift;
  if (shift > 0) {
    roots.emplace_back(0);
    m = RationalPolynomial(std::vector<Rational>(m.coeffs().begin() + static_cast<long>(shift), m.coeffs().end()));
  }
  if (m.degree() >= 1) {
    mpz_class scale;
    auto y = scaled_monic_integer(m, scale);
    bool complete = false;
    auto divs = positive_divisors(y[0], complete);
    if (!complete) throw std::runtime_error("rational root search exceeded trial-division budget");
    for (const auto& d : divs)
      for (int s : {1, -1}) {
        mpz_class cand = d * s;
        if (eval_int(y, cand) == 0) roots.emplace_back(mpq_class(cand, scale));
      }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

IrreducibilityResult check_irreducible(const RationalPolynomial& p) {
  const int d = p.degree();
  if (d < 1) return {true, false};
  if (d == 1) return {true, true};
  if (d > 4) return {false, false};
  try {
    if (!p.rational_roots().empty()) return {true, false};
  } catch (const std::runtime_error&) {
    return {false, false};
  }
  if (d <= 3) return {true, true};
  // Quartic without rational roots: reducible iff it splits into two monic
  // integer quadratics (x^2+ax+b)(x^2+cx+e) after scaling to a monic integer polynomial.
  mpz_class scale;
  auto y = scaled_monic_integer(make_monic(p), scale);
  const mpz_class& a0 = y[0];
  const mpz_class& a1 = y[1];
  const mpz_class& a2 = y[2];
  const mpz_class& a3 = y[3];
  bool complete = false;
  auto divs = positive_divisors(a0, complete);
  if (!complete) return {false, false};
  for (const auto& dv : divs)
    for (int sg : {1, -1}) {
      mpz_class b = dv * sg;
      mpz_class e = a0 / b;
      if (b != e) {
        // a + c = a3, a e + b c = a1  =>  a (e - b) = a1 - a3 b
        mpz_class num = a1 - a3 * b;
        mpz_class den = e - b;
        if (num % den != 0) continue;
        mpz_class a = num / den;
        mpz_class c = a3 - a;
        if (b + e + a * c == a2) return {true, false};
      } else {
        if (a1 != a3 * b) continue;
        // a + c = a3, a c = a2 - 2b: integer roots of t^2 - a3 t + (a2 - 2b)
        mpz_class disc = a3 * a3 - 4 * (a2 - 2 * b);
        if (disc < 0) continue;
        mpz_class r = sqrt(disc);
        if (r * r == disc && (a3 + r) % 2 == 0) return {true, false};
      }
    }
  return {true, true};
}

// ---------------------------------------------------------------------------
// NumberField

FieldRef NumberField::create(RationalPolynomial minimal_polynomial, std::string generator) {
  if (minimal_polynomial.degree() < 1) throw std::invalid_argument("minimal polynomial must have degree >= 1");
  if (!minimal_polynomial.is_monic()) throw std::invalid_argument("minimal polynomial must be monic");
  auto irr = check_irreducible(minimal_polynomial);
  if (irr.decided && !irr.irreducible)
    throw std::invalid_argument("minimal polynomial " + minimal_polynomial.to_string() + " is reducible over Q");
  return FieldRef(new NumberField(std::move(minimal_polynomial), std::move(generator)));
}

bool same_field(const FieldRef& a, const FieldRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

FieldRef join_fields(const FieldRef& a, const FieldRef& b) {
  if (!a) return b;
  if (!b) return a;
  if (a == b || a->same_as(*b)) return a;
  throw FieldMismatch();
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(FieldRef field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  const size_t d = field_ ? static_cast<size_t>(field_->degree()) : 1;
  if (coords_.size() > d) throw std::invalid_argument("too many coordinates for field degree");
  coords_.resize(d);
}

FieldElement FieldElement::generator(const FieldRef& field) {
  if (!field) throw std::invalid_argument("Q has no generator");
  std::vector<Rational> c(static_cast<size_t>(field->degree()));
  if (field->degree() == 1) {
    c[0] = -field->minimal_polynomial().coeff(0);
  } else {
    c[1] = Rational(1);
  }
  return FieldElement(field, std::move(c));
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q.is_zero(); });
}

bool FieldElement::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& q) { return q.is_zero(); });
}

bool FieldElement::is_one() const { return is_rational() && coords_[0] == Rational(1); }

Rational FieldElement::to_rational() const {
  if (!is_rational()) throw std::domain_error("element " + to_string() + " is not rational");
  return coords_[0];
}

void FieldElement::promote_to(const FieldRef& field) {
  if (field_ == field) return;
  field_ = join_fields(field_, field);
  coords_.resize(field_ ? static_cast<size_t>(field_->degree()) : 1);
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& q : r.coords_) q = -q;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  promote_to(o.field_);
  for (size_t i = 0; i < o.coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  promote_to(o.field_);
  for (size_t i = 0; i < o.coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  promote_to(o.field_);
  if (o.coords_.size() == 1 || o.is_rational()) {
    const Rational k = o.coords_[0];
    for (auto& q : coords_) q *= k;
    return *this;
  }
  if (is_rational()) {
    const Rational k = coords_[0];
    coords_ = o.coords_;
    for (auto& q : coords_) q *= k;
    return *this;
  }
  const int d = field_->degree();
  const auto& m = field_->minimal_polynomial().coeffs();
  std::vector<Rational> prod(static_cast<size_t>(2 * d - 1));
  for (int i = 0; i < d; ++i) {
    if (coords_[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < d; ++j)
      prod[static_cast<size_t>(i + j)] += coords_[static_cast<size_t>(i)] * o.coords_[static_cast<size_t>(j)];
  }
  // x^d = -(m_0 + m_1 x + ... + m_{d-1} x^{d-1})
  for (int i = 2 * d - 2; i >= d; --i) {
    const Rational c = prod[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    prod[static_cast<size_t>(i)] = Rational(0);
    for (int j = 0; j < d; ++j) prod[static_cast<size_t>(i - d + j)] -= c * m[static_cast<size_t>(j)];
  }
  prod.resize(static_cast<size_t>(d));
  coords_ = std::move(prod);
  return *this;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (same_field(a.field_, b.field_)) return a.coords_ == b.coords_;
  // One side rational-only: compare after embedding.
  if (!a.field_ || !b.field_) {
    const FieldElement& wide = a.field_ ? a : b;
    const FieldElement& narrow = a.field_ ? b : a;
    return wide.is_rational() && wide.coords_[0] == narrow.coords_[0];
  }
  return false;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return FieldElement(field_, {coords_[0].inverse()});
  // Extended Euclid: s*a + t*m = g, g constant since m is irreducible.
  RationalPolynomial r0 = field_->minimal_polynomial();
  RationalPolynomial r1(coords_);
  RationalPolynomial s0, s1(std::vector<Rational>{Rational(1)});
  while (r1.degree() > 0) {
    RationalPolynomial q, r;
    RationalPolynomial::divmod(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    RationalPolynomial s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.is_zero()) throw std::domain_error("non-invertible element: minimal polynomial is reducible");
  const Rational g = r1.coeff(0).inverse();
  std::vector<Rational> c(static_cast<size_t>(field_->degree()));
  for (int i = 0; i <= s1.degree(); ++i) c[static_cast<size_t>(i)] = s1.coeff(i) * g;
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  FieldElement result(field_, {Rational(1)});
  FieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

std::string FieldElement::to_string() const {
  if (is_rational()) return coords_[0].to_string();
  std::string out = "poly(";
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += coords_[i].to_string();
  }
  return out + ")";
}

FieldElement FieldElement::parse(std::string_view text, const FieldRef& field) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.rfind("poly(", 0) == 0) {
    if (!field) throw ParseError("poly(...) scalar used without a field declaration");
    if (s.back() != ')') throw ParseError("malformed poly scalar '" + s + "'");
    std::string body = s.substr(5, s.size() - 6);
    std::vector<Rational> c;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(Rational::parse(item));
    if (c.size() > static_cast<size_t>(field->degree()))
      throw ParseError("poly scalar has more coordinates than the field degree");
    return FieldElement(field, std::move(c));
  }
  return FieldElement(field, {Rational::parse(s)});
}

FieldElement embed_rational(const Rational& q, const FieldRef& field) { return FieldElement(field, {q}); }

}  // namespace zinbiel
