#include "zinbiel/cohomology.hpp"

#include <stdexcept>

#include "zinbiel/text.hpp"

namespace zinbiel {

Vector flatten(const BilinearForm& f) { return Vector(f.entries().begin(), f.entries().end()); }

BilinearForm unflatten(std::span<const FieldElement> v, size_t n) {
  if (v.size() != n * n) throw std::invalid_argument("flattened form has wrong length");
  BilinearForm f(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) f(i, j) = v[i * n + j];
  return f;
}

BilinearForm delta(size_t n, size_t i, size_t j) {
  BilinearForm f(n, n);
  f(i, j) = FieldElement(1);
  return f;
}

std::string CocycleWitness::to_string() const {
  if (holds) return "holds";
  return "cocycle condition violated at (" + std::to_string(i) + "," + std::to_string(j) + "," +
         std::to_string(k) + "), defect " + defect.to_string();
}

namespace {

// Row (i,j,k): sum_a c_ij^a theta_ak - sum_b (c_jk^b + c_kj^b) theta_ib.
Matrix cocycle_system(const Algebra& a) {
  const size_t n = a.dim();
  Matrix m(n * n * n, n * n);
  size_t row = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k, ++row)
        for (size_t b = 0; b < n; ++b) {
          if (!a.c(i, j, b).is_zero()) m(row, b * n + k) += a.c(i, j, b);
          const FieldElement s = a.c(j, k, b) + a.c(k, j, b);
          if (!s.is_zero()) m(row, i * n + b) -= s;
        }
  return m;
}

}  // namespace

CocycleWitness check_cocycle(const Algebra& a, const BilinearForm& theta) {
  const size_t n = a.dim();
  if (theta.rows() != n || theta.cols() != n) throw std::invalid_argument("form size does not match algebra");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        FieldElement d;
        for (size_t b = 0; b < n; ++b) {
          d += a.c(i, j, b) * theta(b, k);
          d -= (a.c(j, k, b) + a.c(k, j, b)) * theta(i, b);
        }
        if (!d.is_zero()) return {false, i + 1, j + 1, k + 1, d};
      }
  return {};
}

bool is_cocycle(const Algebra& a, const BilinearForm& theta) { return check_cocycle(a, theta).holds; }

BilinearForm coboundary(const Algebra& a, std::span<const FieldElement> f) {
  const size_t n = a.dim();
  if (f.size() != n) throw std::invalid_argument("functional has wrong length");
  BilinearForm out(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (!a.c(i, j, k).is_zero()) out(i, j) += a.c(i, j, k) * f[k];
  return out;
}

Subspace cocycle_space(const Algebra& a) { return nullspace(cocycle_system(a)); }

Subspace coboundary_space(const Algebra& a) {
  std::vector<Vector> gens;
  for (size_t k = 0; k < a.dim(); ++k) gens.push_back(flatten(coboundary(a, unit_vector(a.dim(), k))));
  return Subspace::span(a.dim() * a.dim(), gens);
}

Cohomology::Cohomology(const Algebra& a) : n_(a.dim()), z2_(cocycle_space(a)), b2_(coboundary_space(a)) {
  if (!z2_.contains(b2_)) throw std::logic_error("internal error: B^2 is not contained in Z^2 (algebra is not Zinbiel)");
  for (const auto& v : quotient_representatives(z2_, b2_)) reps_.push_back(unflatten(v, n_));
  build_solver();
}

Cohomology::Cohomology(const Algebra& a, std::vector<BilinearForm> representatives)
    : n_(a.dim()), z2_(cocycle_space(a)), b2_(coboundary_space(a)), reps_(std::move(representatives)) {
  if (!z2_.contains(b2_)) throw std::logic_error("internal error: B^2 is not contained in Z^2 (algebra is not Zinbiel)");
  std::vector<Vector> gens = b2_.basis();
  for (const auto& r : reps_) {
    if (!is_cocycle(a, r)) throw std::invalid_argument("supplied H^2 representative " + format_form(r) + " is not a cocycle");
    gens.push_back(flatten(r));
  }
  const Subspace spanned = Subspace::span(n_ * n_, gens);
  if (spanned.dim() != b2_.dim() + reps_.size() || spanned != z2_)
    throw std::invalid_argument("supplied H^2 representatives do not form a basis of H^2");
  build_solver();
}

void Cohomology::build_solver() {
  std::vector<Vector> cols;
  for (const auto& r : reps_) cols.push_back(flatten(r));
  for (const auto& b : b2_.basis()) cols.push_back(b);
  system_ = Matrix::from_columns(cols, n_ * n_);
}

Vector Cohomology::class_coordinates(const BilinearForm& theta) const {
  const Vector v = flatten(theta);
  if (!z2_.contains(v)) throw std::invalid_argument("form " + format_form(theta) + " is not a cocycle");
  const auto x = solve(system_, v);
  if (!x) throw std::logic_error("internal error: cocycle outside span of H^2 basis and B^2");
  return Vector(x->begin(), x->begin() + static_cast<long>(reps_.size()));
}

BilinearForm Cohomology::form(std::span<const FieldElement> coords) const {
  if (coords.size() != reps_.size()) throw std::invalid_argument("H^2 coordinate vector has wrong length");
  BilinearForm f(n_, n_);
  for (size_t i = 0; i < reps_.size(); ++i)
    if (!coords[i].is_zero())
      for (size_t r = 0; r < n_; ++r)
        for (size_t c = 0; c < n_; ++c) f(r, c) += coords[i] * reps_[i](r, c);
  return f;
}

Subspace class_subspace(const Cohomology& h, const std::vector<BilinearForm>& forms) {
  std::vector<Vector> gens;
  for (const auto& f : forms) gens.push_back(h.class_coordinates(f));
  return Subspace::span(h.dim(), gens);
}

Subspace radical(const BilinearForm& theta) {
  const size_t n = theta.rows();
  Matrix m(2 * n, n);
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) {
      m(j, i) = theta(i, j);
      m(n + j, i) = theta(j, i);
    }
  return nullspace(m);
}

BilinearForm parse_form(std::string_view text, size_t n, const FieldRef& field,
                        const std::vector<BilinearForm>* nabla) {
  BilinearForm f(n, n);
  for (const auto& t : parse_linear_combination(text, field)) {
    const std::string& s = t.symbol;
    if (s.size() == 3 && s[0] == 'D' && std::isdigit(static_cast<unsigned char>(s[1])) &&
        std::isdigit(static_cast<unsigned char>(s[2]))) {
      const size_t i = static_cast<size_t>(s[1] - '1'), j = static_cast<size_t>(s[2] - '1');
      if (s[1] == '0' || s[2] == '0' || i >= n || j >= n) throw ParseError("index out of range in '" + s + "'");
      f(i, j) += t.coeff;
    } else if (nabla && s.size() >= 2 && s[0] == 'N') {
      size_t k = 0;
      for (size_t p = 1; p < s.size(); ++p) {
        if (!std::isdigit(static_cast<unsigned char>(s[p]))) throw ParseError("bad form token '" + s + "'");
        k = k * 10 + static_cast<size_t>(s[p] - '0');
      }
      if (k < 1 || k > nabla->size()) throw ParseError("nabla index out of range in '" + s + "'");
      const BilinearForm& b = (*nabla)[k - 1];
      for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) f(r, c) += t.coeff * b(r, c);
    } else {
      throw ParseError("bad form token '" + (s.empty() ? t.coeff.to_string() : s) + "'");
    }
  }
  return f;
}

std::string format_form(const BilinearForm& f) {
  std::vector<Term> terms;
  for (size_t i = 0; i < f.rows(); ++i)
    for (size_t j = 0; j < f.cols(); ++j)
      if (!f(i, j).is_zero()) terms.push_back({f(i, j), "D" + std::to_string(i + 1) + std::to_string(j + 1)});
  return format_linear_combination(terms);
}

}  // namespace zinbiel
