#include "zinbiel/linalg.hpp"

#include <algorithm>

#include <stdexcept>

#include "zinbiel/text.hpp"

namespace zinbiel {

Vector zero_vector(size_t n) { return Vector(n); }

Vector unit_vector(size_t n, size_t i) {
  Vector v(n);
  v.at(i) = FieldElement(1);
  return v;
}

bool is_zero(std::span<const FieldElement> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::string to_string(std::span<const FieldElement> v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Matrix

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = FieldElement(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, size_t cols_if_empty) {
  const size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  Matrix m(rows.size(), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, size_t rows_if_empty) {
  const size_t rows = columns.empty() ? rows_if_empty : columns.front().size();
  Matrix m(rows, columns.size());
  for (size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("ragged matrix columns");
    for (size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::column(size_t c) const {
  Vector v(rows_);
  for (size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(std::span<const FieldElement> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  Vector out(rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) {
      const auto& a = (*this)(r, c);
      if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
    }
  return out;
}

bool Matrix::is_zero() const { return zinbiel::is_zero(a_); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
  Matrix out(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum size mismatch");
  Matrix out = a;
  for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += b.a_[i];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (size_t r = 0; r < rows_; ++r) {
    if (r) out += ", ";
    out += zinbiel::to_string(row(r));
  }
  return out + "]";
}

Matrix Matrix::parse(std::string_view text, const FieldRef& field) {
  std::vector<Vector> rows;
  for (const auto& raw : split_lines(text)) {
    std::string line = strip_comment(raw);
    for (char& c : line)
      if (c == ',') c = ' ';
    Vector row;
    size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && line[pos] == ' ') ++pos;
      size_t end = pos;
      while (end < line.size() && line[end] != ' ') ++end;
      if (end > pos) row.push_back(FieldElement::parse(line.substr(pos, end - pos), field));
      pos = end;
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) throw ParseError("matrix rows have different lengths");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix");
  return from_rows(rows);
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

bool all_rational(const Matrix& m) {
  for (const auto& e : m.entries())
    if (e.field()) return false;
  return true;
}

void make_primitive(std::vector<mpz_class>& v, size_t from) {
  mpz_class g = 0;
  for (size_t c = from; c < v.size(); ++c)
    if (sgn(v[c]) != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[c].get_mpz_t());
      if (g == 1) return;
    }
  if (g > 1)
    for (size_t c = from; c < v.size(); ++c)
      if (sgn(v[c]) != 0) mpz_divexact(v[c].get_mpz_t(), v[c].get_mpz_t(), g.get_mpz_t());
}

// v <- a v - b w on columns >= from, then strip the content.
void eliminate(std::vector<mpz_class>& v, const std::vector<mpz_class>& w, size_t col, size_t from) {
  const mpz_class a = w[col], b = v[col];
  for (size_t c = from; c < v.size(); ++c) {
    if (sgn(w[c]) == 0) {
      if (sgn(v[c]) != 0) v[c] *= a;
    } else {
      v[c] = a * v[c] - b * w[c];
    }
  }
  make_primitive(v, from);
}

}  // namespace

RationalRowReducer::RationalRowReducer(size_t cols) : cols_(cols), scratch_(cols) {}

bool RationalRowReducer::add(std::span<const mpq_class> row) {
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  if (basis_.size() == cols_) return false;
  mpz_class lcm = 1;
  bool nonzero = false;
  for (const auto& q : row) {
    if (sgn(q) == 0) continue;
    nonzero = true;
    if (q.get_den() != 1) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  if (!nonzero) return false;
  std::vector<mpz_class>& v = scratch_;
  for (size_t c = 0; c < cols_; ++c) {
    if (sgn(row[c]) == 0) v[c] = 0;
    else if (lcm == 1) v[c] = row[c].get_num();
    else v[c] = row[c].get_num() * (lcm / row[c].get_den());
  }
  make_primitive(v, 0);
  for (size_t b = 0; b < basis_.size(); ++b)
    if (sgn(v[pivots_[b]]) != 0) eliminate(v, basis_[b], pivots_[b], 0);
  size_t lead = 0;
  while (lead < cols_ && sgn(v[lead]) == 0) ++lead;
  if (lead == cols_) return false;
  for (auto& r : basis_)
    if (sgn(r[lead]) != 0) eliminate(r, v, lead, 0);
  pivots_.push_back(lead);
  basis_.push_back(v);
  return true;
}

EchelonForm RationalRowReducer::echelon() const {
  std::vector<size_t> order(basis_.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) { return pivots_[x] < pivots_[y]; });
  std::vector<std::vector<mpz_class>> rows;
  std::vector<size_t> pivots;
  for (size_t i : order) {
    rows.push_back(basis_[i]);
    pivots.push_back(pivots_[i]);
  }
  Matrix reduced(rows.size(), cols_);
  for (size_t r = 0; r < rows.size(); ++r) {
    const mpz_class& p = rows[r][pivots[r]];
    for (size_t c = 0; c < cols_; ++c)
      if (sgn(rows[r][c]) != 0) reduced(r, c) = Rational(mpq_class(rows[r][c], p));
  }
  return {std::move(reduced), std::move(pivots)};
}

namespace {

EchelonForm echelon_rational(const Matrix& m) {
  RationalRowReducer red(m.cols());
  std::vector<mpq_class> row(m.cols());
  for (size_t r = 0; r < m.rows() && red.rank() < m.cols(); ++r) {
    for (size_t c = 0; c < m.cols(); ++c) row[c] = m(r, c).coords()[0].raw();
    red.add(row);
  }
  return red.echelon();
}

}  // namespace

EchelonForm echelon(const Matrix& m) {
  if (all_rational(m)) return echelon_rational(m);
  Matrix a = m;
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
    const FieldElement inv = a(row, col).inverse();
    for (size_t c = col; c < a.cols(); ++c)
      if (!a(row, c).is_zero()) a(row, c) *= inv;
    for (size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const FieldElement f = a(r, col);
      for (size_t c = col; c < a.cols(); ++c)
        if (!a(row, c).is_zero()) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  Matrix reduced(row, a.cols());
  for (size_t r = 0; r < row; ++r)
    for (size_t c = 0; c < a.cols(); ++c) reduced(r, c) = a(r, c);
  return {std::move(reduced), std::move(pivots)};
}

Matrix rref(const Matrix& m) {
  EchelonForm e = echelon(m);
  Matrix out(m.rows(), m.cols());
  for (size_t r = 0; r < e.reduced.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) out(r, c) = e.reduced(r, c);
  return out;
}

size_t rank(const Matrix& m) { return echelon(m).pivots.size(); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = FieldElement(1);
  }
  EchelonForm e = echelon(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

FieldElement determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix a = m;
  const size_t n = a.rows();
  FieldElement det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t p = col;
    while (p < n && a(p, col).is_zero()) ++p;
    if (p == n) return FieldElement(0);
    if (p != col) {
      for (size_t c = 0; c < n; ++c) std::swap(a(p, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    const FieldElement inv = a(col, col).inverse();
    for (size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const FieldElement f = a(r, col) * inv;
      for (size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

std::optional<Vector> solve(const Matrix& m, std::span<const FieldElement> rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("right-hand side has wrong length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (size_t r = 0; r < m.rows(); ++r) {
    for (size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  EchelonForm e = echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

// ---------------------------------------------------------------------------
// Subspace

std::vector<Vector> Subspace::rows_of(const Matrix& m) {
  std::vector<Vector> rows;
  rows.reserve(m.rows());
  for (size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row_vector(r));
  return rows;
}

Subspace Subspace::span(size_t ambient_dim, const std::vector<Vector>& generators) {
  Subspace s(ambient_dim);
  if (generators.empty()) return s;
  for (const auto& g : generators)
    if (g.size() != ambient_dim) throw std::invalid_argument("generator length does not match ambient dimension");
  EchelonForm e = echelon(Matrix::from_rows(generators));
  s.basis_ = rows_of(e.reduced);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::full(size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back(unit_vector(ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Vector Subspace::reduce(std::span<const FieldElement> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector length does not match ambient dimension");
  Vector out(v.begin(), v.end());
  for (size_t i = 0; i < basis_.size(); ++i) {
    const FieldElement f = out[pivots_[i]];
    if (f.is_zero()) continue;
    for (size_t c = pivots_[i]; c < ambient_; ++c)
      if (!basis_[i][c].is_zero()) out[c] -= f * basis_[i][c];
  }
  return out;
}

bool Subspace::contains(std::span<const FieldElement> v) const { return zinbiel::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("subspace dimension mismatch");
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

Vector Subspace::coordinates(std::span<const FieldElement> v) const {
  if (!contains(v)) throw std::invalid_argument("vector is not in the subspace");
  Vector c(basis_.size());
  for (size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

std::string Subspace::to_string() const {
  std::string out = "<";
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (i) out += ", ";
    out += zinbiel::to_string(basis_[i]);
  }
  return out + ">";
}

Subspace nullspace(const Matrix& m) {
  EchelonForm e = echelon(m);
  const size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = FieldElement(1);
    for (size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    gens.push_back(std::move(v));
  }
  return Subspace::span(n, gens);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("subspace dimension mismatch");
  std::vector<Vector> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), gens);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("subspace dimension mismatch");
  const size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace(n);
  Matrix z(a.dim() + b.dim(), 2 * n);
  for (size_t r = 0; r < a.dim(); ++r)
    for (size_t c = 0; c < n; ++c) {
      z(r, c) = a.basis()[r][c];
      z(r, n + c) = a.basis()[r][c];
    }
  for (size_t r = 0; r < b.dim(); ++r)
    for (size_t c = 0; c < n; ++c) z(a.dim() + r, c) = b.basis()[r][c];
  EchelonForm e = echelon(z);
  std::vector<Vector> gens;
  for (size_t r = 0; r < e.reduced.rows(); ++r) {
    if (e.pivots[r] < n) continue;
    gens.emplace_back(e.reduced.row(r).begin() + static_cast<long>(n), e.reduced.row(r).end());
  }
  return Subspace::span(n, gens);
}

bool membership(std::span<const FieldElement> v, const Subspace& s) {
  if (v.size() != s.ambient_dim()) throw std::invalid_argument("vector length does not match ambient dimension");
  return s.contains(v);
}

std::vector<Vector> quotient_representatives(const Subspace& whole, const Subspace& sub) {
  if (!whole.contains(sub)) throw std::invalid_argument("subspace is not contained in the whole space");
  std::vector<Vector> reps;
  Subspace acc = sub;
  for (const auto& b : whole.basis()) {
    if (acc.contains(b)) continue;
    reps.push_back(sub.reduce(b));
    acc = subspace_sum(acc, Subspace::span(whole.ambient_dim(), {b}));
  }
  return reps;
}

}  // namespace zinbiel
