#pragma once

// Dense exact linear algebra over a field: echelon forms, nullspaces and
// canonical subspaces (Grassmannian points stored in reduced row-echelon form).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zinbiel/scalars.hpp"

namespace zinbiel {

using Vector = std::vector<FieldElement>;

Vector zero_vector(size_t n);
Vector unit_vector(size_t n, size_t i);
bool is_zero(std::span<const FieldElement> v);
std::string to_string(std::span<const FieldElement> v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static Matrix identity(size_t n);
  /// Rows must all have the same length.
  static Matrix from_rows(const std::vector<Vector>& rows, size_t cols_if_empty = 0);
  static Matrix from_columns(const std::vector<Vector>& columns, size_t rows_if_empty = 0);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  FieldElement& operator()(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const FieldElement& operator()(size_t r, size_t c) const { return a_[r * cols_ + c]; }
  std::span<const FieldElement> row(size_t r) const { return {a_.data() + r * cols_, cols_}; }
  Vector row_vector(size_t r) const { return Vector(row(r).begin(), row(r).end()); }
  Vector column(size_t c) const;
  std::span<const FieldElement> entries() const { return a_; }

  Matrix transpose() const;
  Vector apply(std::span<const FieldElement> v) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;
  /// One row per line, entries separated by spaces or commas; `#` starts a comment.
  static Matrix parse(std::string_view text, const FieldRef& field = nullptr);

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<FieldElement> a_;
};

struct EchelonForm {
  Matrix reduced;               ///< zero rows dropped
  std::vector<size_t> pivots;   ///< pivot column of each row, strictly increasing
};

EchelonForm echelon(const Matrix& m);
/// Fraction-free Gauss-Jordan over Q fed one row at a time, for tall systems
/// where only the rank or the final echelon form matters.
class RationalRowReducer {
 public:
  explicit RationalRowReducer(size_t cols);
  /// True when the row raised the rank.
  bool add(std::span<const mpq_class> row);
  size_t rank() const { return basis_.size(); }
  size_t cols() const { return cols_; }
  EchelonForm echelon() const;

 private:
  size_t cols_;
  std::vector<std::vector<mpz_class>> basis_;  // primitive integer rows, fully reduced, insertion order
  std::vector<size_t> pivots_;
  std::vector<mpz_class> scratch_;
};

/// Reduced row-echelon form with the original shape (zero rows kept at the bottom).
Matrix rref(const Matrix& m);
size_t rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
FieldElement determinant(const Matrix& m);
/// Some x with m x = rhs (free variables set to 0), or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, std::span<const FieldElement> rhs);

/// Linear subspace of F^n with its basis kept in reduced row-echelon form, so
/// equality of subspaces is equality of stored bases.
class Subspace {
 public:
  explicit Subspace(size_t ambient_dim = 0) : ambient_(ambient_dim) {}
  static Subspace span(size_t ambient_dim, const std::vector<Vector>& generators);
  static Subspace full(size_t ambient_dim);
  static Subspace from_rows_of(const Matrix& m) { return span(m.cols(), rows_of(m)); }

  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<size_t>& pivots() const { return pivots_; }
  Matrix basis_matrix() const { return Matrix::from_rows(basis_, ambient_); }

  /// v minus its projection along the basis; zero exactly when v lies in the subspace.
  Vector reduce(std::span<const FieldElement> v) const;
  bool contains(std::span<const FieldElement> v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v with respect to basis(); v must lie in the subspace.
  Vector coordinates(std::span<const FieldElement> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  std::string to_string() const;

 private:
  static std::vector<Vector> rows_of(const Matrix& m);
  size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<size_t> pivots_;
};

/// Kernel {v : m v = 0}.
Subspace nullspace(const Matrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
/// Zassenhaus: echelonize [[A, A], [B, 0]]; rows with vanishing left half span A ∩ B.
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool membership(std::span<const FieldElement> v, const Subspace& s);
/// Vectors completing a basis of `sub` to a basis of `whole`, each reduced modulo `sub`.
std::vector<Vector> quotient_representatives(const Subspace& whole, const Subspace& sub);

}  // namespace zinbiel
