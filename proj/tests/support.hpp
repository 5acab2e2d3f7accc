#pragma once
// Small helpers shared by the unit tests.

#include <algorithm>
#include <random>

#include "zinbiel/catalog.hpp"

namespace zt {

using namespace zinbiel;

inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(FieldElement(x));
  return v;
}

inline Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> rs;
  for (const auto& r : rows) rs.push_back(vec(r));
  return Matrix::from_rows(rs);
}

inline Algebra algebra(const char* text) { return parse_algebra(text); }

inline const Catalog& cat() { return Catalog::embedded(); }

inline Algebra base(const std::string& id) { return cat().lookup_text(id).algebra; }

inline Rational small_rational(std::mt19937_64& rng) {
  return Rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 3) + 1);
}

/// Random matrix with small rational entries; invertibility is the caller's business.
inline Matrix random_matrix(size_t n, std::mt19937_64& rng) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m(i, j) = small_rational(rng);
  return m;
}

inline Matrix random_invertible(size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m = random_matrix(n, rng);
    if (inverse(m)) return m;
  }
}

/// Lower times upper unitriangular with entries in -2..2, columns permuted: determinant +-1.
inline Matrix random_unimodular(size_t n, std::mt19937_64& rng) {
  Matrix l = Matrix::identity(n), u = Matrix::identity(n), p(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < i; ++j) {
      l(i, j) = FieldElement(static_cast<long>(rng() % 5) - 2);
      u(j, i) = FieldElement(static_cast<long>(rng() % 5) - 2);
    }
  std::vector<size_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (size_t i = 0; i < n; ++i) p(perm[i], i) = FieldElement(1);
  return l * u * p;
}

}  // namespace zt
