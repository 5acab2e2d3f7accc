#pragma once

// Finite-dimensional algebras given by structure constants c_ij^k, with the
// Zinbiel identity checker, annihilators, nilpotency chain and fingerprints.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "zinbiel/linalg.hpp"

namespace zinbiel {

class Algebra {
 public:
  Algebra() = default;
  /// Zero algebra of dimension n.
  explicit Algebra(size_t n, std::string name = {});

  size_t dim() const { return n_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Coefficient of e_k in e_i e_j (0-based indices).
  const FieldElement& c(size_t i, size_t j, size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
  FieldElement& c(size_t i, size_t j, size_t k) { return c_[(i * n_ + j) * n_ + k]; }

  Vector basis_product(size_t i, size_t j) const;
  void set_basis_product(size_t i, size_t j, std::span<const FieldElement> v);
  Vector product(std::span<const FieldElement> x, std::span<const FieldElement> y) const;
  /// Matrix of y -> x y.
  Matrix left_multiplication(std::span<const FieldElement> x) const;
  /// Matrix of y -> y x.
  Matrix right_multiplication(std::span<const FieldElement> x) const;

  /// Number field shared by all constants (nullptr when everything is rational).
  FieldRef field() const;
  bool is_zero() const;

  friend bool operator==(const Algebra& a, const Algebra& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

 private:
  size_t n_ = 0;
  std::string name_;
  std::vector<FieldElement> c_;
};

struct IdentityWitness {
  bool holds = true;
  size_t i = 0, j = 0, k = 0;  // 1-based, meaningful when !holds
  Vector defect;
  std::string to_string() const;
};

/// Checks (e_i e_j) e_k = e_i (e_j e_k + e_k e_j) on all basis triples.
IdentityWitness check_zinbiel(const Algebra& a);

Subspace annihilator(const Algebra& a);
/// {x : xA = 0}
Subspace left_annihilator(const Algebra& a);
/// {x : Ax = 0}
Subspace right_annihilator(const Algebra& a);
/// span{u v : u in U, v in V}
Subspace product_space(const Algebra& a, const Subspace& u, const Subspace& v);
/// Derivations D with D(xy) = D(x)y + xD(y), as a subspace of n x n matrices (row-major).
Subspace derivations(const Algebra& a);

struct Nilpotency {
  bool nilpotent = false;
  size_t index = 0;               ///< least k with A^k = 0
  std::vector<size_t> chain;      ///< dim A^1, dim A^2, ...
};

/// A^1 = A, A^k = sum_{p+q=k} A^p A^q until zero or stabilization.
Nilpotency is_nilpotent(const Algebra& a);

/// Integer invariants of the isomorphism class; see fingerprint_layout().
std::vector<long> fingerprint(const Algebra& a);
std::string fingerprint_layout(size_t n);

/// Structure constants in the basis given by the columns of p (which must be invertible).
Algebra transport(const Algebra& a, const Matrix& p);

/// Algebra file format: `dim <n>`, optional `field <m(x)>`, then lines
/// `e<i>*e<j> = <scalar> e<k> [+ <scalar> e<k'> ...]`; `#` starts a comment.
Algebra parse_algebra(std::string_view text);
std::string format_algebra(const Algebra& a);
Algebra load_algebra_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

/// Human-readable product list such as `e1e1=e2, e1e2=1/2 e3`.
std::string describe_products(const Algebra& a);

}  // namespace zinbiel
