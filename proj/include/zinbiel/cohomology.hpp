#pragma once

// Second cohomology for the Zinbiel cocycle law theta(xy,z) = theta(x, yz+zy).
// Bilinear forms are n x n matrices with entry (i,j) = theta(e_i, e_j); as
// vectors they are flattened row-major (index i*n+j), which is the coordinate
// space of Z^2, B^2 and the Delta_ij basis.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zinbiel/algebra.hpp"

namespace zinbiel {

using BilinearForm = Matrix;

Vector flatten(const BilinearForm& f);
BilinearForm unflatten(std::span<const FieldElement> v, size_t n);
/// Elementary form Delta_ij (0-based).
BilinearForm delta(size_t n, size_t i, size_t j);

struct CocycleWitness {
  bool holds = true;
  size_t i = 0, j = 0, k = 0;  // 1-based
  FieldElement defect;
  std::string to_string() const;
};

CocycleWitness check_cocycle(const Algebra& a, const BilinearForm& theta);
bool is_cocycle(const Algebra& a, const BilinearForm& theta);
/// delta f (x,y) = f(xy) for the linear functional with values f(e_k) = f[k].
BilinearForm coboundary(const Algebra& a, std::span<const FieldElement> f);

Subspace cocycle_space(const Algebra& a);
Subspace coboundary_space(const Algebra& a);

/// Z^2, B^2 and a fixed basis of representatives of H^2 = Z^2 / B^2.
class Cohomology {
 public:
  /// Automatic basis: pivot completion of B^2 inside Z^2.
  explicit Cohomology(const Algebra& a);
  /// Supplied basis; throws std::invalid_argument unless the forms are cocycles
  /// whose classes form a basis of H^2.
  Cohomology(const Algebra& a, std::vector<BilinearForm> representatives);

  size_t n() const { return n_; }
  size_t dim() const { return reps_.size(); }
  const Subspace& cocycles() const { return z2_; }
  const Subspace& coboundaries() const { return b2_; }
  const std::vector<BilinearForm>& representatives() const { return reps_; }

  /// Coordinates of [theta] in the representative basis; throws if theta is not a cocycle.
  Vector class_coordinates(const BilinearForm& theta) const;
  /// Sum of coords_i * representative_i.
  BilinearForm form(std::span<const FieldElement> coords) const;

 private:
  void build_solver();
  size_t n_ = 0;
  Subspace z2_, b2_;
  std::vector<BilinearForm> reps_;
  Matrix system_;  // columns: representatives, then B^2 basis
};

/// Span of the classes of `forms` in H^2 coordinates.
Subspace class_subspace(const Cohomology& h, const std::vector<BilinearForm>& forms);

/// Ann(theta) = {x : theta(x,A) + theta(A,x) = 0}.
Subspace radical(const BilinearForm& theta);

/// `1 D12 + 2 D21 + 1 D33`; with `nabla` given, tokens `N<k>` stand for nabla[k-1].
BilinearForm parse_form(std::string_view text, size_t n, const FieldRef& field = nullptr,
                        const std::vector<BilinearForm>* nabla = nullptr);
std::string format_form(const BilinearForm& f);

}  // namespace zinbiel
