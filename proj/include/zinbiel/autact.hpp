#pragma once

// Automorphisms and their action (phi theta)(x,y) = theta(phi x, phi y) on
// cocycles, H^2 classes and subspaces of H^2.

#include <string>

#include "zinbiel/cohomology.hpp"

namespace zinbiel {

struct AutomorphismWitness {
  bool holds = true;
  bool invertible = true;
  size_t i = 0, j = 0;  // 1-based violating pair when invertible && !holds
  Vector defect;
  std::string to_string() const;
};

/// phi has the images of the basis vectors as columns.
AutomorphismWitness is_automorphism(const Algebra& a, const Matrix& phi);

struct NotAnAutomorphism : std::invalid_argument {
  explicit NotAnAutomorphism(const AutomorphismWitness& w)
      : std::invalid_argument("not an automorphism: " + w.to_string()) {}
};

/// phi^T theta phi, without checking phi.
BilinearForm act(const Matrix& phi, const BilinearForm& theta);
/// Checks phi is an automorphism of a, then returns act(phi, theta).
BilinearForm act_on_cocycle(const Algebra& a, const Matrix& phi, const BilinearForm& theta);
/// W given in H^2 coordinates of h; acts on representatives and re-reduces modulo B^2.
Subspace act_on_subspace(const Algebra& a, const Cohomology& h, const Matrix& phi, const Subspace& w);

struct CubicCheck {
  bool satisfies = false;    ///< k^3 - 3 q k^2 - 3 k + q = 0
  bool degenerate = false;   ///< k^2 + 1 = 0
  bool system_holds = false; ///< with y = k w, w = (1-3k^2)/(a1 (k^2+1)^2) the original pair holds
  std::string to_string() const;
};

/// Reduction of the system
///   w (w^2 - 3 y^2) / (w^2 + y^2)^2 = a1,  y (3 w^2 - y^2) / (w^2 + y^2)^2 = a2
/// to k = y / w on k^3 - 3 q k^2 - 3 k + q = 0 with q = a2 / a1 and a2 = q a1.
/// The system check is skipped (false) when degenerate.
CubicCheck check_cubic_reduction(const FieldElement& q, const FieldElement& k,
                                 const FieldElement& a1 = FieldElement(1));

/// The companion system
///   (w^2 + y^2)^3 a2^2 / (4 (w^2 - 3 y^2)^2 w^2) = a1,  (3 w^2 - y^2) y / (y^2 + w^2) = 1.
struct SecondReductionCheck {
  bool system_holds = false;
  bool nondegenerate = false;  ///< 4 a1 - a2^2 != 0
  std::string to_string() const;
};
SecondReductionCheck check_second_reduction(const FieldElement& a1, const FieldElement& a2,
                                            const FieldElement& y, const FieldElement& w);

}  // namespace zinbiel
