#include "zinbiel/autact.hpp"

namespace zinbiel {

std::string AutomorphismWitness::to_string() const {
  if (holds) return "holds";
  if (!invertible) return "matrix is singular";
  return "violated at (" + std::to_string(i) + "," + std::to_string(j) + "), defect " + zinbiel::to_string(defect);
}

AutomorphismWitness is_automorphism(const Algebra& a, const Matrix& phi) {
  const size_t n = a.dim();
  if (phi.rows() != n || phi.cols() != n) throw std::invalid_argument("morphism size does not match algebra");
  AutomorphismWitness w;
  if (determinant(phi).is_zero()) {
    w.holds = false;
    w.invertible = false;
    return w;
  }
  std::vector<Vector> images;
  for (size_t i = 0; i < n; ++i) images.push_back(phi.column(i));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vector lhs = phi.apply(a.basis_product(i, j));
      const Vector rhs = a.product(images[i], images[j]);
      for (size_t k = 0; k < n; ++k) lhs[k] -= rhs[k];
      if (!is_zero(lhs)) {
        w.holds = false;
        w.i = i + 1;
        w.j = j + 1;
        w.defect = std::move(lhs);
        return w;
      }
    }
  return w;
}

BilinearForm act(const Matrix& phi, const BilinearForm& theta) { return phi.transpose() * theta * phi; }

BilinearForm act_on_cocycle(const Algebra& a, const Matrix& phi, const BilinearForm& theta) {
  const AutomorphismWitness w = is_automorphism(a, phi);
  if (!w.holds) throw NotAnAutomorphism(w);
  return act(phi, theta);
}

Subspace act_on_subspace(const Algebra& a, const Cohomology& h, const Matrix& phi, const Subspace& w) {
  if (w.ambient_dim() != h.dim()) throw std::invalid_argument("subspace is not in H^2 coordinates");
  const AutomorphismWitness aw = is_automorphism(a, phi);
  if (!aw.holds) throw NotAnAutomorphism(aw);
  std::vector<BilinearForm> images;
  for (const auto& v : w.basis()) images.push_back(act(phi, h.form(v)));
  return class_subspace(h, images);
}

std::string CubicCheck::to_string() const {
  std::string out = satisfies ? "cubic satisfied" : "cubic not satisfied";
  if (degenerate) out += ", degenerate k (k^2+1=0)";
  else out += system_holds ? ", system holds" : ", system fails";
  return out;
}

CubicCheck check_cubic_reduction(const FieldElement& q, const FieldElement& k, const FieldElement& a1) {
  CubicCheck r;
  const FieldElement k2 = k * k;
  r.satisfies = (k2 * k - FieldElement(3) * q * k2 - FieldElement(3) * k + q).is_zero();
  const FieldElement kk1 = k2 + FieldElement(1);
  r.degenerate = kk1.is_zero();
  if (r.degenerate || a1.is_zero()) return r;
  const FieldElement w = (FieldElement(1) - FieldElement(3) * k2) / (a1 * kk1 * kk1);
  const FieldElement y = k * w;
  const FieldElement a2 = q * a1;
  const FieldElement den = (w * w + y * y) * (w * w + y * y);
  if (den.is_zero()) return r;
  const bool first = (w * (w * w - FieldElement(3) * y * y) / den) == a1;
  const bool second = (y * (FieldElement(3) * w * w - y * y) / den) == a2;
  r.system_holds = first && second;
  return r;
}

std::string SecondReductionCheck::to_string() const {
  return std::string(system_holds ? "system holds" : "system fails") +
         (nondegenerate ? ", 4a1-a2^2 != 0" : ", 4a1-a2^2 = 0");
}

SecondReductionCheck check_second_reduction(const FieldElement& a1, const FieldElement& a2,
                                            const FieldElement& y, const FieldElement& w) {
  SecondReductionCheck r;
  r.nondegenerate = !(FieldElement(4) * a1 - a2 * a2).is_zero();
  const FieldElement w2 = w * w, y2 = y * y;
  const FieldElement d1 = FieldElement(4) * (w2 - FieldElement(3) * y2) * (w2 - FieldElement(3) * y2) * w2;
  const FieldElement d2 = y2 + w2;
  if (d1.is_zero() || d2.is_zero()) return r;
  const bool first = (d2 * d2 * d2 * a2 * a2 / d1) == a1;
  const bool second = ((FieldElement(3) * w2 - y2) * y / d2).is_one();
  r.system_holds = first && second;
  return r;
}

}  // namespace zinbiel
