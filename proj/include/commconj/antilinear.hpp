// Copyright 2026 The commconj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * antilinear.hpp — antilinear maps on Cⁿ stored as x ↦ A·conj(x).
 *
 * With that representation the usual operator identities become matrix
 * algebra:
 *
 *   C∘C'            linear,      A·conj(A')
 *   M∘C             antilinear,  M·A
 *   C∘M             antilinear,  A·conj(M)
 *   W C W*          antilinear,  W·A·Wᵗ
 *   C U C           linear,      A·conj(U)·conj(A)
 *
 * C is a conjugation (isometric involution) iff A is unitary and Aᵗ = A.
 * C commutes with U iff A·conj(U)·conj(A) = U; C is U-symmetric iff the
 * same product equals U*.
 */

#ifndef COMMCONJ_ANTILINEAR_HPP
#define COMMCONJ_ANTILINEAR_HPP

#include <string>
#include <utility>

#include "commconj/linalg.hpp"

namespace commconj {

struct AntilinearOperator {
  Matrix a;

  AntilinearOperator() = default;
  explicit AntilinearOperator(Matrix m) : a(std::move(m)) {
    require_square(a, "AntilinearOperator");
    require_finite(a, "AntilinearOperator");
  }

  /// Plain entrywise conjugation on Cⁿ.
  static AntilinearOperator conjugation(Eigen::Index n) {
    return AntilinearOperator(Matrix::Identity(n, n));
  }

  [[nodiscard]] Eigen::Index dim() const { return a.rows(); }
};

struct ConjugationReport {
  double isometry_defect = 0.0;     // ‖A*A − I‖_F
  double involution_defect = 0.0;   // ‖A·conj(A) − I‖_F
  double transpose_defect = 0.0;    // ‖A − Aᵗ‖_F
  double commutation_defect = 0.0;  // ‖CUC − U‖_F
  double symmetry_defect = 0.0;     // ‖CUC − U*‖_F
  double threshold = 0.0;
  bool passed = false;
};

inline Vector apply(const AntilinearOperator& c, const Vector& x) {
  if (x.size() != c.dim()) {
    throw ValidationError("apply: vector length " + std::to_string(x.size()) +
                          " does not match operator dimension " +
                          std::to_string(c.dim()));
  }
  return c.a * x.conjugate();
}

/// Conjugation test: A unitary and symmetric within tol. The report carries
/// the isometry, involution and transpose defects.
inline std::pair<bool, ConjugationReport> is_conjugation(
    const AntilinearOperator& c, const Tolerance& tol = {}) {
  ConjugationReport r;
  const auto n = c.dim();
  r.isometry_defect = unitarity_defect(c.a);
  r.involution_defect =
      (c.a * c.a.conjugate() - Matrix::Identity(n, n)).norm();
  r.transpose_defect = transpose_defect(c.a);
  r.threshold = tol.bound(c.a.norm());
  r.passed = r.isometry_defect <= r.threshold &&
             r.transpose_defect <= r.threshold;
  return {r.passed, r};
}

/// Antilinear ∘ antilinear: a linear map with matrix A_left·conj(A_right).
inline Matrix compose(const AntilinearOperator& left,
                      const AntilinearOperator& right) {
  require_same_size(left.a, right.a, "compose");
  return left.a * right.a.conjugate();
}

/// Linear ∘ antilinear.
inline AntilinearOperator compose(const Matrix& left,
                                  const AntilinearOperator& right) {
  require_same_size(left, right.a, "compose");
  return AntilinearOperator(left * right.a);
}

/// Antilinear ∘ linear.
inline AntilinearOperator compose(const AntilinearOperator& left,
                                  const Matrix& right) {
  require_same_size(left.a, right, "compose");
  return AntilinearOperator(left.a * right.conjugate());
}

/// W C W* for unitary W; matrix W·A·Wᵗ.
inline AntilinearOperator transport(const AntilinearOperator& c,
                                    const Matrix& w,
                                    const Tolerance& tol = {}) {
  require_same_size(c.a, w, "transport");
  require_unitary(w, "transport: W", tol);
  return AntilinearOperator(w * c.a * w.transpose());
}

/// Matrix of the linear map C U C.
inline Matrix sandwich(const AntilinearOperator& c, const Matrix& u) {
  require_same_size(c.a, u, "sandwich");
  return c.a * u.conjugate() * c.a.conjugate();
}

/// ‖CUC − U‖_F.
inline double commutation_defect(const AntilinearOperator& c, const Matrix& u,
                                 const Tolerance& tol = {}) {
  require_unitary(u, "commutation_defect: U", tol);
  return (sandwich(c, u) - u).norm();
}

/// ‖CUC − U*‖_F.
inline double symmetry_defect(const AntilinearOperator& c, const Matrix& u,
                              const Tolerance& tol = {}) {
  require_unitary(u, "symmetry_defect: U", tol);
  return (sandwich(c, u) - u.adjoint()).norm();
}

/// ⟨x, y⟩ linear in the first slot.
inline Complex inner(const Vector& x, const Vector& y) { return y.dot(x); }

}  // namespace commconj

#endif  // COMMCONJ_ANTILINEAR_HPP
