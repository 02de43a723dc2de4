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
 * linalg.hpp — dense complex matrix utilities shared by every other header.
 *
 *   unitarity_defect    ‖M*M − I‖_F
 *   haar_unitary        QR of a complex Gaussian matrix, R-diagonal phases
 *                       folded back into Q so the law is exactly Haar
 *   symmetric_unitary   Q = V·Vᵗ for Haar V (unitary with Qᵗ = Q)
 *   hermitian_sqrt_psd  spectral square root with a small clamp for
 *                       roundoff-negative eigenvalues
 *   four_unitary_split  A = (‖A‖/2)(U1 + U2 + U3 + U4), built from the
 *                       Hermitian/skew parts of A/‖A‖
 *
 * Every generator takes either a seed or a caller-held std::mt19937_64; there
 * is no global RNG state.
 */

#ifndef COMMCONJ_LINALG_HPP
#define COMMCONJ_LINALG_HPP

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>

#include "commconj/error.hpp"

namespace commconj {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using Rng = std::mt19937_64;

inline constexpr Complex kI{0.0, 1.0};

/// Absolute plus scale-relative acceptance threshold.
struct Tolerance {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;

  [[nodiscard]] double bound(double scale) const {
    return abs_tol + rel_tol * scale;
  }
  [[nodiscard]] bool accepts(double defect, double scale) const {
    return defect <= bound(scale);
  }
};

inline void require_square(const Matrix& m, const std::string& what) {
  if (m.rows() != m.cols()) {
    throw ValidationError(what + " must be square, got " +
                          std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()));
  }
}

inline void require_finite(const Matrix& m, const std::string& what) {
  if (!m.allFinite()) {
    throw ValidationError(what + " has non-finite entries");
  }
}

inline void require_same_size(const Matrix& a, const Matrix& b,
                              const std::string& what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError(what + ": dimension mismatch (" +
                          std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " vs " +
                          std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()) + ")");
  }
}

/// ‖M*M − I‖_F.
inline double unitarity_defect(const Matrix& m) {
  require_square(m, "unitarity_defect: matrix");
  const auto n = m.rows();
  return (m.adjoint() * m - Matrix::Identity(n, n)).norm();
}

/// ‖M − Mᵗ‖_F.
inline double transpose_defect(const Matrix& m) {
  require_square(m, "transpose_defect: matrix");
  return (m - m.transpose()).norm();
}

inline bool is_unitary(const Matrix& m, const Tolerance& tol = {}) {
  return m.rows() == m.cols() && unitarity_defect(m) <= tol.bound(m.norm());
}

inline bool is_symmetric_unitary(const Matrix& m, const Tolerance& tol = {}) {
  return is_unitary(m, tol) && transpose_defect(m) <= tol.bound(m.norm());
}

inline void require_unitary(const Matrix& m, const std::string& what,
                            const Tolerance& tol = {}) {
  require_square(m, what);
  require_finite(m, what);
  const double d = unitarity_defect(m);
  if (d > tol.bound(m.norm())) {
    throw ValidationError(what + " is not unitary (defect " +
                          std::to_string(d) + ")");
  }
}

/// Largest singular value.
inline double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

/// Entries (x + iy)/√2 with x, y standard normal.
inline Matrix complex_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix z(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(i, j) = Complex(re, im) / std::sqrt(2.0);
    }
  }
  return z;
}

inline Matrix haar_unitary(Eigen::Index n, Rng& rng) {
  if (n < 1) throw ValidationError("haar_unitary: n must be >= 1");
  const Matrix z = complex_gaussian(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    const Complex phase = mag > 0.0 ? r(j, j) / mag : Complex(1.0);
    q.col(j) *= phase;
  }
  return q;
}

inline Matrix haar_unitary(Eigen::Index n, std::uint64_t seed) {
  Rng rng(seed);
  return haar_unitary(n, rng);
}

/// Q = V·Vᵗ with V Haar; exactly symmetric (entries mirrored after the
/// product) and unitary to roundoff.
inline Matrix symmetric_unitary(Eigen::Index n, Rng& rng) {
  if (n < 1) throw ValidationError("symmetric_unitary: n must be >= 1");
  const Matrix v = haar_unitary(n, rng);
  Matrix q = v * v.transpose();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (q(i, j) + q(j, i));
      q(i, j) = avg;
      q(j, i) = avg;
    }
  }
  return q;
}

inline Matrix symmetric_unitary(Eigen::Index n, std::uint64_t seed) {
  Rng rng(seed);
  return symmetric_unitary(n, rng);
}

/// Haar orthogonal matrix with real entries.
inline RealMatrix real_haar_orthogonal(Eigen::Index n, Rng& rng) {
  if (n < 1) throw ValidationError("real_haar_orthogonal: n must be >= 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  RealMatrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) g(i, j) = normal(rng);
  Eigen::HouseholderQR<RealMatrix> qr(g);
  RealMatrix q = qr.householderQ();
  for (Eigen::Index j = 0; j < n; ++j)
    if (qr.matrixQR()(j, j) < 0.0) q.col(j) *= -1.0;
  return q;
}

/// R·diag(±1)·Rᵗ: real, symmetric and orthogonal.
inline RealMatrix real_symmetric_orthogonal(Eigen::Index n, Rng& rng) {
  const RealMatrix r = real_haar_orthogonal(n, rng);
  std::bernoulli_distribution coin(0.5);
  Eigen::VectorXd signs(n);
  for (Eigen::Index i = 0; i < n; ++i) signs(i) = coin(rng) ? 1.0 : -1.0;
  RealMatrix s = r * signs.asDiagonal() * r.transpose();
  return 0.5 * (s + s.transpose());
}

/// Positive semidefinite square root of a Hermitian matrix. Eigenvalues in
/// [−abs_tol, 0) are clamped to zero.
inline Matrix hermitian_sqrt_psd(const Matrix& h, const Tolerance& tol = {}) {
  require_square(h, "hermitian_sqrt_psd: input");
  require_finite(h, "hermitian_sqrt_psd: input");
  const double skew = (h - h.adjoint()).norm();
  if (skew > tol.bound(h.norm())) {
    throw ValidationError("hermitian_sqrt_psd: input is not Hermitian (‖H − H*‖ = " +
                          std::to_string(skew) + ")");
  }
  if (h.size() == 0) return h;
  const Matrix herm = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(herm);
  Eigen::VectorXd vals = eig.eigenvalues();
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) < -tol.abs_tol) {
      throw ValidationError("hermitian_sqrt_psd: eigenvalue " +
                            std::to_string(vals(i)) + " is negative");
    }
    vals(i) = std::sqrt(std::max(vals(i), 0.0));
  }
  const Matrix& q = eig.eigenvectors();
  Matrix s = q * vals.cast<Complex>().asDiagonal() * q.adjoint();
  return 0.5 * (s + s.adjoint());
}

struct FourUnitarySplit {
  double scale = 0.0;
  std::array<Matrix, 4> unitaries;

  [[nodiscard]] Matrix reconstruct() const {
    return scale * (unitaries[0] + unitaries[1] + unitaries[2] + unitaries[3]);
  }
};

/// A = (‖A‖/2)(U1 + U2 + U3 + U4) with
///   H = (A + A*)/(2‖A‖),  K = (A − A*)/(2i‖A‖),
///   U1,2 = H ± i·√(I − H²),  U3,4 = iK ± √(I − K²).
/// The zero matrix gets scale 0 and the quadruple (I, I, I, −I).
inline FourUnitarySplit four_unitary_split(const Matrix& a) {
  require_square(a, "four_unitary_split: input");
  require_finite(a, "four_unitary_split: input");
  const auto n = a.rows();
  const Matrix id = Matrix::Identity(n, n);
  FourUnitarySplit out;
  const double norm = operator_norm(a);
  if (norm == 0.0) {
    out.unitaries = {id, id, id, -id};
    return out;
  }
  const Matrix h = (a + a.adjoint()) / (2.0 * norm);
  const Matrix k = (a - a.adjoint()) / (2.0 * kI * norm);
  const Matrix h_root = hermitian_sqrt_psd(id - h * h);
  const Matrix k_root = hermitian_sqrt_psd(id - k * k);
  out.scale = norm / 2.0;
  out.unitaries = {h + kI * h_root, h - kI * h_root, kI * k + k_root,
                   kI * k - k_root};
  return out;
}

}  // namespace commconj

#endif  // COMMCONJ_LINALG_HPP
