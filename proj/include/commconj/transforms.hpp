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
 * transforms.hpp — Fourier and Hilbert transforms in eigencoordinates.
 *
 * Fourier: F h_n = (−i)^n h_n on the Hermite functions. The first N Hermite
 * functions (N = 4q) are grouped by n mod 4 into class blocks of size q, in
 * the order 1, −i, −1, i; coordinate c·q + m is h_{4m+c}. The commuting
 * conjugations are
 *
 *     [[O₁, 0, 0, 0], [0, 0, 0, Uᵗ], [0, 0, O₂, 0], [0, U, 0, 0]] · J
 *
 * with O₁, O₂ symmetric unitary and U unitary.
 *
 * Hilbert: eigenvalues i (first half) and −i (second half); the commuting
 * conjugations are [[0, Uᵗ], [U, 0]] · J.
 *
 * The sampled cross-check evaluates h_n on a midpoint grid over [−L, L]
 * and applies the Riemann-sum Fourier matrix (dx/√(2π)) e^{−i x_j x_k}.
 */

#ifndef COMMCONJ_TRANSFORMS_HPP
#define COMMCONJ_TRANSFORMS_HPP

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "commconj/antilinear.hpp"
#include "commconj/linalg.hpp"

namespace commconj {

inline void require_multiple(Eigen::Index n, Eigen::Index k, const char* what) {
  if (n < k || n % k != 0) {
    throw ValidationError(std::string(what) + ": size " + std::to_string(n) +
                          " must be a positive multiple of " + std::to_string(k));
  }
}

/// (−i)^c for the class index c.
inline Complex fourier_eigenvalue(Eigen::Index n) {
  static const Complex table[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  return table[n % 4];
}

/// diag(I, −iI, −I, iI) in class-block coordinates.
inline Matrix fourier_operator(Eigen::Index n) {
  require_multiple(n, 4, "fourier_operator");
  const auto q = n / 4;
  Vector d(n);
  for (Eigen::Index c = 0; c < 4; ++c) d.segment(c * q, q).setConstant(fourier_eigenvalue(c));
  return d.asDiagonal();
}

/// Column n is the class-block coordinate vector of h_n.
inline Matrix hermite_to_class(Eigen::Index n) {
  require_multiple(n, 4, "hermite_to_class");
  const auto q = n / 4;
  Matrix p = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) p((k % 4) * q + k / 4, k) = 1.0;
  return p;
}

/// U# with ⟨U# e_m, e_n⟩ = conj(⟨U* e_m, e_n⟩), which is Uᵗ.
inline Matrix pairing_rule(const Matrix& u) {
  require_square(u, "pairing_rule: U");
  return u.transpose();
}

inline AntilinearOperator fourier_conjugation(Eigen::Index n, const Matrix& o1,
                                              const Matrix& o2, const Matrix& ui,
                                              const Tolerance& tol = {}) {
  require_multiple(n, 4, "fourier_conjugation");
  const auto q = n / 4;
  auto check_block = [&](const Matrix& b, const char* name) {
    if (b.rows() != q || b.cols() != q) {
      throw ValidationError(std::string("fourier_conjugation: ") + name +
                            " must be " + std::to_string(q) + "x" +
                            std::to_string(q));
    }
    require_unitary(b, std::string("fourier_conjugation: ") + name, tol);
  };
  check_block(o1, "O1");
  check_block(o2, "O2");
  check_block(ui, "Ui");
  for (const auto* o : {&o1, &o2}) {
    if (transpose_defect(*o) > tol.bound(o->norm())) {
      throw ValidationError(
          "fourier_conjugation: the +1/-1 blocks must be symmetric "
          "(O conj(O) = I is needed for an involution)");
    }
  }
  Matrix a = Matrix::Zero(n, n);
  a.block(0, 0, q, q) = o1;
  a.block(q, 3 * q, q, q) = pairing_rule(ui);
  a.block(2 * q, 2 * q, q, q) = o2;
  a.block(3 * q, q, q, q) = ui;
  return AntilinearOperator(std::move(a));
}

/// Real symmetric orthogonal blocks given as real matrices.
inline AntilinearOperator fourier_conjugation(Eigen::Index n,
                                              const RealMatrix& o1,
                                              const RealMatrix& o2,
                                              const Matrix& ui,
                                              const Tolerance& tol = {}) {
  return fourier_conjugation(n, Matrix(o1.cast<Complex>()),
                             Matrix(o2.cast<Complex>()), ui, tol);
}

/// diag(iI, −iI).
inline Matrix hilbert_operator(Eigen::Index n) {
  require_multiple(n, 2, "hilbert_operator");
  Vector d(n);
  d.head(n / 2).setConstant(kI);
  d.tail(n / 2).setConstant(-kI);
  return d.asDiagonal();
}

inline AntilinearOperator hilbert_conjugation(Eigen::Index n, const Matrix& ui,
                                              const Tolerance& tol = {}) {
  require_multiple(n, 2, "hilbert_conjugation");
  const auto h = n / 2;
  if (ui.rows() != h || ui.cols() != h) {
    throw ValidationError("hilbert_conjugation: Ui must be " + std::to_string(h) +
                          "x" + std::to_string(h));
  }
  require_unitary(ui, "hilbert_conjugation: Ui", tol);
  Matrix a = Matrix::Zero(n, n);
  a.block(0, h, h, h) = pairing_rule(ui);
  a.block(h, 0, h, h) = ui;
  return AntilinearOperator(std::move(a));
}

// Sampled Hermite cross-check --------------------------------------------

struct SampleGrid {
  Eigen::VectorXd x;
  double dx = 0.0;

  [[nodiscard]] Eigen::Index size() const { return x.size(); }
  [[nodiscard]] double half_width() const {
    return 0.5 * dx * static_cast<double>(x.size());
  }
};

/// n midpoints covering [−half_width, half_width].
inline SampleGrid midpoint_grid(Eigen::Index n, double half_width) {
  if (n < 2 || !(half_width > 0.0)) {
    throw ValidationError("midpoint_grid: need n >= 2 and a positive width");
  }
  SampleGrid g;
  g.dx = 2.0 * half_width / static_cast<double>(n);
  g.x.resize(n);
  for (Eigen::Index j = 0; j < n; ++j)
    g.x(j) = -half_width + (static_cast<double>(j) + 0.5) * g.dx;
  return g;
}

/// The refinement family: half width 1.4·n^{1/4}, so both the support and
/// the resolution grow with n.
inline SampleGrid refined_grid(Eigen::Index n) {
  return midpoint_grid(n, 1.4 * std::pow(static_cast<double>(n), 0.25));
}

/// Columns h_0 … h_{n_max} sampled on the grid (three-term recurrence).
inline RealMatrix hermite_samples(Eigen::Index n_max, const SampleGrid& g) {
  if (n_max < 0) throw ValidationError("hermite_samples: n_max must be >= 0");
  RealMatrix h(g.size(), n_max + 1);
  const double c0 = std::pow(std::numbers::pi, -0.25);
  for (Eigen::Index j = 0; j < g.size(); ++j) {
    const double x = g.x(j);
    h(j, 0) = c0 * std::exp(-0.5 * x * x);
    if (n_max >= 1) h(j, 1) = std::sqrt(2.0) * x * h(j, 0);
    for (Eigen::Index n = 1; n < n_max; ++n) {
      const double k = static_cast<double>(n);
      h(j, n + 1) = std::sqrt(2.0 / (k + 1.0)) * x * h(j, n) -
                    std::sqrt(k / (k + 1.0)) * h(j, n - 1);
    }
  }
  return h;
}

/// Quadrature Gram matrix dx·HᵗH.
inline RealMatrix hermite_gram(const RealMatrix& h, const SampleGrid& g) {
  return g.dx * h.transpose() * h;
}

inline Matrix sampled_fourier_matrix(const SampleGrid& g) {
  const auto n = g.size();
  Matrix f(n, n);
  const double scale = g.dx / std::sqrt(2.0 * std::numbers::pi);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k)
      f(j, k) = std::polar(scale, -g.x(j) * g.x(k));
  return f;
}

struct EigenCheck {
  Eigen::Index n = 0;
  double residual = 0.0;  // ‖F h_n − (−i)^n h_n‖ / ‖h_n‖
  bool resolved = true;   // turning point √(2n+1) well inside the grid
};

inline std::vector<EigenCheck> dft_eigen_check(Eigen::Index n_max,
                                               const SampleGrid& g) {
  const RealMatrix h = hermite_samples(n_max, g);
  const Matrix f = sampled_fourier_matrix(g);
  std::vector<EigenCheck> out;
  for (Eigen::Index n = 0; n <= n_max; ++n) {
    const Vector hn = h.col(n).cast<Complex>();
    const double norm = hn.norm();
    EigenCheck c;
    c.n = n;
    c.residual = norm > 0.0 ? (f * hn - fourier_eigenvalue(n) * hn).norm() / norm
                            : 0.0;
    const double turning = std::sqrt(2.0 * static_cast<double>(n) + 1.0);
    c.resolved = turning + 1.0 < g.half_width() &&
                 turning + 1.0 < std::numbers::pi / g.dx;
    out.push_back(c);
  }
  return out;
}

inline EigenCheck dft_eigen_check_one(Eigen::Index n, const SampleGrid& g) {
  return dft_eigen_check(n, g).back();
}

}  // namespace commconj

#endif  // COMMCONJ_TRANSFORMS_HPP
