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
 * shift_models.hpp — function models on the M-th roots of unity
 * ξ_p = e^{2πip/M}, with the normalized norm ‖f‖² = (1/M) Σ_p |f(ξ_p)|².
 *
 * M_ξ is diagonal, so the pointwise identities for the bilateral shift and
 * for M_ψ with ψ(z) = z^d hold exactly on the grid. With L = M/d and
 * η_m = e^{2πim/L}:
 *
 *   analyze     f(ξ) = Σ_{j<d} ξ^j f_j(ξ^d);  the preimages of η_m are
 *               ξ_{m+rL}, r < d, and
 *               f_j(η_m) = (1/d) Σ_r ξ_{m+rL}^{−j} f(ξ_{m+rL})
 *   synthesize  the inverse; ‖f‖² = Σ_j ‖f_j‖² (grid norms of order M and L)
 *
 * Commuting conjugations of M_ψ are f ↦ S·Φ·R·conj(analyze f), where S is
 * synthesis, R the reflection η ↦ η̄ on the component grid and Φ(η) a d×d
 * unitary field. The product is an involution iff Φ(η) conj(Φ(η̄)) = I,
 * i.e. Φ(η̄) = Φ(η)ᵗ; with Φ(η) = Φ(η̄) that forces Φ symmetric.
 *
 * Grid antilinear operators are stored as sparse matrices acting on conj(f).
 */

#ifndef COMMCONJ_SHIFT_MODELS_HPP
#define COMMCONJ_SHIFT_MODELS_HPP

#include <Eigen/Sparse>

#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "commconj/antilinear.hpp"
#include "commconj/linalg.hpp"

namespace commconj {

using SparseMatrix = Eigen::SparseMatrix<Complex>;

inline Complex root_of_unity(Eigen::Index p, Eigen::Index order) {
  const auto q = ((p % order) + order) % order;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(q) /
                             static_cast<double>(order));
}

/// Arg of the p-th root of unity of the given order, in (−π, π].
inline double root_angle(Eigen::Index p, Eigen::Index order) {
  const auto q = ((p % order) + order) % order;
  if (2 * q <= order) {
    return 2.0 * std::numbers::pi * static_cast<double>(q) /
           static_cast<double>(order);
  }
  return -2.0 * std::numbers::pi * static_cast<double>(order - q) /
         static_cast<double>(order);
}

/// Index of the conjugate point.
inline Eigen::Index reflect_index(Eigen::Index p, Eigen::Index order) {
  return (order - p % order) % order;
}

struct GridModel {
  Eigen::Index order = 0;
  Vector values;

  GridModel() = default;
  GridModel(Eigen::Index m, Vector v) : order(m), values(std::move(v)) {
    if (order < 1) throw ValidationError("GridModel: order must be >= 1");
    if (values.size() != order) {
      throw ValidationError("GridModel: expected " + std::to_string(order) +
                            " values, got " + std::to_string(values.size()));
    }
    if (!values.allFinite()) throw ValidationError("GridModel: non-finite values");
  }

  static GridModel from_function(Eigen::Index m,
                                 const std::function<Complex(Complex)>& f) {
    Vector v(m);
    for (Eigen::Index p = 0; p < m; ++p) v(p) = f(root_of_unity(p, m));
    return GridModel(m, std::move(v));
  }

  [[nodiscard]] Complex point(Eigen::Index p) const {
    return root_of_unity(p, order);
  }
  [[nodiscard]] double norm() const {
    return values.norm() / std::sqrt(static_cast<double>(order));
  }
};

inline void require_divides(Eigen::Index m, Eigen::Index d, const char* what) {
  if (d < 1 || m < 1 || m % d != 0) {
    throw ValidationError(std::string(what) + ": degree " + std::to_string(d) +
                          " must divide the grid order " + std::to_string(m));
  }
}

inline std::vector<GridModel> analyze(const GridModel& f, Eigen::Index d) {
  require_divides(f.order, d, "analyze");
  const auto m = f.order;
  const auto l = m / d;
  std::vector<GridModel> out;
  for (Eigen::Index j = 0; j < d; ++j) {
    Vector v(l);
    for (Eigen::Index q = 0; q < l; ++q) {
      Complex s(0.0);
      for (Eigen::Index r = 0; r < d; ++r) {
        const auto p = q + r * l;
        s += std::conj(root_of_unity(p * j, m)) * f.values(p);
      }
      v(q) = s / static_cast<double>(d);
    }
    out.emplace_back(l, std::move(v));
  }
  return out;
}

inline GridModel synthesize(const std::vector<GridModel>& parts) {
  if (parts.empty()) throw ValidationError("synthesize: no components");
  const auto d = static_cast<Eigen::Index>(parts.size());
  const auto l = parts.front().order;
  for (const auto& g : parts) {
    if (g.order != l) throw ValidationError("synthesize: component orders differ");
  }
  const auto m = l * d;
  Vector v = Vector::Zero(m);
  for (Eigen::Index p = 0; p < m; ++p) {
    for (Eigen::Index j = 0; j < d; ++j)
      v(p) += root_of_unity(p * j, m) * parts[j].values(p % l);
  }
  return GridModel(m, std::move(v));
}

/// Sparse synthesis matrix: component coordinate j·L + q ↦ grid point p.
inline SparseMatrix synthesis_matrix(Eigen::Index m, Eigen::Index d) {
  require_divides(m, d, "synthesis_matrix");
  const auto l = m / d;
  std::vector<Eigen::Triplet<Complex>> t;
  t.reserve(static_cast<std::size_t>(m * d));
  for (Eigen::Index p = 0; p < m; ++p)
    for (Eigen::Index j = 0; j < d; ++j)
      t.emplace_back(p, j * l + p % l, root_of_unity(p * j, m));
  SparseMatrix s(m, m);
  s.setFromTriplets(t.begin(), t.end());
  return s;
}

/// Inverse of synthesis_matrix; equals S*/d.
inline SparseMatrix analysis_matrix(Eigen::Index m, Eigen::Index d) {
  SparseMatrix a = SparseMatrix(synthesis_matrix(m, d).adjoint());
  a /= static_cast<double>(d);
  return a;
}

/// Diagonal multiplier M_{ξ^d} on the order-M grid.
inline SparseMatrix power_multiplier(Eigen::Index m, Eigen::Index d) {
  std::vector<Eigen::Triplet<Complex>> t;
  for (Eigen::Index p = 0; p < m; ++p) t.emplace_back(p, p, root_of_unity(p * d, m));
  SparseMatrix s(m, m);
  s.setFromTriplets(t.begin(), t.end());
  return s;
}

/// Antilinear operator f ↦ A·conj(f) on the order-M grid.
struct GridAntilinear {
  Eigen::Index order = 0;
  SparseMatrix a;

  [[nodiscard]] GridModel apply(const GridModel& f) const {
    if (f.order != order) throw ValidationError("GridAntilinear: order mismatch");
    return GridModel(order, a * f.values.conjugate());
  }
  [[nodiscard]] AntilinearOperator dense() const {
    return AntilinearOperator(Matrix(a));
  }
};

struct GridDefects {
  double isometry = 0.0;     // ‖A*A − I‖_F
  double involution = 0.0;   // ‖A conj(A) − I‖_F
  double commutation = 0.0;  // ‖A conj(D) conj(A) − D‖_F, D = M_{ξ^d}
};

inline GridDefects grid_defects(const GridAntilinear& c, Eigen::Index degree) {
  const auto m = c.order;
  SparseMatrix id(m, m);
  id.setIdentity();
  const SparseMatrix ca = c.a.conjugate();
  const SparseMatrix d = power_multiplier(m, degree);
  GridDefects out;
  out.isometry = SparseMatrix(SparseMatrix(c.a.adjoint()) * c.a - id).norm();
  out.involution = SparseMatrix(c.a * ca - id).norm();
  out.commutation =
      SparseMatrix(c.a * SparseMatrix(d.conjugate()) * ca - d).norm();
  return out;
}

/// (Cf)(ξ) = u(ξ)·conj(f(ξ̄)); requires |u| = 1 and u(ξ) = u(ξ̄).
inline GridAntilinear shift_conjugation(const GridModel& u, double tol = 1e-12) {
  const auto m = u.order;
  for (Eigen::Index p = 0; p < m; ++p) {
    if (std::abs(std::abs(u.values(p)) - 1.0) > tol) {
      throw ValidationError("shift_conjugation: u is not unimodular at grid point " +
                            std::to_string(p));
    }
    if (std::abs(u.values(p) - u.values(reflect_index(p, m))) > tol) {
      throw ValidationError(
          "shift_conjugation: u(ξ) != u(conj ξ) at grid point " +
          std::to_string(p));
    }
  }
  std::vector<Eigen::Triplet<Complex>> t;
  for (Eigen::Index p = 0; p < m; ++p)
    t.emplace_back(p, reflect_index(p, m), u.values(p));
  GridAntilinear c{m, SparseMatrix(m, m)};
  c.a.setFromTriplets(t.begin(), t.end());
  return c;
}

/// u(e^{it}) = e^{i cos t}.
inline GridModel cosine_phase(Eigen::Index m) {
  return GridModel::from_function(
      m, [](Complex z) { return std::exp(kI * std::cos(std::arg(z))); });
}

// Φ fields -------------------------------------------------------------------

/// A d×d matrix per point of the order-L component grid.
struct PhiField {
  Eigen::Index order = 0;
  Eigen::Index degree = 0;
  std::vector<Matrix> values;
};

struct PhiFieldDefects {
  double unitarity = 0.0;   // max ‖Φ*Φ − I‖_F
  double reflection = 0.0;  // max ‖Φ(η̄) − Φ(η)ᵗ‖_F  (needed for C² = I)
  double evenness = 0.0;    // max ‖Φ(η̄) − Φ(η)‖_F
};

inline PhiFieldDefects phi_field_defects(const PhiField& phi) {
  PhiFieldDefects out;
  for (Eigen::Index q = 0; q < phi.order; ++q) {
    const Matrix& x = phi.values[q];
    const Matrix& y = phi.values[reflect_index(q, phi.order)];
    out.unitarity = std::max(out.unitarity, unitarity_defect(x));
    out.reflection = std::max(out.reflection, (y - x.transpose()).norm());
    out.evenness = std::max(out.evenness, (y - x).norm());
  }
  return out;
}

/// f ↦ S·Φ·R·conj(analyze f): the commuting conjugation of M_{ξ^d}
/// determined by Φ.
inline GridAntilinear phi_conjugation(const PhiField& phi, double tol = 1e-10) {
  const auto l = phi.order;
  const auto d = phi.degree;
  if (l < 1 || d < 1 || static_cast<Eigen::Index>(phi.values.size()) != l) {
    throw ValidationError("phi_conjugation: malformed field");
  }
  for (const auto& v : phi.values) {
    if (v.rows() != d || v.cols() != d) {
      throw ValidationError("phi_conjugation: field values must be d x d");
    }
    require_finite(v, "phi_conjugation: field value");
  }
  const auto def = phi_field_defects(phi);
  if (def.unitarity > tol) {
    throw ValidationError("phi_conjugation: Φ is not unitary (defect " +
                          std::to_string(def.unitarity) + ")");
  }
  if (def.reflection > tol) {
    throw ValidationError("phi_conjugation: Φ(conj η) != Φ(η)^t (defect " +
                          std::to_string(def.reflection) +
                          "); the operator would not be an involution");
  }
  const auto m = l * d;
  std::vector<Eigen::Triplet<Complex>> t;
  for (Eigen::Index q = 0; q < l; ++q) {
    const auto rq = reflect_index(q, l);
    for (Eigen::Index k = 0; k < d; ++k)
      for (Eigen::Index j = 0; j < d; ++j)
        t.emplace_back(k * l + q, j * l + rq, phi.values[q](k, j));
  }
  SparseMatrix inner(m, m);
  inner.setFromTriplets(t.begin(), t.end());
  const SparseMatrix s = synthesis_matrix(m, d);
  // conj(S^{-1}) = conj(S*/d) = Sᵗ/d
  SparseMatrix st = SparseMatrix(s.transpose());
  st /= static_cast<double>(d);
  GridAntilinear c{m, SparseMatrix(s * inner * st)};
  c.a.prune(Complex(0.0), 1e-15);
  return c;
}

/// Φ of a conjugation commuting with M_{ξ^d}: entries of S⁻¹·A·conj(S)
/// at (η, η̄). `off_structure` receives the norm of everything else.
inline PhiField extract_phi(const Matrix& a, Eigen::Index m, Eigen::Index d,
                            double* off_structure = nullptr) {
  require_divides(m, d, "extract_phi");
  if (a.rows() != m || a.cols() != m) {
    throw ValidationError("extract_phi: operator size does not match the grid");
  }
  const auto l = m / d;
  const Matrix s = Matrix(synthesis_matrix(m, d));
  const Matrix b = s.adjoint() * a * s.conjugate() / static_cast<double>(d);
  PhiField phi{l, d, std::vector<Matrix>(l, Matrix(d, d))};
  Matrix mask = b;
  for (Eigen::Index q = 0; q < l; ++q) {
    const auto rq = reflect_index(q, l);
    for (Eigen::Index k = 0; k < d; ++k)
      for (Eigen::Index j = 0; j < d; ++j) {
        phi.values[q](k, j) = b(k * l + q, j * l + rq);
        mask(k * l + q, j * l + rq) = 0.0;
      }
  }
  if (off_structure) *off_structure = mask.norm();
  return phi;
}

/// s, α, β, γ sampled at the points of the order-L component grid.
/// phi_matrix reads every array at |Arg η|.
struct PhiParams {
  std::vector<double> s, alpha, beta, gamma;

  [[nodiscard]] Eigen::Index order() const {
    return static_cast<Eigen::Index>(s.size());
  }

  static PhiParams from_functions(Eigen::Index l,
                                  const std::function<double(double)>& s,
                                  const std::function<double(double)>& alpha,
                                  const std::function<double(double)>& beta,
                                  const std::function<double(double)>& gamma) {
    PhiParams p;
    for (Eigen::Index q = 0; q < l; ++q) {
      const double t = root_angle(q, l);
      p.s.push_back(s(t));
      p.alpha.push_back(alpha(t));
      p.beta.push_back(beta(t));
      p.gamma.push_back(gamma(t));
    }
    return p;
  }
};

/// Index of the grid point with Arg = |Arg η_q|.
inline Eigen::Index abs_angle_index(Eigen::Index q, Eigen::Index l) {
  return 2 * q <= l ? q : l - q;
}

///   [[ e^{iα}s,        e^{iβ}√(1−s²)        ],
///    [ e^{iγ}√(1−s²),  −e^{i(β+γ−α)} s      ]]   at |Arg η|.
/// The resulting conjugation is an involution only when Φ is symmetric, so
/// β = γ is required wherever s < 1.
inline PhiField phi_matrix(const PhiParams& p, double tol = 1e-12) {
  const auto l = p.order();
  if (l < 1 || static_cast<Eigen::Index>(p.alpha.size()) != l ||
      static_cast<Eigen::Index>(p.beta.size()) != l ||
      static_cast<Eigen::Index>(p.gamma.size()) != l) {
    throw ValidationError("phi_matrix: parameter arrays must share one length");
  }
  PhiField phi{l, 2, {}};
  for (Eigen::Index q = 0; q < l; ++q) {
    const auto i = abs_angle_index(q, l);
    const double s = p.s[i];
    if (!std::isfinite(s) || s < 0.0 || s > 1.0) {
      throw ValidationError("phi_matrix: s must lie in [0, 1], got " +
                            std::to_string(s) + " at index " + std::to_string(i));
    }
    const double c = std::sqrt(std::max(0.0, 1.0 - s * s));
    const Complex eb = std::polar(1.0, p.beta[i]);
    const Complex eg = std::polar(1.0, p.gamma[i]);
    if (c * std::abs(eb - eg) > tol) {
      throw ValidationError(
          "phi_matrix: beta != gamma at index " + std::to_string(i) +
          " with s < 1; Φ would not be symmetric and C would not be an "
          "involution");
    }
    Matrix v(2, 2);
    v(0, 0) = std::polar(s, p.alpha[i]);
    v(0, 1) = eb * c;
    v(1, 0) = eg * c;
    v(1, 1) = -std::polar(s, p.beta[i] + p.gamma[i] - p.alpha[i]);
    phi.values.push_back(v);
  }
  return phi;
}

/// ψ(z) = z²: the conjugation
///   (Cf)(ξ) = f₁#(ξ²)(φ₁₁ + ξφ₂₁)(ξ²) + f₂#(ξ²)(φ₁₂ + ξφ₂₂)(ξ²).
inline GridAntilinear psi_conjugation(const PhiParams& p, Eigen::Index m) {
  if (m < 2 || m % 2 != 0) {
    throw ValidationError("psi_conjugation: grid order must be even");
  }
  if (p.order() != m / 2) {
    throw ValidationError("psi_conjugation: parameters must be sampled on the "
                          "order-M/2 grid");
  }
  return phi_conjugation(phi_matrix(p));
}

namespace presets {

/// s(τ) = sin|τ|, α = 0, β = γ = 0 for |τ| ≤ π/2 and π beyond, so that
/// φ₁₂ = φ₂₁ = cos τ.
inline PhiParams sincos(Eigen::Index l) {
  const double half = std::numbers::pi / 2.0;
  auto phase = [half](double t) { return std::abs(t) > half ? std::numbers::pi : 0.0; };
  return PhiParams::from_functions(
      l, [](double t) { return std::sin(std::abs(t)); },
      [](double) { return 0.0; }, phase, phase);
}

/// s ≡ s0, α(τ) = λτ, β = γ = 0.
inline PhiParams lambda(Eigen::Index l, double s0, double lam) {
  return PhiParams::from_functions(
      l, [s0](double) { return s0; }, [lam](double t) { return lam * t; },
      [](double) { return 0.0; }, [](double) { return 0.0; });
}

/// s ≡ 1 and all phases 0: Φ = diag(1, −1).
inline PhiParams unit(Eigen::Index l) { return lambda(l, 1.0, 0.0); }

}  // namespace presets

/// Identity Φ for any degree d.
inline PhiField identity_phi(Eigen::Index l, Eigen::Index d) {
  return PhiField{l, d, std::vector<Matrix>(l, Matrix::Identity(d, d))};
}

}  // namespace commconj

#endif  // COMMCONJ_SHIFT_MODELS_HPP
