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
 * measure_models.hpp — operator fields over an atomic measure μ with
 * fiber Cʳ.
 *
 * An element f of L²(μ, Cʳ) is an r×K matrix (column k = f(ξ_k)) with norm
 * ‖f‖² = Σ_k w_k ‖f_k‖². Fields act pointwise:
 *
 *   linear       (M_U f)_k = U_k f_k
 *   antilinear   (B f)_k   = B_k conj(f_σ(k))
 *
 * where σ is the conjugate-partner involution of the atoms. J# is the
 * antilinear field with B_k = √h_k · J, h_k = w_σ(k)/w_k.
 *
 * Defects of an antilinear field are computed in the weighted space:
 *
 *   isometry     Σ_k ‖(w_k / w_σ(k)) B_k* B_k − I‖²
 *   involution   Σ_k ‖B_k conj(B_σ(k)) − I‖²
 *   commutation  Σ_k ‖B_k conj(Ξ_σ(k)) conj(B_σ(k)) − Ξ_k‖²   (M_Ξ diagonal)
 *
 * (square roots of the sums are returned). assemble_model switches to
 * orthonormal coordinates g_k = √w_k f_k, where J# becomes the partner swap
 * composed with J.
 */

#ifndef COMMCONJ_MEASURE_MODELS_HPP
#define COMMCONJ_MEASURE_MODELS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "commconj/antilinear.hpp"
#include "commconj/atomic_measure.hpp"
#include "commconj/linalg.hpp"
#include "commconj/spectral.hpp"

namespace commconj {

/// Column k holds f(ξ_k).
struct WeightedSpaceElement {
  Matrix values;

  [[nodiscard]] Eigen::Index fiber_dim() const { return values.rows(); }
  [[nodiscard]] Eigen::Index atom_count() const { return values.cols(); }
};

inline void require_element(const AtomicMeasure& mu,
                            const WeightedSpaceElement& f,
                            const std::string& what) {
  if (static_cast<std::size_t>(f.atom_count()) != mu.size()) {
    throw ValidationError(what + ": element has " +
                          std::to_string(f.atom_count()) + " atoms, measure has " +
                          std::to_string(mu.size()));
  }
}

/// ⟨f, g⟩ = Σ_k w_k ⟨f_k, g_k⟩.
inline Complex weighted_inner(const AtomicMeasure& mu,
                              const WeightedSpaceElement& f,
                              const WeightedSpaceElement& g) {
  require_element(mu, f, "weighted_inner");
  require_element(mu, g, "weighted_inner");
  if (f.fiber_dim() != g.fiber_dim()) {
    throw ValidationError("weighted_inner: fiber dimensions differ");
  }
  Complex s(0.0);
  for (std::size_t k = 0; k < mu.size(); ++k) {
    const auto kk = static_cast<Eigen::Index>(k);
    s += mu[k].weight * g.values.col(kk).dot(f.values.col(kk));
  }
  return s;
}

inline double weighted_norm(const AtomicMeasure& mu,
                            const WeightedSpaceElement& f) {
  return std::sqrt(std::max(0.0, weighted_inner(mu, f, f).real()));
}

struct FieldOperator {
  enum class Kind { kLinear, kAntilinear };

  Kind kind = Kind::kLinear;
  std::vector<Matrix> blocks;
  std::vector<std::size_t> source;  // σ for antilinear fields, identity otherwise

  [[nodiscard]] std::size_t atom_count() const { return blocks.size(); }
  [[nodiscard]] Eigen::Index fiber_dim() const {
    return blocks.empty() ? 0 : blocks.front().rows();
  }
  [[nodiscard]] bool antilinear() const { return kind == Kind::kAntilinear; }
};

inline void validate_field(const FieldOperator& f) {
  if (f.source.size() != f.blocks.size()) {
    throw ValidationError("FieldOperator: source map has wrong length");
  }
  const auto r = f.fiber_dim();
  for (std::size_t k = 0; k < f.blocks.size(); ++k) {
    const auto& b = f.blocks[k];
    if (b.rows() != r || b.cols() != r) {
      throw ValidationError("FieldOperator: block " + std::to_string(k) +
                            " is not " + std::to_string(r) + "x" +
                            std::to_string(r));
    }
    require_finite(b, "FieldOperator block");
    const auto s = f.source[k];
    if (s >= f.blocks.size() || f.source[s] != k) {
      throw ValidationError("FieldOperator: source map is not an involution");
    }
    if (!f.antilinear() && s != k) {
      throw ValidationError("FieldOperator: linear fields act pointwise");
    }
  }
}

inline std::vector<std::size_t> identity_map(std::size_t k) {
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  return s;
}

/// M_U for a per-atom matrix field.
inline FieldOperator field_multiplier(std::vector<Matrix> blocks) {
  FieldOperator f;
  f.kind = FieldOperator::Kind::kLinear;
  f.source = identity_map(blocks.size());
  f.blocks = std::move(blocks);
  validate_field(f);
  return f;
}

/// M_φ for a scalar function, as an r-dimensional field.
inline FieldOperator scalar_multiplier(const AtomicMeasure& mu,
                                       const std::vector<Complex>& phi,
                                       Eigen::Index r) {
  if (phi.size() != mu.size()) {
    throw ValidationError("scalar_multiplier: one value per atom required");
  }
  std::vector<Matrix> blocks;
  for (const auto& v : phi) blocks.push_back(v * Matrix::Identity(r, r));
  return field_multiplier(std::move(blocks));
}

/// The coordinate multiplier M_ξ.
inline FieldOperator coordinate_multiplier(const AtomicMeasure& mu,
                                           Eigen::Index r) {
  std::vector<Complex> xi;
  for (const auto& a : mu.atoms()) xi.push_back(a.point());
  return scalar_multiplier(mu, xi, r);
}

/// Pointwise adjoint; for a linear field this is the adjoint of M_U in the
/// weighted space.
inline FieldOperator pointwise_adjoint(const FieldOperator& f) {
  if (f.antilinear()) {
    throw ValidationError("pointwise_adjoint: defined for linear fields only");
  }
  FieldOperator out = f;
  for (auto& b : out.blocks) b = b.adjoint().eval();
  return out;
}

inline WeightedSpaceElement apply(const FieldOperator& f,
                                  const WeightedSpaceElement& x) {
  if (static_cast<std::size_t>(x.atom_count()) != f.atom_count() ||
      x.fiber_dim() != f.fiber_dim()) {
    throw ValidationError("apply: element shape does not match the field");
  }
  WeightedSpaceElement out{Matrix(x.fiber_dim(), x.atom_count())};
  for (std::size_t k = 0; k < f.atom_count(); ++k) {
    const auto kk = static_cast<Eigen::Index>(k);
    const auto s = static_cast<Eigen::Index>(f.source[k]);
    if (f.antilinear()) {
      out.values.col(kk) = f.blocks[k] * x.values.col(s).conjugate();
    } else {
      out.values.col(kk) = f.blocks[k] * x.values.col(kk);
    }
  }
  return out;
}

/// M_U ∘ B for linear U and antilinear B.
inline FieldOperator compose(const FieldOperator& u, const FieldOperator& b) {
  if (u.antilinear() || !b.antilinear()) {
    throw ValidationError("compose: expected linear ∘ antilinear");
  }
  if (u.atom_count() != b.atom_count() || u.fiber_dim() != b.fiber_dim()) {
    throw ValidationError("compose: field shapes differ");
  }
  FieldOperator out = b;
  for (std::size_t k = 0; k < b.atom_count(); ++k)
    out.blocks[k] = u.blocks[k] * b.blocks[k];
  return out;
}

/// J#: (J# f)(ξ_k) = √h_k · J f(ξ_σ(k)).
inline FieldOperator build_jsharp(const AtomicMeasure& mu,
                                  const AntilinearOperator& j,
                                  const Tolerance& tol = {}) {
  if (mu.empty()) throw ValidationError("build_jsharp: empty measure");
  if (!is_conjugation(j, tol).first) {
    throw ValidationError("build_jsharp: J is not a conjugation on the fiber");
  }
  const auto rn = radon_nikodym(mu);
  FieldOperator f;
  f.kind = FieldOperator::Kind::kAntilinear;
  f.source = rn.partner;
  for (std::size_t k = 0; k < mu.size(); ++k)
    f.blocks.push_back(std::sqrt(rn.value(k)) * j.a);
  return f;
}

inline FieldOperator build_jsharp(const AtomicMeasure& mu, Eigen::Index r) {
  return build_jsharp(mu, AntilinearOperator::conjugation(r));
}

struct FieldDefects {
  double isometry = 0.0;
  double involution = 0.0;
  double commutation = 0.0;
};

inline double field_isometry_defect(const AtomicMeasure& mu,
                                    const FieldOperator& b) {
  if (b.atom_count() != mu.size()) {
    throw ValidationError("field_isometry_defect: atom count mismatch");
  }
  const auto r = b.fiber_dim();
  double s = 0.0;
  for (std::size_t k = 0; k < b.atom_count(); ++k) {
    const double ratio = mu[k].weight / mu[b.source[k]].weight;
    s += (ratio * b.blocks[k].adjoint() * b.blocks[k] - Matrix::Identity(r, r))
             .squaredNorm();
  }
  return std::sqrt(s);
}

inline double field_involution_defect(const FieldOperator& b) {
  const auto r = b.fiber_dim();
  double s = 0.0;
  for (std::size_t k = 0; k < b.atom_count(); ++k) {
    s += (b.blocks[k] * b.blocks[b.source[k]].conjugate() -
          Matrix::Identity(r, r))
             .squaredNorm();
  }
  return std::sqrt(s);
}

/// ‖B M_Ξ B − M_Ξ‖ for a linear field Ξ.
inline double field_commutation_defect(const FieldOperator& b,
                                       const FieldOperator& xi) {
  if (xi.antilinear() || xi.atom_count() != b.atom_count() ||
      xi.fiber_dim() != b.fiber_dim()) {
    throw ValidationError("field_commutation_defect: shape mismatch");
  }
  double s = 0.0;
  for (std::size_t k = 0; k < b.atom_count(); ++k) {
    const auto p = b.source[k];
    s += (b.blocks[k] * xi.blocks[p].conjugate() * b.blocks[p].conjugate() -
          xi.blocks[k])
             .squaredNorm();
  }
  return std::sqrt(s);
}

inline FieldDefects field_defects(const AtomicMeasure& mu,
                                  const FieldOperator& b) {
  validate_field(b);
  if (!b.antilinear()) {
    throw ValidationError("field_defects: expected an antilinear field");
  }
  return {field_isometry_defect(mu, b), field_involution_defect(b),
          field_commutation_defect(b, coordinate_multiplier(mu, b.fiber_dim()))};
}

struct CriterionResult {
  bool passed = false;
  double defect = 0.0;  // max_k ‖J U_k J − U_σ(k)*‖_F
};

/// M_U J# is a conjugation iff J U(ξ) J = U(ξ̄)* at every atom.
inline CriterionResult mu_jsharp_conjugation_test(const AtomicMeasure& mu,
                                                  const FieldOperator& u,
                                                  const AntilinearOperator& j,
                                                  const Tolerance& tol = {}) {
  validate_field(u);
  if (u.antilinear() || u.atom_count() != mu.size() ||
      u.fiber_dim() != j.dim()) {
    throw ValidationError("mu_jsharp_conjugation_test: field shape mismatch");
  }
  for (const auto& b : u.blocks) require_unitary(b, "field value U(ξ)", tol);
  const auto partner = conjugate_partners(mu);
  CriterionResult res;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    const Matrix juj = sandwich(j, u.blocks[k]);
    res.defect =
        std::max(res.defect, (juj - u.blocks[partner[k]].adjoint()).norm());
  }
  res.passed = res.defect <= tol.bound(std::sqrt(static_cast<double>(j.dim())));
  return res;
}

/// A unitary field satisfying J U(ξ) J = U(ξ̄)*: Haar at one atom of each
/// conjugate pair, the partner value forced; at ±1, U = Q·conj(J) with Q
/// symmetric unitary.
inline FieldOperator sample_constrained_field(const AtomicMeasure& mu,
                                              const AntilinearOperator& j,
                                              Rng& rng) {
  const auto partner = conjugate_partners(mu);
  const auto r = j.dim();
  std::vector<Matrix> blocks(mu.size());
  for (std::size_t k = 0; k < mu.size(); ++k) {
    const auto p = partner[k];
    if (p == k) {
      blocks[k] = symmetric_unitary(r, rng) * j.a.conjugate();
    } else if (k < p) {
      blocks[k] = haar_unitary(r, rng);
      blocks[p] = sandwich(j, blocks[k]).adjoint();
    }
  }
  return field_multiplier(std::move(blocks));
}

/// A bounded field in the class J F(ξ) J = F(ξ̄)* (not necessarily unitary).
inline FieldOperator sample_constrained_bounded_field(const AtomicMeasure& mu,
                                                      const AntilinearOperator& j,
                                                      Rng& rng) {
  const auto partner = conjugate_partners(mu);
  const auto r = j.dim();
  std::vector<Matrix> blocks(mu.size());
  for (std::size_t k = 0; k < mu.size(); ++k) {
    const auto p = partner[k];
    if (p == k) {
      // F·J has a symmetric matrix
      Matrix s = complex_gaussian(r, r, rng);
      s = (s + s.transpose()).eval();
      blocks[k] = s * j.a.conjugate();
    } else if (k < p) {
      blocks[k] = complex_gaussian(r, r, rng);
      blocks[p] = sandwich(j, blocks[k]).adjoint();
    }
  }
  FieldOperator f;
  f.kind = FieldOperator::Kind::kLinear;
  f.source = identity_map(mu.size());
  f.blocks = std::move(blocks);
  return f;
}

/// max_k ‖J F_k J − F_σ(k)*‖ without the unitarity requirement.
inline double constrained_class_defect(const AtomicMeasure& mu,
                                       const FieldOperator& f,
                                       const AntilinearOperator& j) {
  const auto partner = conjugate_partners(mu);
  double d = 0.0;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    d = std::max(d, (j.a * f.blocks[k].conjugate() * j.a.conjugate() -
                     f.blocks[partner[k]].adjoint())
                        .norm());
  }
  return d;
}

/// Pointwise four-unitary split of a field: F = Σ_k scale_k·U_i(ξ_k).
struct FieldFourUnitarySplit {
  std::vector<double> scale;
  std::array<FieldOperator, 4> unitaries;
};

inline FieldFourUnitarySplit four_unitary_split(const FieldOperator& f) {
  if (f.antilinear()) {
    throw ValidationError("four_unitary_split: linear field expected");
  }
  FieldFourUnitarySplit out;
  for (auto& u : out.unitaries) {
    u.kind = FieldOperator::Kind::kLinear;
    u.source = f.source;
  }
  for (const auto& b : f.blocks) {
    const auto s = four_unitary_split(b);
    out.scale.push_back(s.scale);
    for (int i = 0; i < 4; ++i) out.unitaries[i].blocks.push_back(s.unitaries[i]);
  }
  return out;
}

// Direct-sum assembly ------------------------------------------------------

struct ModelCoordinate {
  std::size_t component = 0;
  std::size_t atom = 0;
  Eigen::Index fiber = 0;
};

/// ⊕_i M_{U^(i)} J^{#(i)} in orthonormal coordinates, together with the
/// diagonal model operator ⊕_i M_ξ.
struct AssembledModel {
  AntilinearOperator conjugation;
  Matrix model_operator;
  std::vector<ModelCoordinate> coordinates;
  std::vector<Eigen::Index> component_offset;

  [[nodiscard]] Eigen::Index dim() const { return model_operator.rows(); }
};

inline Eigen::Index model_index(const MultiplicityModel& model,
                                std::size_t component, std::size_t atom,
                                Eigen::Index fiber) {
  Eigen::Index off = 0;
  for (std::size_t i = 0; i < component; ++i)
    off += model.components[i].fiber_dim *
           static_cast<Eigen::Index>(model.components[i].measure.size());
  return off + static_cast<Eigen::Index>(atom) * model.components[component].fiber_dim +
         fiber;
}

/// `js` and `fields` are per component; an empty `fields` means identity
/// fields, an empty `js` means plain conjugation on every fiber.
inline AssembledModel assemble_model(const MultiplicityModel& model,
                                     std::vector<AntilinearOperator> js = {},
                                     std::vector<FieldOperator> fields = {},
                                     const Tolerance& tol = {}) {
  const auto nc = model.components.size();
  if (js.empty()) {
    for (const auto& c : model.components)
      js.push_back(AntilinearOperator::conjugation(c.fiber_dim));
  }
  if (fields.empty()) {
    for (const auto& c : model.components) {
      fields.push_back(field_multiplier(std::vector<Matrix>(
          c.measure.size(), Matrix::Identity(c.fiber_dim, c.fiber_dim))));
    }
  }
  if (js.size() != nc || fields.size() != nc) {
    throw ValidationError("assemble_model: one J and one field per component");
  }

  const auto n = model.dim();
  AssembledModel out;
  out.model_operator = Matrix::Zero(n, n);
  Matrix a = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < nc; ++i) {
    const auto& comp = model.components[i];
    const auto r = comp.fiber_dim;
    if (js[i].dim() != r) {
      throw ValidationError("assemble_model: J has wrong fiber dimension");
    }
    // refuses (AbsoluteContinuityError) when μ_i^c is not ≪ μ_i
    const auto partner = conjugate_partners(comp.measure);
    const auto crit = mu_jsharp_conjugation_test(comp.measure, fields[i], js[i], tol);
    if (!crit.passed) {
      throw ValidationError(
          "assemble_model: field of component " + std::to_string(i) +
          " violates J U(ξ) J = U(ξ̄)* (defect " + std::to_string(crit.defect) +
          ")");
    }
    out.component_offset.push_back(model_index(model, i, 0, 0));
    for (std::size_t k = 0; k < comp.measure.size(); ++k) {
      const auto row = model_index(model, i, k, 0);
      const auto col = model_index(model, i, partner[k], 0);
      a.block(row, col, r, r) = fields[i].blocks[k] * js[i].a;
      for (Eigen::Index f = 0; f < r; ++f) {
        out.model_operator(row + f, row + f) = comp.measure[k].point();
        out.coordinates.push_back({i, k, f});
      }
    }
  }
  out.conjugation = AntilinearOperator(std::move(a));
  return out;
}

/// Unitary 𝓘 with U = 𝓘 · model_operator · 𝓘*: column (i, k, f) is the f-th
/// eigenvector of the cluster at atom k of component i.
inline Matrix model_basis(const UnitarySpectrum& s, const MultiplicityModel& model,
                          const SpectralOptions& opt = {}) {
  const auto n = s.dim();
  if (model.dim() != n) {
    throw ValidationError("model_basis: model dimension does not match U");
  }
  Matrix basis(n, n);
  for (std::size_t i = 0; i < model.components.size(); ++i) {
    const auto& comp = model.components[i];
    for (std::size_t k = 0; k < comp.measure.size(); ++k) {
      const auto c = find_cluster(s, comp.measure[k].point(),
                                  std::max(opt.cluster_tol, kAtomMatchTol));
      if (!c || s.clusters[*c].multiplicity != comp.fiber_dim) {
        throw ValidationError("model_basis: model does not come from this spectrum");
      }
      basis.middleCols(model_index(model, i, k, 0), comp.fiber_dim) =
          s.cluster_basis(*c);
    }
  }
  return basis;
}

/// Coordinates of the subspace supported on the atoms with the given angles.
inline std::vector<Eigen::Index> atom_coordinates(
    const MultiplicityModel& model, const std::vector<double>& thetas) {
  std::vector<Eigen::Index> idx;
  for (std::size_t i = 0; i < model.components.size(); ++i) {
    const auto& comp = model.components[i];
    for (std::size_t k = 0; k < comp.measure.size(); ++k) {
      const bool hit = std::any_of(thetas.begin(), thetas.end(), [&](double t) {
        return circular_distance(canonical_angle(t), comp.measure[k].theta) <=
               kAtomMatchTol;
      });
      if (!hit) continue;
      for (Eigen::Index f = 0; f < comp.fiber_dim; ++f)
        idx.push_back(model_index(model, i, k, f));
    }
  }
  return idx;
}

/// ‖P⊥ C P‖_F for the coordinate projection P onto `coords`.
inline double subspace_leakage(const AntilinearOperator& c,
                               const std::vector<Eigen::Index>& coords) {
  const std::set<Eigen::Index> inside(coords.begin(), coords.end());
  double s = 0.0;
  for (Eigen::Index col : inside) {
    if (col < 0 || col >= c.dim()) {
      throw ValidationError("subspace_leakage: coordinate out of range");
    }
    for (Eigen::Index row = 0; row < c.dim(); ++row)
      if (!inside.count(row)) s += std::norm(c.a(row, col));
  }
  return std::sqrt(s);
}

/// Same for a linear map.
inline double subspace_leakage(const Matrix& m,
                               const std::vector<Eigen::Index>& coords) {
  return subspace_leakage(AntilinearOperator(m), coords);
}

/// Does C map the span of the atoms with the given angles into itself?
inline bool invariance_probe(const AssembledModel& am,
                             const MultiplicityModel& model,
                             const std::vector<double>& thetas,
                             double tol = 1e-12) {
  return subspace_leakage(am.conjugation, atom_coordinates(model, thetas)) <=
         tol * (1.0 + am.conjugation.a.norm());
}

/// h(ξ) = (5/3)^{sgn t} t^{2 sgn t}, t = Arg ξ ∈ (−π, π], sgn 0 = 0.
/// At ξ = −1 (its own conjugate) h·h∘conj = 1 forces h = 1 as well.
inline double example91_density(double t) {
  t = std::remainder(t, 2.0 * std::numbers::pi);
  if (t == 0.0 || std::abs(t) == std::numbers::pi) return 1.0;
  if (t > 0.0) return (5.0 / 3.0) * t * t;
  return (3.0 / 5.0) / (t * t);
}

inline double example91_density(Complex xi) {
  return example91_density(std::arg(xi));
}

}  // namespace commconj

#endif  // COMMCONJ_MEASURE_MODELS_HPP
