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
 * spectral.hpp — eigenstructure of unitary matrices.
 *
 * diagonalize_unitary runs a complex Schur decomposition (U is normal, so the
 * triangular factor is diagonal up to roundoff), clusters eigenvalues by
 * single linkage at cluster_tol, and rebuilds an orthonormal basis of each
 * cluster's eigenspace by pivoted Gram–Schmidt on the cluster projector.
 * That basis depends only on the projector, which fixes the gauge: for a
 * diagonal U the basis is a set of standard basis vectors.
 *
 * Cluster order is by Arg in (−π, π]. Clusters with |Im λ| ≤ cluster_tol
 * and |λ ∓ 1| ≤ cluster_tol are snapped to ±1.
 *
 * canonical_form reorders W so that W*·U·W is the block diagonal
 *
 *     ⊕_j diag(ξ_j I_{n_j}, conj(ξ_j) I_{n_j})  ⊕  I_ℓ  ⊕  −I_k,
 *
 * pairs sorted by increasing Arg ξ_j ∈ (0, π).
 */

#ifndef COMMCONJ_SPECTRAL_HPP
#define COMMCONJ_SPECTRAL_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "commconj/atomic_measure.hpp"
#include "commconj/linalg.hpp"

namespace commconj {

struct SpectralOptions {
  Tolerance unitarity{};
  double cluster_tol = 1e-7;
};

struct EigenCluster {
  Complex eigenvalue;
  Eigen::Index multiplicity = 0;
  Eigen::Index offset = 0;  // first column of this cluster in W
};

struct UnitarySpectrum {
  std::vector<EigenCluster> clusters;
  Matrix w;

  [[nodiscard]] Eigen::Index dim() const { return w.rows(); }

  /// Diagonal matrix of clustered eigenvalues matching the columns of W.
  [[nodiscard]] Matrix diagonal() const {
    Vector d(w.cols());
    for (const auto& c : clusters)
      d.segment(c.offset, c.multiplicity).setConstant(c.eigenvalue);
    return d.asDiagonal();
  }
  [[nodiscard]] Matrix cluster_basis(std::size_t k) const {
    return w.middleCols(clusters[k].offset, clusters[k].multiplicity);
  }
};

namespace detail {

inline Eigen::Index find_root(std::vector<Eigen::Index>& parent,
                              Eigen::Index i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

/// Orthonormal basis of range(P) for a rank-m projector P: Gram–Schmidt over
/// the columns P e_j, always taking the column with the largest residual
/// (lowest index on ties).
inline Matrix projector_basis(const Matrix& p, Eigen::Index m) {
  const auto n = p.rows();
  Matrix basis(n, m);
  Matrix residual = p;
  for (Eigen::Index k = 0; k < m; ++k) {
    Eigen::Index best = 0;
    double best_norm = -1.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const double nj = residual.col(j).norm();
      if (nj > best_norm * (1.0 + 1e-12)) {
        best = j;
        best_norm = nj;
      }
    }
    Vector q = residual.col(best) / best_norm;
    // second pass keeps q orthogonal to earlier picks at roundoff level
    for (Eigen::Index i = 0; i < k; ++i) q -= basis.col(i) * basis.col(i).dot(q);
    q.normalize();
    basis.col(k) = q;
    residual -= q * (q.adjoint() * residual);
  }
  return basis;
}

inline double arg_key(Complex z) { return std::arg(z); }

}  // namespace detail

inline UnitarySpectrum diagonalize_unitary(const Matrix& u,
                                           const SpectralOptions& opt = {}) {
  require_square(u, "diagonalize_unitary: U");
  if (u.rows() == 0) throw ValidationError("diagonalize_unitary: empty matrix");
  require_unitary(u, "diagonalize_unitary: U", opt.unitarity);
  const auto n = u.rows();

  Eigen::ComplexSchur<Matrix> schur(u);
  if (schur.info() != Eigen::Success) {
    throw ToleranceError("diagonalize_unitary: Schur decomposition failed");
  }
  const Matrix& t = schur.matrixT();
  const Matrix& q = schur.matrixU();

  std::vector<Complex> lambda(n);
  for (Eigen::Index i = 0; i < n; ++i) lambda[i] = t(i, i) / std::abs(t(i, i));

  std::vector<Eigen::Index> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (std::abs(lambda[i] - lambda[j]) <= opt.cluster_tol) {
        parent[detail::find_root(parent, i)] = detail::find_root(parent, j);
      }
    }
  }
  std::map<Eigen::Index, std::vector<Eigen::Index>> groups;
  for (Eigen::Index i = 0; i < n; ++i)
    groups[detail::find_root(parent, i)].push_back(i);

  struct Raw {
    Complex value;
    std::vector<Eigen::Index> members;
  };
  std::vector<Raw> raw;
  for (auto& [root, members] : groups) {
    Complex mean(0.0);
    for (auto i : members) mean += lambda[i];
    mean /= std::abs(mean);
    if (std::abs(mean.imag()) <= opt.cluster_tol) {
      if (std::abs(mean - 1.0) <= opt.cluster_tol) mean = 1.0;
      if (std::abs(mean + 1.0) <= opt.cluster_tol) mean = -1.0;
    }
    raw.push_back({mean, members});
  }
  std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
    return detail::arg_key(a.value) < detail::arg_key(b.value);
  });

  UnitarySpectrum out;
  out.w = Matrix(n, n);
  Eigen::Index offset = 0;
  for (const auto& r : raw) {
    const auto m = static_cast<Eigen::Index>(r.members.size());
    Matrix cols(n, m);
    for (Eigen::Index k = 0; k < m; ++k) cols.col(k) = q.col(r.members[k]);
    const Matrix projector = cols * cols.adjoint();
    out.w.middleCols(offset, m) = detail::projector_basis(projector, m);
    out.clusters.push_back({r.value, m, offset});
    offset += m;
  }

  const double residual =
      (u - out.w * out.diagonal() * out.w.adjoint()).norm();
  if (residual > 1e-8 * static_cast<double>(n)) {
    throw ToleranceError("diagonalize_unitary: reconstruction residual " +
                         std::to_string(residual) + " exceeds 1e-8·n");
  }
  return out;
}

/// Short human-readable form: "i", "-i", "1", "-1", else "a+bi".
inline std::string format_unit_complex(Complex z, double tol = 1e-9) {
  if (std::abs(z - Complex(0, 1)) <= tol) return "i";
  if (std::abs(z - Complex(0, -1)) <= tol) return "-i";
  if (std::abs(z - 1.0) <= tol) return "1";
  if (std::abs(z + 1.0) <= tol) return "-1";
  std::ostringstream os;
  os.precision(6);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

struct MultiplicityMismatch {
  Complex eigenvalue;
  Eigen::Index multiplicity = 0;
  Eigen::Index conjugate_multiplicity = 0;
};

struct SelfDualReport {
  bool selfdual = true;
  std::vector<MultiplicityMismatch> mismatches;

  [[nodiscard]] std::string message() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < mismatches.size(); ++k) {
      const auto& m = mismatches[k];
      if (k) os << "; ";
      os << "eigenvalue " << format_unit_complex(m.eigenvalue)
         << " multiplicity " << m.multiplicity << ", conjugate multiplicity "
         << m.conjugate_multiplicity;
    }
    return os.str();
  }
};

inline std::optional<std::size_t> find_cluster(const UnitarySpectrum& s,
                                               Complex z, double tol) {
  for (std::size_t k = 0; k < s.clusters.size(); ++k)
    if (std::abs(s.clusters[k].eigenvalue - z) <= tol) return k;
  return std::nullopt;
}

inline SelfDualReport check_selfdual(const UnitarySpectrum& s,
                                     const SpectralOptions& opt = {}) {
  SelfDualReport rep;
  for (const auto& c : s.clusters) {
    const auto partner = find_cluster(s, std::conj(c.eigenvalue), opt.cluster_tol);
    const Eigen::Index pm = partner ? s.clusters[*partner].multiplicity : 0;
    if (pm == c.multiplicity) continue;
    rep.selfdual = false;
    if (c.eigenvalue.imag() > 0.0 || !partner) {
      rep.mismatches.push_back({c.eigenvalue, c.multiplicity, pm});
    }
  }
  return rep;
}

inline SelfDualReport check_selfdual(const Matrix& u,
                                     const SpectralOptions& opt = {}) {
  return check_selfdual(diagonalize_unitary(u, opt), opt);
}

struct ConjugatePair {
  Complex xi;  // Im ξ > 0
  Eigen::Index n = 0;
};

struct BlockLayout {
  std::vector<ConjugatePair> pairs;
  Eigen::Index ell = 0;  // multiplicity of +1
  Eigen::Index kay = 0;  // multiplicity of −1

  [[nodiscard]] Eigen::Index dim() const {
    Eigen::Index n = ell + kay;
    for (const auto& p : pairs) n += 2 * p.n;
    return n;
  }
  [[nodiscard]] Eigen::Index pair_offset(std::size_t j) const {
    Eigen::Index off = 0;
    for (std::size_t i = 0; i < j; ++i) off += 2 * pairs[i].n;
    return off;
  }
  [[nodiscard]] Eigen::Index plus_offset() const {
    return pair_offset(pairs.size());
  }
  [[nodiscard]] Eigen::Index minus_offset() const { return plus_offset() + ell; }

  /// The block diagonal U′.
  [[nodiscard]] Matrix block_diagonal() const {
    Vector d(dim());
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      const auto off = pair_offset(j);
      d.segment(off, pairs[j].n).setConstant(pairs[j].xi);
      d.segment(off + pairs[j].n, pairs[j].n).setConstant(std::conj(pairs[j].xi));
    }
    d.segment(plus_offset(), ell).setConstant(1.0);
    d.segment(minus_offset(), kay).setConstant(-1.0);
    return d.asDiagonal();
  }
};

struct CanonicalForm {
  Matrix w;
  BlockLayout layout;
};

/// Thrown by the existence-dependent constructions when U is not unitarily
/// equivalent to U*.
class NotSelfDualError : public RefusalError {
 public:
  explicit NotSelfDualError(SelfDualReport rep)
      : RefusalError("C_c(U) is empty: " + rep.message()),
        report_(std::move(rep)) {}
  [[nodiscard]] const SelfDualReport& report() const { return report_; }

 private:
  SelfDualReport report_;
};

inline CanonicalForm canonical_form(const UnitarySpectrum& s,
                                    const SpectralOptions& opt = {}) {
  auto rep = check_selfdual(s, opt);
  if (!rep.selfdual) throw NotSelfDualError(std::move(rep));
  const auto n = s.dim();

  CanonicalForm out;
  out.w = Matrix(n, n);
  Eigen::Index col = 0;
  auto place = [&](const EigenCluster& c) {
    out.w.middleCols(col, c.multiplicity) = s.w.middleCols(c.offset, c.multiplicity);
    col += c.multiplicity;
  };
  // clusters are already Arg-sorted, so the upper half-plane comes out in
  // increasing Arg order
  for (const auto& c : s.clusters) {
    if (c.eigenvalue == Complex(1.0) || c.eigenvalue == Complex(-1.0)) continue;
    if (c.eigenvalue.imag() <= 0.0) continue;
    const auto partner = find_cluster(s, std::conj(c.eigenvalue), opt.cluster_tol);
    place(c);
    place(s.clusters[*partner]);
    out.layout.pairs.push_back({c.eigenvalue, c.multiplicity});
  }
  for (const auto& c : s.clusters) {
    if (c.eigenvalue == Complex(1.0)) {
      place(c);
      out.layout.ell = c.multiplicity;
    }
  }
  for (const auto& c : s.clusters) {
    if (c.eigenvalue == Complex(-1.0)) {
      place(c);
      out.layout.kay = c.multiplicity;
    }
  }
  if (col != n) {
    // a cluster with Im λ ≈ 0 that was not snapped to ±1 and is its own
    // partner; the block form has no slot for it
    throw ToleranceError(
        "canonical_form: near-real eigenvalue cluster could not be placed; "
        "consider a larger cluster_tol");
  }
  return out;
}

inline CanonicalForm canonical_form(const Matrix& u,
                                    const SpectralOptions& opt = {}) {
  return canonical_form(diagonalize_unitary(u, opt), opt);
}

struct MultiplicityComponent {
  AtomicMeasure measure;
  Eigen::Index fiber_dim = 0;
};

/// Atomic multiplicity model: for each multiplicity k, μ_k = Σ δ_λ over the
/// clusters of multiplicity exactly k (unit weights). Components are sorted by
/// fiber dimension and have disjoint supports.
struct MultiplicityModel {
  std::vector<MultiplicityComponent> components;

  [[nodiscard]] Eigen::Index dim() const {
    Eigen::Index n = 0;
    for (const auto& c : components)
      n += c.fiber_dim * static_cast<Eigen::Index>(c.measure.size());
    return n;
  }
};

inline MultiplicityModel multiplicity_model(const UnitarySpectrum& s) {
  std::map<Eigen::Index, std::vector<Atom>> by_mult;
  for (const auto& c : s.clusters)
    by_mult[c.multiplicity].push_back({std::arg(c.eigenvalue), 1.0});
  MultiplicityModel model;
  for (auto& [k, atoms] : by_mult)
    model.components.push_back({AtomicMeasure(std::move(atoms)), k});
  return model;
}

inline MultiplicityModel multiplicity_model(const Matrix& u,
                                            const SpectralOptions& opt = {}) {
  return multiplicity_model(diagonalize_unitary(u, opt));
}

}  // namespace commconj

#endif  // COMMCONJ_SPECTRAL_HPP
