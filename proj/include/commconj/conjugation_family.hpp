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
 * conjugation_family.hpp — the set C_c(U) of conjugations commuting with a
 * unitary matrix U.
 *
 * C_c(U) is nonempty iff every eigenvalue λ has the same multiplicity as
 * conj(λ). With W from canonical_form (U = W U′ W*), every member is
 *
 *     C = W · V · J · W*,   V = ⊕_j [[0, V_j], [V_jᵗ, 0]] ⊕ Q₊ ⊕ Q₋,
 *
 * V_j unitary (n_j × n_j), Q± unitary and symmetric. As an antilinear matrix
 * that is A = W·V·Wᵗ. The parameters are relative to W: inside a degenerate
 * cluster a different eigenbasis gives different (equally valid) V_j, Q±.
 */

#ifndef COMMCONJ_CONJUGATION_FAMILY_HPP
#define COMMCONJ_CONJUGATION_FAMILY_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "commconj/antilinear.hpp"
#include "commconj/spectral.hpp"

namespace commconj {

struct ConjugationParams {
  std::vector<Matrix> v_blocks;
  Matrix q_plus;
  Matrix q_minus;
};

/// decompose() found energy where the block structure requires zeros.
class MembershipError : public ToleranceError {
 public:
  MembershipError(const std::string& msg, std::string block, double energy)
      : ToleranceError(msg), block_(std::move(block)), energy_(energy) {}
  [[nodiscard]] const std::string& block() const { return block_; }
  [[nodiscard]] double energy() const { return energy_; }

 private:
  std::string block_;
  double energy_;
};

inline double default_membership_threshold(Eigen::Index n) {
  return 1e-8 * static_cast<double>(n);
}

inline void validate_params(const BlockLayout& layout,
                            const ConjugationParams& p,
                            const Tolerance& tol = {}) {
  if (p.v_blocks.size() != layout.pairs.size()) {
    throw ValidationError("ConjugationParams: expected " +
                          std::to_string(layout.pairs.size()) +
                          " V blocks, got " + std::to_string(p.v_blocks.size()));
  }
  for (std::size_t j = 0; j < p.v_blocks.size(); ++j) {
    const auto& v = p.v_blocks[j];
    if (v.rows() != layout.pairs[j].n || v.cols() != layout.pairs[j].n) {
      throw ValidationError("ConjugationParams: V_" + std::to_string(j + 1) +
                            " has wrong size");
    }
    require_unitary(v, "ConjugationParams: V_" + std::to_string(j + 1), tol);
  }
  auto check_q = [&](const Matrix& q, Eigen::Index size, const char* name) {
    if (q.rows() != size || q.cols() != size) {
      throw ValidationError(std::string("ConjugationParams: ") + name +
                            " has wrong size");
    }
    if (size == 0) return;
    require_unitary(q, std::string("ConjugationParams: ") + name, tol);
    const double td = transpose_defect(q);
    if (td > tol.bound(q.norm())) {
      throw ValidationError(std::string("ConjugationParams: ") + name +
                            " is not symmetric (‖Q − Qᵗ‖ = " +
                            std::to_string(td) + ")");
    }
  };
  check_q(p.q_plus, layout.ell, "Q_plus");
  check_q(p.q_minus, layout.kay, "Q_minus");
}

/// The symmetric unitary V in canonical coordinates.
inline Matrix structured_matrix(const BlockLayout& layout,
                                const ConjugationParams& p) {
  const auto n = layout.dim();
  Matrix v = Matrix::Zero(n, n);
  for (std::size_t j = 0; j < layout.pairs.size(); ++j) {
    const auto off = layout.pair_offset(j);
    const auto m = layout.pairs[j].n;
    v.block(off, off + m, m, m) = p.v_blocks[j];
    v.block(off + m, off, m, m) = p.v_blocks[j].transpose();
  }
  v.block(layout.plus_offset(), layout.plus_offset(), layout.ell, layout.ell) =
      p.q_plus;
  v.block(layout.minus_offset(), layout.minus_offset(), layout.kay,
          layout.kay) = p.q_minus;
  return v;
}

inline ConjugationParams identity_params(const BlockLayout& layout) {
  ConjugationParams p;
  for (const auto& pair : layout.pairs)
    p.v_blocks.push_back(Matrix::Identity(pair.n, pair.n));
  p.q_plus = Matrix::Identity(layout.ell, layout.ell);
  p.q_minus = Matrix::Identity(layout.kay, layout.kay);
  return p;
}

inline AntilinearOperator from_params(const BlockLayout& layout,
                                      const Matrix& w,
                                      const ConjugationParams& p,
                                      const Tolerance& tol = {}) {
  if (w.rows() != layout.dim() || w.cols() != layout.dim()) {
    throw ValidationError("from_params: W does not match the layout dimension");
  }
  validate_params(layout, p, tol);
  return transport(AntilinearOperator(structured_matrix(layout, p)), w, tol);
}

inline AntilinearOperator canonical_conjugation(const CanonicalForm& cf) {
  return from_params(cf.layout, cf.w, identity_params(cf.layout));
}

inline AntilinearOperator canonical_conjugation(const Matrix& u,
                                                const SpectralOptions& opt = {}) {
  return canonical_conjugation(canonical_form(u, opt));
}

inline ConjugationParams sample_params(const BlockLayout& layout, Rng& rng) {
  ConjugationParams p;
  for (const auto& pair : layout.pairs)
    p.v_blocks.push_back(haar_unitary(pair.n, rng));
  p.q_plus = layout.ell ? symmetric_unitary(layout.ell, rng) : Matrix(0, 0);
  p.q_minus = layout.kay ? symmetric_unitary(layout.kay, rng) : Matrix(0, 0);
  return p;
}

inline AntilinearOperator sample(const CanonicalForm& cf, Rng& rng) {
  return from_params(cf.layout, cf.w, sample_params(cf.layout, rng));
}

inline AntilinearOperator sample(const Matrix& u, std::uint64_t seed,
                                 const SpectralOptions& opt = {}) {
  Rng rng(seed);
  return sample(canonical_form(u, opt), rng);
}

struct BlockSegment {
  std::string name;
  Eigen::Index offset = 0;
  Eigen::Index size = 0;
};

inline std::vector<BlockSegment> layout_segments(const BlockLayout& layout) {
  std::vector<BlockSegment> seg;
  for (std::size_t j = 0; j < layout.pairs.size(); ++j) {
    const auto off = layout.pair_offset(j);
    const auto m = layout.pairs[j].n;
    const std::string xi = format_unit_complex(layout.pairs[j].xi);
    seg.push_back({"pair " + std::to_string(j + 1) + " [" + xi + "]", off, m});
    seg.push_back({"pair " + std::to_string(j + 1) + " [conj " + xi + "]",
                   off + m, m});
  }
  if (layout.ell) seg.push_back({"+1 block", layout.plus_offset(), layout.ell});
  if (layout.kay) seg.push_back({"-1 block", layout.minus_offset(), layout.kay});
  return seg;
}

/// Recovers (V_j, Q₊, Q₋) from a member C of C_c(U), relative to cf.w.
/// Throws MembershipError naming the first structural block that should be
/// zero but is not.
inline ConjugationParams decompose(const CanonicalForm& cf,
                                   const AntilinearOperator& c,
                                   double threshold = -1.0) {
  const auto n = cf.layout.dim();
  if (c.dim() != n) {
    throw ValidationError("decompose: conjugation dimension does not match U");
  }
  if (threshold < 0.0) threshold = default_membership_threshold(n);

  const auto [ok, rep] = is_conjugation(c);
  if (!ok) {
    throw MembershipError(
        "decompose: C is not a conjugation (isometry defect " +
            std::to_string(rep.isometry_defect) + ", transpose defect " +
            std::to_string(rep.transpose_defect) + ")",
        "conjugation", std::max(rep.isometry_defect, rep.transpose_defect));
  }

  // matrix of W* C W ∘ J
  const Matrix v = cf.w.adjoint() * c.a * cf.w.conjugate();
  const auto seg = layout_segments(cf.layout);
  auto allowed = [&](std::size_t r, std::size_t s) {
    const bool pair_r = r < 2 * cf.layout.pairs.size();
    const bool pair_s = s < 2 * cf.layout.pairs.size();
    if (pair_r && pair_s) return r / 2 == s / 2 && r != s;
    if (!pair_r && !pair_s) return r == s;
    return false;
  };
  for (std::size_t r = 0; r < seg.size(); ++r) {
    for (std::size_t s = 0; s < seg.size(); ++s) {
      if (allowed(r, s)) continue;
      const double energy =
          v.block(seg[r].offset, seg[s].offset, seg[r].size, seg[s].size).norm();
      if (energy > threshold) {
        std::ostringstream os;
        os << "decompose: C is not in C_c(U): block (" << seg[r].name << ", "
           << seg[s].name << ") has norm " << energy << " > " << threshold;
        throw MembershipError(os.str(), seg[r].name + " / " + seg[s].name,
                              energy);
      }
    }
  }

  ConjugationParams p;
  for (std::size_t j = 0; j < cf.layout.pairs.size(); ++j) {
    const auto off = cf.layout.pair_offset(j);
    const auto m = cf.layout.pairs[j].n;
    p.v_blocks.push_back(v.block(off, off + m, m, m));
  }
  p.q_plus = v.block(cf.layout.plus_offset(), cf.layout.plus_offset(),
                     cf.layout.ell, cf.layout.ell);
  p.q_minus = v.block(cf.layout.minus_offset(), cf.layout.minus_offset(),
                      cf.layout.kay, cf.layout.kay);
  return p;
}

inline ConjugationParams decompose(const Matrix& u, const AntilinearOperator& c,
                                   const SpectralOptions& opt = {}) {
  return decompose(canonical_form(u, opt), c);
}

/// Isometry, involution and commutation defects of C against U, with a
/// verdict at `threshold` (default 1e−8·n).
inline ConjugationReport verify_membership(const Matrix& u,
                                           const AntilinearOperator& c,
                                           double threshold = -1.0) {
  require_same_size(u, c.a, "verify_membership");
  const auto n = u.rows();
  if (threshold < 0.0) threshold = default_membership_threshold(n);
  auto [ok, rep] = is_conjugation(c);
  const Matrix cuc = sandwich(c, u);
  rep.commutation_defect = (cuc - u).norm();
  rep.symmetry_defect = (cuc - u.adjoint()).norm();
  rep.threshold = threshold;
  rep.passed = rep.isometry_defect <= threshold &&
               rep.involution_defect <= threshold &&
               rep.transpose_defect <= threshold &&
               rep.commutation_defect <= threshold;
  return rep;
}

/// U = J₁J₂ with J₁ = W J W* (spectral basis of U) and J₂ = J₁U; both are
/// conjugations with J U J = U*.
inline std::pair<AntilinearOperator, AntilinearOperator> factor_into_conjugations(
    const Matrix& u, const SpectralOptions& opt = {}) {
  const auto s = diagonalize_unitary(u, opt);
  const auto n = u.rows();
  AntilinearOperator j1 = transport(AntilinearOperator::conjugation(n), s.w);
  AntilinearOperator j2 = compose(j1, u);
  return {j1, j2};
}

}  // namespace commconj

#endif  // COMMCONJ_CONJUGATION_FAMILY_HPP
