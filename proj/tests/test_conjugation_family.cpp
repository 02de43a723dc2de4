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

#include <gtest/gtest.h>

#include <numbers>

#include "commconj/conjugation_family.hpp"
#include "oracles.hpp"

namespace commconj {
namespace {

Matrix diag(std::initializer_list<Complex> v) {
  Vector d(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (auto z : v) d(i++) = z;
  return d.asDiagonal();
}

Matrix mixed_unitary(std::mt19937_64& rng) {
  const Complex a = std::polar(1.0, 0.9), b = std::polar(1.0, 2.4);
  return oracle::planted_unitary(
      {a, a, std::conj(a), std::conj(a), b, std::conj(b), 1.0, 1.0, -1.0}, rng);
}

TEST(CanonicalConjugation, CommutesInRealForm) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 10; ++t) {
    const Matrix u = mixed_unitary(rng);
    const auto c = canonical_conjugation(u);
    EXPECT_LT(oracle::max_defect(oracle::real_form_defects(c.a, u)), 1e-9) << t;
  }
}

TEST(CanonicalConjugation, RefusesDiagII) {
  EXPECT_THROW(canonical_conjugation(diag({kI, kI})), NotSelfDualError);
}

TEST(Sample, MembersCommuteAndDependOnSeed) {
  std::mt19937_64 rng(2);
  const Matrix u = mixed_unitary(rng);
  const auto c1 = sample(u, 5), c2 = sample(u, 5), c3 = sample(u, 6);
  EXPECT_EQ(c1.a, c2.a);
  EXPECT_GT((c1.a - c3.a).norm(), 1e-3);
  for (const auto& c : {c1, c3}) {
    const auto d = oracle::real_form_defects(c.a, u);
    EXPECT_LT(oracle::max_defect(d), 1e-9);
  }
}

TEST(FromParams, ValidatesShapesAndSymmetry) {
  BlockLayout layout;
  layout.pairs.push_back({kI, 1});
  layout.ell = 1;
  auto p = identity_params(layout);
  EXPECT_NO_THROW(from_params(layout, Matrix::Identity(3, 3), p));
  p.q_plus = Matrix::Identity(2, 2);
  EXPECT_THROW(from_params(layout, Matrix::Identity(3, 3), p), ValidationError);
  p = identity_params(layout);
  p.v_blocks[0](0, 0) = 2.0;
  EXPECT_THROW(from_params(layout, Matrix::Identity(3, 3), p), ValidationError);
  layout.ell = 2;
  p = identity_params(layout);
  p.q_plus = haar_unitary(2, std::uint64_t{1});  // not symmetric
  EXPECT_THROW(from_params(layout, Matrix::Identity(4, 4), p), ValidationError);
}

TEST(Decompose, RoundTripOnParameters) {
  std::mt19937_64 rng(3);
  Rng lib_rng(3);
  for (int t = 0; t < 20; ++t) {
    const Matrix u = mixed_unitary(rng);
    const auto cf = canonical_form(u);
    const auto p = sample_params(cf.layout, lib_rng);
    const auto back = decompose(cf, from_params(cf.layout, cf.w, p));
    ASSERT_EQ(back.v_blocks.size(), p.v_blocks.size());
    for (std::size_t j = 0; j < p.v_blocks.size(); ++j)
      EXPECT_LT((back.v_blocks[j] - p.v_blocks[j]).norm(), 1e-8);
    EXPECT_LT((back.q_plus - p.q_plus).norm(), 1e-8);
    EXPECT_LT((back.q_minus - p.q_minus).norm(), 1e-8);
  }
}

TEST(Decompose, NamesTheOffendingBlock) {
  // J does not commute with diag(i, -i, 1) conjugated by a non-real W.
  std::mt19937_64 rng(4);
  const Matrix u = oracle::planted_unitary({kI, -kI, 1.0}, rng);
  const auto cf = canonical_form(u);
  const AntilinearOperator j = transport(AntilinearOperator::conjugation(3), cf.w);
  // W J W* is symmetric w.r.t. U (lands in C_s), so it has diagonal pair blocks
  try {
    decompose(cf, j);
    FAIL() << "expected MembershipError";
  } catch (const MembershipError& e) {
    EXPECT_EQ(e.block(), "pair 1 [i] / pair 1 [i]");
    EXPECT_GT(e.energy(), 0.5);
  }
  EXPECT_THROW(decompose(cf, AntilinearOperator(haar_unitary(3, std::uint64_t{9}))),
               MembershipError);
}

TEST(VerifyMembership, ThresholdControlsVerdict) {
  std::mt19937_64 rng(5);
  const Matrix u = mixed_unitary(rng);
  auto c = canonical_conjugation(u);
  EXPECT_TRUE(verify_membership(u, c).passed);
  c.a(0, 0) += 1e-6;
  EXPECT_FALSE(verify_membership(u, c).passed);
  EXPECT_TRUE(verify_membership(u, c, 1e-3).passed);
}

TEST(FactorIntoConjugations, ProductRecoversU) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 5; ++t) {
    const Matrix u = oracle::gram_schmidt_unitary(6, rng);
    const auto [j1, j2] = factor_into_conjugations(u);
    EXPECT_TRUE(is_conjugation(j1).first);
    EXPECT_TRUE(is_conjugation(j2).first);
    EXPECT_LT((compose(j1, j2) - u).norm(), 1e-10);
    EXPECT_LT(symmetry_defect(j1, u), 1e-10);
  }
}

// Exhaustive n = 2 check: every conjugation commuting with diag(i, -i) is
// [[0, v], [v, 0]] with |v| = 1.
TEST(Completeness, BruteForceAtTwoByTwo) {
  const Matrix u = diag({kI, -kI});
  const int grid = 72;
  int hits = 0;
  for (int a = 0; a <= 4; ++a) {
    const double r = a / 4.0;  // |A00| = |A11| = r, |A01| = sqrt(1 - r^2)
    // phases of zero entries are meaningless, so r = 0 has one phase only
    const int np = a == 0 ? 1 : grid;
    for (int p = 0; p < np; ++p)
      for (int q = 0; q < grid; ++q)
        for (int s = 0; s < np; ++s) {
          Matrix m(2, 2);
          const double o = std::sqrt(1.0 - r * r);
          m(0, 0) = std::polar(r, 2 * std::numbers::pi * p / grid);
          m(1, 1) = std::polar(r, 2 * std::numbers::pi * s / grid);
          m(0, 1) = m(1, 0) = std::polar(o, 2 * std::numbers::pi * q / grid);
          if (unitarity_defect(m) > 1e-9) continue;
          const auto d = oracle::real_form_defects(m, u);
          if (oracle::max_defect(d) > 1e-9) continue;
          ++hits;
          EXPECT_NEAR(r, 0.0, 1e-12);
        }
  }
  EXPECT_EQ(hits, grid);
}

}  // namespace
}  // namespace commconj
