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

#include "commconj/antilinear.hpp"
#include "oracles.hpp"

namespace commconj {
namespace {

TEST(Antilinear, ApplyIsAntilinear) {
  Rng rng(1);
  const AntilinearOperator c(complex_gaussian(4, 4, rng));
  const Vector x = complex_gaussian(4, 1, rng), y = complex_gaussian(4, 1, rng);
  const Complex a(0.3, -1.7);
  EXPECT_LT((commconj::apply(c, a * x + y) - (std::conj(a) * commconj::apply(c, x) + commconj::apply(c, y))).norm(),
            1e-12);
  EXPECT_THROW(commconj::apply(c, Vector::Zero(3)), ValidationError);
}

TEST(Antilinear, PlainConjugationIsAConjugation) {
  const auto [ok, rep] = is_conjugation(AntilinearOperator::conjugation(5));
  EXPECT_TRUE(ok);
  EXPECT_EQ(rep.isometry_defect, 0.0);
  EXPECT_EQ(rep.involution_defect, 0.0);
}

TEST(Antilinear, SymmetricUnitaryGivesConjugationRealFormOracle) {
  Rng rng(2);
  for (Eigen::Index n : {1, 3, 6}) {
    const AntilinearOperator c(symmetric_unitary(n, rng));
    EXPECT_TRUE(is_conjugation(c).first);
    const auto d = oracle::real_form_defects(c.a, Matrix::Identity(n, n));
    EXPECT_LT(d.isometry, 1e-12);
    EXPECT_LT(d.involution, 1e-12);
  }
}

TEST(Antilinear, NonSymmetricUnitaryIsNotAConjugation) {
  Rng rng(3);
  const AntilinearOperator c(haar_unitary(4, rng));
  const auto [ok, rep] = is_conjugation(c);
  EXPECT_FALSE(ok);
  EXPECT_GT(rep.transpose_defect, 1e-3);
  EXPECT_GT(oracle::real_form_defects(c.a, Matrix::Identity(4, 4)).involution, 1e-3);
}

TEST(Antilinear, PolarizationIdentityForConjugations) {
  // <Cx, Cy> = <y, x> for a conjugation
  Rng rng(4);
  const AntilinearOperator c(symmetric_unitary(5, rng));
  const Vector x = complex_gaussian(5, 1, rng), y = complex_gaussian(5, 1, rng);
  EXPECT_LT(std::abs(inner(commconj::apply(c, x), commconj::apply(c, y)) - inner(y, x)), 1e-12);
}

TEST(Antilinear, CompositionsMatchRealFormProducts) {
  Rng rng(5);
  const Matrix a = complex_gaussian(3, 3, rng), b = complex_gaussian(3, 3, rng);
  const Matrix m = complex_gaussian(3, 3, rng);
  const AntilinearOperator ca(a), cb(b);
  using oracle::realify_antilinear;
  using oracle::realify_linear;
  EXPECT_LT((realify_linear(compose(ca, cb)) -
             realify_antilinear(a) * realify_antilinear(b)).norm(), 1e-12);
  EXPECT_LT((realify_antilinear(compose(m, ca).a) -
             realify_linear(m) * realify_antilinear(a)).norm(), 1e-12);
  EXPECT_LT((realify_antilinear(compose(ca, m).a) -
             realify_antilinear(a) * realify_linear(m)).norm(), 1e-12);
}

TEST(Antilinear, TransportConjugatesByW) {
  Rng rng(6);
  const Matrix w = haar_unitary(4, rng);
  const AntilinearOperator c(symmetric_unitary(4, rng));
  const auto t = transport(c, w);
  const oracle::Real expected = oracle::realify_linear(w) * oracle::realify_antilinear(c.a) *
                        oracle::realify_linear(w.adjoint());
  EXPECT_LT((oracle::realify_antilinear(t.a) - expected).norm(), 1e-12);
  EXPECT_TRUE(is_conjugation(t).first);
}

TEST(Antilinear, SandwichAndCommutationDefect) {
  Rng rng(7);
  const Matrix u = haar_unitary(3, rng);
  const auto j = AntilinearOperator::conjugation(3);
  EXPECT_LT((sandwich(j, u) - u.conjugate()).norm(), 1e-15);
  EXPECT_GT(commutation_defect(j, u), 1e-3);
  // a real orthogonal U commutes with J and is not symmetric under it
  const RealMatrix o = real_haar_orthogonal(3, rng);
  EXPECT_LT(commutation_defect(j, o.cast<Complex>()), 1e-12);
  EXPECT_THROW(commutation_defect(j, 2.0 * u), ValidationError);
}

TEST(Antilinear, ConjugationSetOfUEqualsThatOfUAdjoint) {
  Rng rng(8);
  const Matrix d = Vector::Map(std::vector<Complex>{kI, -kI, 1.0}.data(), 3).asDiagonal();
  const Matrix w = haar_unitary(3, rng);
  const Matrix u = w * d * w.adjoint();
  // C = W J W* lies in C_s(U); (W J W*)·U-type products land in C_c
  Matrix v = Matrix::Zero(3, 3);
  v(0, 1) = v(1, 0) = std::polar(1.0, 0.4);
  v(2, 2) = 1.0;
  const auto c = transport(AntilinearOperator(v), w);
  EXPECT_LT(commutation_defect(c, u), 1e-12);
  EXPECT_LT(commutation_defect(c, u.adjoint()), 1e-12);
}

TEST(Antilinear, UnitaryTimesConjugationCommutingWithIt) {
  // if C commutes with U then UC is a conjugation exactly when U is C-symmetric
  Rng rng(9);
  const auto j = AntilinearOperator::conjugation(4);
  const Matrix u = symmetric_unitary(4, rng);  // J U J = conj(U) = U*
  const auto uc = compose(u, j);
  EXPECT_TRUE(is_conjugation(uc).first);
}

}  // namespace
}  // namespace commconj
