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

#include <functional>
#include <numbers>

#include "commconj/io.hpp"

namespace commconj {
namespace {

using io::json;

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

TEST(Io, MatrixWriteReadIsIdentity) {
  Rng rng(1);
  const Matrix m = complex_gaussian(3, 4, rng);
  const json j = json::parse(io::matrix_to_json(m).dump(2));
  EXPECT_EQ(io::matrix_from_json(j), m);
}

TEST(Io, AntilinearMeasureGridParamsRoundTrip) {
  Rng rng(2);
  const AntilinearOperator c(symmetric_unitary(3, rng));
  EXPECT_EQ(io::antilinear_from_json(json::parse(io::antilinear_to_json(c).dump())).a, c.a);

  const AtomicMeasure mu({{0.25, 1.5}, {-0.25, 1.0 / 3.0}, {std::numbers::pi, 2.0}});
  EXPECT_EQ(io::measure_from_json(json::parse(io::measure_to_json(mu).dump())), mu);

  const GridModel g = cosine_phase(9);
  EXPECT_EQ(io::grid_from_json(json::parse(io::grid_to_json(g).dump())).values, g.values);

  ConjugationParams p;
  p.v_blocks = {haar_unitary(2, rng), haar_unitary(1, rng)};
  p.q_plus = symmetric_unitary(2, rng);
  p.q_minus = Matrix(0, 0);
  const auto back = io::params_from_json(json::parse(io::params_to_json(p).dump()));
  ASSERT_EQ(back.v_blocks.size(), 2u);
  EXPECT_EQ(back.v_blocks[0], p.v_blocks[0]);
  EXPECT_EQ(back.v_blocks[1], p.v_blocks[1]);
  EXPECT_EQ(back.q_plus, p.q_plus);
  EXPECT_EQ(back.q_minus.size(), 0);
}

TEST(Io, ErrorsCarryJsonPointers) {
  EXPECT_EQ(error_of([] { io::matrix_from_json(json::parse(R"({"rows": 1, "cols": 1})")); }),
            "at /data: missing field");
  EXPECT_EQ(error_of([] {
              io::matrix_from_json(json::parse(R"({"rows": 1, "cols": 2, "data": [[[1, 0]]]})"));
            }),
            "at /data/0: expected 2 entries");
  EXPECT_EQ(error_of([] {
              io::matrix_from_json(json::parse(R"({"rows": 1, "cols": 1, "data": [[[1, "a"]]]})"));
            }),
            "at /data/0/0/1: expected a number");
  EXPECT_EQ(error_of([] { io::matrix_from_json(json::parse(R"({"rows": -1, "cols": 1, "data": []})")); }),
            "at /rows: expected a non-negative integer");
  EXPECT_EQ(error_of([] { io::measure_from_json(json::parse(R"({"atoms": [{"theta": 1}]})")); }),
            "at /atoms/0/weight: missing field");
  EXPECT_EQ(error_of([] {
              io::antilinear_from_json(
                  json::parse(R"({"kind": "linear", "rows": 1, "cols": 1, "data": [[[1, 0]]]})"));
            }),
            "at /kind: expected \"antilinear\"");
  EXPECT_NE(error_of([] { io::parse("{\"a\": ", "x.json"); }).find("x.json: malformed JSON at byte"),
            std::string::npos);
}

}  // namespace
}  // namespace commconj
