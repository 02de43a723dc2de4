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
 * io.hpp — JSON formats.
 *
 *   matrix    {"rows": n, "cols": m, "data": [[[re, im], ...], ...]}
 *             optional "kind": "linear" | "antilinear"
 *   measure   {"atoms": [{"theta": radians, "weight": w}, ...]}
 *   grid      {"order": M, "values": [[re, im], ...]}
 *   params    {"v_blocks": [matrix...], "q_plus": matrix, "q_minus": matrix}
 *
 * Readers throw ValidationError with the JSON pointer of the bad field.
 * Requires nlohmann/json.
 */

#ifndef COMMCONJ_IO_HPP
#define COMMCONJ_IO_HPP

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "commconj/antilinear.hpp"
#include "commconj/atomic_measure.hpp"
#include "commconj/conjugation_family.hpp"
#include "commconj/linalg.hpp"
#include "commconj/shift_models.hpp"

namespace commconj::io {

using json = nlohmann::ordered_json;

[[noreturn]] inline void fail(const std::string& pointer, const std::string& msg) {
  throw ValidationError("at " + (pointer.empty() ? std::string("/") : pointer) +
                        ": " + msg);
}

inline const json& member(const json& j, const std::string& key,
                          const std::string& at) {
  if (!j.is_object()) fail(at, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(at + "/" + key, "missing field");
  return *it;
}

inline double number(const json& j, const std::string& at) {
  if (!j.is_number()) fail(at, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(at, "non-finite number");
  return v;
}

inline Eigen::Index count(const json& j, const std::string& at) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) {
    fail(at, "expected a non-negative integer");
  }
  const auto v = j.get<long long>();
  if (v < 0) fail(at, "expected a non-negative integer");
  return static_cast<Eigen::Index>(v);
}

inline json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const json& j, const std::string& at) {
  if (!j.is_array() || j.size() != 2) fail(at, "expected an [re, im] pair");
  return {number(j[0], at + "/0"), number(j[1], at + "/1")};
}

inline json matrix_to_json(const Matrix& m, const std::string& kind = "") {
  json out;
  if (!kind.empty()) out["kind"] = kind;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    data.push_back(std::move(row));
  }
  out["data"] = std::move(data);
  return out;
}

inline Matrix matrix_from_json(const json& j, const std::string& at = "") {
  const auto rows = count(member(j, "rows", at), at + "/rows");
  const auto cols = count(member(j, "cols", at), at + "/cols");
  const json& data = member(j, "data", at);
  if (!data.is_array() || data.size() != static_cast<std::size_t>(rows)) {
    fail(at + "/data", "expected " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const std::string rp = at + "/data/" + std::to_string(i);
    const json& row = data[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(cols)) {
      fail(rp, "expected " + std::to_string(cols) + " entries");
    }
    for (Eigen::Index k = 0; k < cols; ++k)
      m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)],
                                  rp + "/" + std::to_string(k));
  }
  return m;
}

inline json antilinear_to_json(const AntilinearOperator& c) {
  return matrix_to_json(c.a, "antilinear");
}

inline AntilinearOperator antilinear_from_json(const json& j,
                                               const std::string& at = "") {
  if (j.is_object() && j.contains("kind") && j["kind"] != "antilinear") {
    fail(at + "/kind", "expected \"antilinear\"");
  }
  const Matrix m = matrix_from_json(j, at);
  if (m.rows() != m.cols()) fail(at, "antilinear operator must be square");
  return AntilinearOperator(m);
}

inline json measure_to_json(const AtomicMeasure& mu) {
  json atoms = json::array();
  for (const auto& a : mu.atoms())
    atoms.push_back(json{{"theta", a.theta}, {"weight", a.weight}});
  return json{{"atoms", std::move(atoms)}};
}

inline AtomicMeasure measure_from_json(const json& j, const std::string& at = "") {
  const json& atoms = member(j, "atoms", at);
  if (!atoms.is_array()) fail(at + "/atoms", "expected an array");
  std::vector<Atom> out;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    const std::string ap = at + "/atoms/" + std::to_string(k);
    const double theta = number(member(atoms[k], "theta", ap), ap + "/theta");
    const double w = number(member(atoms[k], "weight", ap), ap + "/weight");
    if (!(w > 0.0)) fail(ap + "/weight", "weight must be positive");
    out.push_back({theta, w});
  }
  try {
    return AtomicMeasure(std::move(out));
  } catch (const ValidationError& e) {
    fail(at + "/atoms", e.what());
  }
}

inline json grid_to_json(const GridModel& g) {
  json values = json::array();
  for (Eigen::Index p = 0; p < g.order; ++p) values.push_back(complex_to_json(g.values(p)));
  return json{{"order", g.order}, {"values", std::move(values)}};
}

inline GridModel grid_from_json(const json& j, const std::string& at = "") {
  const auto order = count(member(j, "order", at), at + "/order");
  const json& values = member(j, "values", at);
  if (!values.is_array() || values.size() != static_cast<std::size_t>(order)) {
    fail(at + "/values", "expected " + std::to_string(order) + " values");
  }
  if (order < 1) fail(at + "/order", "order must be >= 1");
  Vector v(order);
  for (Eigen::Index p = 0; p < order; ++p)
    v(p) = complex_from_json(values[static_cast<std::size_t>(p)],
                             at + "/values/" + std::to_string(p));
  return GridModel(order, std::move(v));
}

inline json params_to_json(const ConjugationParams& p) {
  json v = json::array();
  for (const auto& b : p.v_blocks) v.push_back(matrix_to_json(b));
  return json{{"v_blocks", std::move(v)},
              {"q_plus", matrix_to_json(p.q_plus)},
              {"q_minus", matrix_to_json(p.q_minus)}};
}

inline ConjugationParams params_from_json(const json& j, const std::string& at = "") {
  ConjugationParams p;
  const json& v = member(j, "v_blocks", at);
  if (!v.is_array()) fail(at + "/v_blocks", "expected an array");
  for (std::size_t k = 0; k < v.size(); ++k)
    p.v_blocks.push_back(matrix_from_json(v[k], at + "/v_blocks/" + std::to_string(k)));
  p.q_plus = matrix_from_json(member(j, "q_plus", at), at + "/q_plus");
  p.q_minus = matrix_from_json(member(j, "q_minus", at), at + "/q_minus");
  return p;
}

inline json layout_to_json(const BlockLayout& layout) {
  json pairs = json::array();
  for (const auto& pr : layout.pairs)
    pairs.push_back(json{{"xi", complex_to_json(pr.xi)}, {"n", pr.n}});
  return json{{"pairs", std::move(pairs)}, {"ell", layout.ell}, {"kay", layout.kay}};
}

inline json report_to_json(const ConjugationReport& r) {
  return json{{"isometry_defect", r.isometry_defect},
              {"involution_defect", r.involution_defect},
              {"transpose_defect", r.transpose_defect},
              {"commutation_defect", r.commutation_defect},
              {"symmetry_defect", r.symmetry_defect},
              {"threshold", r.threshold},
              {"passed", r.passed}};
}

inline json parse(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(source + ": malformed JSON at byte " +
                          std::to_string(e.byte) + ": " + e.what());
  }
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

inline void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace commconj::io

#endif  // COMMCONJ_IO_HPP
