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

// Runs the command-line tool and compares its JSON output with golden files.
// Paths come from compile definitions set in tests/CMakeLists.txt.

#ifndef COMMCONJ_TESTS_CLI_HARNESS_HPP
#define COMMCONJ_TESTS_CLI_HARNESS_HPP

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

inline const std::string kCli = COMMCONJ_CLI;
inline const fs::path kSamples = COMMCONJ_SAMPLES;
inline const fs::path kData = COMMCONJ_TEST_DATA;
inline const fs::path kGolden = COMMCONJ_GOLDEN;
inline const fs::path kWork = COMMCONJ_WORK;

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline CliRun run_cli(const std::string& args, const std::string& tag) {
  fs::create_directories(kWork);
  const fs::path out = kWork / (tag + ".out"), err = kWork / (tag + ".err");
  const std::string cmd =
      "'" + kCli + "' " + args + " > '" + out.string() + "' 2> '" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  CliRun r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

inline std::string sample(const std::string& name) { return "'" + (kSamples / name).string() + "'"; }
inline std::string data(const std::string& name) { return "'" + (kData / name).string() + "'"; }

/// Strings, integers and booleans exactly; floating point to 1e-9 absolute
/// plus 1e-7 relative. On mismatch `where` receives the JSON pointer.
inline bool json_near(const json& got, const json& want, std::string* where,
                      const std::string& at = "") {
  auto miss = [&](const std::string& why) {
    if (where) *where = (at.empty() ? "/" : at) + ": " + why;
    return false;
  };
  if (want.is_number_float() || (want.is_number() && got.is_number_float())) {
    if (!got.is_number()) return miss("expected a number");
    const double g = got.get<double>(), w = want.get<double>();
    if (std::abs(g - w) > 1e-9 + 1e-7 * std::abs(w)) {
      return miss(std::to_string(g) + " vs " + std::to_string(w));
    }
    return true;
  }
  if (got.type() != want.type()) return miss("type differs");
  if (want.is_object()) {
    if (got.size() != want.size()) return miss("member count differs");
    auto gi = got.begin();
    for (auto wi = want.begin(); wi != want.end(); ++wi, ++gi) {
      if (gi.key() != wi.key()) return miss("key " + gi.key() + " vs " + wi.key());
      if (!json_near(gi.value(), wi.value(), where, at + "/" + wi.key())) return false;
    }
    return true;
  }
  if (want.is_array()) {
    if (got.size() != want.size()) return miss("length differs");
    for (std::size_t i = 0; i < want.size(); ++i)
      if (!json_near(got[i], want[i], where, at + "/" + std::to_string(i))) return false;
    return true;
  }
  return got == want ? true : miss(got.dump() + " vs " + want.dump());
}

struct Case {
  std::string name;
  std::string args;
  int exit_code;
};

inline std::ostream& operator<<(std::ostream& os, const Case& c) { return os << c.name; }

inline std::vector<Case> golden_cases() {
  return {
      {"check_hilbert2", "check " + sample("hilbert2.json"), 0},
      {"check_not_selfdual", "check " + sample("not_selfdual.json"), 0},
      {"canonical_hilbert2", "canonical " + sample("hilbert2.json"), 0},
      {"canonical_not_selfdual", "canonical " + sample("not_selfdual.json"), 3},
      {"sample_hilbert2", "sample " + sample("hilbert2.json") + " --seed 7", 0},
      {"verify_not_member", "verify " + sample("hilbert2.json") + " " + data("plain_conjugation2.json"), 4},
      {"verify_loose_tol", "verify " + sample("hilbert2.json") + " " + data("plain_conjugation2.json") + " --tol 10", 0},
      {"decompose_not_member", "decompose " + sample("hilbert2.json") + " " + data("plain_conjugation2.json"), 4},
      {"fourunit_operator3", "fourunit " + sample("operator3.json"), 0},
      {"measure_reflect", "measure reflect " + sample("measure_a.json"), 0},
      {"measure_rn", "measure rn " + sample("measure_a.json"), 0},
      {"measure_meet", "measure meet " + sample("measure_a.json") + " " + sample("measure_b.json"), 0},
      {"measure_join", "measure join " + sample("measure_a.json") + " " + sample("measure_b.json"), 0},
      {"measure_rn_unpaired", "measure rn " + sample("measure_unpaired.json"), 3},
      {"shift_sincos", "shift-demo --order 64 --degree 2 --preset sincos", 0},
      {"shift_lambda", "shift-demo --order 128 --degree 2 --preset lambda --s0 0.5 --lambda 1.5", 0},
      {"shift_cosine", "shift-demo --order 33 --degree 1 --preset cosine", 0},
      {"shift_identity3", "shift-demo --order 24 --degree 3 --preset identity", 0},
      {"shift_bad_order", "shift-demo --order 63 --degree 2", 2},
      {"fourier_demo", "fourier-demo --size 16 --seed 3", 0},
      {"fourier_bad_size", "fourier-demo --size 10 --seed 3", 2},
      {"hilbert_demo", "hilbert-demo --size 8 --seed 1", 0},
      {"hermite_check", "hermite-check", 0},
      {"malformed_json", "check " + data("malformed.json"), 2},
      {"bad_entry", "check " + data("bad_entry.json"), 2},
      {"nonunitary", "canonical " + data("nonunitary.json"), 2},
      {"negative_weight", "measure reflect " + data("negative_weight.json"), 2},
  };
}

/// Data file paths vary between checkouts; keep only their base names.
inline std::string strip_data_dirs(std::string out) {
  for (const auto& dir : {kSamples.string() + "/", kData.string() + "/"}) {
    for (auto pos = out.find(dir); pos != std::string::npos; pos = out.find(dir))
      out.erase(pos, dir.size());
  }
  return out;
}

}  // namespace cli

#endif  // COMMCONJ_TESTS_CLI_HARNESS_HPP
