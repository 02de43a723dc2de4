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

// commconj — command-line front end. JSON results go to stdout, a short
// human summary to stderr.
//
// Exit codes: 0 success, 2 invalid input, 3 no such object exists (e.g. the
// unitary is not self-dual), 4 a numerical check failed.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "commconj/antilinear.hpp"
#include "commconj/atomic_measure.hpp"
#include "commconj/conjugation_family.hpp"
#include "commconj/io.hpp"
#include "commconj/linalg.hpp"
#include "commconj/measure_models.hpp"
#include "commconj/shift_models.hpp"
#include "commconj/spectral.hpp"
#include "commconj/transforms.hpp"

namespace {

using commconj::Complex;
using commconj::Matrix;
using commconj::io::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitRefused = 3;
constexpr int kExitTolerance = 4;

struct Output {
  json result;
  int code = kExitOk;
  std::string summary;
};

void emit(const Output& out) {
  std::cout << out.result.dump(2) << '\n';
  if (!out.summary.empty()) std::cerr << out.summary << '\n';
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

Matrix read_unitary_file(const std::string& path) {
  const Matrix u = commconj::io::matrix_from_json(commconj::io::read_file(path));
  commconj::require_square(u, path);
  return u;
}

json clusters_json(const commconj::UnitarySpectrum& s) {
  json arr = json::array();
  for (const auto& c : s.clusters)
    arr.push_back(json{{"eigenvalue", commconj::io::complex_to_json(c.eigenvalue)},
                       {"multiplicity", c.multiplicity}});
  return arr;
}

Output cmd_check(const std::string& path) {
  const Matrix u = read_unitary_file(path);
  const auto s = commconj::diagonalize_unitary(u);
  const auto rep = commconj::check_selfdual(s);
  json mism = json::array();
  for (const auto& m : rep.mismatches)
    mism.push_back(json{{"eigenvalue", commconj::io::complex_to_json(m.eigenvalue)},
                        {"multiplicity", m.multiplicity},
                        {"conjugate_multiplicity", m.conjugate_multiplicity}});
  Output out;
  out.result = json{{"selfdual", rep.selfdual},
                    {"n", u.rows()},
                    {"clusters", clusters_json(s)},
                    {"mismatches", std::move(mism)}};
  out.summary = rep.selfdual ? "self-dual: C_c(U) is nonempty"
                             : "not self-dual: " + rep.message();
  return out;
}

Output conjugation_result(const Matrix& u, const commconj::CanonicalForm& cf,
                          const commconj::AntilinearOperator& c,
                          const std::string& out_path) {
  const auto rep = commconj::verify_membership(u, c);
  Output out;
  out.result["layout"] = commconj::io::layout_to_json(cf.layout);
  out.result["report"] = commconj::io::report_to_json(rep);
  if (out_path.empty()) {
    out.result["conjugation"] = commconj::io::antilinear_to_json(c);
  } else {
    commconj::io::write_file(out_path, commconj::io::antilinear_to_json(c));
    out.result["output"] = out_path;
  }
  out.code = rep.passed ? kExitOk : kExitTolerance;
  out.summary = std::string(rep.passed ? "ok" : "FAILED") +
                ": commutation defect " + fmt(rep.commutation_defect) +
                ", isometry defect " + fmt(rep.isometry_defect) +
                ", involution defect " + fmt(rep.involution_defect);
  return out;
}

Output cmd_canonical(const std::string& path, const std::string& out_path) {
  const Matrix u = read_unitary_file(path);
  const auto cf = commconj::canonical_form(u);
  return conjugation_result(u, cf, commconj::canonical_conjugation(cf), out_path);
}

Output cmd_sample(const std::string& path, std::uint64_t seed,
                  const std::string& out_path) {
  const Matrix u = read_unitary_file(path);
  const auto cf = commconj::canonical_form(u);
  commconj::Rng rng(seed);
  Output out = conjugation_result(u, cf, commconj::sample(cf, rng), out_path);
  out.result["seed"] = seed;
  return out;
}

Output cmd_verify(const std::string& upath, const std::string& cpath, double tol) {
  const Matrix u = read_unitary_file(upath);
  const auto c =
      commconj::io::antilinear_from_json(commconj::io::read_file(cpath));
  const auto rep = commconj::verify_membership(u, c, tol);
  Output out;
  out.result = commconj::io::report_to_json(rep);
  out.code = rep.passed ? kExitOk : kExitTolerance;
  out.summary = std::string(rep.passed ? "C is in C_c(U)" : "C is NOT in C_c(U)") +
                " (commutation defect " + fmt(rep.commutation_defect) +
                ", threshold " + fmt(rep.threshold) + ")";
  return out;
}

Output cmd_decompose(const std::string& upath, const std::string& cpath,
                     const std::string& out_path) {
  const Matrix u = read_unitary_file(upath);
  const auto c =
      commconj::io::antilinear_from_json(commconj::io::read_file(cpath));
  const auto cf = commconj::canonical_form(u);
  const auto p = commconj::decompose(cf, c);
  const auto rebuilt = commconj::from_params(cf.layout, cf.w, p);
  const double residual = (rebuilt.a - c.a).norm();
  Output out;
  out.result["layout"] = commconj::io::layout_to_json(cf.layout);
  out.result["reconstruction_residual"] = residual;
  if (out_path.empty()) {
    out.result["params"] = commconj::io::params_to_json(p);
  } else {
    commconj::io::write_file(out_path, commconj::io::params_to_json(p));
    out.result["output"] = out_path;
  }
  const double bound = commconj::default_membership_threshold(u.rows());
  out.code = residual <= bound ? kExitOk : kExitTolerance;
  out.summary = "decomposed into " + std::to_string(p.v_blocks.size()) +
                " pair block(s), l = " + std::to_string(cf.layout.ell) +
                ", k = " + std::to_string(cf.layout.kay) +
                "; reconstruction residual " + fmt(residual);
  return out;
}

Output cmd_fourunit(const std::string& path) {
  const Matrix a = commconj::io::matrix_from_json(commconj::io::read_file(path));
  const auto split = commconj::four_unitary_split(a);
  const double residual = (a - split.reconstruct()).norm();
  json unitaries = json::array();
  json defects = json::array();
  double worst = 0.0;
  for (const auto& u : split.unitaries) {
    unitaries.push_back(commconj::io::matrix_to_json(u));
    const double d = commconj::unitarity_defect(u);
    defects.push_back(d);
    worst = std::max(worst, d);
  }
  Output out;
  out.result = json{{"scale", split.scale},
                    {"residual", residual},
                    {"unitarity_defects", std::move(defects)},
                    {"unitaries", std::move(unitaries)}};
  const double bound = 1e-9 * (1.0 + a.norm());
  out.code = residual <= bound && worst <= 1e-9 ? kExitOk : kExitTolerance;
  out.summary = "A = " + fmt(split.scale) + " (U1 + U2 + U3 + U4), residual " +
                fmt(residual);
  return out;
}

Output cmd_measure(const std::string& op, const std::vector<std::string>& files) {
  auto load = [](const std::string& p) {
    return commconj::io::measure_from_json(commconj::io::read_file(p));
  };
  const bool binary = op == "meet" || op == "join";
  if (files.size() != (binary ? 2u : 1u)) {
    throw commconj::ValidationError("measure " + op + " expects " +
                                    (binary ? "two measure files" : "one measure file"));
  }
  Output out;
  if (op == "reflect") {
    const auto r = commconj::reflect(load(files[0]));
    out.result = commconj::io::measure_to_json(r);
    out.summary = "reflected " + std::to_string(r.size()) + " atom(s)";
  } else if (op == "rn") {
    const auto mu = load(files[0]);
    const auto rn = commconj::radon_nikodym(mu);
    json atoms = json::array();
    for (std::size_t k = 0; k < mu.size(); ++k)
      atoms.push_back(json{{"theta", mu[k].theta},
                           {"h", rn.value(k)},
                           {"partner", rn.partner[k]},
                           {"h_times_partner", rn.product_with_partner(k)}});
    out.result = json{{"atoms", std::move(atoms)}};
    out.summary = "dmu^c/dmu computed on " + std::to_string(mu.size()) + " atom(s)";
  } else if (op == "meet") {
    const auto m = commconj::lattice_meet(load(files[0]), load(files[1]));
    out.result = commconj::io::measure_to_json(m);
    out.summary = "meet has " + std::to_string(m.size()) + " atom(s)";
  } else if (op == "join") {
    const auto m = commconj::lattice_join(load(files[0]), load(files[1]));
    out.result = commconj::io::measure_to_json(m);
    out.summary = "join has " + std::to_string(m.size()) + " atom(s)";
  } else {
    throw commconj::ValidationError("unknown measure operation " + op);
  }
  return out;
}

json defects_json(const commconj::GridDefects& d) {
  return json{{"isometry", d.isometry},
              {"involution", d.involution},
              {"commutation", d.commutation}};
}

Output cmd_shift_demo(Eigen::Index order, Eigen::Index degree,
                      const std::string& preset, double s0, double lam) {
  commconj::require_divides(order, degree, "shift-demo");
  commconj::GridAntilinear c;
  if (degree == 1) {
    if (preset != "cosine" && preset != "identity") {
      throw commconj::ValidationError(
          "shift-demo: degree 1 supports presets cosine and identity");
    }
    const auto u = preset == "cosine"
                       ? commconj::cosine_phase(order)
                       : commconj::GridModel(order, commconj::Vector::Ones(order));
    c = commconj::shift_conjugation(u);
  } else if (preset == "identity") {
    c = commconj::phi_conjugation(commconj::identity_phi(order / degree, degree));
  } else {
    if (degree != 2) {
      throw commconj::ValidationError("shift-demo: preset " + preset +
                                      " needs degree 2");
    }
    const auto l = order / 2;
    commconj::PhiParams p;
    if (preset == "sincos") {
      p = commconj::presets::sincos(l);
    } else if (preset == "lambda") {
      p = commconj::presets::lambda(l, s0, lam);
    } else if (preset == "unit") {
      p = commconj::presets::unit(l);
    } else {
      throw commconj::ValidationError("shift-demo: unknown preset " + preset);
    }
    c = commconj::psi_conjugation(p, order);
  }
  const auto d = commconj::grid_defects(c, degree);
  const double bound = 1e-11;
  Output out;
  out.result = json{{"order", order},
                    {"degree", degree},
                    {"preset", preset},
                    {"nonzeros", c.a.nonZeros()},
                    {"defects", defects_json(d)}};
  const bool ok = d.isometry <= bound && d.involution <= bound && d.commutation <= bound;
  out.code = ok ? kExitOk : kExitTolerance;
  out.summary = std::string(ok ? "ok" : "FAILED") + ": involution " +
                fmt(d.involution) + ", isometry " + fmt(d.isometry) +
                ", commutation with M_{xi^" + std::to_string(degree) + "} " +
                fmt(d.commutation);
  return out;
}

json conj_report_json(const commconj::AntilinearOperator& c, const Matrix& op) {
  const auto [ok, rep] = commconj::is_conjugation(c);
  return json{{"isometry_defect", rep.isometry_defect},
              {"involution_defect", rep.involution_defect},
              {"transpose_defect", rep.transpose_defect},
              {"commutation_defect", (commconj::sandwich(c, op) - op).norm()}};
}

Output finish_transform(json result, const commconj::AntilinearOperator& c,
                        const Matrix& op, const std::string& name) {
  result["report"] = conj_report_json(c, op);
  const double worst = std::max({result["report"]["isometry_defect"].get<double>(),
                                 result["report"]["involution_defect"].get<double>(),
                                 result["report"]["commutation_defect"].get<double>()});
  Output out;
  out.result = std::move(result);
  out.code = worst <= 1e-12 ? kExitOk : kExitTolerance;
  out.summary = name + ": largest defect " + fmt(worst);
  return out;
}

Output cmd_fourier_demo(Eigen::Index n, std::uint64_t seed) {
  commconj::require_multiple(n, 4, "fourier-demo");
  const auto q = n / 4;
  commconj::Rng rng(seed);
  const commconj::RealMatrix o1 = commconj::real_symmetric_orthogonal(q, rng);
  const commconj::RealMatrix o2 = commconj::real_symmetric_orthogonal(q, rng);
  const Matrix ui = commconj::haar_unitary(q, rng);
  const auto c = commconj::fourier_conjugation(n, o1, o2, ui);
  const Matrix f = commconj::fourier_operator(n);
  const auto p = commconj::decompose(commconj::canonical_form(f), c);
  json result{{"size", n},
              {"seed", seed},
              {"q_plus_imag_max", p.q_plus.imag().cwiseAbs().maxCoeff()},
              {"q_minus_imag_max", p.q_minus.imag().cwiseAbs().maxCoeff()},
              {"v_block_residual", (p.v_blocks.at(0) - ui).norm()}};
  return finish_transform(std::move(result), c, f, "fourier conjugation");
}

Output cmd_hilbert_demo(Eigen::Index n, std::uint64_t seed) {
  commconj::require_multiple(n, 2, "hilbert-demo");
  commconj::Rng rng(seed);
  const Matrix ui = commconj::haar_unitary(n / 2, rng);
  const auto c = commconj::hilbert_conjugation(n, ui);
  json result{{"size", n}, {"seed", seed}};
  return finish_transform(std::move(result), c, commconj::hilbert_operator(n),
                          "hilbert conjugation");
}

Output cmd_hermite_check(Eigen::Index n_max, const std::vector<int>& sizes) {
  if (sizes.empty()) throw commconj::ValidationError("hermite-check: no grid sizes");
  json rows = json::array();
  std::vector<std::vector<double>> res;
  for (int size : sizes) {
    const auto g = commconj::refined_grid(size);
    const auto checks = commconj::dft_eigen_check(n_max, g);
    json r = json::array();
    std::vector<double> v;
    for (const auto& c : checks) {
      r.push_back(json{{"n", c.n}, {"residual", c.residual}, {"resolved", c.resolved}});
      v.push_back(c.residual);
    }
    rows.push_back(json{{"grid_size", size},
                        {"half_width", g.half_width()},
                        {"checks", std::move(r)}});
    res.push_back(std::move(v));
  }
  bool monotone = true;
  for (std::size_t i = 1; i < res.size(); ++i)
    for (std::size_t n = 0; n < res[i].size(); ++n)
      monotone = monotone && res[i][n] <= res[i - 1][n];
  Output out;
  out.result = json{{"n_max", n_max}, {"grids", std::move(rows)}, {"monotone", monotone}};
  out.code = monotone ? kExitOk : kExitTolerance;
  out.summary = std::string("residuals ") +
                (monotone ? "decrease" : "do NOT decrease") + " under refinement";
  return out;
}

Output error_output(int code, const std::string& kind, const std::string& msg) {
  Output out;
  out.code = code;
  out.result = json{{"error", json{{"kind", kind}, {"message", msg}}}};
  out.summary = "error: " + msg;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commuting conjugations of unitary matrices"};
  app.require_subcommand(1);

  std::string u_path, c_path, out_path, a_path;
  std::uint64_t seed = 0;
  double tol = -1.0;

  auto* check = app.add_subcommand("check", "Is U unitarily equivalent to U*?");
  check->add_option("U", u_path, "unitary matrix (JSON)")->required();

  auto* canonical = app.add_subcommand("canonical", "Canonical member of C_c(U)");
  canonical->add_option("U", u_path)->required();
  canonical->add_option("-o,--output", out_path, "write C here");

  auto* sample = app.add_subcommand("sample", "Random member of C_c(U)");
  sample->add_option("U", u_path)->required();
  sample->add_option("--seed", seed)->required();
  sample->add_option("-o,--output", out_path);

  auto* verify = app.add_subcommand("verify", "Check C against U");
  verify->add_option("U", u_path)->required();
  verify->add_option("C", c_path)->required();
  verify->add_option("--tol", tol, "threshold (default 1e-8 n)");

  auto* decompose = app.add_subcommand("decompose", "Recover V_j, Q+, Q- from C");
  decompose->add_option("U", u_path)->required();
  decompose->add_option("C", c_path)->required();
  decompose->add_option("-o,--output", out_path);

  auto* fourunit = app.add_subcommand("fourunit", "Split A into four unitaries");
  fourunit->add_option("A", a_path)->required();

  std::string measure_op;
  std::vector<std::string> measure_files;
  auto* measure = app.add_subcommand("measure", "Atomic measure operations");
  measure->add_option("op", measure_op, "reflect | rn | meet | join")
      ->required()
      ->check(CLI::IsMember({"reflect", "rn", "meet", "join"}));
  measure->add_option("files", measure_files, "measure file(s)")->required();

  Eigen::Index order = 64, degree = 2;
  std::string preset = "sincos";
  double s0 = 0.6, lam = 1.0;
  auto* shift = app.add_subcommand("shift-demo", "Grid conjugations of M_{xi^d}");
  shift->add_option("--order", order, "grid order M");
  shift->add_option("--degree", degree, "d in psi(z) = z^d");
  shift->add_option("--preset", preset, "sincos | lambda | unit | cosine | identity");
  shift->add_option("--s0", s0, "constant s for the lambda preset");
  shift->add_option("--lambda", lam, "slope for the lambda preset");

  Eigen::Index size = 16;
  auto* fourier = app.add_subcommand("fourier-demo", "Random member of C_c(F)");
  fourier->add_option("--size", size, "dimension, a multiple of 4");
  fourier->add_option("--seed", seed);
  auto* hilbert = app.add_subcommand("hilbert-demo", "Random member of C_c(H)");
  hilbert->add_option("--size", size, "dimension, even");
  hilbert->add_option("--seed", seed);

  Eigen::Index n_max = 8;
  std::vector<int> sizes{128, 256, 512};
  auto* hermite = app.add_subcommand("hermite-check", "Sampled Hermite/DFT check");
  hermite->add_option("--nmax", n_max, "highest Hermite index");
  hermite->add_option("--sizes", sizes, "grid sizes, comma separated")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  Output out;
  try {
    if (*check) out = cmd_check(u_path);
    else if (*canonical) out = cmd_canonical(u_path, out_path);
    else if (*sample) out = cmd_sample(u_path, seed, out_path);
    else if (*verify) out = cmd_verify(u_path, c_path, tol);
    else if (*decompose) out = cmd_decompose(u_path, c_path, out_path);
    else if (*fourunit) out = cmd_fourunit(a_path);
    else if (*measure) out = cmd_measure(measure_op, measure_files);
    else if (*shift) out = cmd_shift_demo(order, degree, preset, s0, lam);
    else if (*fourier) out = cmd_fourier_demo(size, seed);
    else if (*hilbert) out = cmd_hilbert_demo(size, seed);
    else if (*hermite) out = cmd_hermite_check(n_max, sizes);
  } catch (const commconj::ValidationError& e) {
    out = error_output(kExitInvalid, "invalid input", e.what());
  } catch (const commconj::RefusalError& e) {
    out = error_output(kExitRefused, "refused", e.what());
  } catch (const commconj::ToleranceError& e) {
    out = error_output(kExitTolerance, "tolerance", e.what());
  }
  emit(out);
  return out.code;
}
