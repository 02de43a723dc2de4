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
 * atomic_measure.hpp — finite positive measures on the unit circle,
 *
 *     μ = Σ_k w_k δ_{e^{iθ_k}},   θ_k ∈ (−π, π],  w_k > 0.
 *
 * Atoms are kept by angle so |ξ| = 1 holds exactly. Angles are canonicalized
 * into (−π, π] and rounded to a 1e−12 grid; two angles within 1e−9 (circular
 * distance) name the same atom. Atoms are stored sorted by angle.
 *
 * Operations:
 *   reflect(μ)          μᶜ(Ω) = μ(Ω*): atoms move to conjugate points
 *   radon_nikodym(μ)    h = dμᶜ/dμ; for atoms h_k = w_σ(k) / w_k where σ(k)
 *                       is the conjugate partner. Refused when a non-real
 *                       atom has no partner (then μᶜ is not ≪ μ).
 *   lattice_join        atomwise sum over the union
 *   lattice_meet        atomwise min over the intersection
 */

#ifndef COMMCONJ_ATOMIC_MEASURE_HPP
#define COMMCONJ_ATOMIC_MEASURE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "commconj/error.hpp"

namespace commconj {

inline constexpr double kAngleQuantum = 1e-12;
inline constexpr double kAtomMatchTol = 1e-9;

/// Reduce to (−π, π] and snap to the 1e−12 grid.
inline double canonical_angle(double theta) {
  constexpr double pi = std::numbers::pi;
  double t = std::remainder(theta, 2.0 * pi);
  if (std::abs(t) >= pi - 0.5 * kAngleQuantum) return pi;
  t = std::round(t / kAngleQuantum) * kAngleQuantum;
  return t == 0.0 ? 0.0 : t;
}

inline double circular_distance(double a, double b) {
  return std::abs(std::remainder(a - b, 2.0 * std::numbers::pi));
}

struct Atom {
  double theta = 0.0;
  double weight = 1.0;

  [[nodiscard]] std::complex<double> point() const {
    return std::polar(1.0, theta);
  }
  [[nodiscard]] bool is_real() const {
    return theta == 0.0 || theta == std::numbers::pi;
  }
};

class AtomicMeasure {
 public:
  AtomicMeasure() = default;

  explicit AtomicMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    for (auto& a : atoms_) {
      if (!std::isfinite(a.theta)) {
        throw ValidationError("AtomicMeasure: non-finite angle");
      }
      if (!std::isfinite(a.weight) || !(a.weight > 0.0)) {
        throw ValidationError("AtomicMeasure: weights must be positive, got " +
                              std::to_string(a.weight));
      }
      a.theta = canonical_angle(a.theta);
    }
    std::sort(atoms_.begin(), atoms_.end(),
              [](const Atom& x, const Atom& y) { return x.theta < y.theta; });
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      for (std::size_t j = i + 1; j < atoms_.size(); ++j) {
        if (circular_distance(atoms_[i].theta, atoms_[j].theta) <=
            kAtomMatchTol) {
          throw ValidationError("AtomicMeasure: duplicate atom at angle " +
                                std::to_string(atoms_[i].theta));
        }
      }
    }
  }

  [[nodiscard]] const std::vector<Atom>& atoms() const { return atoms_; }
  [[nodiscard]] std::size_t size() const { return atoms_.size(); }
  [[nodiscard]] bool empty() const { return atoms_.empty(); }
  [[nodiscard]] const Atom& operator[](std::size_t k) const { return atoms_[k]; }

  [[nodiscard]] std::optional<std::size_t> find(double theta) const {
    const double t = canonical_angle(theta);
    for (std::size_t k = 0; k < atoms_.size(); ++k) {
      if (circular_distance(atoms_[k].theta, t) <= kAtomMatchTol) return k;
    }
    return std::nullopt;
  }

  /// μ({e^{iθ}}); zero off the support.
  [[nodiscard]] double weight_at(double theta) const {
    const auto k = find(theta);
    return k ? atoms_[*k].weight : 0.0;
  }

  [[nodiscard]] double total_mass() const {
    double m = 0.0;
    for (const auto& a : atoms_) m += a.weight;
    return m;
  }

  friend bool operator==(const AtomicMeasure& x, const AtomicMeasure& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k].theta != y[k].theta || x[k].weight != y[k].weight) return false;
    }
    return true;
  }

 private:
  std::vector<Atom> atoms_;
};

/// Thrown when an atom off the real axis has no conjugate partner.
class AbsoluteContinuityError : public RefusalError {
 public:
  AbsoluteContinuityError(const std::string& msg, double theta)
      : RefusalError(msg), theta_(theta) {}
  [[nodiscard]] double theta() const { return theta_; }

 private:
  double theta_;
};

inline AtomicMeasure reflect(const AtomicMeasure& mu) {
  std::vector<Atom> out;
  out.reserve(mu.size());
  for (const auto& a : mu.atoms()) out.push_back({-a.theta, a.weight});
  return AtomicMeasure(std::move(out));
}

/// h = dμᶜ/dμ on the atoms, as the exact ratio w_σ(k) / w_k.
struct RadonNikodym {
  std::vector<std::size_t> partner;
  std::vector<double> numerator;    // w_σ(k)
  std::vector<double> denominator;  // w_k

  [[nodiscard]] std::size_t size() const { return partner.size(); }
  [[nodiscard]] double value(std::size_t k) const {
    return numerator[k] / denominator[k];
  }
  /// h_k · h_σ(k), evaluated as a ratio of equal products.
  [[nodiscard]] double product_with_partner(std::size_t k) const {
    const std::size_t p = partner[k];
    return (numerator[k] * numerator[p]) / (denominator[k] * denominator[p]);
  }
};

inline std::vector<std::size_t> conjugate_partners(const AtomicMeasure& mu) {
  std::vector<std::size_t> partner(mu.size());
  for (std::size_t k = 0; k < mu.size(); ++k) {
    const auto& a = mu[k];
    if (a.is_real()) {
      partner[k] = k;
      continue;
    }
    const auto p = mu.find(-a.theta);
    if (!p) {
      throw AbsoluteContinuityError(
          "reflected measure is not absolutely continuous: atom at angle " +
              std::to_string(a.theta) + " has no conjugate partner",
          a.theta);
    }
    partner[k] = *p;
  }
  return partner;
}

inline RadonNikodym radon_nikodym(const AtomicMeasure& mu) {
  RadonNikodym rn;
  rn.partner = conjugate_partners(mu);
  rn.numerator.resize(mu.size());
  rn.denominator.resize(mu.size());
  for (std::size_t k = 0; k < mu.size(); ++k) {
    rn.numerator[k] = mu[rn.partner[k]].weight;
    rn.denominator[k] = mu[k].weight;
  }
  return rn;
}

inline AtomicMeasure lattice_join(const AtomicMeasure& mu,
                                  const AtomicMeasure& nu) {
  std::vector<Atom> out(mu.atoms());
  for (const auto& b : nu.atoms()) {
    auto it = std::find_if(out.begin(), out.end(), [&](const Atom& a) {
      return circular_distance(a.theta, b.theta) <= kAtomMatchTol;
    });
    if (it != out.end()) {
      it->weight += b.weight;
    } else {
      out.push_back(b);
    }
  }
  return AtomicMeasure(std::move(out));
}

/// For atomic measures the infimum over Borel splittings is attained
/// atom by atom: (μ ∧ ν)({ξ}) = min(μ({ξ}), ν({ξ})).
inline AtomicMeasure lattice_meet(const AtomicMeasure& mu,
                                  const AtomicMeasure& nu) {
  std::vector<Atom> out;
  for (const auto& a : mu.atoms()) {
    const auto k = nu.find(a.theta);
    if (k) out.push_back({a.theta, std::min(a.weight, nu[*k].weight)});
  }
  return AtomicMeasure(std::move(out));
}

/// μ ≪ ν: every atom of μ is an atom of ν.
inline bool absolutely_continuous(const AtomicMeasure& mu,
                                  const AtomicMeasure& nu) {
  return std::all_of(mu.atoms().begin(), mu.atoms().end(),
                     [&](const Atom& a) { return nu.find(a.theta).has_value(); });
}

}  // namespace commconj

#endif  // COMMCONJ_ATOMIC_MEASURE_HPP
