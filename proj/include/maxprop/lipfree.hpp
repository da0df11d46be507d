// Copyright 2026 The maxprop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "maxprop/common.hpp"
#include "maxprop/report.hpp"
#include "maxprop/simplex.hpp"
#include "maxprop/transport.hpp"

namespace maxprop {

/// A pointed metric space on points 0..n-1 with base point 0.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace(std::vector<std::string> labels, std::vector<std::vector<double>> dist)
      : labels_(std::move(labels)), dist_(std::move(dist)) {
    validate();
  }

  /// Points given by coordinates, distances from the sup norm.
  static FiniteMetricSpace from_sup_coordinates(std::vector<std::string> labels,
                                                const std::vector<std::vector<double>>& coords) {
    const std::size_t n = coords.size();
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        detail::require_argument(coords[i].size() == coords[j].size(),
                                 "coordinates must share a dimension");
        double m = 0.0;
        for (std::size_t k = 0; k < coords[i].size(); ++k) {
          m = std::max(m, std::fabs(coords[i][k] - coords[j][k]));
        }
        d[i][j] = m;
      }
    }
    return FiniteMetricSpace(std::move(labels), std::move(d));
  }

  std::size_t size() const { return dist_.size(); }
  double operator()(std::size_t i, std::size_t j) const { return dist_[i][j]; }
  const std::vector<std::vector<double>>& distances() const { return dist_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  void validate() const {
    const std::size_t n = dist_.size();
    detail::require_argument(n >= 1, "metric space needs a base point");
    detail::require_argument(labels_.size() == n, "one label per point");
    double scale = 0.0;
    for (const auto& row : dist_) {
      detail::require_argument(row.size() == n, "distance matrix must be square");
      for (double v : row) scale = std::max(scale, v);
    }
    const double tol = 1e-12 * std::max(1.0, scale);
    for (std::size_t i = 0; i < n; ++i) {
      detail::require_argument(dist_[i][i] == 0.0, "d(i,i) must be 0");
      for (std::size_t j = 0; j < n; ++j) {
        detail::require_argument(std::isfinite(dist_[i][j]), "distances must be finite");
        detail::require_argument(dist_[i][j] == dist_[j][i], "distance matrix must be symmetric");
        detail::require_argument(i == j || dist_[i][j] > 0.0, "distinct points need d > 0");
        for (std::size_t k = 0; k < n; ++k) {
          detail::require_argument(dist_[i][k] <= dist_[i][j] + dist_[j][k] + tol,
                                   "triangle inequality fails at (" + std::to_string(i) + "," +
                                       std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<double>> dist_;
};

/// mu = sum_n a_n delta(x_n); the base point coefficient is dropped since
/// delta(base) = 0.
class Molecule {
 public:
  Molecule() = default;
  explicit Molecule(const std::map<std::size_t, double>& coefficients) {
    for (const auto& [i, a] : coefficients) {
      detail::require_argument(std::isfinite(a), "molecule coefficients must be finite");
      if (i != 0 && a != 0.0) coefficients_[i] = a;
    }
  }

  static Molecule point(std::size_t i, double a = 1.0) { return Molecule({{i, a}}); }

  /// (delta(u) - delta(v)) scaled by s.
  static Molecule pair(std::size_t u, std::size_t v, double s = 1.0) {
    std::map<std::size_t, double> c;
    c[u] += s;
    c[v] -= s;
    return Molecule(c);
  }

  const std::map<std::size_t, double>& coefficients() const { return coefficients_; }

  double operator[](std::size_t i) const {
    auto it = coefficients_.find(i);
    return it == coefficients_.end() ? 0.0 : it->second;
  }

  /// <f, mu> for a function given by its values on the points.
  double pair_with(const std::vector<double>& f) const {
    double s = 0.0;
    for (const auto& [i, a] : coefficients_) s += a * f.at(i) ;
    return s;
  }

  friend Molecule operator+(const Molecule& x, const Molecule& y) {
    std::map<std::size_t, double> c = x.coefficients_;
    for (const auto& [i, a] : y.coefficients_) c[i] += a;
    return Molecule(c);
  }

  friend Molecule operator*(double s, const Molecule& x) {
    std::map<std::size_t, double> c;
    for (const auto& [i, a] : x.coefficients_) c[i] = s * a;
    return Molecule(c);
  }

 private:
  std::map<std::size_t, double> coefficients_;
};

/// max over pairs i != j of |f(i) - f(j)| / d(i, j); requires f(base) = 0.
inline double lipschitz_constant(const std::vector<double>& f, const FiniteMetricSpace& m) {
  detail::require_argument(f.size() == m.size(), "one value per point");
  detail::require_argument(f.empty() || f[0] == 0.0, "f must vanish at the base point");
  double best = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      best = std::max(best, std::fabs(f[i] - f[j]) / m(i, j));
    }
  }
  return best;
}

/// max { <g, mu> : Lip(g) <= 1, g(base) = 0 } by a dense LP in the
/// shifted variables h_i = g_i + d(i, base) >= 0. Meant for small spaces.
inline double free_norm_dual_lp(const Molecule& mu, const FiniteMetricSpace& m) {
  const std::size_t n = m.size();
  if (n <= 1) return 0.0;
  const std::size_t vars = n - 1;
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      if (i == j) continue;
      std::vector<double> row(vars, 0.0);
      row[i - 1] = 1.0;
      row[j - 1] = -1.0;
      a.push_back(std::move(row));
      b.push_back(std::max(0.0, m(i, j) + m(i, 0) - m(j, 0)));
    }
    std::vector<double> row(vars, 0.0);
    row[i - 1] = 1.0;
    a.push_back(std::move(row));
    b.push_back(2.0 * m(i, 0));
  }
  std::vector<double> c(vars, 0.0);
  double offset = 0.0;
  for (const auto& [i, coef] : mu.coefficients()) {
    detail::require_argument(i < n, "molecule refers to a missing point");
    c[i - 1] = coef;
    offset += coef * m(i, 0);
  }
  return simplex_max(a, b, c).value - offset;
}

struct FreeNormResult {
  double primal = 0.0;
  /// <g, mu> for the 1-Lipschitz g read off the transport potentials.
  double dual = 0.0;
  std::optional<double> dual_lp;
  std::vector<double> optimal_function;
  TransportSolution transport;
};

/// Largest instance on which the dense LP cross-check runs by default.
inline constexpr std::size_t kDualLpMaxPoints = 12;

/// The Lipschitz-free norm of mu as a min-cost transport value, with the
/// dual value from the transport potentials and (for small spaces) an
/// independent LP. Throws std::runtime_error when the values disagree by
/// more than 1e-8.
inline FreeNormResult free_norm_detail(const Molecule& mu, const FiniteMetricSpace& m,
                                       bool lp_cross_check = true) {
  const std::size_t n = m.size();
  std::vector<double> supply(n, 0.0);
  double total = 0.0;
  for (const auto& [i, a] : mu.coefficients()) {
    detail::require_argument(i < n, "molecule refers to a missing point");
    supply[i] = a;
    total += a;
  }
  supply[0] = -total;
  FreeNormResult r;
  r.transport = solve_transport(m.distances(), supply);
  r.primal = r.transport.cost;
  std::vector<double> g = r.transport.potential;
  const double shift = g[0];
  for (double& v : g) v -= shift;
  r.dual = mu.pair_with(g);
  r.optimal_function = std::move(g);
  const double scale = std::max(1.0, std::fabs(r.primal));
  if (std::fabs(r.primal - r.dual) > 1e-8 * scale ||
      lipschitz_constant(r.optimal_function, m) > 1.0 + 1e-9) {
    throw std::runtime_error("free_norm: transport certificate failed");
  }
  if (lp_cross_check && n <= kDualLpMaxPoints) {
    r.dual_lp = free_norm_dual_lp(mu, m);
    if (std::fabs(r.primal - *r.dual_lp) > 1e-8 * scale) {
      throw std::runtime_error("free_norm: primal and dual LP disagree");
    }
  }
  return r;
}

inline double free_norm(const Molecule& mu, const FiniteMetricSpace& m) {
  return free_norm_detail(mu, m).primal;
}

struct PairingOptimum {
  double value = 0.0;
  std::size_t u = 0;
  std::size_t v = 0;
  Molecule argmax;
};

/// max <f, mu> over the unit ball of the free space. The ball is the closed
/// convex hull of the molecules (delta(u) - delta(v)) / d(u, v), so the
/// maximum is attained at one of them.
inline PairingOptimum maximize_pairing(const std::vector<double>& f, const FiniteMetricSpace& m) {
  detail::require_argument(f.size() == m.size(), "one value per point");
  PairingOptimum best;
  best.value = -kInfinity;
  for (std::size_t u = 0; u < m.size(); ++u) {
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (u == v) continue;
      const double val = (f[u] - f[v]) / m(u, v);
      if (val > best.value) {
        best.value = val;
        best.u = u;
        best.v = v;
      }
    }
  }
  if (m.size() <= 1) return {0.0, 0, 0, Molecule()};
  best.argmax = Molecule::pair(best.u, best.v, 1.0 / m(best.u, best.v));
  return best;
}

/// The truncation {0, x_1, ..., x_N} of the Schur example, with
/// x_1 = 2 e_1 and x_n = e_1 + (1 + 1/n) e_n in c_0. Point i is x_i.
struct SchurExample {
  std::size_t n = 0;
  FiniteMetricSpace space;
  /// f(0) = f(x_1) = 0, f(x_n) = 1.
  std::vector<double> f;
  /// j(0) = j(x_1) = 0, j(x_n) = 1 + 1/n.
  std::vector<double> j;

  /// g_A(x_n) = 1 for n in A, 0 elsewhere; in_a[k] says whether k is in A.
  std::vector<double> g(const std::vector<bool>& in_a) const {
    std::vector<double> out(n + 1, 0.0);
    for (std::size_t k = 2; k <= n && k < in_a.size(); ++k) out[k] = in_a[k] ? 1.0 : 0.0;
    return out;
  }

  /// (1 + 1/k)^{-1} delta(x_k): a unit maximizing molecule.
  Molecule maximizing_molecule(std::size_t k) const {
    return Molecule::point(k, 1.0 / (1.0 + 1.0 / static_cast<double>(k)));
  }
};

inline SchurExample build_schur_example(std::size_t n) {
  detail::require_argument(n >= 2, "Schur example needs N >= 2");
  std::vector<std::vector<double>> coords(n + 1, std::vector<double>(n, 0.0));
  std::vector<std::string> labels{"0"};
  coords[1][0] = 2.0;
  labels.push_back("x1");
  for (std::size_t k = 2; k <= n; ++k) {
    coords[k][0] = 1.0;
    coords[k][k - 1] = 1.0 + 1.0 / static_cast<double>(k);
    labels.push_back("x" + std::to_string(k));
  }
  SchurExample ex{n, FiniteMetricSpace::from_sup_coordinates(std::move(labels), coords), {}, {}};
  ex.f.assign(n + 1, 0.0);
  ex.j.assign(n + 1, 0.0);
  for (std::size_t k = 2; k <= n; ++k) {
    ex.f[k] = 1.0;
    ex.j[k] = 1.0 + 1.0 / static_cast<double>(k);
  }
  return ex;
}

inline VerificationReport verify_schur_example(std::size_t n, double tol) {
  const SchurExample ex = build_schur_example(n);
  const double nn = static_cast<double>(n);
  VerificationReport r;
  r.op = "schur";
  r.n = n;
  r.tolerance = tol;
  r.claimed_norm = 1.0;
  r.citations = {
      "F(M) is a Schur dual space; the functional f has norm 1 but attains it nowhere",
      "(1 + 1/n)^{-1} delta(x_n) is a maximizing sequence converging weak* to delta(x_1)/2"};

  const double lip_f = lipschitz_constant(ex.f, ex.space);
  r.truncated_norm = lip_f;
  r.gap = 1.0 - lip_f;
  r.metrics["lipschitz_f"] = lip_f;
  r.metrics["lipschitz_f_closed_form"] = nn / (nn + 1.0);
  r.check("lipschitz_f", std::fabs(lip_f - nn / (nn + 1.0)) <= tol && lip_f < 1.0,
          "Lip(f) = N/(N+1) on the truncation");

  const double lip_j = lipschitz_constant(ex.j, ex.space);
  r.metrics["lipschitz_j"] = lip_j;
  r.check("lipschitz_j", std::fabs(lip_j - 1.0) <= tol, "j is 1-Lipschitz with equality");

  // g_A over all sign sets for small N, a seeded sample otherwise.
  double worst_g = 0.0;
  std::size_t tested = 0;
  if (n <= 10) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
      std::vector<bool> in_a(n + 1, false);
      for (std::size_t k = 2; k <= n; ++k) in_a[k] = (mask >> (k - 2)) & 1U;
      worst_g = std::max(worst_g, lipschitz_constant(ex.g(in_a), ex.space));
      ++tested;
    }
  } else {
    std::mt19937_64 rng(12345);
    for (; tested < 256; ++tested) {
      std::vector<bool> in_a(n + 1, false);
      for (std::size_t k = 2; k <= n; ++k) in_a[k] = (rng() & 1U) != 0;
      worst_g = std::max(worst_g, lipschitz_constant(ex.g(in_a), ex.space));
    }
  }
  r.metrics["lipschitz_g_worst"] = worst_g;
  r.metrics["sign_sets_tested"] = static_cast<double>(tested);
  r.check("lipschitz_g", worst_g <= 1.0 + tol, "every g_A is 1-Lipschitz");

  // Maximizing molecules: unit norm, f-value k/(k+1).
  bool molecules_ok = true;
  bool increasing = true;
  double prev = -kInfinity;
  for (std::size_t k = 2; k <= n; ++k) {
    const Molecule mu = ex.maximizing_molecule(k);
    const FreeNormResult fr = free_norm_detail(mu, ex.space);
    const double value = mu.pair_with(ex.f);
    const double kk = static_cast<double>(k);
    molecules_ok = molecules_ok && std::fabs(fr.primal - 1.0) <= tol &&
                   std::fabs(value - kk / (kk + 1.0)) <= tol;
    increasing = increasing && value > prev;
    prev = value;
    r.sequence_values.push_back(value);
  }
  r.check("maximizing_molecules", molecules_ok,
          "free_norm(mu_k) = 1 and <f, mu_k> = k/(k+1) for 2 <= k <= N");
  r.check("sequence_increasing", increasing, "<f, mu_k> strictly increases");

  // The optimum over the unit ball and the pairing mechanism behind
  // non-attainment, reproduced on the optimizer.
  const PairingOptimum opt = maximize_pairing(ex.f, ex.space);
  const FreeNormResult opt_norm = free_norm_detail(opt.argmax, ex.space);
  r.margin = 1.0 - opt.value;
  r.metrics["optimum"] = opt.value;
  r.metrics["margin"] = r.margin;
  r.metrics["margin_closed_form"] = 1.0 / (nn + 1.0);
  r.metrics["optimizer_free_norm"] = opt_norm.primal;
  r.check("pairing_optimum",
          std::fabs(opt.value - lip_f) <= tol && std::fabs(r.margin - 1.0 / (nn + 1.0)) <= tol,
          "max <f, mu> over the unit ball equals Lip(f) = 1 - 1/(N+1)");

  double tail = 0.0;
  bool nonneg = true;
  for (const auto& [k, a] : opt.argmax.coefficients()) {
    if (k >= 2) {
      tail += a / static_cast<double>(k);
      nonneg = nonneg && a >= -tol;
    }
  }
  const double j_value = opt.argmax.pair_with(ex.j);
  const double f_value = opt.argmax.pair_with(ex.f);
  r.metrics["optimizer_j_value"] = j_value;
  r.metrics["optimizer_tail_sum"] = tail;
  r.check("j_pairing",
          j_value <= opt_norm.primal + tol && std::fabs(j_value - (f_value + tail)) <= tol &&
              nonneg && tail > 0.0,
          "<j, mu> = <f, mu> + sum a_n/n <= ||mu||, so <f, mu> = 1 is impossible");

  // Weak* witness: h(x_1) = 2, h(x_n) = 1 pairs with mu_k to k/(k+1),
  // approaching h(x_1)/2 = 1.
  std::vector<double> h(n + 1, 1.0);
  h[0] = 0.0;
  h[1] = 2.0;
  const double lip_h = lipschitz_constant(h, ex.space);
  bool witness_ok = lip_h <= 1.0 + tol;
  double last = kInfinity;
  for (std::size_t k = 2; k <= n; ++k) {
    const double value = ex.maximizing_molecule(k).pair_with(h);
    const double discrepancy = std::fabs(value - 0.5 * h[1]);
    witness_ok = witness_ok && discrepancy < last;
    last = discrepancy;
    if (k == 2 || k == n || (k & (k - 1)) == 0) {
      r.witnesses.push_back({{"k", k}, {"value", value}, {"limit", 0.5 * h[1]},
                             {"discrepancy", discrepancy}});
    }
  }
  r.metrics["witness_lipschitz"] = lip_h;
  r.check("weak_star_witness", witness_ok,
          "<h, mu_k> -> h(x_1)/2 with h in the predual; coordinate-level evidence only");
  r.notes.push_back("finite truncation M_N; the limits N -> infinity are not certified");
  return r;
}

inline nlohmann::json metric_space_to_json(const FiniteMetricSpace& m) {
  return {{"labels", m.labels()}, {"distances", m.distances()}};
}

}  // namespace maxprop
