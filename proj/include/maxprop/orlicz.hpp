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
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "maxprop/common.hpp"
#include "maxprop/modulus.hpp"
#include "maxprop/orlicz_function.hpp"

namespace maxprop {

/// phi*(t) = sup_{s >= 0} (s t - phi(s)); kInfinity when unbounded.
inline double conjugate(const OrliczFunction& phi, double t) {
  detail::require_domain(t >= 0.0 && std::isfinite(t), "conjugate: t must be >= 0");
  if (t == 0.0) return 0.0;
  auto objective = [&](double s) { return s * t - phi(s); };
  constexpr double kEdge = 1e15;
  double hi = 1.0;
  while (objective(2.0 * hi) > objective(hi)) {
    hi *= 2.0;
    if (hi > kEdge) return kInfinity;
  }
  const double s = detail::golden_section_max(objective, 0.0, 2.0 * hi, 1e-14);
  return std::max(0.0, std::max(objective(s), objective(0.0)));
}

struct Delta2Estimate {
  bool holds = false;
  double estimate = 0.0;
};

struct Delta2Options {
  double t_lo = 1e-8;
  double t_hi = 1e-1;
  std::size_t points = 200;
  double cap = 1e6;
};

/// Estimates limsup_{t -> 0} phi(2t) / phi(t) from the smallest quarter of
/// a geometric grid. A ratio with phi(t) = 0 < phi(2t) counts as infinite.
inline Delta2Estimate delta2_at_zero(const OrliczFunction& phi, const Delta2Options& opt = {}) {
  const auto grid = detail::geometric_grid(opt.t_lo, opt.t_hi, opt.points);
  std::vector<double> ratios;
  for (double t : grid) {
    const double a = phi(t);
    const double b = phi(2.0 * t);
    if (a == 0.0 && b == 0.0) continue;
    ratios.push_back(a == 0.0 ? kInfinity : b / a);
  }
  detail::require_domain(!ratios.empty(), phi.label() + ": phi vanishes identically near 0");
  const std::size_t head = std::max<std::size_t>(1, ratios.size() / 4);
  const double estimate = *std::max_element(ratios.begin(), ratios.begin() + head);
  if (estimate < opt.cap) return {true, estimate};
  return {false, opt.cap};
}

/// The solution of phi(u) = 1, by bisection after geometric bracketing.
inline double orlicz_inverse_at_one(const OrliczFunction& phi) {
  double lo = 1.0;
  double hi = 1.0;
  for (int i = 0; phi(hi) < 1.0; ++i) {
    detail::require_domain(i < 2000, phi.label() + ": phi^{-1}(1) not bracketable");
    hi *= 2.0;
  }
  for (int i = 0; phi(lo) >= 1.0; ++i) {
    detail::require_domain(i < 2000, phi.label() + ": phi^{-1}(1) not bracketable");
    lo /= 2.0;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (phi(mid) < 1.0 ? lo : hi) = mid;
  }
  return hi;
}

struct IndexOptions {
  std::size_t grid_points = 2048;
  double grid_span = 1e-6;
  double local_step = 1e-6;
  double p_max = 1e3;
  double tolerance = 1e-4;
  double slack = 1e-12;
};

namespace detail {

// Ordered pairs (u1 < u2) sampled on (0, phi^{-1}(1)]: consecutive grid
// points plus a close neighbour of each grid point, so the local
// elasticity is seen as well as the chord slopes.
inline std::vector<std::pair<double, double>> index_pairs(const OrliczFunction& phi,
                                                          const IndexOptions& opt) {
  const double a = orlicz_inverse_at_one(phi);
  const auto grid = geometric_grid(a * opt.grid_span, a, opt.grid_points);
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(2 * grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0) pairs.emplace_back(grid[i - 1], grid[i]);
    pairs.emplace_back(grid[i] * (1.0 - opt.local_step), grid[i]);
  }
  return pairs;
}

struct LogSample {
  double log_u1, log_u2, f1, f2;
};

inline std::vector<LogSample> index_samples(const OrliczFunction& phi, const IndexOptions& opt) {
  std::vector<LogSample> out;
  for (const auto& [u1, u2] : index_pairs(phi, opt)) {
    out.push_back({std::log(u1), std::log(u2), phi(u1), phi(u2)});
  }
  return out;
}

// u^{-p} phi(u) non-decreasing (sign = +1) or non-increasing (sign = -1)
// on every sampled pair, compared in log space.
inline bool power_ratio_monotone(const std::vector<LogSample>& samples, double p, int sign,
                                 double slack) {
  for (const auto& s : samples) {
    if (s.f1 == 0.0 && s.f2 == 0.0) continue;
    if (s.f1 == 0.0) {
      if (sign < 0) return false;
      continue;
    }
    const double change = (std::log(s.f2) - std::log(s.f1)) - p * (s.log_u2 - s.log_u1);
    if (sign * change < -slack) return false;
  }
  return true;
}

}  // namespace detail

/// p_phi = sup { p : u^{-p} phi(u) non-decreasing on (0, phi^{-1}(1)] }.
inline double index_p(const OrliczFunction& phi, const IndexOptions& opt = {}) {
  const auto samples = detail::index_samples(phi, opt);
  double lo = 1.0;
  double hi = opt.p_max;
  if (detail::power_ratio_monotone(samples, hi, +1, opt.slack)) return hi;
  while (hi - lo > opt.tolerance) {
    const double mid = 0.5 * (lo + hi);
    (detail::power_ratio_monotone(samples, mid, +1, opt.slack) ? lo : hi) = mid;
  }
  return lo;
}

/// q_phi = inf { q : u^{-q} phi(u) non-increasing on (0, phi^{-1}(1)] };
/// kInfinity when no q up to the cap passes.
inline double index_q(const OrliczFunction& phi, const IndexOptions& opt = {}) {
  const auto samples = detail::index_samples(phi, opt);
  double lo = 1.0;
  double hi = opt.p_max;
  if (!detail::power_ratio_monotone(samples, hi, -1, opt.slack)) return kInfinity;
  if (detail::power_ratio_monotone(samples, lo, -1, opt.slack)) return lo;
  while (hi - lo > opt.tolerance) {
    const double mid = 0.5 * (lo + hi);
    (detail::power_ratio_monotone(samples, mid, -1, opt.slack) ? hi : lo) = mid;
  }
  return hi;
}

struct BoydIndices {
  double alpha = 0.0;
  double beta = 0.0;
  std::size_t grid_points = 0;
  double grid_lo = 0.0;
};

struct BoydOptions {
  std::size_t grid_points = 256;
  double grid_lo = 1e-8;
  double cap = 1e3;
};

/// Grid estimates of the Boyd indices through the dilation functions
///   M(t) = sup_u phi(tu)/phi(u),  m(t) = inf_u phi(tu)/phi(u),  u, t in (0,1]:
///   alpha = sup_{t<1} log M(t) / log t,  beta = inf_{t<1} log m(t) / log t.
inline BoydIndices boyd_indices(const OrliczFunction& phi, const BoydOptions& opt = {}) {
  const auto us = detail::geometric_grid(opt.grid_lo, 1.0, opt.grid_points);
  std::vector<double> phi_u(us.size());
  for (std::size_t i = 0; i < us.size(); ++i) phi_u[i] = phi(us[i]);
  double alpha = -kInfinity;
  double beta = kInfinity;
  for (std::size_t j = 0; j + 1 < us.size(); ++j) {
    const double t = us[j];
    double big = 0.0;
    double small = kInfinity;
    for (std::size_t i = 0; i < us.size(); ++i) {
      if (phi_u[i] == 0.0) continue;
      const double r = phi(t * us[i]) / phi_u[i];
      big = std::max(big, r);
      small = std::min(small, r);
    }
    if (small == kInfinity) continue;
    const double lt = std::log(t);
    alpha = std::max(alpha, big > 0.0 ? std::log(big) / lt : kInfinity);
    beta = std::min(beta, small > 0.0 ? std::log(small) / lt : kInfinity);
  }
  detail::require_domain(beta != kInfinity || alpha != -kInfinity,
                         phi.label() + ": phi vanishes on the Boyd grid");
  if (beta > opt.cap) beta = kInfinity;
  return {std::min(alpha, opt.cap), beta, opt.grid_points, opt.grid_lo};
}

struct OrliczModulusBounds {
  ModulusSpec delta_lower;
  ModulusSpec rho_upper;
};

/// delta of h_phi is at least the power-type modulus of exponent q_phi, and
/// rho is at most the one of exponent p_phi, for every t > 0.
inline OrliczModulusBounds orlicz_moduli_bounds(double p_phi, double q_phi) {
  detail::require_domain(std::isfinite(q_phi), "orlicz_moduli_bounds: q_phi is infinite");
  detail::require_domain(p_phi >= 1.0 && q_phi >= p_phi, "orlicz_moduli_bounds: bad indices");
  auto delta = ModulusSpec::bounds(ModulusRole::kConvexity, ModulusCurve::power(q_phi),
                                   ModulusCurve::identity(),
                                   ModulusSpec::power_metadata(ModulusRole::kConvexity, q_phi));
  auto rho = ModulusSpec::bounds(ModulusRole::kSmoothness, ModulusCurve::c0_floor(),
                                 ModulusCurve::power(p_phi),
                                 ModulusSpec::power_metadata(ModulusRole::kSmoothness, p_phi));
  return {std::move(delta), std::move(rho)};
}

inline OrliczModulusBounds orlicz_moduli_bounds(const OrliczFunction& phi) {
  return orlicz_moduli_bounds(index_p(phi), index_q(phi));
}

struct OrliczReport {
  double p_phi = 0.0;
  double q_phi = 0.0;
  BoydIndices boyd;
  Delta2Estimate delta2;
  std::optional<OrliczModulusBounds> bounds;
};

inline OrliczReport analyze_orlicz(const OrliczFunction& phi) {
  OrliczReport r;
  r.p_phi = index_p(phi);
  r.q_phi = index_q(phi);
  r.boyd = boyd_indices(phi);
  r.delta2 = delta2_at_zero(phi);
  if (std::isfinite(r.q_phi)) r.bounds = orlicz_moduli_bounds(r.p_phi, r.q_phi);
  return r;
}

}  // namespace maxprop
