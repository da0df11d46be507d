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
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxprop/common.hpp"
#include "maxprop/finite_vector.hpp"
#include "maxprop/orlicz_function.hpp"

namespace maxprop {

using NormEvaluator = std::function<double(const FiniteVector&)>;

inline double lp_norm(const FiniteVector& x, double p) {
  detail::require_argument(p >= 1.0, "lp_norm: p must be >= 1");
  if (x.empty()) return 0.0;
  // Scale by the largest entry so large p neither overflows nor underflows.
  double scale = 0.0;
  for (const auto& [i, v] : x) scale = std::max(scale, std::fabs(v));
  if (p == 1.0) {
    double s = 0.0;
    for (const auto& [i, v] : x) s += std::fabs(v);
    return s;
  }
  double s = 0.0;
  for (const auto& [i, v] : x) s += detail::abs_pow(v / scale, p);
  return scale * detail::root(s, p);
}

inline double sup_norm(const FiniteVector& x) {
  double m = 0.0;
  for (const auto& [i, v] : x) m = std::max(m, std::fabs(v));
  return m;
}

namespace detail {

// best[j]: largest chain sum over chains ending at position j.
template <class Pow>
double james_chain_dp(const double* seq, std::size_t m, double* best, Pow pw) {
  double answer = 0.0;
  best[0] = 0.0;
  for (std::size_t j = 1; j < m; ++j) {
    const double sj = seq[j];
    double b = 0.0;
    for (std::size_t i = 0; i < j; ++i) {
      const double c = best[i] + pw(sj - seq[i]);
      b = c > b ? c : b;
    }
    best[j] = b;
    answer = b > answer ? b : answer;
  }
  return answer;
}

}  // namespace detail

/// The p-th power of the James p-variation norm: the largest sum
/// sum_i |x(n_{i+1}) - x(n_i)|^p over increasing chains n_1 < ... < n_k,
/// where every index past the support carries the value 0.
///
/// Runs of zeros collapse to a single zero (a chain never gains from two
/// points in the same run), and one trailing zero stands for the tail.
inline double james_norm_pow(const FiniteVector& x, double p) {
  detail::require_argument(p > 1.0, "james_norm: p must be > 1");
  if (x.empty()) return 0.0;
  constexpr std::size_t kInline = 64;
  const std::size_t cap = 2 * x.support_size() + 1;
  std::array<double, 2 * kInline> stack;
  std::vector<double> heap;
  double* seq = stack.data();
  if (cap > kInline) {
    heap.resize(2 * cap);
    seq = heap.data();
  }
  double* best = seq + std::max(cap, kInline);
  std::size_t m = 0;
  std::size_t prev = 0;
  for (const auto& [i, v] : x) {
    if (i > prev + 1) seq[m++] = 0.0;
    seq[m++] = v;
    prev = i;
  }
  seq[m++] = 0.0;
  if (p == 2.0) return detail::james_chain_dp(seq, m, best, [](double d) { return d * d; });
  return detail::james_chain_dp(seq, m, best, [p](double d) { return std::pow(std::fabs(d), p); });
}

inline double james_norm(const FiniteVector& x, double p) {
  return detail::root(james_norm_pow(x, p), p);
}

/// Weights for the Lorentz sequence space d(w, p): positive,
/// non-increasing, w_1 = 1. Past the stored prefix the generator (or the
/// last stored value) is used.
class LorentzWeights {
 public:
  /// w_n = n^{-a}, a >= 0 (a = 0 gives l_p).
  static LorentzWeights power(double a) {
    detail::require_argument(a >= 0.0 && std::isfinite(a),
                             "Lorentz weights: exponent must be >= 0");
    LorentzWeights w;
    w.exponent_ = a;
    w.label_ = "n^-" + std::to_string(a);
    return w;
  }

  static LorentzWeights explicit_values(std::vector<double> values) {
    detail::require_argument(!values.empty() && values.front() == 1.0,
                             "Lorentz weights: w_1 must equal 1");
    for (std::size_t i = 0; i < values.size(); ++i) {
      detail::require_argument(values[i] > 0.0 && std::isfinite(values[i]),
                               "Lorentz weights must be positive");
      detail::require_argument(i == 0 || values[i] <= values[i - 1],
                               "Lorentz weights must be non-increasing");
    }
    LorentzWeights w;
    w.values_ = std::move(values);
    w.label_ = "explicit";
    return w;
  }

  /// w_n for n >= 1.
  double operator()(std::size_t n) const {
    if (!values_.empty()) return values_[std::min(n, values_.size()) - 1];
    return std::pow(static_cast<double>(n), -exponent_);
  }

  const std::string& label() const { return label_; }
  double exponent() const { return exponent_; }

 private:
  LorentzWeights() = default;
  double exponent_ = 0.0;
  std::vector<double> values_;
  std::string label_;
};

inline double lorentz_norm(const FiniteVector& x, const LorentzWeights& w, double p) {
  detail::require_argument(p >= 1.0, "lorentz_norm: p must be >= 1");
  std::vector<double> a;
  a.reserve(x.support_size());
  for (const auto& [i, v] : x) a.push_back(std::fabs(v));
  std::sort(a.begin(), a.end(), std::greater<>());
  double s = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) s += w(n + 1) * detail::abs_pow(a[n], p);
  return detail::root(s, p);
}

/// inf { lambda > 0 : sum phi(|x_n| / lambda) <= 1 }.
inline double luxemburg_norm(const FiniteVector& x, const OrliczFunction& phi) {
  if (x.empty()) return 0.0;
  auto modular = [&](double lambda) {
    double s = 0.0;
    for (const auto& [i, v] : x) s += phi(std::fabs(v) / lambda);
    return s;
  };
  constexpr int kMaxSteps = 2000;
  const double top = sup_norm(x);
  double hi = top * static_cast<double>(std::max<std::size_t>(1, x.support_size())) * 4.0;
  int steps = 0;
  while (!(modular(hi) <= 1.0)) {
    hi *= 2.0;
    if (++steps > kMaxSteps) throw std::runtime_error("luxemburg_norm: no upper bracket");
  }
  double lo = hi;
  while (!(modular(lo) > 1.0)) {
    lo /= 2.0;
    if (++steps > kMaxSteps) throw std::runtime_error("luxemburg_norm: no lower bracket");
  }
  for (int it = 0; hi - lo > 1e-13 * hi; ++it) {
    if (it > kMaxSteps) throw std::runtime_error("luxemburg_norm: bisection did not converge");
    const double mid = 0.5 * (lo + hi);
    if (modular(mid) > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// base(|x|^p)^{1/p}.
inline double pconvex_norm(const FiniteVector& x, const NormEvaluator& base, double p) {
  detail::require_argument(p >= 1.0, "pconvex_norm: p must be >= 1");
  const FiniteVector powered = x.transform([p](double v) { return detail::abs_pow(v, p); });
  return detail::root(base(powered), p);
}

/// sup over blockings of (sum_i base(x restricted to block i)^p)^{1/p}.
///
/// Block endpoints only matter at support indices, so the dynamic program
/// runs over the K support positions: g(j) = max(0, max_{i<j} g(i) +
/// base(x on positions i+1..j)^p).
inline double prus_block_norm(const FiniteVector& x, const NormEvaluator& base, double p) {
  detail::require_argument(p > 1.0, "prus_block_norm: p must be > 1");
  const auto& e = x.entries();
  const std::size_t k = e.size();
  if (k == 0) return 0.0;
  std::vector<double> g(k + 1, 0.0);
  double answer = 0.0;
  for (std::size_t j = 1; j <= k; ++j) {
    double b = 0.0;
    for (std::size_t i = 0; i < j; ++i) {
      const std::size_t lo = i == 0 ? 0 : e[i - 1].first;
      const double part = base(x.restrict_to(lo, e[j - 1].first));
      b = std::max(b, g[i] + detail::abs_pow(part, p));
    }
    g[j] = b;
    answer = std::max(answer, b);
  }
  return detail::root(answer, p);
}

/// The same sum under one fixed blocking: a lower bound for the supremum.
inline double prus_block_norm(const FiniteVector& x, const NormEvaluator& base, double p,
                              const Blocking& blocking) {
  detail::require_argument(p > 1.0, "prus_block_norm: p must be > 1");
  double s = 0.0;
  for (std::size_t i = 0; i < blocking.block_count(); ++i) {
    const auto [lo, hi] = blocking.block(i);
    s += detail::abs_pow(base(x.restrict_to(lo, hi)), p);
  }
  return detail::root(s, p);
}

inline NormEvaluator lp_evaluator(double p) {
  detail::require_argument(p >= 1.0, "lp: p must be >= 1");
  return [p](const FiniteVector& x) { return lp_norm(x, p); };
}

inline NormEvaluator sup_evaluator() {
  return [](const FiniteVector& x) { return sup_norm(x); };
}

}  // namespace maxprop
