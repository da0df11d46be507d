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

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxprop {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

namespace detail {

inline void require_domain(bool condition, const std::string& message) {
  if (!condition) throw std::domain_error(message);
}

inline void require_argument(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

// |d|^p with exact multiplication for the small integer exponents that
// dominate the sweeps; std::pow otherwise.
inline double abs_pow(double d, double p) {
  const double a = std::fabs(d);
  if (p == 2.0) return a * a;
  if (p == 1.0) return a;
  if (p == 3.0) return a * a * a;
  if (p == 4.0) {
    const double s = a * a;
    return s * s;
  }
  return std::pow(a, p);
}

inline double root(double s, double p) {
  if (s <= 0.0) return 0.0;
  if (p == 1.0) return s;
  if (p == 2.0) return std::sqrt(s);
  return std::pow(s, 1.0 / p);
}

// `count` points spaced geometrically on [lo, hi], both endpoints included.
inline std::vector<double> geometric_grid(double lo, double hi,
                                          std::size_t count) {
  require_argument(lo > 0.0 && hi > lo, "geometric grid needs 0 < lo < hi");
  require_argument(count >= 2, "geometric grid needs at least two points");
  std::vector<double> grid(count);
  const double log_lo = std::log(lo);
  const double step = (std::log(hi) - log_lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = std::exp(log_lo + step * static_cast<double>(i));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

// Maximizes a unimodal function on [lo, hi]; returns the argmax.
template <class F>
double golden_section_max(F&& f, double lo, double hi, double x_tol = 1e-12,
                          int max_iter = 400) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iter && (b - a) > x_tol * (1.0 + std::fabs(a) + std::fabs(b)); ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? c : d;
}

}  // namespace detail
}  // namespace maxprop
