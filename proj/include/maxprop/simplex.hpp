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
#include <stdexcept>
#include <vector>

namespace maxprop {

struct LpSolution {
  double value = 0.0;
  std::vector<double> x;
  int pivots = 0;
};

/// maximize c.x subject to A x <= b, x >= 0, for b >= 0 (so the slack basis
/// is feasible). Dense tableau, Bland's rule; throws std::runtime_error if
/// unbounded or if the pivot budget runs out.
inline LpSolution simplex_max(const std::vector<std::vector<double>>& a,
                              const std::vector<double>& b, const std::vector<double>& c,
                              double eps = 1e-12) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw std::invalid_argument("simplex_max: b has the wrong size");
  // Row-major tableau: m constraint rows plus the objective row; columns
  // are n structural, m slack, and the right-hand side.
  const std::size_t cols = n + m + 1;
  std::vector<double> t((m + 1) * cols, 0.0);
  auto at = [&](std::size_t r, std::size_t col) -> double& { return t[r * cols + col]; };
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    if (a[r].size() != n) throw std::invalid_argument("simplex_max: ragged A");
    if (b[r] < 0.0) throw std::invalid_argument("simplex_max: b must be >= 0");
    for (std::size_t j = 0; j < n; ++j) at(r, j) = a[r][j];
    at(r, n + r) = 1.0;
    at(r, cols - 1) = b[r];
    basis[r] = n + r;
  }
  for (std::size_t j = 0; j < n; ++j) at(m, j) = -c[j];

  LpSolution sol;
  const int budget = 50000;
  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (at(m, j) < -eps) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    double best = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      const double coef = at(r, enter);
      if (coef <= eps) continue;
      const double ratio = at(r, cols - 1) / coef;
      if (leave == m || ratio < best - eps ||
          (ratio <= best + eps && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == m) throw std::runtime_error("simplex_max: unbounded");
    if (++sol.pivots > budget) throw std::runtime_error("simplex_max: pivot budget exhausted");
    const double pivot = at(leave, enter);
    for (std::size_t j = 0; j < cols; ++j) at(leave, j) /= pivot;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave) continue;
      const double f = at(r, enter);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < cols; ++j) at(r, j) -= f * at(leave, j);
    }
    basis[leave] = enter;
  }
  sol.x.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < n) sol.x[basis[r]] = at(r, cols - 1);
  }
  sol.value = 0.0;
  for (std::size_t j = 0; j < n; ++j) sol.value += c[j] * sol.x[j];
  return sol;
}

}  // namespace maxprop
