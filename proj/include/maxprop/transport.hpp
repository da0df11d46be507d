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
#include <limits>
#include <stdexcept>
#include <vector>

namespace maxprop {

/// Uncapacitated transportation on a complete directed graph, solved by
/// successive shortest paths with Bellman-Ford.
///
/// supply[i] > 0 ships out, supply[i] < 0 absorbs; the entries must sum to
/// zero. cost must be a square matrix with nonnegative entries.
struct TransportSolution {
  double cost = 0.0;
  std::vector<std::vector<double>> flow;
  /// g with g[j] - g[i] <= cost[i][j] for all i, j, tight on every arc that
  /// carries flow, and sum_i supply[i] * g[i] == cost.
  std::vector<double> potential;
  int augmentations = 0;
};

inline TransportSolution solve_transport(const std::vector<std::vector<double>>& cost,
                                         const std::vector<double>& supply) {
  const std::size_t n = supply.size();
  if (cost.size() != n) throw std::invalid_argument("solve_transport: size mismatch");
  double scale = 0.0;
  double total = 0.0;
  for (double s : supply) {
    scale = std::max(scale, std::fabs(s));
    total += s;
  }
  if (std::fabs(total) > 1e-9 * std::max(1.0, scale)) {
    throw std::invalid_argument("solve_transport: supplies do not balance");
  }
  const double eps = 1e-14 * std::max(1.0, scale);

  TransportSolution sol;
  sol.flow.assign(n, std::vector<double>(n, 0.0));
  std::vector<double> excess = supply;
  constexpr double kInf = std::numeric_limits<double>::infinity();

  double max_cost = 0.0;
  for (const auto& row : cost) {
    if (row.size() != n) throw std::invalid_argument("solve_transport: cost is not square");
    for (double c : row) max_cost = std::max(max_cost, c);
  }
  // Absolute slack, so zero-cost residual cycles never look improving.
  const double slack = 1e-13 * std::max(1.0, max_cost);
  auto improves = [slack](double candidate, double current) {
    return current == kInf || candidate < current - slack;
  };

  // Shortest distances over the residual graph from all nodes with
  // positive excess; forward arcs always exist, reverse arcs while flow > 0.
  auto shortest = [&](std::vector<double>& dist, std::vector<int>& parent,
                      std::vector<char>& reversed, bool from_all) {
    dist.assign(n, from_all ? 0.0 : kInf);
    parent.assign(n, -1);
    reversed.assign(n, 0);
    if (!from_all) {
      for (std::size_t i = 0; i < n; ++i) {
        if (excess[i] > eps) dist[i] = 0.0;
      }
    }
    for (std::size_t round = 0; round <= n; ++round) {
      bool changed = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (dist[i] == kInf) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          const double via_forward = dist[i] + cost[i][j];
          if (improves(via_forward, dist[j])) {
            dist[j] = via_forward;
            parent[j] = static_cast<int>(i);
            reversed[j] = 0;
            changed = true;
          }
          if (sol.flow[j][i] > eps) {
            const double via_reverse = dist[i] - cost[j][i];
            if (improves(via_reverse, dist[j])) {
              dist[j] = via_reverse;
              parent[j] = static_cast<int>(i);
              reversed[j] = 1;
              changed = true;
            }
          }
        }
      }
      if (!changed) return;
      if (round == n) throw std::runtime_error("solve_transport: negative cycle (bad metric)");
    }
  };

  std::vector<double> dist;
  std::vector<int> parent;
  std::vector<char> reversed;
  const int max_augment = static_cast<int>(4 * n * n + 16);
  while (true) {
    bool any = false;
    for (double e : excess) any = any || e > eps;
    if (!any) break;
    if (++sol.augmentations > max_augment) {
      throw std::runtime_error("solve_transport: did not converge");
    }
    shortest(dist, parent, reversed, false);
    // Cheapest reachable sink.
    int sink = -1;
    for (std::size_t j = 0; j < n; ++j) {
      if (excess[j] < -eps && dist[j] < kInf && (sink < 0 || dist[j] < dist[sink])) {
        sink = static_cast<int>(j);
      }
    }
    if (sink < 0) throw std::runtime_error("solve_transport: no reachable sink");
    // Walk back to the source; the bottleneck is the excess at either end
    // or the flow on a reversed arc.
    std::vector<int> path{sink};
    while (parent[path.back()] >= 0) {
      path.push_back(parent[path.back()]);
      if (path.size() > n + 1) throw std::runtime_error("solve_transport: parent cycle");
    }
    const int source = path.back();
    double amount = std::min(excess[source], -excess[sink]);
    for (std::size_t k = path.size() - 1; k > 0; --k) {
      const int i = path[k];
      const int j = path[k - 1];
      if (reversed[j]) amount = std::min(amount, sol.flow[j][i]);
    }
    for (std::size_t k = path.size() - 1; k > 0; --k) {
      const int i = path[k];
      const int j = path[k - 1];
      if (reversed[j]) {
        sol.flow[j][i] -= amount;
        if (sol.flow[j][i] < eps) sol.flow[j][i] = 0.0;
      } else {
        sol.flow[i][j] += amount;
      }
    }
    excess[source] -= amount;
    excess[sink] += amount;
  }

  sol.cost = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sol.cost += sol.flow[i][j] * cost[i][j];
  }
  shortest(dist, parent, reversed, true);
  sol.potential.resize(n);
  for (std::size_t i = 0; i < n; ++i) sol.potential[i] = -dist[i];
  return sol;
}

}  // namespace maxprop
