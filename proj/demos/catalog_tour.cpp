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

// Walks the space catalog: prints each space's moduli at t = 1 and the
// verdict table for a few pairs, then verifies the l_2 -> l_inf operator.

#include <cstdio>
#include <string>
#include <vector>

#include "maxprop.hpp"

int main() {
  using namespace maxprop;
  std::printf("%-28s %-10s %-10s %-10s\n", "space", "delta(1)", "rho(1)", "delta*(1)");
  for (const auto& d : catalog_instances()) {
    const auto delta = d.delta.evaluate(1.0);
    const auto rho = d.rho.evaluate(1.0);
    std::string star = "-";
    if (d.delta_star) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.4f", d.delta_star->sound_side()(1.0));
      star = buf;
    }
    std::printf("%-28s %-10.4f %-10.4f %-10s\n", d.name.c_str(), delta.lower, rho.upper, star.c_str());
  }

  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"lp:p=2", "c0"}, {"lp:p=2", "lp:p=3"}, {"lp:p=3", "lp:p=2"},
      {"R_oplus_inf_l2", "c0"}, {"ell1_as_c0_dual", "lp:p=2"}, {"lp:p=2", "linf"}};
  std::printf("\n");
  for (const auto& [x, y] : pairs) {
    const PairVerdict v = check_pair(x, y);
    std::printf("(%s, %s)\n", x.c_str(), y.c_str());
    for (const auto& c : v.claims) {
      std::printf("  %-18s %-8s %s\n", to_string(c.property).c_str(), to_string(c.status).c_str(),
                  c.rule_label.c_str());
    }
  }

  const VerificationReport r = run_verification(op_d_l2_linf(), 1000, 1e-9);
  std::printf("\nl2 -> linf at N = 1000: truncated norm %.10f, gap %.3e, %s\n", r.truncated_norm, r.gap,
              r.passed() ? "verified" : "FAILED");
  return r.passed() ? 0 : 1;
}
