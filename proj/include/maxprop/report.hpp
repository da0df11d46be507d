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

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace maxprop {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Machine-checkable evidence for one counterexample at truncation N.
struct VerificationReport {
  std::string op;
  std::size_t n = 0;
  double tolerance = 0.0;
  double truncated_norm = 0.0;
  double claimed_norm = 0.0;
  double gap = 0.0;
  double margin = 0.0;
  std::vector<double> sequence_values;
  nlohmann::json witnesses = nlohmann::json::array();
  std::map<std::string, double> metrics;
  std::vector<CheckResult> checks;
  std::vector<std::string> citations;
  std::vector<std::string> notes;

  void check(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return !checks.empty();
  }
};

inline nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"schema", "maxprop.verification/1"},
          {"op", r.op},
          {"n", r.n},
          {"tolerance", r.tolerance},
          {"truncated_norm", r.truncated_norm},
          {"claimed_norm", r.claimed_norm},
          {"gap", r.gap},
          {"margin", r.margin},
          {"sequence_values", r.sequence_values},
          {"witnesses", r.witnesses},
          {"metrics", r.metrics},
          {"checks", checks},
          {"citations", r.citations},
          {"notes", r.notes},
          {"passed", r.passed()}};
}

}  // namespace maxprop
