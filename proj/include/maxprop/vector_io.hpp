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
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "maxprop/common.hpp"
#include "maxprop/finite_vector.hpp"

namespace maxprop {

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline double parse_value(const std::string& text, const std::string& where) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require_argument(used > 0 && used == text.size() && std::isfinite(v),
                   where + ": '" + text + "' is not a finite number");
  return v;
}

}  // namespace detail

/// "1,0,-1" -> x(1) = 1, x(3) = -1. Entries are positional and 1-based.
inline FiniteVector parse_vector_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    values.push_back(detail::parse_value(detail::trim(item), "vector entry " +
                                                                std::to_string(values.size() + 1)));
  }
  detail::require_argument(!values.empty(), "empty vector");
  return FiniteVector::from_dense(values);
}

/// Vector file contents. Either a JSON array of numbers (positions are the
/// 1-based indices) or lines "index value"; blank lines and lines starting
/// with '#' are skipped.
inline FiniteVector parse_vector_text(const std::string& text) {
  const std::string body = detail::trim(text);
  if (!body.empty() && body.front() == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument(std::string("vector file: bad JSON: ") + e.what());
    }
    std::vector<double> values;
    for (const auto& v : j) {
      detail::require_argument(v.is_number(), "vector file: JSON entries must be numbers");
      values.push_back(v.get<double>());
    }
    return FiniteVector::from_dense(values);
  }
  std::map<std::size_t, double> entries;
  std::stringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    const std::string where = "vector file line " + std::to_string(line_no);
    std::stringstream fields(t);
    std::string index_text;
    std::string value_text;
    std::string extra;
    fields >> index_text >> value_text;
    detail::require_argument(!value_text.empty() && !(fields >> extra),
                             where + ": expected 'index value'");
    const double index = detail::parse_value(index_text, where);
    detail::require_argument(index >= 1.0 && index == std::floor(index) && index < 1e15,
                             where + ": index must be a positive integer");
    const auto i = static_cast<std::size_t>(index);
    detail::require_argument(entries.count(i) == 0, where + ": duplicate index");
    entries[i] = detail::parse_value(value_text, where);
  }
  return FiniteVector(entries);
}

inline FiniteVector read_vector_file(const std::string& path) {
  std::ifstream in(path);
  detail::require_argument(static_cast<bool>(in), "cannot open vector file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_vector_text(buf.str());
}

}  // namespace maxprop
