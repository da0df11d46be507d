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
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "maxprop/common.hpp"

namespace maxprop {

/// A convex, continuous, unbounded phi: [0, inf) -> [0, inf) with
/// phi(0) = 0. Shape assumptions are checked by sampling at construction.
class OrliczFunction {
 public:
  enum class Form { kPower, kExp, kPoly, kCustom };

  static constexpr std::size_t kGridPoints = 2048;
  static constexpr double kGridLo = 1e-6;
  static constexpr double kGridHi = 1e2;

  OrliczFunction(std::function<double(double)> eval, std::string label)
      : eval_(std::move(eval)), label_(std::move(label)) {
    validate();
  }

  /// t^p, p >= 1.
  static OrliczFunction power(double p) {
    detail::require_argument(p >= 1.0, "pow: exponent must be >= 1");
    OrliczFunction phi([p](double t) { return detail::abs_pow(t, p); },
                       "pow " + format(p));
    phi.form_ = Form::kPower;
    phi.params_ = {p};
    return phi;
  }

  /// e^t - 1.
  static OrliczFunction exp_minus_one() {
    OrliczFunction phi([](double t) { return std::expm1(t); }, "exp");
    phi.form_ = Form::kExp;
    return phi;
  }

  /// sum_k c_k t^k with coefficients[0] multiplying t^2.
  static OrliczFunction poly(std::vector<double> coefficients) {
    detail::require_argument(!coefficients.empty(), "poly: need at least one coefficient");
    bool any_positive = false;
    std::string label = "poly";
    for (double c : coefficients) {
      detail::require_argument(c >= 0.0 && std::isfinite(c),
                               "poly: coefficients must be finite and >= 0");
      any_positive = any_positive || c > 0.0;
      label += " " + format(c);
    }
    detail::require_argument(any_positive, "poly: all coefficients are zero");
    auto eval = [coefficients](double t) {
      double acc = 0.0;
      for (std::size_t k = coefficients.size(); k-- > 0;) acc = acc * t + coefficients[k];
      return acc * t * t;
    };
    OrliczFunction phi(eval, label);
    phi.form_ = Form::kPoly;
    phi.params_ = std::move(coefficients);
    return phi;
  }

  double operator()(double t) const { return eval_(t); }
  const std::string& label() const { return label_; }
  Form form() const { return form_; }
  const std::vector<double>& params() const { return params_; }

 private:
  static std::string format(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
  }

  void validate() const {
    detail::require_argument(static_cast<bool>(eval_), "Orlicz function needs an evaluator");
    detail::require_argument(eval_(0.0) == 0.0, label_ + ": phi(0) must be 0");
    const auto grid = detail::geometric_grid(kGridLo, kGridHi, kGridPoints);
    double prev_t = 0.0;
    double prev_v = 0.0;
    double prev_slope = 0.0;
    for (double t : grid) {
      const double v = eval_(t);
      detail::require_argument(std::isfinite(v) && v >= 0.0,
                               label_ + ": phi must be finite and >= 0");
      const double slope = (v - prev_v) / (t - prev_t);
      detail::require_argument(slope >= -1e-12, label_ + ": phi must be non-decreasing");
      detail::require_argument(slope >= prev_slope - 1e-9 * (1.0 + std::fabs(prev_slope)),
                               label_ + ": phi is not convex");
      prev_slope = slope;
      prev_t = t;
      prev_v = v;
    }
    detail::require_argument(prev_v > 1.0 && prev_slope > 0.0,
                             label_ + ": phi must be unbounded");
  }

  std::function<double(double)> eval_;
  std::string label_;
  Form form_ = Form::kCustom;
  std::vector<double> params_;
};

/// Parses "pow p", "exp" or "poly c2 c3 ...".
inline OrliczFunction parse_orlicz(const std::string& text) {
  std::vector<std::string> words;
  std::string cur;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == ',') {
      if (!cur.empty()) words.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  detail::require_argument(!words.empty(), "empty phi expression");
  auto number = [](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    detail::require_argument(used == s.size() && used > 0, "bad number in phi: '" + s + "'");
    return v;
  };
  if (words[0] == "pow") {
    detail::require_argument(words.size() == 2, "usage: pow <p>");
    return OrliczFunction::power(number(words[1]));
  }
  if (words[0] == "exp") {
    detail::require_argument(words.size() == 1, "usage: exp");
    return OrliczFunction::exp_minus_one();
  }
  if (words[0] == "poly") {
    std::vector<double> coefficients;
    for (std::size_t i = 1; i < words.size(); ++i) coefficients.push_back(number(words[i]));
    return OrliczFunction::poly(std::move(coefficients));
  }
  throw std::invalid_argument("unknown phi '" + words[0] + "' (expected pow, exp or poly)");
}

}  // namespace maxprop
