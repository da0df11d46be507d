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
#include <cstdio>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "maxprop/common.hpp"

namespace maxprop {

/// (1 + t^p)^{1/p} - 1: the exact asymptotic modulus of l_p and of
/// l_p-sums of finite-dimensional spaces. Stable for very small and very
/// large t.
inline double power_type_modulus(double p, double t) {
  detail::require_domain(p >= 1.0, "power_type_modulus: exponent must be >= 1");
  detail::require_domain(t > 0.0, "power_type_modulus: t must be > 0");
  if (p == 1.0) return t;
  if (t <= 1.0) return std::expm1(std::log1p(std::pow(t, p)) / p);
  // Factor t out so t^p never overflows.
  return t * std::exp(std::log1p(std::pow(t, -p)) / p) - 1.0;
}

/// max(0, t - 1): the asymptotic modulus of c_0, and the universal floor
/// of every smoothness modulus.
inline double c0_modulus(double t) {
  detail::require_domain(t > 0.0, "c0_modulus: t must be > 0");
  return std::max(0.0, t - 1.0);
}

enum class ModulusRole { kSmoothness, kConvexity, kWeakStarConvexity };

inline std::string to_string(ModulusRole role) {
  switch (role) {
    case ModulusRole::kSmoothness: return "smoothness";
    case ModulusRole::kConvexity: return "convexity";
    case ModulusRole::kWeakStarConvexity: return "weak*-convexity";
  }
  return "?";
}

/// Closed-form tag carried by a curve. The checker's symbolic path keys
/// off these; kCustom curves are only ever compared on grids.
enum class ModulusForm { kPower, kC0Floor, kIdentity, kCustom };

inline std::string to_string(ModulusForm form) {
  switch (form) {
    case ModulusForm::kPower: return "power";
    case ModulusForm::kC0Floor: return "c0_floor";
    case ModulusForm::kIdentity: return "identity";
    case ModulusForm::kCustom: return "custom";
  }
  return "?";
}

/// A scalar function t > 0 -> value, tagged with its closed form.
class ModulusCurve {
 public:
  static ModulusCurve power(double p) {
    detail::require_domain(p >= 1.0, "power modulus: exponent must be >= 1");
    if (p == 1.0) return identity();
    ModulusCurve c;
    c.form_ = ModulusForm::kPower;
    c.exponent_ = p;
    c.label_ = "(1+t^p)^(1/p)-1, p=" + format_exponent(p);
    c.eval_ = [p](double t) { return power_type_modulus(p, t); };
    return c;
  }

  static ModulusCurve c0_floor() {
    ModulusCurve c;
    c.form_ = ModulusForm::kC0Floor;
    c.label_ = "max(0,t-1)";
    c.eval_ = [](double t) { return c0_modulus(t); };
    return c;
  }

  static ModulusCurve identity() {
    ModulusCurve c;
    c.form_ = ModulusForm::kIdentity;
    c.exponent_ = 1.0;
    c.label_ = "t";
    c.eval_ = [](double t) { return t; };
    return c;
  }

  /// `unknown_constant` marks curves that stand in for a bound whose
  /// constant is only known to be positive.
  static ModulusCurve custom(std::string label, std::function<double(double)> f,
                             bool unknown_constant = false) {
    detail::require_argument(static_cast<bool>(f), "custom modulus needs a function");
    ModulusCurve c;
    c.form_ = ModulusForm::kCustom;
    c.label_ = std::move(label);
    c.eval_ = std::move(f);
    c.unknown_constant_ = unknown_constant;
    return c;
  }

  double operator()(double t) const {
    detail::require_domain(t > 0.0, "modulus evaluated at t <= 0");
    return eval_(t);
  }

  ModulusForm form() const { return form_; }
  double exponent() const { return exponent_; }
  const std::string& label() const { return label_; }
  bool unknown_constant() const { return unknown_constant_; }

 private:
  ModulusCurve() = default;

  static std::string format_exponent(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", p);
    return buf;
  }

  ModulusForm form_ = ModulusForm::kCustom;
  double exponent_ = 0.0;
  std::string label_;
  std::function<double(double)> eval_;
  bool unknown_constant_ = false;
};

/// Power-type metadata: the modulus is bounded by constant * t^exponent on
/// [0, 1] (below for convexity roles, above for smoothness). An empty
/// constant means "some positive constant, value unknown".
struct PowerType {
  double exponent = 2.0;
  std::optional<double> constant;
};

struct ModulusInterval {
  double lower = 0.0;
  double upper = 0.0;
};

/// An evaluable modulus: either an exact closed form or a lower/upper pair.
class ModulusSpec {
 public:
  enum class Kind { kExact, kBounds };

  /// The universal bounds max(0, t-1) <= value <= t.
  ModulusSpec()
      : ModulusSpec(Kind::kBounds, ModulusRole::kConvexity, ModulusCurve::c0_floor(),
                    ModulusCurve::identity(), std::nullopt) {}

  static ModulusSpec exact(ModulusRole role, ModulusCurve curve,
                           std::optional<PowerType> power_type = std::nullopt) {
    return ModulusSpec(Kind::kExact, role, curve, curve, std::move(power_type));
  }

  static ModulusSpec bounds(ModulusRole role, ModulusCurve lower, ModulusCurve upper,
                            std::optional<PowerType> power_type = std::nullopt) {
    return ModulusSpec(Kind::kBounds, role, std::move(lower), std::move(upper),
                       std::move(power_type));
  }

  /// Exact power-type modulus with the sharp constants on [0, 1].
  static ModulusSpec exact_power(ModulusRole role, double p) {
    return exact(role, ModulusCurve::power(p), power_metadata(role, p));
  }

  static PowerType power_metadata(ModulusRole role, double p) {
    // (1+t^p)^{1/p}-1 over t^p decreases on (0,1]: its infimum sits at t=1
    // and its supremum is the t->0 limit 1/p.
    if (role == ModulusRole::kSmoothness) return {p, 1.0 / p};
    return {p, std::pow(2.0, 1.0 / p) - 1.0};
  }

  Kind kind() const { return kind_; }
  ModulusRole role() const { return role_; }
  const ModulusCurve& lower() const { return lower_; }
  const ModulusCurve& upper() const { return upper_; }
  const std::optional<PowerType>& power_type() const { return power_type_; }
  const std::string& note() const { return note_; }

  ModulusSpec& set_note(std::string note) {
    note_ = std::move(note);
    return *this;
  }

  ModulusSpec with_role(ModulusRole role) const {
    ModulusSpec copy = *this;
    copy.role_ = role;
    return copy;
  }

  /// Exact value. Throws std::logic_error on a Bounds spec.
  double value(double t) const {
    if (kind_ != Kind::kExact) throw std::logic_error("value() on a Bounds modulus");
    return lower_(t);
  }

  ModulusInterval evaluate(double t) const { return {lower_(t), upper_(t)}; }

  /// The side a sufficient condition may rely on: the lower curve for
  /// convexity roles, the upper curve for smoothness.
  const ModulusCurve& sound_side() const {
    return role_ == ModulusRole::kSmoothness ? upper_ : lower_;
  }

 private:
  ModulusSpec(Kind kind, ModulusRole role, ModulusCurve lower, ModulusCurve upper,
              std::optional<PowerType> power_type)
      : kind_(kind),
        role_(role),
        lower_(std::move(lower)),
        upper_(std::move(upper)),
        power_type_(std::move(power_type)) {}

  Kind kind_;
  ModulusRole role_;
  ModulusCurve lower_;
  ModulusCurve upper_;
  std::optional<PowerType> power_type_;
  std::string note_;
};

inline std::string to_string(ModulusSpec::Kind kind) {
  return kind == ModulusSpec::Kind::kExact ? "exact" : "bounds";
}

/// The comparison grid shared by every modulus check: `points` geometric
/// samples on [lo, hi] plus t = 1 exactly.
inline std::vector<double> modulus_grid(std::size_t points = 512, double lo = 1e-4,
                                        double hi = 1e2) {
  std::vector<double> grid = detail::geometric_grid(lo, hi, points);
  if (lo < 1.0 && hi > 1.0 &&
      std::find(grid.begin(), grid.end(), 1.0) == grid.end()) {
    grid.insert(std::upper_bound(grid.begin(), grid.end(), 1.0), 1.0);
  }
  return grid;
}

}  // namespace maxprop
