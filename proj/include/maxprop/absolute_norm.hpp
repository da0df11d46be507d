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
#include <functional>
#include <limits>
#include <string>
#include <utility>

#include "maxprop/common.hpp"
#include "maxprop/modulus.hpp"

namespace maxprop {

/// A profile function phi for the two-dimensional absolute norm
///   N(s, t) = |s| + |s| phi(|t| / |s|)   (s != 0),   N(0, t) = |t|.
///
/// Construction samples phi on a geometric grid in (1e-6, 1e3) and rejects
/// it unless it is 1-Lipschitz, convex, phi(0) >= 0 and phi(t) >= max(0, t-1)
/// there, all to tolerance 1e-9.
class AbsoluteNormProfile {
 public:
  static constexpr double kTolerance = 1e-9;
  static constexpr std::size_t kGridPoints = 4096;

  explicit AbsoluteNormProfile(std::function<double(double)> phi,
                               std::string label = "phi")
      : phi_(std::move(phi)), label_(std::move(label)) {
    validate();
  }

  /// Any smoothness curve is an admissible profile (it is checked anyway).
  static AbsoluteNormProfile from_curve(const ModulusCurve& curve) {
    return AbsoluteNormProfile([curve](double t) { return t <= 0.0 ? 0.0 : curve(t); },
                               curve.label());
  }

  double operator()(double t) const { return phi_(t); }
  const std::string& label() const { return label_; }

 private:
  void validate() const {
    detail::require_argument(static_cast<bool>(phi_), "profile needs a function");
    const double at_zero = phi_(0.0);
    detail::require_argument(std::isfinite(at_zero) && at_zero >= -kTolerance,
                             label_ + ": phi(0) must be >= 0");
    const auto grid = detail::geometric_grid(1e-6, 1e3, kGridPoints);
    double prev_t = 0.0;
    double prev_v = at_zero;
    double prev_slope = -kInfinity;
    double prev_noise = 0.0;
    for (double t : grid) {
      const double v = phi_(t);
      detail::require_argument(std::isfinite(v), label_ + ": phi not finite");
      detail::require_argument(v >= std::max(0.0, t - 1.0) - kTolerance,
                               label_ + ": phi(t) < max(0, t-1)");
      const double slope = (v - prev_v) / (t - prev_t);
      // Rounding in phi, e.g. sqrt(1+t^2)-1 near 0, is amplified by 1/dt.
      const double noise =
          8.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::fabs(v) + std::fabs(prev_v)) /
          (t - prev_t);
      detail::require_argument(std::fabs(slope) <= 1.0 + kTolerance + noise,
                               label_ + ": phi is not 1-Lipschitz");
      detail::require_argument(slope >= prev_slope - kTolerance - noise - prev_noise,
                               label_ + ": phi is not convex");
      prev_slope = slope;
      prev_noise = noise;
      prev_t = t;
      prev_v = v;
    }
  }

  std::function<double(double)> phi_;
  std::string label_;
};

struct AbsoluteNormInput {
  AbsoluteNormProfile phi;
  double s = 0.0;
  double t = 0.0;
};

inline double n2phi_norm(const AbsoluteNormProfile& phi, double s, double t) {
  const double as = std::fabs(s);
  const double at = std::fabs(t);
  if (as == 0.0) return at;
  return as + as * phi(at / as);
}

inline double n2phi_norm(const AbsoluteNormInput& input) {
  return n2phi_norm(input.phi, input.s, input.t);
}

}  // namespace maxprop
