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
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "maxprop/common.hpp"
#include "maxprop/finite_vector.hpp"
#include "maxprop/modulus.hpp"
#include "maxprop/norms.hpp"
#include "maxprop/orlicz.hpp"

namespace maxprop {

struct SpaceFlags {
  bool reflexive = false;
  bool schur = false;
  bool dunford_pettis = false;
  bool weakstar_dunford_pettis = false;
  std::optional<std::string> is_dual_of;
  bool subspace_of_c0 = false;
  bool finite_dimensional = false;
};

/// A cataloged Banach space: identity, structural flags and asymptotic
/// moduli. `name` is the canonical spec string and is what the known
/// failure table matches on.
struct SpaceDescriptor {
  std::string name;
  std::string family;
  std::map<std::string, std::string> params;
  SpaceFlags flags;
  ModulusSpec delta;
  std::optional<ModulusSpec> delta_star;
  ModulusSpec rho;
  bool rho_is_renorm_only = false;
  std::string description;
  NormEvaluator norm;

  bool is_dual() const { return flags.is_dual_of.has_value(); }
};

/// A parsed "family:key=value,key=value" string.
struct SpaceSpec {
  std::string family;
  std::map<std::string, std::string> params;
};

inline SpaceSpec parse_space_spec(const std::string& text) {
  SpaceSpec spec;
  const auto colon = text.find(':');
  spec.family = text.substr(0, colon);
  detail::require_argument(!spec.family.empty(), "empty space name");
  if (colon == std::string::npos) return spec;
  const std::string rest = text.substr(colon + 1);
  std::size_t start = 0;
  while (start <= rest.size()) {
    std::size_t comma = rest.find(',', start);
    if (comma == std::string::npos) comma = rest.size();
    const std::string item = rest.substr(start, comma - start);
    if (!item.empty()) {
      const auto eq = item.find('=');
      detail::require_argument(eq != std::string::npos && eq > 0,
                               "space parameter '" + item + "' is not key=value");
      const std::string key = item.substr(0, eq);
      detail::require_argument(!spec.params.count(key), "repeated space parameter " + key);
      spec.params[key] = item.substr(eq + 1);
    }
    start = comma + 1;
  }
  return spec;
}

namespace detail {

inline std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

inline double parse_number(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require_argument(used > 0 && used == text.size() && std::isfinite(v),
                   "parameter " + key + ": '" + text + "' is not a number");
  return v;
}

class ParamReader {
 public:
  ParamReader(std::string family, std::map<std::string, std::string> params)
      : family_(std::move(family)), params_(std::move(params)) {}

  double number(const std::string& key, std::optional<double> fallback = std::nullopt) {
    auto it = params_.find(key);
    if (it == params_.end()) {
      require_argument(fallback.has_value(), family_ + ": missing parameter " + key);
      used_[key] = format_number(*fallback);
      return *fallback;
    }
    const double v = parse_number(key, it->second);
    used_[key] = format_number(v);
    return v;
  }

  std::string text(const std::string& key, std::optional<std::string> fallback = std::nullopt) {
    auto it = params_.find(key);
    if (it == params_.end()) {
      require_argument(fallback.has_value(), family_ + ": missing parameter " + key);
      used_[key] = *fallback;
      return *fallback;
    }
    used_[key] = it->second;
    return it->second;
  }

  /// Rejects parameters nobody asked for and returns the canonical name.
  std::string finish() const {
    for (const auto& [k, v] : params_) {
      require_argument(used_.count(k) > 0, family_ + ": unknown parameter " + k);
    }
    std::string name = family_;
    char sep = ':';
    for (const auto& [k, v] : used_) {
      name += sep + k + "=" + v;
      sep = ',';
    }
    return name;
  }

  const std::map<std::string, std::string>& used() const { return used_; }

 private:
  std::string family_;
  std::map<std::string, std::string> params_;
  std::map<std::string, std::string> used_;
};

inline void require_open_exponent(const std::string& family, double p) {
  require_argument(p > 1.0 && std::isfinite(p), family + ": need 1 < p < inf");
}

inline double conjugate_exponent(double p) { return p / (p - 1.0); }

inline ModulusSpec power_exact(ModulusRole role, double p) {
  return ModulusSpec::exact_power(role, p);
}

inline ModulusSpec floor_exact(ModulusRole role) {
  return ModulusSpec::exact(role, ModulusCurve::c0_floor());
}

inline ModulusSpec identity_exact(ModulusRole role) {
  return ModulusSpec::exact(role, ModulusCurve::identity(), PowerType{1.0, 1.0});
}

inline ModulusSpec trivial_bounds(ModulusRole role) {
  return ModulusSpec::bounds(role, ModulusCurve::c0_floor(), ModulusCurve::identity());
}

// The sup norm on coordinate 1 combined with the l_2 norm of the rest.
inline double r_oplus_l2_norm(const FiniteVector& x) {
  double head = 0.0;
  double tail = 0.0;
  for (const auto& [i, v] : x) {
    if (i == 1) {
      head = std::fabs(v);
    } else {
      tail = std::hypot(tail, v);
    }
  }
  return std::max(head, tail);
}

inline SpaceDescriptor make_lp(ParamReader& r) {
  const double p = r.number("p");
  require_argument(p != 1.0, "lp: use ell1_as_c0_dual for p = 1");
  require_open_exponent("lp", p);
  SpaceDescriptor d;
  d.family = "lp";
  d.flags.reflexive = true;
  d.flags.is_dual_of = "lp:p=" + format_number(conjugate_exponent(p));
  d.delta = power_exact(ModulusRole::kConvexity, p);
  d.delta_star = power_exact(ModulusRole::kWeakStarConvexity, p);
  d.rho = power_exact(ModulusRole::kSmoothness, p);
  d.description = "l_p";
  d.norm = lp_evaluator(p);
  return d;
}

inline SpaceDescriptor make_c0(ParamReader&) {
  SpaceDescriptor d;
  d.family = "c0";
  d.flags.dunford_pettis = true;
  d.flags.subspace_of_c0 = true;
  d.delta = floor_exact(ModulusRole::kConvexity);
  d.rho = floor_exact(ModulusRole::kSmoothness);
  d.description = "c_0";
  d.norm = sup_evaluator();
  return d;
}

inline SpaceDescriptor make_ell1(ParamReader&) {
  SpaceDescriptor d;
  d.family = "ell1_as_c0_dual";
  d.flags.schur = true;
  d.flags.dunford_pettis = true;
  d.flags.weakstar_dunford_pettis = true;
  d.flags.is_dual_of = "c0";
  d.delta = identity_exact(ModulusRole::kConvexity);
  d.delta_star = identity_exact(ModulusRole::kWeakStarConvexity);
  d.rho = identity_exact(ModulusRole::kSmoothness);
  d.description = "l_1 with the weak* topology of c_0";
  d.norm = lp_evaluator(1.0);
  return d;
}

inline SpaceDescriptor make_linf(ParamReader&) {
  SpaceDescriptor d;
  d.family = "linf";
  d.flags.dunford_pettis = true;
  d.flags.is_dual_of = "ell1_as_c0_dual";
  d.delta = trivial_bounds(ModulusRole::kConvexity);
  d.delta_star = trivial_bounds(ModulusRole::kWeakStarConvexity);
  d.rho = trivial_bounds(ModulusRole::kSmoothness);
  d.description = "l_inf, the dual of l_1";
  d.norm = sup_evaluator();
  return d;
}

inline SpaceDescriptor make_c_omega_dual(ParamReader&) {
  SpaceDescriptor d;
  d.family = "c_omega_dual";
  d.flags.schur = true;
  d.flags.dunford_pettis = true;
  d.flags.is_dual_of = "C[0,omega]";
  d.delta = identity_exact(ModulusRole::kConvexity);
  d.delta_star = trivial_bounds(ModulusRole::kWeakStarConvexity);
  d.rho = identity_exact(ModulusRole::kSmoothness);
  d.description = "l_1([0,omega]) as the dual of C[0,omega]";
  d.norm = lp_evaluator(1.0);
  return d;
}

inline SpaceDescriptor make_reals(ParamReader&) {
  SpaceDescriptor d;
  d.family = "reals";
  d.flags.reflexive = true;
  d.flags.schur = true;
  d.flags.dunford_pettis = true;
  d.flags.weakstar_dunford_pettis = true;
  d.flags.subspace_of_c0 = true;
  d.flags.finite_dimensional = true;
  d.flags.is_dual_of = "reals";
  // Finite-dimensional: every finite-codimensional subspace is {0}.
  d.delta = identity_exact(ModulusRole::kConvexity);
  d.delta_star = identity_exact(ModulusRole::kWeakStarConvexity);
  d.rho = floor_exact(ModulusRole::kSmoothness);
  d.description = "the real line";
  d.norm = [](const FiniteVector& x) {
    require_argument(x.max_index() <= 1, "reals: only coordinate 1 exists");
    return sup_norm(x);
  };
  return d;
}

inline SpaceDescriptor make_sum_finite_dim(ParamReader& r) {
  const double p = r.number("p");
  require_open_exponent("sum_finite_dim_p", p);
  const double dim = r.number("d", 2.0);
  require_argument(dim >= 1.0 && dim == std::floor(dim) && dim <= 1e6,
                   "sum_finite_dim_p: block dimension d must be a positive integer");
  SpaceDescriptor d;
  d.family = "sum_finite_dim_p";
  d.flags.reflexive = true;
  d.flags.is_dual_of = "sum_finite_dim_p:d=" + format_number(dim) +
                       ",p=" + format_number(conjugate_exponent(p));
  d.delta = power_exact(ModulusRole::kConvexity, p);
  d.delta_star = power_exact(ModulusRole::kWeakStarConvexity, p);
  d.rho = power_exact(ModulusRole::kSmoothness, p);
  d.description = "l_p-sum of Euclidean blocks of dimension d";
  const auto block = static_cast<std::size_t>(dim);
  d.norm = [p, block](const FiniteVector& x) {
    std::vector<std::size_t> bounds;
    for (std::size_t n = 1; n <= std::max<std::size_t>(1, x.max_index()); n += block) {
      bounds.push_back(n);
    }
    return prus_block_norm(x, lp_evaluator(2.0), p, Blocking(bounds));
  };
  return d;
}

inline SpaceDescriptor make_lorentz(ParamReader& r) {
  const double p = r.number("p");
  require_argument(p >= 1.0 && std::isfinite(p), "lorentz: need 1 <= p < inf");
  const double a = r.number("a", 0.5);
  require_argument(a > 0.0 && a <= 1.0, "lorentz: weights n^-a need 0 < a <= 1");
  SpaceDescriptor d;
  d.family = "lorentz";
  d.flags.reflexive = p > 1.0;
  if (d.flags.reflexive) d.flags.is_dual_of = "lorentz_predual";
  d.delta = ModulusSpec::bounds(ModulusRole::kConvexity, ModulusCurve::c0_floor(),
                                ModulusCurve::power(p));
  if (d.flags.reflexive) d.delta_star = d.delta.with_role(ModulusRole::kWeakStarConvexity);
  d.rho = power_exact(ModulusRole::kSmoothness, p);
  d.description = "Lorentz sequence space d(w,p), w_n = n^-a";
  const auto w = LorentzWeights::power(a);
  d.norm = [w, p](const FiniteVector& x) { return lorentz_norm(x, w, p); };
  return d;
}

inline SpaceDescriptor make_orlicz(ParamReader& r) {
  const OrliczFunction phi = parse_orlicz(r.text("phi"));
  const double p_phi = index_p(phi);
  const double q_phi = index_q(phi);
  SpaceDescriptor d;
  d.family = "orlicz";
  d.flags.reflexive = std::isfinite(q_phi) && p_phi > 1.0;
  if (d.flags.reflexive) d.flags.is_dual_of = "orlicz_predual";
  if (std::isfinite(q_phi)) {
    auto bounds = orlicz_moduli_bounds(p_phi, q_phi);
    d.delta = bounds.delta_lower;
    d.rho = bounds.rho_upper;
  } else {
    d.delta = trivial_bounds(ModulusRole::kConvexity);
    d.rho = ModulusSpec::bounds(ModulusRole::kSmoothness, ModulusCurve::c0_floor(),
                                ModulusCurve::power(p_phi));
  }
  if (d.flags.reflexive) d.delta_star = d.delta.with_role(ModulusRole::kWeakStarConvexity);
  d.description = "Orlicz sequence space h_phi, phi = " + phi.label() +
                  ", p_phi = " + format_number(p_phi) + ", q_phi = " + format_number(q_phi);
  d.norm = [phi](const FiniteVector& x) { return luxemburg_norm(x, phi); };
  return d;
}

inline SpaceDescriptor make_james(ParamReader& r) {
  const double p = r.number("p");
  require_open_exponent("james", p);
  SpaceDescriptor d;
  d.family = "james";
  d.flags.is_dual_of = "james_predual:p=" + format_number(p);
  if (p == 2.0) {
    d.delta = power_exact(ModulusRole::kConvexity, p);
  } else {
    d.delta = ModulusSpec::bounds(ModulusRole::kConvexity, ModulusCurve::power(p),
                                  ModulusCurve::identity(),
                                  ModulusSpec::power_metadata(ModulusRole::kConvexity, p));
    d.delta.set_note("lower bound inherited from the weak* modulus");
  }
  d.delta_star = power_exact(ModulusRole::kWeakStarConvexity, p);
  d.rho = ModulusSpec::bounds(ModulusRole::kSmoothness, ModulusCurve::c0_floor(),
                              ModulusCurve::power(p),
                              ModulusSpec::power_metadata(ModulusRole::kSmoothness, p));
  d.rho.set_note("upper bound holds for an equivalent norm only");
  d.rho_is_renorm_only = true;
  d.description = "James p-variation space J_p";
  d.norm = [p](const FiniteVector& x) { return james_norm(x, p); };
  return d;
}

// Stated small-t inequalities for L_p[0,1], glued to the universal bounds
// max(0, t-1) <= modulus <= t outside their range.
// (sum_k |x(k)|^p 2^-k)^(1/p), summed in log space so large indices do not
// underflow before the root.
inline double dyadic_step_norm(const FiniteVector& x, double p) {
  double top = -kInfinity;
  for (const auto& [k, v] : x) {
    top = std::max(top, p * std::log(std::fabs(v)) - static_cast<double>(k) * std::numbers::ln2);
  }
  if (top == -kInfinity) return 0.0;
  double s = 0.0;
  for (const auto& [k, v] : x) {
    s += std::exp(p * std::log(std::fabs(v)) - static_cast<double>(k) * std::numbers::ln2 - top);
  }
  return std::exp((top + std::log(s)) / p);
}

inline SpaceDescriptor make_lp_interval(ParamReader& r) {
  const double p = r.number("p");
  require_open_exponent("Lp_interval", p);
  SpaceDescriptor d;
  d.family = "Lp_interval";
  d.flags.reflexive = true;
  d.flags.is_dual_of = "Lp_interval:p=" + format_number(conjugate_exponent(p));
  d.description = "L_p[0,1]; x(k) is the value on [2^-k, 2^(1-k))";
  d.norm = [p](const FiniteVector& x) { return dyadic_step_norm(x, p); };
  if (p == 2.0) {
    d.delta = power_exact(ModulusRole::kConvexity, 2.0);
    d.delta_star = power_exact(ModulusRole::kWeakStarConvexity, 2.0);
    d.rho = power_exact(ModulusRole::kSmoothness, 2.0);
    return d;
  }
  if (p < 2.0) {
    auto delta_upper = ModulusCurve::custom("min(t,(p-1)t^2) for t<=1", [p](double t) {
      return t <= 1.0 ? std::min(t, (p - 1.0) * t * t) : t;
    });
    auto delta_lower = ModulusCurve::custom("C1(p) t^2, C1 unknown", [](double t) {
      return std::max(0.0, t - 1.0);
    }, true);
    d.delta = ModulusSpec::bounds(ModulusRole::kConvexity, delta_lower, delta_upper,
                                  PowerType{2.0, std::nullopt});
    auto rho_lower = ModulusCurve::custom("t^p/p for t<=1", [p](double t) {
      return t <= 1.0 ? std::pow(t, p) / p : std::max(0.0, t - 1.0);
    });
    auto rho_upper = ModulusCurve::custom("min(t,(2/p)t^p) for t<=1", [p](double t) {
      return t <= 1.0 ? std::min(t, 2.0 / p * std::pow(t, p)) : t;
    });
    d.rho = ModulusSpec::bounds(ModulusRole::kSmoothness, rho_lower, rho_upper,
                                PowerType{p, 2.0 / p});
  } else {
    auto delta_upper = ModulusCurve::custom("min(t,t^p/p) for t<=1", [p](double t) {
      return t <= 1.0 ? std::min(t, std::pow(t, p) / p) : t;
    });
    auto delta_lower = ModulusCurve::custom("C1(p) t^p, C1 unknown", [](double t) {
      return std::max(0.0, t - 1.0);
    }, true);
    d.delta = ModulusSpec::bounds(ModulusRole::kConvexity, delta_lower, delta_upper,
                                  PowerType{p, std::nullopt});
    const double cut = std::min(1.0, 1.0 / (p - 1.0));
    auto rho_lower = ModulusCurve::custom("(p-1)t^2 for t<=1/(p-1)", [p, cut](double t) {
      return t <= cut ? (p - 1.0) * t * t : std::max(0.0, t - 1.0);
    });
    auto rho_upper = ModulusCurve::custom("C2(p) t^2, C2 unknown", [](double t) { return t; },
                                          true);
    d.rho = ModulusSpec::bounds(ModulusRole::kSmoothness, rho_lower, rho_upper,
                                PowerType{2.0, std::nullopt});
  }
  d.delta.set_note("C1(p) is an unknown positive constant");
  d.delta_star = d.delta.with_role(ModulusRole::kWeakStarConvexity);
  return d;
}

inline SpaceDescriptor make_r_oplus_l2(ParamReader&) {
  SpaceDescriptor d;
  d.family = "R_oplus_inf_l2";
  d.flags.reflexive = true;
  d.flags.is_dual_of = "R_oplus_1_l2";
  d.delta = floor_exact(ModulusRole::kConvexity);
  d.delta_star = floor_exact(ModulusRole::kWeakStarConvexity);
  d.rho = power_exact(ModulusRole::kSmoothness, 2.0);
  d.description = "R (+)_inf l_2; coordinate 1 is the R part";
  d.norm = r_oplus_l2_norm;
  return d;
}

inline SpaceDescriptor make_pconvex(ParamReader& r) {
  const double p = r.number("p");
  require_argument(p >= 1.0 && std::isfinite(p), "p_convexification: need 1 <= p < inf");
  const std::string base = r.text("base", std::string("lp"));
  SpaceDescriptor d;
  d.family = "p_convexification";
  if (base == "c0") {
    // |x|^p lies in c_0 iff x does, with the same sup: X^p = c_0.
    d.flags.dunford_pettis = true;
    d.flags.subspace_of_c0 = true;
    d.delta = floor_exact(ModulusRole::kConvexity);
    d.rho = floor_exact(ModulusRole::kSmoothness);
    d.description = "p-convexification of c_0";
    d.norm = [p](const FiniteVector& x) { return pconvex_norm(x, sup_evaluator(), p); };
    return d;
  }
  require_argument(base == "lp", "p_convexification: base must be lp or c0");
  const double q = r.number("q");
  require_argument(q >= 1.0 && std::isfinite(q), "p_convexification: need 1 <= q < inf");
  // (l_q)^p is l_{pq} isometrically.
  const double pq = p * q;
  d.flags.reflexive = pq > 1.0;
  if (pq == 1.0) {
    d.flags.schur = true;
    d.flags.dunford_pettis = true;
    d.delta = identity_exact(ModulusRole::kConvexity);
    d.rho = identity_exact(ModulusRole::kSmoothness);
  } else {
    d.flags.is_dual_of = "lp:p=" + format_number(conjugate_exponent(pq));
    d.delta = power_exact(ModulusRole::kConvexity, pq);
    d.delta_star = power_exact(ModulusRole::kWeakStarConvexity, pq);
    d.rho = power_exact(ModulusRole::kSmoothness, pq);
  }
  d.description = "p-convexification of l_q";
  d.norm = [p, q](const FiniteVector& x) { return pconvex_norm(x, lp_evaluator(q), p); };
  return d;
}

}  // namespace detail

/// Builds a descriptor; throws std::invalid_argument for unknown names or
/// invalid parameters.
inline SpaceDescriptor lookup_space(const std::string& family,
                                    const std::map<std::string, std::string>& params = {}) {
  using Factory = SpaceDescriptor (*)(detail::ParamReader&);
  static const std::map<std::string, Factory> kFactories = {
      {"lp", detail::make_lp},
      {"c0", detail::make_c0},
      {"ell1_as_c0_dual", detail::make_ell1},
      {"sum_finite_dim_p", detail::make_sum_finite_dim},
      {"lorentz", detail::make_lorentz},
      {"orlicz", detail::make_orlicz},
      {"james", detail::make_james},
      {"Lp_interval", detail::make_lp_interval},
      {"R_oplus_inf_l2", detail::make_r_oplus_l2},
      {"p_convexification", detail::make_pconvex},
      {"linf", detail::make_linf},
      {"c_omega_dual", detail::make_c_omega_dual},
      {"reals", detail::make_reals},
  };
  auto it = kFactories.find(family);
  if (it == kFactories.end()) {
    std::string known;
    for (const auto& [k, f] : kFactories) known += (known.empty() ? "" : ", ") + k;
    throw std::invalid_argument("unknown space '" + family + "' (known: " + known + ")");
  }
  detail::ParamReader reader(family, params);
  SpaceDescriptor d = it->second(reader);
  d.name = reader.finish();
  d.params = reader.used();
  return d;
}

inline SpaceDescriptor lookup_space(const SpaceSpec& spec) {
  return lookup_space(spec.family, spec.params);
}

inline SpaceDescriptor parse_space(const std::string& text) {
  return lookup_space(parse_space_spec(text));
}

/// Canonical form of a spec string, e.g. "lp:p=2.0" -> "lp:p=2".
inline std::string canonical_space_name(const std::string& text) {
  return parse_space(text).name;
}

/// The fixed instance list used for cross-product checks and the demos.
inline std::vector<std::string> catalog_instance_specs() {
  return {
      "lp:p=1.5",
      "lp:p=2",
      "lp:p=3",
      "lp:p=4",
      "c0",
      "ell1_as_c0_dual",
      "linf",
      "c_omega_dual",
      "reals",
      "sum_finite_dim_p:p=2",
      "sum_finite_dim_p:p=3",
      "lorentz:p=2,a=0.5",
      "lorentz:p=3,a=0.5",
      "orlicz:phi=pow 3",
      "orlicz:phi=exp",
      "orlicz:phi=poly 1 1",
      "james:p=2",
      "james:p=3",
      "Lp_interval:p=1.5",
      "Lp_interval:p=2",
      "Lp_interval:p=3",
      "R_oplus_inf_l2",
      "p_convexification:p=2,base=lp,q=2",
      "p_convexification:p=2,base=c0",
  };
}

inline std::vector<SpaceDescriptor> catalog_instances() {
  std::vector<SpaceDescriptor> out;
  for (const auto& s : catalog_instance_specs()) out.push_back(parse_space(s));
  return out;
}

// ---- JSON ----------------------------------------------------------------

inline nlohmann::json curve_to_json(const ModulusCurve& c) {
  nlohmann::json j{{"form", to_string(c.form())}, {"label", c.label()}};
  if (c.form() == ModulusForm::kPower) j["exponent"] = c.exponent();
  if (c.unknown_constant()) j["unknown_constant"] = true;
  return j;
}

inline nlohmann::json modulus_to_json(const ModulusSpec& m) {
  nlohmann::json j{{"role", to_string(m.role())}, {"kind", to_string(m.kind())}};
  if (m.kind() == ModulusSpec::Kind::kExact) {
    j["exact"] = curve_to_json(m.lower());
  } else {
    j["lower"] = curve_to_json(m.lower());
    j["upper"] = curve_to_json(m.upper());
  }
  if (m.power_type()) {
    j["power_type"] = {{"exponent", m.power_type()->exponent}};
    if (m.power_type()->constant) {
      j["power_type"]["constant"] = *m.power_type()->constant;
    } else {
      j["power_type"]["constant"] = nullptr;
    }
  }
  if (!m.note().empty()) j["note"] = m.note();
  return j;
}

inline nlohmann::json space_to_json(const SpaceDescriptor& d) {
  nlohmann::json flags{{"reflexive", d.flags.reflexive},
                       {"schur", d.flags.schur},
                       {"dunford_pettis", d.flags.dunford_pettis},
                       {"weakstar_dunford_pettis", d.flags.weakstar_dunford_pettis},
                       {"subspace_of_c0", d.flags.subspace_of_c0},
                       {"finite_dimensional", d.flags.finite_dimensional}};
  flags["is_dual_of"] = d.flags.is_dual_of ? nlohmann::json(*d.flags.is_dual_of) : nullptr;
  nlohmann::json j{{"name", d.name},
                   {"family", d.family},
                   {"params", d.params},
                   {"description", d.description},
                   {"flags", flags},
                   {"delta", modulus_to_json(d.delta)},
                   {"rho", modulus_to_json(d.rho)},
                   {"rho_is_renorm_only", d.rho_is_renorm_only}};
  j["delta_star"] = d.delta_star ? modulus_to_json(*d.delta_star) : nullptr;
  return j;
}

}  // namespace maxprop
