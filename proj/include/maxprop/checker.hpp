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

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "maxprop/catalog.hpp"
#include "maxprop/modulus.hpp"

namespace maxprop {

enum class Property { kWMP, kWStarMP, kWStarToWeakMP, kWStarToWStarMP };
enum class Status { kUnknown, kHolds, kFails };

inline constexpr std::array<Property, 4> kAllProperties = {
    Property::kWMP, Property::kWStarMP, Property::kWStarToWeakMP, Property::kWStarToWStarMP};

inline std::string to_string(Property p) {
  switch (p) {
    case Property::kWMP: return "WMP";
    case Property::kWStarMP: return "W*MP";
    case Property::kWStarToWeakMP: return "weak*-to-weakMP";
    case Property::kWStarToWStarMP: return "weak*-to-weak*MP";
  }
  return "?";
}

inline std::string to_string(Status s) {
  switch (s) {
    case Status::kHolds: return "Holds";
    case Status::kFails: return "Fails";
    case Status::kUnknown: return "Unknown";
  }
  return "?";
}

/// Strict inequalities on grids use this absolute margin.
inline constexpr double kGridMargin = 1e-9;

struct Certificate {
  /// "symbolic", "grid", "flags", "catalog", "implication" or "none".
  std::string path = "none";
  bool exact = false;
  std::size_t grid_points = 0;
  double grid_lo = 0.0;
  double grid_hi = 0.0;
  std::optional<double> min_margin;
  std::optional<double> witness_t;
  std::string detail;
};

struct ConditionResult {
  bool holds = false;
  /// A side needed by the condition carries an unknown constant.
  bool unknown = false;
  Certificate certificate;
};

namespace detail {

inline Certificate grid_certificate(const std::vector<double>& grid) {
  Certificate c;
  c.path = "grid";
  c.grid_points = grid.size();
  c.grid_lo = grid.front();
  c.grid_hi = grid.back();
  return c;
}

inline Certificate symbolic_certificate(std::string detail) {
  Certificate c;
  c.path = "symbolic";
  c.exact = true;
  c.detail = std::move(detail);
  return c;
}

}  // namespace detail

/// Dominance condition: delta_star(t) >= rho(t) for every t > 0 and
/// delta_star(t) > t - 1 for t >= 1. Uses the lower side of delta_star and
/// the upper side of rho.
inline ConditionResult dominance_condition(const ModulusSpec& delta_star, const ModulusSpec& rho,
                                           const std::vector<double>& grid = modulus_grid()) {
  detail::require_argument(delta_star.role() == ModulusRole::kWeakStarConvexity,
                           "dominance_condition: first modulus must have the weak* role");
  detail::require_argument(rho.role() == ModulusRole::kSmoothness,
                           "dominance_condition: second modulus must have the smoothness role");
  const ModulusCurve& ds = delta_star.sound_side();
  const ModulusCurve& r = rho.sound_side();
  ConditionResult out;
  if (ds.unknown_constant() || r.unknown_constant()) {
    out.unknown = true;
    out.certificate.detail = "a required bound has an unknown constant";
    return out;
  }
  const auto df = ds.form();
  const auto rf = r.form();
  if (df == ModulusForm::kIdentity) {
    out.holds = true;
    out.certificate = detail::symbolic_certificate("delta* = t dominates every smoothness modulus");
    return out;
  }
  if (df == ModulusForm::kC0Floor) {
    out.certificate = detail::symbolic_certificate("delta* = max(0,t-1) fails delta*(1) > 0");
    out.certificate.witness_t = 1.0;
    return out;
  }
  if (df == ModulusForm::kPower && rf == ModulusForm::kPower) {
    out.holds = ds.exponent() <= r.exponent();
    out.certificate = detail::symbolic_certificate(
        out.holds ? "power exponents p <= q" : "power exponents p > q");
    return out;
  }
  if (df == ModulusForm::kPower && rf == ModulusForm::kC0Floor) {
    out.holds = true;
    out.certificate = detail::symbolic_certificate("power modulus dominates max(0,t-1)");
    return out;
  }
  out.certificate = detail::grid_certificate(grid);
  double min_margin = kInfinity;
  for (double t : grid) {
    const double lhs = ds(t);
    const double margin = lhs - r(t);
    min_margin = std::min(min_margin, margin);
    const bool strict_ok = t < 1.0 || lhs > t - 1.0 + kGridMargin;
    if (margin < 0.0 || !strict_ok) {
      out.holds = false;
      out.certificate.witness_t = t;
      out.certificate.min_margin = min_margin;
      out.certificate.detail = margin < 0.0 ? "delta* < rho at the witness t"
                                            : "delta*(t) <= t - 1 at the witness t";
      return out;
    }
  }
  out.holds = true;
  out.certificate.min_margin = min_margin;
  out.certificate.detail = "grid-certified (not a proof)";
  return out;
}

/// Compactness condition: some t > 0 with rho(t) < delta(t). Uses the
/// upper side of rho and the lower side of delta. Returns the witness t.
inline ConditionResult compactness_condition(const ModulusSpec& rho, const ModulusSpec& delta,
                                             const std::vector<double>& grid = modulus_grid()) {
  detail::require_argument(rho.role() == ModulusRole::kSmoothness,
                           "compactness_condition: first modulus must have the smoothness role");
  detail::require_argument(delta.role() != ModulusRole::kSmoothness,
                           "compactness_condition: second modulus must be a convexity modulus");
  const ModulusCurve& r = rho.sound_side();
  const ModulusCurve& d = delta.sound_side();
  ConditionResult out;
  if (r.unknown_constant() || d.unknown_constant()) {
    out.unknown = true;
    out.certificate.detail = "a required bound has an unknown constant";
    return out;
  }
  out.certificate = detail::grid_certificate(grid);
  for (double t : grid) {
    const double margin = d(t) - r(t);
    if (margin > kGridMargin) {
      out.holds = true;
      out.certificate.witness_t = t;
      out.certificate.min_margin = margin;
      out.certificate.detail = "grid witness";
      return out;
    }
  }
  if (r.form() == ModulusForm::kPower && d.form() == ModulusForm::kPower &&
      r.exponent() > d.exponent()) {
    const double t = 1.0;
    const double margin = d(t) - r(t);
    if (margin > 0.0) {
      out.holds = true;
      out.certificate = detail::symbolic_certificate("power exponents p > q, checked at t = 1");
      out.certificate.witness_t = t;
      out.certificate.min_margin = margin;
      return out;
    }
  }
  out.certificate.detail = "no witness on the grid";
  return out;
}

struct PropertyClaim {
  Property property = Property::kWMP;
  Status status = Status::kUnknown;
  std::string rule = "none";
  std::string rule_label;
  Certificate certificate;
  std::vector<std::string> notes;
};

/// One raw rule conclusion, before first-wins resolution.
struct RuleFiring {
  std::string rule;
  Property property;
  Status status;
};

struct PairVerdict {
  std::string x;
  std::string y;
  std::array<PropertyClaim, 4> claims;
  std::vector<RuleFiring> firings;

  const PropertyClaim& claim(Property p) const { return claims[static_cast<std::size_t>(p)]; }
  PropertyClaim& claim(Property p) { return claims[static_cast<std::size_t>(p)]; }
};

struct KnownFailure {
  std::string id;
  std::string x;
  std::string y;
  Property property;
  std::string description;
};

/// Pairs with an explicit non-attaining operator. Names are canonical
/// catalog names.
inline const std::vector<KnownFailure>& known_failures() {
  static const std::vector<KnownFailure> kTable = {
      {"diagonal-into-c0", "R_oplus_inf_l2", "c0", Property::kWMP,
       "T(0,e_n) = n/(n+1) e_n, T(1,0) = 0 has the non-weakly-null maximizing sequence (1,e_n)"},
      {"omega-diagonal", "c_omega_dual", "ell1_as_c0_dual", Property::kWStarToWStarMP,
       "T e_n = (1-1/n) e_n, T e_omega = 0 is weak*-continuous; e_n -> e_omega weak*"},
      {"omega-functional", "c_omega_dual", "reals", Property::kWStarMP,
       "T e_n = 1-1/n, T e_omega = 0; e_n -> e_omega weak*"},
      {"l2-to-linf", "lp:p=2", "linf", Property::kWStarToWStarMP,
       "T e_1 = 1, T e_n = (1-1/n) e_n; (e_1+e_n)/sqrt2 is maximizing with weak limit e_1/sqrt2"},
      {"james-functional", "james:p=2", "reals", Property::kWStarMP,
       "T = -x(1)/2 + sum x(j)/j^2 does not attain its norm on J_2"},
  };
  return kTable;
}

inline const KnownFailure* find_known_failure(const std::string& id) {
  for (const auto& k : known_failures()) {
    if (k.id == id) return &k;
  }
  return nullptr;
}

inline std::string rule_label(const std::string& rule) {
  if (rule == "R0") return "known counterexample";
  if (rule == "R1") return "reflexive domain, Schur range";
  if (rule == "R1b") return "Schur predual, reflexive range";
  if (rule == "R2") return "predual inside c0";
  if (rule == "R3") return "modulus dominance";
  if (rule == "R4") return "compactness";
  if (rule == "R5") return "non-reflexive domain";
  if (rule == "implication") return "implication";
  return "none";
}

namespace detail {

inline std::optional<SpaceDescriptor> predual_of(const SpaceDescriptor& x) {
  if (!x.flags.is_dual_of) return std::nullopt;
  try {
    return parse_space(*x.flags.is_dual_of);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

struct Proposal {
  std::string rule;
  Property property;
  Status status;
  Certificate certificate;
};

// Edges a -> b meaning "a Holds implies b Holds" for this pair.
inline std::vector<std::pair<Property, Property>> implications(const SpaceDescriptor& x,
                                                               const SpaceDescriptor& y) {
  std::vector<std::pair<Property, Property>> e = {
      {Property::kWMP, Property::kWStarMP},
      {Property::kWStarMP, Property::kWStarToWeakMP},
  };
  if (y.is_dual()) {
    e.push_back({Property::kWStarMP, Property::kWStarToWStarMP});
    e.push_back({Property::kWStarToWStarMP, Property::kWStarToWeakMP});
  }
  if (x.flags.reflexive) e.push_back({Property::kWStarToWeakMP, Property::kWMP});
  return e;
}

inline void propagate(PairVerdict& v, const SpaceDescriptor& x, const SpaceDescriptor& y) {
  const auto edges = implications(x, y);
  auto set = [&](Property target, Status s, Property from) {
    PropertyClaim& c = v.claim(target);
    if (c.status == s) return false;
    if (c.status != Status::kUnknown) {
      throw std::logic_error("contradictory verdicts for " + to_string(target) + " on (" + v.x +
                             ", " + v.y + ")");
    }
    const PropertyClaim& src = v.claim(from);
    c.status = s;
    c.rule = "implication";
    c.rule_label = rule_label("implication");
    c.certificate = Certificate{};
    c.certificate.path = "implication";
    c.certificate.exact = src.certificate.exact;
    c.certificate.detail = "from " + to_string(from) + " " + to_string(src.status) + " (" +
                           src.rule_label + ")";
    return true;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [a, b] : edges) {
      if (v.claim(a).status == Status::kHolds) changed |= set(b, Status::kHolds, a);
      if (v.claim(b).status == Status::kFails) changed |= set(a, Status::kFails, b);
    }
  }
}

}  // namespace detail

/// Classifies the maximizing properties of (X, Y). Rules run in order and
/// the first rule to settle a property wins; implications between the
/// properties are then propagated. Throws std::logic_error if the rules
/// contradict each other.
inline PairVerdict check_pair(const SpaceDescriptor& x, const SpaceDescriptor& y,
                              const std::vector<double>& grid = modulus_grid()) {
  PairVerdict v;
  v.x = x.name;
  v.y = y.name;
  for (Property p : kAllProperties) {
    v.claim(p).property = p;
    v.claim(p).rule_label = rule_label("none");
  }
  std::vector<detail::Proposal> proposals;
  auto propose = [&](const std::string& rule, Property p, Status s, const Certificate& c) {
    proposals.push_back({rule, p, s, c});
  };

  // R0: explicit counterexamples.
  for (const auto& k : known_failures()) {
    if (k.x == x.name && k.y == y.name) {
      Certificate c;
      c.path = "catalog";
      c.exact = true;
      c.detail = k.id + ": " + k.description;
      propose("R0", k.property, Status::kFails, c);
    }
  }

  // R1: every operator from a reflexive space into a Schur space is compact.
  if (x.flags.reflexive && y.flags.schur) {
    Certificate c;
    c.path = "flags";
    c.exact = true;
    c.detail = "X reflexive and Y Schur";
    propose("R1", Property::kWMP, Status::kHolds, c);
  }
  const auto predual = detail::predual_of(x);
  if (predual && predual->flags.schur && y.flags.reflexive) {
    Certificate c;
    c.path = "flags";
    c.exact = true;
    c.detail = "X = Z* with Z Schur, Y reflexive";
    propose("R1b", Property::kWStarToWStarMP, Status::kHolds, c);
  }

  // R2: duals of subspaces of c0.
  if (predual && predual->flags.subspace_of_c0) {
    Certificate c;
    c.path = "flags";
    c.exact = true;
    c.detail = "X = Z* with Z a subspace of c0, so delta*_X(t) = t";
    propose("R2", Property::kWStarMP, Status::kHolds, c);
  }

  // R3: delta*_X dominates rho_Y.
  if (x.delta_star && !y.rho_is_renorm_only) {
    const ConditionResult r = dominance_condition(*x.delta_star, y.rho, grid);
    if (r.holds) {
      propose("R3", Property::kWStarToWeakMP, Status::kHolds, r.certificate);
      if (y.is_dual()) propose("R3", Property::kWStarToWStarMP, Status::kHolds, r.certificate);
      if (x.flags.reflexive) propose("R3", Property::kWMP, Status::kHolds, r.certificate);
      if (x.delta_star->kind() == ModulusSpec::Kind::kExact &&
          x.delta_star->lower().form() == ModulusForm::kIdentity) {
        propose("R3", Property::kWStarMP, Status::kHolds, r.certificate);
      }
    }
  }

  // R4: rho_X (an equivalent norm is enough) below delta_Y somewhere, or Y
  // finite-dimensional: every operator is compact.
  if (x.is_dual()) {
    ConditionResult r;
    if (y.flags.finite_dimensional) {
      r.holds = true;
      r.certificate.path = "flags";
      r.certificate.exact = true;
      r.certificate.detail = "Y is finite-dimensional";
    } else {
      r = compactness_condition(x.rho, y.delta, grid);
    }
    if (r.holds) {
      propose("R4", Property::kWStarToWeakMP, Status::kHolds, r.certificate);
      if (y.is_dual()) propose("R4", Property::kWStarToWStarMP, Status::kHolds, r.certificate);
      if (x.flags.reflexive) propose("R4", Property::kWMP, Status::kHolds, r.certificate);
    }
  }

  // R5: a pair with a non-reflexive domain never has the WMP.
  if (!x.flags.reflexive) {
    Certificate c;
    c.path = "flags";
    c.exact = true;
    c.detail = "X is not reflexive";
    propose("R5", Property::kWMP, Status::kFails, c);
  }

  for (const auto& p : proposals) {
    v.firings.push_back({p.rule, p.property, p.status});
    PropertyClaim& c = v.claim(p.property);
    if (c.status != Status::kUnknown) continue;
    c.status = p.status;
    c.rule = p.rule;
    c.rule_label = rule_label(p.rule);
    c.certificate = p.certificate;
  }
  detail::propagate(v, x, y);

  if (x.family == "james" && y.family == "james" &&
      v.claim(Property::kWStarToWStarMP).status == Status::kUnknown) {
    v.claim(Property::kWStarToWStarMP)
        .notes.push_back("open problem: whether (J_p, J_q) has the weak*-to-weak*MP for p <= q");
  }
  for (Property p : kAllProperties) {
    PropertyClaim& c = v.claim(p);
    if (c.status != Status::kUnknown) continue;
    if (y.rho_is_renorm_only && x.delta_star) {
      c.notes.push_back("rho of Y is only known for an equivalent norm");
    }
  }
  return v;
}

inline PairVerdict check_pair(const std::string& x, const std::string& y) {
  return check_pair(parse_space(x), parse_space(y));
}

inline nlohmann::json certificate_to_json(const Certificate& c) {
  nlohmann::json j{{"path", c.path}, {"exact", c.exact}, {"detail", c.detail}};
  if (c.path == "grid") {
    j["grid"] = {{"points", c.grid_points}, {"lo", c.grid_lo}, {"hi", c.grid_hi}};
  }
  j["min_margin"] = c.min_margin ? nlohmann::json(*c.min_margin) : nullptr;
  j["witness_t"] = c.witness_t ? nlohmann::json(*c.witness_t) : nullptr;
  return j;
}

inline nlohmann::json verdict_to_json(const PairVerdict& v) {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : v.claims) {
    claims.push_back({{"property", to_string(c.property)},
                      {"status", to_string(c.status)},
                      {"rule", c.rule},
                      {"rule_label", c.rule_label},
                      {"certificate", certificate_to_json(c.certificate)},
                      {"notes", c.notes}});
  }
  return {{"schema", "maxprop.verdict/1"}, {"x", v.x}, {"y", v.y}, {"claims", claims}};
}

}  // namespace maxprop
