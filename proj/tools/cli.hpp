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

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "maxprop.hpp"

namespace maxprop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 64;

inline std::string fmt7(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.7g", v);
  return buf;
}

/// Shortest string that reads back to the same double.
inline std::string fmt_exact(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::size_t default_grid_size() {
  if (const char* env = std::getenv("MAXPROP_GRID")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 2 && v <= 1000000) return static_cast<std::size_t>(v);
  }
  return 512;
}

inline std::optional<Property> parse_property(const std::string& s) {
  for (Property p : kAllProperties) {
    if (to_string(p) == s) return p;
  }
  return std::nullopt;
}

struct Options {
  std::string space;
  std::string vector;
  std::string file;
  std::string phi;
  std::string base;
  std::string weights;
  std::string modulus = "rho";
  std::size_t grid = 0;
  double lo = 1e-4;
  double hi = 1e2;
  std::string x;
  std::string y;
  std::string property = "WMP";
  std::string example;
  std::size_t n = 100;
  double tol = 1e-9;
  bool json = false;
  bool csv = false;
};

inline SpaceDescriptor resolve_space(const Options& o) {
  SpaceSpec spec = parse_space_spec(o.space);
  auto put = [&spec](const char* key, const std::string& value) {
    if (value.empty()) return;
    detail::require_argument(!spec.params.count(key),
                             std::string("--") + key + " repeats a parameter of --space");
    spec.params[key] = value;
  };
  put("phi", o.phi);
  put("base", o.base);
  SpaceDescriptor d = lookup_space(spec);
  if (!o.weights.empty()) {
    detail::require_argument(d.family == "lorentz", "--weights only applies to lorentz");
    std::vector<double> w;
    for (const auto& [i, v] : parse_vector_list(o.weights)) w.push_back(v);
    detail::require_argument(w.size() == parse_vector_list(o.weights).max_index(),
                             "--weights must be positive");
    const auto weights = LorentzWeights::explicit_values(w);
    const double p = std::stod(d.params.at("p"));
    d.norm = [weights, p](const FiniteVector& x) { return lorentz_norm(x, weights, p); };
    d.name += ",weights=" + o.weights;
  }
  return d;
}

inline int cmd_norm(const Options& o, std::ostream& out) {
  detail::require_argument(o.vector.empty() != o.file.empty(),
                           "give exactly one of --vector and --file");
  const SpaceDescriptor d = resolve_space(o);
  const FiniteVector x = o.vector.empty() ? read_vector_file(o.file) : parse_vector_list(o.vector);
  const double value = d.norm(x);
  if (o.json) {
    out << nlohmann::json{{"schema", "maxprop.norm/1"},
                          {"space", d.name},
                          {"support", x.support_size()},
                          {"value", value}}
               .dump(2)
        << "\n";
  } else {
    out << fmt7(value) << "\n";
  }
  return kExitOk;
}

inline int cmd_modulus(const Options& o, std::ostream& out) {
  const SpaceDescriptor d = resolve_space(o);
  const ModulusSpec* m = nullptr;
  if (o.modulus == "rho") {
    m = &d.rho;
  } else if (o.modulus == "delta") {
    m = &d.delta;
  } else {
    detail::require_argument(d.delta_star.has_value(), d.name + " has no weak* modulus");
    m = &*d.delta_star;
  }
  const std::size_t points = o.grid ? o.grid : default_grid_size();
  const auto grid = detail::geometric_grid(o.lo, o.hi, points);
  const bool exact = m->kind() == ModulusSpec::Kind::kExact;
  if (o.csv) {
    out << (exact ? "t,value\n" : "t,lower,upper\n");
    for (double t : grid) {
      const auto v = m->evaluate(t);
      out << fmt_exact(t) << "," << fmt_exact(v.lower);
      if (!exact) out << "," << fmt_exact(v.upper);
      out << "\n";
    }
    return kExitOk;
  }
  nlohmann::json j{{"schema", "maxprop.modulus/1"},
                   {"space", d.name},
                   {"modulus", o.modulus},
                   {"descriptor", modulus_to_json(*m)}};
  if (o.json) {
    nlohmann::json samples = nlohmann::json::array();
    for (double t : grid) {
      const auto v = m->evaluate(t);
      samples.push_back({{"t", t}, {"lower", v.lower}, {"upper", v.upper}});
    }
    j["samples"] = samples;
  }
  out << j.dump(2) << "\n";
  return kExitOk;
}

inline int status_exit(Status s) {
  switch (s) {
    case Status::kHolds: return kExitOk;
    case Status::kFails: return kExitFails;
    case Status::kUnknown: return kExitUnknown;
  }
  return kExitUnknown;
}

inline int cmd_check_pair(const Options& o, std::ostream& out) {
  const auto prop = parse_property(o.property);
  detail::require_argument(prop.has_value(), "unknown property " + o.property);
  const PairVerdict v = check_pair(parse_space(o.x), parse_space(o.y));
  if (o.json) {
    out << verdict_to_json(v).dump(2) << "\n";
  } else {
    for (const auto& c : v.claims) {
      out << to_string(c.property) << ": " << to_string(c.status);
      if (c.status != Status::kUnknown) {
        out << " (" << c.rule_label << ", " << c.certificate.path << ")";
      }
      out << "\n";
      if (c.certificate.path == "grid" && c.status == Status::kHolds) {
        out << "  grid-certified (not a proof)\n";
      }
      for (const auto& n : c.notes) out << "  note: " << n << "\n";
    }
  }
  return status_exit(v.claim(*prop).status);
}

inline void print_report(const VerificationReport& r, std::ostream& out) {
  out << "op: " << r.op << "\n"
      << "N: " << r.n << "\n"
      << "truncated norm: " << fmt7(r.truncated_norm) << "\n"
      << "claimed norm: " << fmt7(r.claimed_norm) << "\n"
      << "gap: " << fmt7(r.gap) << "\n"
      << "margin: " << fmt7(r.margin) << "\n";
  for (const auto& [k, v] : r.metrics) out << k << ": " << fmt7(v) << "\n";
  for (const auto& c : r.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << " - " << c.detail;
    out << "\n";
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  out << "result: " << (r.passed() ? "PASS" : "FAIL") << "\n";
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  VerificationReport r;
  if (o.example == "opA") {
    r = run_verification(op_a_failing_pair(), o.n, o.tol);
  } else if (o.example == "opB") {
    r = run_verification(op_b_weakstar_failure(), o.n, o.tol);
  } else if (o.example == "opD") {
    r = run_verification(op_d_l2_linf(), o.n, o.tol);
  } else if (o.example == "james") {
    r = james_functional_analysis(o.n, o.tol).report;
  } else {
    r = verify_schur(o.n, o.tol);
  }
  if (o.json) {
    out << report_to_json(r).dump(2) << "\n";
  } else {
    print_report(r, out);
  }
  return r.passed() ? kExitOk : kExitFails;
}

inline int cmd_orlicz(const Options& o, std::ostream& out) {
  const OrliczFunction phi = parse_orlicz(o.phi);
  const OrliczReport r = analyze_orlicz(phi);
  if (o.json) {
    nlohmann::json j{{"schema", "maxprop.orlicz/1"},
                     {"phi", phi.label()},
                     {"p_phi", r.p_phi},
                     {"q_phi", r.q_phi},
                     {"boyd_alpha", r.boyd.alpha},
                     {"boyd_beta", r.boyd.beta},
                     {"delta2", {{"holds", r.delta2.holds}, {"estimate", r.delta2.estimate}}}};
    if (r.bounds) {
      j["delta_lower"] = modulus_to_json(r.bounds->delta_lower);
      j["rho_upper"] = modulus_to_json(r.bounds->rho_upper);
    } else {
      j["delta_lower"] = nullptr;
      j["rho_upper"] = nullptr;
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  auto num = [](double v) { return std::isfinite(v) ? fmt7(v) : std::string("inf"); };
  out << "phi: " << phi.label() << "\n"
      << "p_phi: " << num(r.p_phi) << "\n"
      << "q_phi: " << num(r.q_phi) << "\n"
      << "boyd alpha: " << num(r.boyd.alpha) << "\n"
      << "boyd beta: " << num(r.boyd.beta) << "\n"
      << "delta2 at 0: " << (r.delta2.holds ? "yes" : "no") << " (sup ratio " << num(r.delta2.estimate)
      << ")\n";
  if (r.bounds) {
    out << "delta lower bound: " << r.bounds->delta_lower.lower().label() << "\n"
        << "rho upper bound: " << r.bounds->rho_upper.upper().label() << "\n";
  }
  return kExitOk;
}

/// Parses argv and dispatches. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Norms, moduli and norm-attainment checks for sequence spaces", "maxprop"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_space_opts = [&o](CLI::App* sub) {
    sub->add_option("--space", o.space, "Space spec, family:key=value,...")->required();
    sub->add_option("--phi", o.phi, "Orlicz function: 'pow p', 'exp' or 'poly c2 c3 ...'");
    sub->add_option("--base", o.base, "Base space for p_convexification (lp or c0)");
    sub->add_option("--weights", o.weights, "Explicit Lorentz weights, comma separated");
  };

  auto* norm = app.add_subcommand("norm", "Norm of a finitely supported vector");
  add_space_opts(norm);
  auto* vec_opt = norm->add_option("--vector", o.vector, "Comma separated entries x(1),x(2),...");
  auto* file_opt = norm->add_option("--file", o.file, "JSON array or 'index value' lines");
  vec_opt->excludes(file_opt);
  norm->add_flag("--json", o.json, "JSON output");

  auto* modulus = app.add_subcommand("modulus", "Evaluate an asymptotic modulus");
  add_space_opts(modulus);
  modulus->add_option("--modulus", o.modulus, "rho, delta or delta_star")
      ->check(CLI::IsMember({"rho", "delta", "delta_star"}));
  modulus->add_option("--grid", o.grid, "Number of grid points (default $MAXPROP_GRID or 512)")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
  modulus->add_option("--lo", o.lo, "Smallest t")->check(CLI::PositiveNumber);
  modulus->add_option("--hi", o.hi, "Largest t")->check(CLI::PositiveNumber);
  auto* csv_flag = modulus->add_flag("--csv", o.csv, "CSV rows t,value or t,lower,upper");
  modulus->add_flag("--json", o.json, "JSON with samples")->excludes(csv_flag);

  auto* pair = app.add_subcommand("check-pair", "Classify the maximizing properties of (X, Y)");
  pair->add_option("--x", o.x, "Domain space spec")->required();
  pair->add_option("--y", o.y, "Range space spec")->required();
  pair->add_option("--property", o.property, "Property that sets the exit code")
      ->check(CLI::IsMember({"WMP", "W*MP", "weak*-to-weakMP", "weak*-to-weak*MP"}));
  pair->add_flag("--json", o.json, "JSON output");

  auto* verify = app.add_subcommand("verify-example", "Verify a non-attaining operator");
  verify->add_option("example", o.example, "opA, opB, opD, james or schur")
      ->required()
      ->check(CLI::IsMember({"opA", "opB", "opD", "james", "schur"}));
  verify->add_option("--n", o.n, "Truncation size")->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
  verify->add_option("--tol", o.tol, "Tolerance")->check(CLI::PositiveNumber);
  verify->add_flag("--json", o.json, "JSON report");

  auto* orlicz = app.add_subcommand("orlicz", "Indices and moduli bounds of an Orlicz function");
  orlicz->add_option("--phi", o.phi, "'pow p', 'exp' or 'poly c2 c3 ...'")->required();
  orlicz->add_flag("--json", o.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (norm->parsed()) return cmd_norm(o, out);
    if (modulus->parsed()) return cmd_modulus(o, out);
    if (pair->parsed()) return cmd_check_pair(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    return cmd_orlicz(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFails;
  }
}

}  // namespace maxprop::cli
