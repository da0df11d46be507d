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

// Runs the nine acceptance criteria and prints one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "maxprop.hpp"
#include "oracles.hpp"

namespace {

using namespace maxprop;

struct Outcome {
  bool passed = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Outcome james_oracle_sweep() {
  const auto start = std::chrono::steady_clock::now();
  constexpr int kDim = 10;
  std::size_t count = 0;
  std::size_t bad = 0;
  double worst = 0.0;
  std::vector<double> dense(kDim);
  oracle::james_sweep(kDim, -2, 2, [&](const std::vector<int>& x, std::int32_t sum) {
    for (int i = 0; i < kDim; ++i) dense[i] = x[i];
    const double got = james_norm(FiniteVector::from_dense(dense), 2.0);
    const double diff = std::fabs(got - std::sqrt(static_cast<double>(sum)));
    worst = std::max(worst, diff);
    if (diff > 1e-12) ++bad;
    ++count;
  });
  const double secs = seconds_since(start);
  return {bad == 0 && count == 9765625 && secs < 10.0,
          std::to_string(count) + " vectors, max diff " + num(worst) + ", " + num(secs) + " s"};
}

Outcome l2_linf_example() {
  const auto op = op_d_l2_linf();
  const double at_1e4 = op.truncated_norm(10000);
  bool below = true;
  for (std::size_t n = 2; n <= 100000; ++n) below = below && op.truncated_norm(n) < std::numbers::sqrt2;
  double worst = 0.0;
  for (std::size_t k = 2; k <= 10000; ++k) {
    const double expected = (2.0 - 1.0 / static_cast<double>(k)) / std::numbers::sqrt2;
    worst = std::max(worst, std::fabs(op.image_norm(op.maximizing_sequence(k)) - expected));
  }
  const bool near = std::fabs(at_1e4 - std::numbers::sqrt2) <= 1e-4;
  return {near && below && worst <= 1e-15,
          "||T_1e4|| = " + num(at_1e4) + ", below sqrt2 for N <= 1e5: " + (below ? "yes" : "no") +
              ", sequence max diff " + num(worst)};
}

Outcome james_functional() {
  const auto a = james_functional_analysis(200, 1e-9);
  bool candidates = true;
  for (double t = -5.0; t <= 5.0; t += 0.125) {
    const double norm = std::sqrt(oracle::james_chain_pow({t}, 2.0));
    candidates = candidates && std::fabs(-0.5 * t) <= 0.5 * norm + 1e-15;
  }
  const bool ok = std::fabs(a.t_max - 0.183491) <= 1e-6 && a.printed_f_at_t_max >= 0.655 &&
                  a.printed_f_at_t_max <= 0.665 && a.true_max > 0.5 && candidates &&
                  a.report.passed();
  return {ok, "t_max = " + num(a.t_max) + ", printed f(t_max) = " + num(a.printed_f_at_t_max) +
                  ", constrained max = " + num(a.true_max) + " at t = " + num(a.true_argmax) +
                  ", discrepancy = " + num(a.discrepancy)};
}

Outcome checker_table() {
  std::vector<std::string> problems;
  auto expect = [&](const std::string& x, const std::string& y, Property p, Status s,
                    const std::string& rule) {
    const PairVerdict v = check_pair(x, y);
    const auto& c = v.claim(p);
    if (c.status != s || (!rule.empty() && c.rule != rule)) {
      problems.push_back("(" + x + ", " + y + ") " + to_string(p) + " = " + to_string(c.status) +
                         " via " + c.rule);
    }
  };
  const std::vector<double> exps = {1.5, 2.0, 3.0, 4.0};
  auto lp = [](double p) { return "lp:p=" + detail::format_number(p); };
  for (double p : exps) {
    expect(lp(p), "c0", Property::kWMP, Status::kHolds, "R3");
    expect(lp(p), "ell1_as_c0_dual", Property::kWMP, Status::kHolds, "R1");
    for (double q : exps) {
      const std::string rule = p <= q ? "R3" : "R4";
      expect(lp(p), lp(q), Property::kWMP, Status::kHolds, rule);
      expect("sum_finite_dim_p:p=" + detail::format_number(p),
             "sum_finite_dim_p:p=" + detail::format_number(q), Property::kWMP, Status::kHolds, rule);
      if (p <= q) expect(lp(p), "lorentz:p=" + detail::format_number(q), Property::kWMP, Status::kHolds, "R3");
    }
    if (p <= 4.0) expect(lp(p), "p_convexification:p=2,q=2", Property::kWMP, Status::kHolds, "R3");
  }
  expect("R_oplus_inf_l2", "c0", Property::kWMP, Status::kFails, "R0");
  expect("c_omega_dual", "ell1_as_c0_dual", Property::kWStarToWStarMP, Status::kFails, "R0");
  expect("lp:p=2", "ell1_as_c0_dual", Property::kWMP, Status::kHolds, "R1");
  for (const auto& y : catalog_instance_specs()) {
    expect("ell1_as_c0_dual", y, Property::kWStarMP, Status::kHolds, "");
  }
  const auto spaces = catalog_instances();
  const auto start = std::chrono::steady_clock::now();
  for (const auto& x : spaces) {
    for (const auto& y : spaces) {
      try {
        check_pair(x, y);
      } catch (const std::exception& e) {
        problems.push_back(e.what());
      }
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 5.0) problems.push_back("cross product took " + num(secs) + " s");
  std::string detail = std::to_string(spaces.size() * spaces.size()) + " pairs in " + num(secs) + " s";
  if (!problems.empty()) detail += "; first problem: " + problems.front();
  return {problems.empty(), detail};
}

Outcome free_norm_duality() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double worst = 0.0;
  std::size_t spaces = 0;
  auto check = [&](const FiniteMetricSpace& m, const Molecule& mu) {
    const auto r = free_norm_detail(mu, m);
    worst = std::max(worst, std::fabs(r.primal - r.dual));
    if (r.dual_lp) worst = std::max(worst, std::fabs(r.primal - *r.dual_lp));
  };
  for (std::size_t n = 2; n <= 12; ++n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    for (int family = 0; family < 3; ++family) {
      for (int trial = 0; trial < 10; ++trial) {
        const FiniteMetricSpace m(labels, oracle::random_metric(rng, n, family));
        std::map<std::size_t, double> c;
        for (std::size_t i = 1; i < n; ++i) c[i] = u(rng);
        check(m, Molecule(c));
        ++spaces;
      }
    }
  }
  bool schur = true;
  for (std::size_t n = 2; n <= 11; ++n) {
    const auto ex = build_schur_example(n);
    for (std::size_t k = 2; k <= n; ++k) check(ex.space, ex.maximizing_molecule(k));
    check(ex.space, Molecule::pair(1, n));
    ++spaces;
    const double nn = static_cast<double>(n);
    const auto opt = maximize_pairing(ex.f, ex.space);
    schur = schur && std::fabs(opt.value - nn / (nn + 1.0)) <= 1e-15 && std::fabs(1.0 - opt.value - 1.0 / (nn + 1.0)) <= 1e-15;
    schur = schur && verify_schur_example(n, 1e-9).passed();
  }
  return {worst <= 1e-8 && schur, std::to_string(spaces) + " spaces, max primal-dual gap " + num(worst) +
                                      ", Schur optimum N/(N+1): " + (schur ? "yes" : "no")};
}

Outcome orlicz_closed_forms() {
  double worst = 0.0;
  for (double p : {1.0, 1.5, 2.0, 4.0}) {
    const auto phi = OrliczFunction::power(p);
    const auto b = boyd_indices(phi);
    for (double v : {index_p(phi), index_q(phi), b.alpha, b.beta}) worst = std::max(worst, std::fabs(v - p));
  }
  const auto e = OrliczFunction::exp_minus_one();
  const double q_exp = index_q(e);
  const double q_oracle = oracle::exp_elasticity_sup(std::log(2.0));
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  std::size_t samples = 0;
  std::size_t violations = 0;
  for (const auto& phi : {OrliczFunction::power(1.5), OrliczFunction::power(2.0), OrliczFunction::power(4.0), e}) {
    for (int k = 0; k < 10000; ++k) {
      const double s = u(rng);
      const double t = u(rng);
      const double c = conjugate(phi, t);
      ++samples;
      if (std::isfinite(c) && s * t > phi(s) + c + 1e-8) ++violations;
    }
  }
  const bool ok = worst <= 1e-3 && std::fabs(q_exp - q_oracle) <= 1e-3 &&
                  std::fabs(q_exp - 2.0 * std::log(2.0)) <= 1e-3 && violations == 0;
  return {ok, "power index max error " + num(worst) + ", exp q = " + num(q_exp) + " (oracle " +
                  num(q_oracle) + "), Fenchel-Young " + std::to_string(samples - violations) + "/" +
                  std::to_string(samples)};
}

Outcome n2phi_suite() {
  std::vector<AbsoluteNormProfile> profiles;
  for (const auto& d : catalog_instances()) {
    std::vector<ModulusCurve> curves = {d.rho.lower(), d.rho.upper(), d.delta.lower(), d.delta.upper()};
    if (d.delta_star) curves.push_back(d.delta_star->lower());
    for (const auto& c : curves) {
      try {
        profiles.push_back(AbsoluteNormProfile::from_curve(c));
      } catch (const std::invalid_argument&) {
      }
    }
  }
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::uniform_int_distribution<int> e(-6, 6);
  std::size_t failures = 0;
  for (const auto& phi : profiles) {
    for (int k = 0; k < 10000; ++k) {
      const double s1 = u(rng), t1 = u(rng), s2 = u(rng), t2 = u(rng);
      const double n1 = n2phi_norm(phi, s1, t1);
      const double n2 = n2phi_norm(phi, s2, t2);
      const double lambda = std::ldexp(k % 2 ? 1.0 : -1.0, e(rng));
      if (n2phi_norm(phi, lambda * s1, lambda * t1) != std::fabs(lambda) * n1) ++failures;
      if (n2phi_norm(phi, s1 + s2, t1 + t2) > n1 + n2 + 1e-12 * (n1 + n2)) ++failures;
      if (n2phi_norm(phi, -s1, t1) != n1 || n2phi_norm(phi, s1, -t1) != n1) ++failures;
    }
  }
  return {failures == 0 && !profiles.empty(),
          std::to_string(profiles.size()) + " profiles x 1e4 triples, " + std::to_string(failures) + " failures"};
}

Outcome disjoint_support_laws() {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> v(-5, 5);
  double lp_worst = 0.0;
  std::size_t james_bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> a(10, 0.0), b(10, 0.0), c(16, 0.0);
    for (std::size_t i = 0; i < 10; ++i) ((i + trial) % 3 ? a : b)[i] = v(rng);
    for (double p : {1.0, 2.0, 3.0}) {
      const auto x = FiniteVector::from_dense(a);
      const auto y = FiniteVector::from_dense(b);
      const double lhs = std::pow(lp_norm(x + y, p), p);
      const double rhs = std::pow(lp_norm(x, p), p) + std::pow(lp_norm(y, p), p);
      lp_worst = std::max(lp_worst, std::fabs(lhs - rhs) / (1.0 + lhs));
    }
    // Supports 1..8 and 10..16: one zero index separates them.
    std::vector<double> j(8);
    for (auto& e : j) e = v(rng);
    for (std::size_t i = 9; i < 16; ++i) c[i] = v(rng);
    const auto x = FiniteVector::from_dense(j);
    const auto y = FiniteVector::from_dense(c);
    if (james_norm_pow(x + y, 2.0) < james_norm_pow(x, 2.0) + james_norm_pow(y, 2.0)) ++james_bad;
  }
  return {lp_worst <= 1e-12 && james_bad == 0,
          "l_p relative error " + num(lp_worst) + ", James superadditivity failures " + std::to_string(james_bad) + "/1000"};
}

Outcome prus_block() {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double worst = 0.0;
  std::size_t below = 0;
  for (double p : {1.5, 2.0, 3.0, 4.0}) {
    for (std::size_t n = 1; n <= 8; ++n) {
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> d(n);
        for (auto& e : d) e = u(rng);
        const auto x = FiniteVector::from_dense(d);
        const double dp = prus_block_norm(x, lp_evaluator(p), p);
        const double brute = oracle::block_partition_norm(d, [p](const std::vector<double>& b) { return oracle::dense_lp(b, p); }, p);
        worst = std::max({worst, std::fabs(dp - brute), std::fabs(dp - lp_norm(x, p))});
        if (prus_block_norm(x, sup_evaluator(), p) < sup_evaluator()(x) - 1e-12) ++below;
        if (prus_block_norm(x, lp_evaluator(1.0), p) < lp_norm(x, 1.0) - 1e-12) ++below;
        if (dp < lp_norm(x, p) - 1e-12) ++below;
      }
    }
  }
  return {worst <= 1e-12 && below == 0,
          "max diff vs partitions and l_p " + num(worst) + ", below-base cases " + std::to_string(below)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"james norm matches chain enumeration", james_oracle_sweep},
      {"l2 to linf example", l2_linf_example},
      {"james functional analysis", james_functional},
      {"checker table", checker_table},
      {"free-space duality", free_norm_duality},
      {"orlicz closed forms", orlicz_closed_forms},
      {"N2-phi norm properties", n2phi_suite},
      {"disjoint-support laws", disjoint_support_laws},
      {"block norm", prus_block},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failed;
    std::printf("%s %zu %s: %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}
