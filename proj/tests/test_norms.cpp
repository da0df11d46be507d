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

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "maxprop/catalog.hpp"
#include "maxprop/norms.hpp"
#include "oracles.hpp"

namespace maxprop {
namespace {

FiniteVector random_vector(std::mt19937_64& rng, std::size_t max_index, double scale = 3.0) {
  std::uniform_int_distribution<std::size_t> count(1, max_index);
  std::uniform_real_distribution<double> value(-scale, scale);
  std::vector<double> dense(max_index, 0.0);
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) dense[count(rng) - 1] = value(rng);
  return FiniteVector::from_dense(dense);
}

TEST(LpNorm, Examples) {
  EXPECT_DOUBLE_EQ(lp_norm(FiniteVector::from_dense({3, 4}), 2.0), 5.0);
  EXPECT_EQ(lp_norm(FiniteVector(), 7.0), 0.0);
  EXPECT_EQ(sup_norm(FiniteVector::from_dense({1, 1, 1})), 1.0);
  EXPECT_EQ(sup_norm(FiniteVector()), 0.0);
  EXPECT_DOUBLE_EQ(lp_norm(FiniteVector::from_dense({1, -2, 3}), 1.0), 6.0);
  EXPECT_THROW(lp_norm(FiniteVector::spike(1), 0.5), std::invalid_argument);
}

TEST(LpNorm, NoOverflowOnHugeEntries) {
  const auto x = FiniteVector::from_dense({1e200, 1e200});
  EXPECT_NEAR(lp_norm(x, 2.0) / 1e200, std::sqrt(2.0), 1e-14);
}

TEST(JamesNorm, Examples) {
  EXPECT_DOUBLE_EQ(james_norm(FiniteVector::from_dense({1, 0, 0}), 2.0), 1.0);
  EXPECT_NEAR(james_norm(FiniteVector::from_dense({1, 0, -1}), 2.0), std::sqrt(5.0), 1e-15);
  EXPECT_EQ(james_norm(FiniteVector(), 2.0), 0.0);
  EXPECT_THROW(james_norm(FiniteVector::spike(1), 1.0), std::invalid_argument);
}

TEST(JamesNorm, ConstantRunClosedForm) {
  // (t1, t2, ..., t2, 0, ...) with t2 > t1 > 0.
  for (double t1 : {0.1, 0.4}) {
    for (double t2 : {0.5, 2.0}) {
      for (std::size_t n : {2u, 5u, 40u}) {
        std::vector<double> d(n, t2);
        d[0] = t1;
        const double expected = std::sqrt((t2 - t1) * (t2 - t1) + t2 * t2);
        EXPECT_NEAR(james_norm(FiniteVector::from_dense(d), 2.0), expected, 1e-14);
      }
    }
  }
}

TEST(JamesNorm, MatchesChainEnumerationOnRandomVectors) {
  std::mt19937_64 rng(11);
  for (double p : {1.5, 2.0, 3.0}) {
    for (int trial = 0; trial < 300; ++trial) {
      const FiniteVector x = random_vector(rng, 12);
      const double oracle = oracle::james_chain_pow(x.to_dense(x.max_index()), p);
      ASSERT_NEAR(james_norm_pow(x, p), oracle, 1e-12 * (1.0 + oracle));
    }
  }
}

TEST(JamesNorm, SparseIndicesBehaveLikeZeroRuns) {
  // Large gaps collapse to one zero.
  const FiniteVector sparse(std::vector<FiniteVector::Entry>{{3, 1.0}, {1000, -2.0}, {5000, 1.5}});
  const std::vector<double> dense = {0, 1, 0, -2, 0, 1.5};
  EXPECT_NEAR(james_norm_pow(sparse, 2.0), oracle::james_chain_pow(dense, 2.0), 1e-12);
}

TEST(JamesNorm, ExhaustiveSmallIntegerSweep) {
  std::vector<double> d(6);
  oracle::james_sweep(6, -2, 2, [&](const std::vector<int>& x, std::int32_t sum) {
    for (int i = 0; i < 6; ++i) d[i] = x[i];
    ASSERT_NEAR(james_norm(FiniteVector::from_dense(d), 2.0), std::sqrt(double(sum)), 1e-12);
  });
}

TEST(JamesNorm, SuperadditiveOnSeparatedSupports) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> v(-4, 4);
  std::uniform_int_distribution<int> gap(1, 4);
  for (double p : {2.0, 3.0}) {
    for (int trial = 0; trial < 1000; ++trial) {
      // x lives on 1..8 and y starts at least one index after 9.
      const std::size_t start = 9 + gap(rng);
      std::vector<double> a(8), b(start + 8, 0.0);
      for (auto& e : a) e = v(rng);
      for (std::size_t i = start; i < b.size(); ++i) b[i] = v(rng);
      const auto x = FiniteVector::from_dense(a);
      const auto y = FiniteVector::from_dense(b);
      // Integer data keeps every chain sum exact.
      ASSERT_GE(james_norm_pow(x + y, p), james_norm_pow(x, p) + james_norm_pow(y, p));
    }
  }
}

TEST(JamesNorm, AdjacentSupportsCanBreakSuperadditivity) {
  // ||e_1 + e_2||^2 = 1 while ||e_1||^2 + ||e_2||^2 = 1 + 2: the chain
  // (0, 1, 0) for e_2 uses the zero at index 1 that e_1 occupies.
  const auto x = FiniteVector::spike(1, 1.0);
  const auto y = FiniteVector::spike(2, 1.0);
  EXPECT_DOUBLE_EQ(james_norm_pow(x + y, 2.0), 1.0);
  EXPECT_DOUBLE_EQ(james_norm_pow(x, 2.0) + james_norm_pow(y, 2.0), 3.0);
  // One zero in between restores equality.
  const auto z = FiniteVector::spike(3, 1.0);
  EXPECT_DOUBLE_EQ(james_norm_pow(x + z, 2.0), james_norm_pow(x, 2.0) + james_norm_pow(z, 2.0));
}

TEST(LpNorm, PAdditiveOnDisjointSupports) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> v(-5, 5);
  for (double p : {1.0, 2.0, 3.0}) {
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<double> a(10, 0.0), b(10, 0.0);
      for (std::size_t i = 0; i < 10; ++i) ((i + trial) % 3 ? a : b)[i] = v(rng);
      const auto x = FiniteVector::from_dense(a);
      const auto y = FiniteVector::from_dense(b);
      const double lhs = std::pow(lp_norm(x + y, p), p);
      const double rhs = std::pow(lp_norm(x, p), p) + std::pow(lp_norm(y, p), p);
      ASSERT_NEAR(lhs, rhs, 1e-12 * (1.0 + lhs));
    }
  }
}

TEST(LorentzNorm, Examples) {
  const auto ones = LorentzWeights::power(0.0);
  const auto x = FiniteVector::from_dense({3, -1, 2});
  EXPECT_NEAR(lorentz_norm(x, ones, 2.5), lp_norm(x, 2.5), 1e-14);
  EXPECT_DOUBLE_EQ(lorentz_norm(FiniteVector::spike(7, 4.0), LorentzWeights::power(0.5), 2.0), 4.0);
  EXPECT_DOUBLE_EQ(
      lorentz_norm(FiniteVector::from_dense({1, 1}), LorentzWeights::explicit_values({1.0, 0.5}), 1.0), 1.5);
}

TEST(LorentzNorm, EqualsBestPairingOverPermutations) {
  // Rearrangement inequality: the decreasing pairing maximizes sum w_n |x_{s(n)}|^p.
  std::mt19937_64 rng(14);
  const auto w = LorentzWeights::power(0.5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> d(6);
    std::uniform_real_distribution<double> u(-2, 2);
    for (auto& e : d) e = u(rng);
    std::vector<std::size_t> perm = {0, 1, 2, 3, 4, 5};
    double best = 0.0;
    do {
      double s = 0.0;
      for (std::size_t n = 0; n < 6; ++n) s += w(n + 1) * std::pow(std::fabs(d[perm[n]]), 2.0);
      best = std::max(best, s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_NEAR(lorentz_norm(FiniteVector::from_dense(d), w, 2.0), std::sqrt(best), 1e-12);
  }
}

TEST(LorentzWeights, Validation) {
  EXPECT_THROW(LorentzWeights::explicit_values({0.5, 0.25}), std::invalid_argument);
  EXPECT_THROW(LorentzWeights::explicit_values({1.0, 2.0}), std::invalid_argument);
  EXPECT_THROW(LorentzWeights::explicit_values({1.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(LorentzWeights::power(-1.0), std::invalid_argument);
  const auto w = LorentzWeights::explicit_values({1.0, 0.5});
  EXPECT_EQ(w(1), 1.0);
  EXPECT_EQ(w(5), 0.5);
}

TEST(LuxemburgNorm, Examples) {
  EXPECT_NEAR(luxemburg_norm(FiniteVector::from_dense({3, 4}), OrliczFunction::power(2.0)), 5.0, 1e-12);
  EXPECT_EQ(luxemburg_norm(FiniteVector(), OrliczFunction::power(2.0)), 0.0);
  EXPECT_NEAR(luxemburg_norm(FiniteVector::spike(1), OrliczFunction::exp_minus_one()),
              1.0 / std::log(2.0), 1e-12);
}

TEST(LuxemburgNorm, PowerFunctionGivesLp) {
  std::mt19937_64 rng(15);
  for (double p : {1.0, 1.5, 2.0, 4.0}) {
    const auto phi = OrliczFunction::power(p);
    for (int trial = 0; trial < 200; ++trial) {
      const auto x = random_vector(rng, 10);
      const double expected = lp_norm(x, p);
      ASSERT_NEAR(luxemburg_norm(x, phi), expected, 1e-10 * expected);
    }
  }
}

TEST(PconvexNorm, Examples) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_vector(rng, 8);
    EXPECT_NEAR(pconvex_norm(x, lp_evaluator(1.0), 2.0), lp_norm(x, 2.0), 1e-12);
    EXPECT_NEAR(pconvex_norm(x, lp_evaluator(1.5), 2.0), lp_norm(x, 3.0), 1e-12);
  }
  EXPECT_DOUBLE_EQ(pconvex_norm(FiniteVector::spike(3, 2.5), lp_evaluator(2.0), 3.0), 2.5);
}

TEST(PrusBlockNorm, Examples) {
  EXPECT_NEAR(prus_block_norm(FiniteVector::from_dense({1, 1}), sup_evaluator(), 2.0), std::sqrt(2.0), 1e-15);
  const auto x = FiniteVector::from_dense({1, 2, 3});
  EXPECT_NEAR(prus_block_norm(x, sup_evaluator(), 2.0, Blocking({1})), 3.0, 1e-15);
  EXPECT_THROW(prus_block_norm(x, sup_evaluator(), 1.0), std::invalid_argument);
}

TEST(PrusBlockNorm, MatchesPartitionEnumeration) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-2, 2);
  const std::vector<std::pair<std::string, double>> bases = {{"sup", 0.0}, {"l1", 1.0}, {"l2", 2.0}, {"l3", 3.0}};
  for (double p : {1.5, 2.0, 3.0}) {
    for (const auto& [name, q] : bases) {
      const NormEvaluator base = q == 0.0 ? sup_evaluator() : lp_evaluator(q);
      auto block_norm = [q](const std::vector<double>& b) {
        if (q != 0.0) return oracle::dense_lp(b, q);
        double m = 0.0;
        for (double v : b) m = std::max(m, std::fabs(v));
        return m;
      };
      for (std::size_t n = 1; n <= 8; ++n) {
        std::vector<double> d(n);
        for (auto& e : d) e = u(rng);
        const auto x = FiniteVector::from_dense(d);
        const double dp = prus_block_norm(x, base, p);
        ASSERT_NEAR(dp, oracle::block_partition_norm(d, block_norm, p), 1e-12) << name << " " << p;
        ASSERT_GE(dp, base(x) - 1e-12);
      }
    }
  }
}

TEST(PrusBlockNorm, EqualsLpForMatchingBase) {
  std::mt19937_64 rng(18);
  for (double p : {1.5, 2.0, 4.0}) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto x = random_vector(rng, 8);
      EXPECT_NEAR(prus_block_norm(x, lp_evaluator(p), p), lp_norm(x, p), 1e-12);
    }
  }
}

// Every norm reachable through the catalog is a norm.
TEST(CatalogNorms, HomogeneousAndSubadditive) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(-3, 3);
  for (const auto& d : catalog_instances()) {
    const int pairs = d.family == "orlicz" ? 1000 : 10000;
    const std::size_t dim = d.flags.finite_dimensional ? 1 : 6;
    for (int k = 0; k < pairs; ++k) {
      const auto x = random_vector(rng, dim);
      const auto y = random_vector(rng, dim);
      const double nx = d.norm(x);
      const double ny = d.norm(y);
      const double lambda = u(rng);
      const double tol = d.family == "orlicz" ? 1e-10 : 1e-12;
      ASSERT_NEAR(d.norm(lambda * x), std::fabs(lambda) * nx, tol * (1.0 + nx)) << d.name;
      ASSERT_LE(d.norm(x + y), nx + ny + tol * (1.0 + nx + ny)) << d.name;
      ASSERT_GT(nx, 0.0) << d.name;
    }
  }
}

}  // namespace
}  // namespace maxprop
