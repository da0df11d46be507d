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

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

#include "maxprop/catalog.hpp"

namespace maxprop {
namespace {

TEST(Catalog, InstancesAreWellFormed) {
  const auto all = catalog_instances();
  EXPECT_EQ(all.size(), catalog_instance_specs().size());
  std::set<std::string> names;
  for (const auto& d : all) {
    EXPECT_TRUE(names.insert(d.name).second) << d.name;
    EXPECT_EQ(d.rho.role(), ModulusRole::kSmoothness) << d.name;
    EXPECT_EQ(d.delta.role(), ModulusRole::kConvexity) << d.name;
    if (d.delta_star) EXPECT_EQ(d.delta_star->role(), ModulusRole::kWeakStarConvexity) << d.name;
    EXPECT_TRUE(static_cast<bool>(d.norm)) << d.name;
    EXPECT_FALSE(d.description.empty()) << d.name;
    if (d.flags.schur) EXPECT_TRUE(d.flags.dunford_pettis) << d.name;
    if (d.delta_star) EXPECT_TRUE(d.is_dual()) << d.name;
  }
}

TEST(Catalog, ModuliRespectUniversalBounds) {
  for (const auto& d : catalog_instances()) {
    std::vector<const ModulusSpec*> specs = {&d.rho, &d.delta};
    if (d.delta_star) specs.push_back(&*d.delta_star);
    for (const ModulusSpec* m : specs) {
      for (double t : modulus_grid(64)) {
        const auto v = m->evaluate(t);
        EXPECT_LE(v.lower, v.upper + 1e-12) << d.name << " t=" << t;
        if (m->lower().unknown_constant() || m->upper().unknown_constant()) continue;
        EXPECT_GE(v.lower, std::max(0.0, t - 1.0) - 1e-12) << d.name << " t=" << t;
        EXPECT_LE(v.upper, t + 1e-12) << d.name << " t=" << t;
      }
    }
  }
}

TEST(Catalog, WeakStarModulusBelowNormModulusWhenBothExact) {
  for (const auto& d : catalog_instances()) {
    if (!d.delta_star || d.delta.kind() != ModulusSpec::Kind::kExact ||
        d.delta_star->kind() != ModulusSpec::Kind::kExact) {
      continue;
    }
    for (double t : modulus_grid(64)) {
      EXPECT_LE(d.delta_star->value(t), d.delta.value(t) + 1e-12) << d.name;
    }
  }
}

TEST(Catalog, ExpectedModuli) {
  const double t = 0.7;
  EXPECT_NEAR(parse_space("lp:p=3").delta.value(t), power_type_modulus(3.0, t), 1e-15);
  EXPECT_NEAR(parse_space("lp:p=3").rho.value(t), power_type_modulus(3.0, t), 1e-15);
  EXPECT_EQ(parse_space("c0").rho.value(2.0), 1.0);
  EXPECT_EQ(parse_space("ell1_as_c0_dual").delta_star->value(t), t);
  EXPECT_NEAR(parse_space("james:p=2").delta_star->value(t), power_type_modulus(2.0, t), 1e-15);
  EXPECT_TRUE(parse_space("james:p=2").rho_is_renorm_only);
  EXPECT_NEAR(parse_space("p_convexification:p=2,base=lp,q=1.5").rho.value(t), power_type_modulus(3.0, t), 1e-15);
  EXPECT_EQ(parse_space("p_convexification:p=3,base=c0").delta.value(2.5), 1.5);
  EXPECT_NEAR(parse_space("lorentz:p=2,a=0.5").rho.value(t), power_type_modulus(2.0, t), 1e-15);
}

TEST(Catalog, Flags) {
  EXPECT_TRUE(parse_space("lp:p=2").flags.reflexive);
  EXPECT_TRUE(parse_space("ell1_as_c0_dual").flags.schur);
  EXPECT_EQ(*parse_space("ell1_as_c0_dual").flags.is_dual_of, "c0");
  EXPECT_TRUE(parse_space("c0").flags.subspace_of_c0);
  EXPECT_FALSE(parse_space("james:p=2").flags.reflexive);
  EXPECT_TRUE(parse_space("R_oplus_inf_l2").flags.reflexive);
  EXPECT_TRUE(parse_space("reals").flags.finite_dimensional);
  EXPECT_FALSE(parse_space("orlicz:phi=exp").flags.reflexive);
  EXPECT_TRUE(parse_space("orlicz:phi=pow 3").flags.reflexive);
}

TEST(Catalog, CanonicalNames) {
  EXPECT_EQ(canonical_space_name("lp:p=2.0"), "lp:p=2");
  EXPECT_EQ(canonical_space_name("lorentz:p=2"), "lorentz:a=0.5,p=2");
  EXPECT_EQ(canonical_space_name("sum_finite_dim_p:p=3"), "sum_finite_dim_p:d=2,p=3");
  EXPECT_EQ(canonical_space_name("c0"), "c0");
}

TEST(Catalog, RejectsBadSpecs) {
  EXPECT_THROW(parse_space("nope"), std::invalid_argument);
  EXPECT_THROW(parse_space("lp"), std::invalid_argument);
  EXPECT_THROW(parse_space("lp:p=1"), std::invalid_argument);
  EXPECT_THROW(parse_space("lp:p=abc"), std::invalid_argument);
  EXPECT_THROW(parse_space("lp:p=2,q=3"), std::invalid_argument);
  EXPECT_THROW(parse_space("lp:p=2,p=3"), std::invalid_argument);
  EXPECT_THROW(parse_space("lp:p"), std::invalid_argument);
  EXPECT_THROW(parse_space("lorentz:p=2,a=2"), std::invalid_argument);
  EXPECT_THROW(parse_space("orlicz:phi=sin"), std::invalid_argument);
  EXPECT_THROW(parse_space("p_convexification:p=2,base=l7"), std::invalid_argument);
}

TEST(Catalog, NormsOfFamilies) {
  const auto x = FiniteVector::from_dense({3, 4});
  EXPECT_DOUBLE_EQ(parse_space("lp:p=2").norm(x), 5.0);
  EXPECT_DOUBLE_EQ(parse_space("c0").norm(x), 4.0);
  EXPECT_DOUBLE_EQ(parse_space("ell1_as_c0_dual").norm(x), 7.0);
  EXPECT_DOUBLE_EQ(parse_space("R_oplus_inf_l2").norm(FiniteVector::from_dense({2, 3, 4})), 5.0);
  EXPECT_DOUBLE_EQ(parse_space("sum_finite_dim_p:p=2,d=2").norm(x), 5.0);
  // Blocks {1,2}, {3,4} of an l_1-sum of Euclidean planes.
  EXPECT_NEAR(parse_space("sum_finite_dim_p:p=1.5,d=2").norm(FiniteVector::from_dense({3, 4, 0, 2})),
              std::pow(std::pow(5.0, 1.5) + std::pow(2.0, 1.5), 1.0 / 1.5), 1e-12);
  EXPECT_THROW(parse_space("reals").norm(x), std::invalid_argument);
}

TEST(Catalog, JsonRoundTrip) {
  for (const auto& d : catalog_instances()) {
    const auto j = space_to_json(d);
    const auto back = nlohmann::json::parse(j.dump());
    EXPECT_EQ(back["name"], d.name);
    EXPECT_EQ(back["flags"]["reflexive"], d.flags.reflexive);
    EXPECT_TRUE(back.contains("rho"));
  }
}

TEST(Catalog, IntervalNormUsesDyadicSteps) {
  const auto d = parse_space("Lp_interval:p=2");
  EXPECT_NEAR(d.norm(FiniteVector::spike(1, 1.0)), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(d.norm(FiniteVector::from_dense({2.0, 4.0})), std::sqrt(4.0 / 2 + 16.0 / 4), 1e-14);
  // 2^-2000 underflows, its square root does not.
  const double tiny = std::exp2(-1000.0);
  EXPECT_NEAR(d.norm(FiniteVector::spike(2000, 1.0)) / tiny, 1.0, 1e-12);
  EXPECT_NEAR(d.norm(FiniteVector::spike(2000, 3.0) + FiniteVector::spike(2002, 8.0)) / tiny,
              std::sqrt(9.0 + 16.0), 1e-12);
  EXPECT_EQ(d.norm(FiniteVector()), 0.0);
}

}  // namespace
}  // namespace maxprop
