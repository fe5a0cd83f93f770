// Copyright 2026 The Authors.
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

#include "drmax/polymatroid.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "drmax/oracle_bruteforce.h"
#include "drmax/selftest.h"

namespace drmax {
namespace {

Subset Set(int n, std::initializer_list<int> members) {
  Subset s(n, false);
  for (int i : members) s[i] = true;
  return s;
}

TEST(PolymatroidTest, UniformRank) {
  const LaminarPolymatroid pm = LaminarPolymatroid::Uniform(4, 2.0);
  EXPECT_DOUBLE_EQ(pm.Rank(Set(4, {})), 0.0);
  EXPECT_DOUBLE_EQ(pm.Rank(Set(4, {1})), 1.0);
  EXPECT_DOUBLE_EQ(pm.Rank(Set(4, {0, 1, 2})), 2.0);
  EXPECT_EQ(pm.kind(), PolymatroidKind::kUniform);
}

TEST(PolymatroidTest, PartitionRankAddsOverParts) {
  const LaminarPolymatroid pm =
      LaminarPolymatroid::Partition(4, {{{0, 1}, 1.0}, {{2, 3}, 2.0}});
  EXPECT_DOUBLE_EQ(pm.Rank(Set(4, {0, 1, 2, 3})), 3.0);
  EXPECT_DOUBLE_EQ(pm.Rank(Set(4, {0, 1})), 1.0);
}

TEST(PolymatroidTest, LaminarRankUsesNestedCaps) {
  const LaminarPolymatroid pm =
      LaminarPolymatroid::Laminar(4, {{{0, 1, 2, 3}, 2.0}, {{0, 1}, 1.0}});
  EXPECT_DOUBLE_EQ(pm.Rank(Set(4, {0, 1})), 1.0);
  EXPECT_DOUBLE_EQ(pm.Rank(Set(4, {0, 2})), 2.0);
  EXPECT_DOUBLE_EQ(pm.Rank(Set(4, {0, 1, 2, 3})), 2.0);
}

TEST(PolymatroidTest, RejectsNonLaminarFamily) {
  EXPECT_THROW(LaminarPolymatroid::Laminar(3, {{{0, 1}, 1.0}, {{1, 2}, 1.0}}),
               std::invalid_argument);
  EXPECT_THROW(LaminarPolymatroid::Partition(3, {{{0, 1}, 1.0}, {{1, 2}, 1.0}}),
               std::invalid_argument);
  EXPECT_THROW(LaminarPolymatroid::Uniform(3, -1.0), std::invalid_argument);
}

TEST(PolymatroidTest, MembershipTightSetAndHeadroom) {
  const LaminarPolymatroid pm = LaminarPolymatroid::Uniform(3, 1.0);
  const std::vector<double> x = {0.5, 0.5, 0.0};
  EXPECT_TRUE(pm.Contains(x, 1.0));
  EXPECT_FALSE(pm.Contains(x, 0.5));
  EXPECT_EQ(pm.TightSet(x, 1.0), Set(3, {0, 1, 2}));
  EXPECT_DOUBLE_EQ(pm.Headroom(x, 1.0, 2), 0.0);
  const std::vector<double> y = {0.25, 0.25, 0.0};
  EXPECT_DOUBLE_EQ(pm.Headroom(y, 1.0, 2), 0.5);
  EXPECT_DOUBLE_EQ(pm.Margin(y), 0.5);
  // Only rank constraints bind a swap; x_0 >= 0 is the caller's concern, so
  // the singleton cap of element 2 decides.
  EXPECT_DOUBLE_EQ(pm.SwapHeadroom(x, 2, 0), 1.0);
}

TEST(PolymatroidTest, SingletonCapIsImplicit) {
  const LaminarPolymatroid pm = LaminarPolymatroid::Uniform(2, 2.0);
  const std::vector<double> x = {1.0, 0.0};
  EXPECT_EQ(pm.TightSet(x, 1.0), Set(2, {0}));
  EXPECT_FALSE(pm.Contains(std::vector<double>{1.5, 0.0}, 1.0));
}

TEST(PolymatroidTest, MinimalTightSet) {
  const LaminarPolymatroid pm =
      LaminarPolymatroid::Laminar(4, {{{0, 1, 2, 3}, 2.0}, {{0, 1}, 1.0}});
  const std::vector<double> x = {0.5, 0.5, 0.2, 0.0};
  EXPECT_EQ(pm.MinimalTightSet(x, 0), Set(4, {0, 1}));
  EXPECT_FALSE(pm.MinimalTightSet(x, 2).has_value());
}

TEST(PolymatroidTest, WaterfillRaisesInOrder) {
  // With eps = 1 the step is capped by x_i and by half the budget.
  const LaminarPolymatroid pm = LaminarPolymatroid::Uniform(2, 1.0);
  const std::vector<double> x = {0.1, 0.1};
  const std::vector<double> y = Waterfill(pm, x, Subset{true, true}, 1.0);
  EXPECT_NEAR(y[0], 0.1, 1e-15);
  EXPECT_NEAR(y[1], 0.1, 1e-15);
  const std::vector<double> z = {0.2, 0.2};
  const std::vector<double> w = Waterfill(pm, z, Subset{true, true}, 1.0);
  // 2 (0.4 + y0 + 0.2 + y1) <= 1: the first coordinate takes all headroom.
  EXPECT_NEAR(w[0], 0.1, 1e-15);
  EXPECT_NEAR(w[1], 0.0, 1e-15);
}

TEST(PolymatroidTest, ExchangeVectorOnUniform) {
  const LaminarPolymatroid pm = LaminarPolymatroid::Uniform(3, 1.0);
  const std::vector<double> a = {0.2, 0.0, 0.0};
  const std::vector<double> b = {0.5, 0.0, 0.0};
  const std::vector<double> c = {0.0, 0.8, 0.0};
  const ExchangeResult ex = ExchangeVector(pm, a, b, c);
  ASSERT_FALSE(ex.overrun);
  EXPECT_NEAR(ex.d[1], 0.5, 1e-12);
  std::vector<double> sum = {0.5, ex.d[1], ex.d[2]};
  EXPECT_TRUE(ExhaustiveMembership(pm, sum, 1.0));
}

TEST(PolymatroidTest, AgreesWithExhaustiveOracles) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 6;
    const LaminarPolymatroid pm =
        trial % 2 ? RandomLaminar(n, rng) : RandomPartition(n, rng);
    std::vector<double> y(n);
    for (double& v : y) v = unif(rng);
    const double alpha = MaxFeasibleScale(pm, y, 1.0);
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = alpha * y[i];
    EXPECT_TRUE(ExhaustiveMembership(pm, x, 1.0));
    EXPECT_EQ(pm.TightSet(x, 1.0), ExhaustiveTightSet(pm, x, 1.0));
  }
}

TEST(PolymatroidTest, RandomPropertySuites) {
  const PropertyResult oracles = CheckPolymatroidOracles(50, 8);
  EXPECT_TRUE(oracles.passed()) << oracles.first_counterexample;
  const PropertyResult exchange = CheckExchangeVectors(200, 9);
  EXPECT_TRUE(exchange.passed()) << exchange.first_counterexample;
}

}  // namespace
}  // namespace drmax
