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

#include "drmax/softmax.h"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "drmax/selftest.h"
#include "drmax/sparse_matrix.h"

namespace drmax {
namespace {

TEST(SoftmaxTest, SandwichesMaxNorm) {
  const SoftmaxParams params{0.1};
  const std::vector<double> z = {0.2, 0.7, 0.4};
  const double s = Smax(z, params);
  EXPECT_GE(s, 0.7);
  EXPECT_LE(s, 0.7 + 0.1 * std::log(3.0));
}

TEST(SoftmaxTest, EqualEntries) {
  const SoftmaxParams params{0.5};
  const std::vector<double> z = {1.0, 1.0};
  EXPECT_DOUBLE_EQ(Smax(z, params), 1.0 + 0.5 * std::log(2.0));
  const std::vector<double> p = SmaxGradient(z, params);
  EXPECT_DOUBLE_EQ(p[0], 0.5);
  EXPECT_DOUBLE_EQ(p[1], 0.5);
}

TEST(SoftmaxTest, StableForLargeInputs) {
  const SoftmaxParams params{1e-3};
  const std::vector<double> z = {1000.0, 999.0};
  EXPECT_TRUE(std::isfinite(Smax(z, params)));
  const std::vector<double> p = SmaxGradient(z, params);
  EXPECT_NEAR(p[0], 1.0, 1e-12);
}

TEST(SoftmaxTest, GradientSumsToOne) {
  const SoftmaxParams params{0.05};
  const std::vector<double> z = {0.1, 0.3, 0.2, 0.25};
  double sum = 0.0;
  for (double v : SmaxGradient(z, params)) sum += v;
  EXPECT_NEAR(sum, 1.0, 1e-15);
}

TEST(SoftmaxTest, RejectsBadInput) {
  const std::vector<double> empty;
  EXPECT_THROW(Smax(empty, {0.1}), std::invalid_argument);
  const std::vector<double> z = {1.0};
  EXPECT_THROW(Smax(z, {0.0}), std::invalid_argument);
}

TEST(SoftmaxTest, IncrementBoundRequiresSmallStep) {
  const SparseMatrix a = SparseMatrix::FromDense({{1.0, 1.0}});
  const std::vector<double> x = {0.1, 0.1};
  const std::vector<double> big = {0.1, 0.0};
  EXPECT_THROW(IncrementBound(x, big, a, {0.1}), std::domain_error);
  const std::vector<double> small = {0.01, 0.02};
  const double bound = IncrementBound(x, small, a, {0.1});
  const std::vector<double> moved = {0.11, 0.12};
  EXPECT_GE(bound + 1e-12, Smax(a.Multiply(moved), {0.1}));
}

TEST(SoftmaxTest, StepScalingZeroWhereGradientVanishes) {
  const SparseMatrix a = SparseMatrix::FromDense({{1.0, 1.0}});
  const std::vector<double> x = {0.1, 0.1};
  const std::vector<double> c = {1.0, 0.0};
  const std::vector<double> m = StepScaling(x, c, 0.5, a, {0.1});
  EXPECT_DOUBLE_EQ(m[0], 0.5);
  EXPECT_DOUBLE_EQ(m[1], 0.0);
}

TEST(SoftmaxTest, RandomBoundsHold) {
  const PropertyResult r = CheckSoftmaxBounds(200, 4);
  EXPECT_TRUE(r.passed()) << r.first_counterexample;
}

}  // namespace
}  // namespace drmax
