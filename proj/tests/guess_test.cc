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

#include "drmax/guess.h"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "drmax/polymatroid.h"
#include "drmax/solver_matroid.h"
#include "drmax/solver_packing.h"

namespace drmax {
namespace {

TEST(GuessTest, LadderExample) {
  const Objective f = Objective::Linear({3.0, 1.0});
  const GuessLadder ladder = BuildLadder(f, 0.5);
  EXPECT_DOUBLE_EQ(ladder.m0, 3.0);
  EXPECT_EQ(ladder.guesses, (std::vector<double>{3.0, 4.5, 6.75, 10.125}));
}

TEST(GuessTest, LadderCoversOptimumRange) {
  const Objective f = Objective::Linear({1.0, 1.0, 1.0, 1.0, 1.0});
  const GuessLadder ladder = BuildLadder(f, 0.05);
  EXPECT_GE(ladder.guesses.back(), 5.0 * ladder.m0 / 1.05);
  for (size_t k = 1; k < ladder.guesses.size(); ++k) {
    EXPECT_NEAR(ladder.guesses[k] / ladder.guesses[k - 1], 1.05, 1e-12);
  }
}

TEST(GuessTest, LadderEdgeCases) {
  const Objective zero = Objective::Linear({0.0, 0.0});
  EXPECT_TRUE(BuildLadder(zero, 0.05).guesses.empty());
  EXPECT_THROW(BuildLadder(zero, 1.0), std::invalid_argument);
  const Objective f = Objective::Linear({2.0, 4.0});
  EXPECT_DOUBLE_EQ(BuildLadder(f, 0.05, {1.0, 0.25}).m0, 2.0);
}

TEST(GuessTest, SingletonScales) {
  const PackingInstance p =
      NormalizePacking(SparseMatrix::FromDense({{0.5, 2.0}}), 0.05);
  EXPECT_EQ(PackingSingletonScale(p), (std::vector<double>{1.0, 0.475}));
  const LaminarPolymatroid pm = LaminarPolymatroid::Uniform(2, 0.5);
  EXPECT_EQ(PolymatroidSingletonScale(pm), (std::vector<double>{0.5, 0.5}));
}

TEST(GuessTest, RoundCounter) {
  RoundCounter counter;
  counter.Record(4);
  counter.RecordParallel({3, 1, 2});
  EXPECT_EQ(counter.rounds(), 4);
  EXPECT_EQ(counter.queries_per_round(), (std::vector<long>{4, 3, 2, 1}));
}

TEST(GuessTest, PicksBestFeasibleRun) {
  GuessLadder ladder;
  ladder.m0 = 1.0;
  ladder.eps = 0.5;
  ladder.guesses = {1.0, 1.5, 2.25};
  const GuessRunner runner = [](double guess) {
    SolveReport r;
    r.guess_used = guess;
    r.value = guess == 2.25 ? 9.0 : guess;
    r.feasible = guess != 2.25;
    r.inner_iterations = static_cast<long>(guess * 10);
    r.adaptive_rounds = r.inner_iterations;
    r.termination =
        guess == 1.0 ? Termination::kConverged : Termination::kGuessRejected;
    return r;
  };
  const auto zero = [] { return SolveReport{}; };
  const SolveReport serial = SolveWithGuessing(ladder, runner, zero, false);
  EXPECT_DOUBLE_EQ(serial.guess_used, 1.5);
  EXPECT_EQ(serial.termination, Termination::kConverged);
  EXPECT_EQ(serial.adaptive_rounds, 1 + 22);
  EXPECT_EQ(serial.guess_trace.size(), 3u);
  const SolveReport parallel = SolveWithGuessing(ladder, runner, zero, true);
  EXPECT_EQ(parallel.guess_used, serial.guess_used);
  EXPECT_EQ(parallel.guess_trace, serial.guess_trace);
}

TEST(GuessTest, PackingLadderFindsValidGuess) {
  const Objective f = Objective::Linear({1.0, 1.0});
  const PackingInstance p =
      NormalizePacking(SparseMatrix::FromDense({{1.0, 1.0}}), 0.05);
  PackingSolverConfig config;
  const SolveReport r = SolvePackingWithGuessing(f, p, config, true, false);
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.termination, Termination::kConverged);
  bool bracketed = false;
  for (const GuessTrial& t : r.guess_trace) {
    if (t.guess <= 0.95 && 0.95 <= 1.05 * t.guess) {
      bracketed = true;
      EXPECT_EQ(t.termination, Termination::kConverged);
    }
  }
  EXPECT_TRUE(bracketed);
}

TEST(GuessTest, MatroidLadder) {
  const Objective f =
      Objective::Coverage(4, {1.0, 1.0, 1.0, 1.0}, {{0}, {1}, {2}, {3}});
  const LaminarPolymatroid pm = LaminarPolymatroid::Uniform(4, 2.0);
  MatroidSolverConfig config;
  const SolveReport r = SolveMatroidWithGuessing(f, pm, config, true, true);
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.TotalViolations(), 0);
  EXPECT_GT(r.value, 0.5);
}

}  // namespace
}  // namespace drmax
