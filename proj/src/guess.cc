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

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <utility>

#include "drmax/sparse_matrix.h"

namespace drmax {

void RoundCounter::Record(long queries) { queries_.push_back(queries); }

void RoundCounter::RecordParallel(const std::vector<long>& rounds) {
  const long longest =
      rounds.empty() ? 0 : *std::max_element(rounds.begin(), rounds.end());
  for (long r = 0; r < longest; ++r) {
    long active = 0;
    for (long v : rounds) active += v > r ? 1 : 0;
    queries_.push_back(active);
  }
}

GuessLadder BuildLadder(const Objective& objective, double eps) {
  return BuildLadder(objective, eps,
                     std::vector<double>(objective.dimension(), 1.0));
}

GuessLadder BuildLadder(const Objective& objective, double eps,
                        const std::vector<double>& scale) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("ladder eps must lie in (0, 1)");
  }
  const int n = objective.dimension();
  if (static_cast<int>(scale.size()) != n) {
    throw std::invalid_argument("ladder scale has wrong dimension");
  }
  GuessLadder ladder;
  ladder.eps = eps;
  for (int i = 0; i < n; ++i) {
    std::vector<double> point(n, 0.0);
    point[i] = scale[i];
    ladder.m0 = std::max(ladder.m0, objective.Value(point));
  }
  if (ladder.m0 <= 0.0) return ladder;
  const int top = static_cast<int>(std::ceil(2.0 * std::log(n) / eps));
  double guess = ladder.m0;
  for (int k = 0; k <= top; ++k) {
    ladder.guesses.push_back(guess);
    guess *= 1.0 + eps;
  }
  return ladder;
}

std::vector<double> PackingSingletonScale(const PackingInstance& instance) {
  const std::vector<double> col_max = instance.a.ColumnMax();
  std::vector<double> scale(col_max.size(), 0.0);
  for (size_t i = 0; i < col_max.size(); ++i) {
    if (instance.fixed_zero[i] || col_max[i] <= 0.0) continue;
    scale[i] = std::min(1.0, (1.0 - instance.eps) / col_max[i]);
  }
  return scale;
}

std::vector<double> PolymatroidSingletonScale(const Polymatroid& polymatroid) {
  const int n = polymatroid.size();
  std::vector<double> scale(n);
  for (int i = 0; i < n; ++i) {
    Subset single(n, false);
    single[i] = true;
    scale[i] = std::min(1.0, polymatroid.Rank(single));
  }
  return scale;
}

SolveReport SolveWithGuessing(const GuessLadder& ladder,
                              const GuessRunner& runner,
                              const std::function<SolveReport()>& zero,
                              bool parallel) {
  if (ladder.guesses.empty()) {
    SolveReport report = zero();
    report.adaptive_rounds = 1;
    report.notes.push_back("every singleton value is 0; returning x = 0");
    return report;
  }
  std::vector<SolveReport> runs;
  if (parallel) {
    std::vector<std::future<SolveReport>> futures;
    for (double guess : ladder.guesses) {
      futures.push_back(std::async(std::launch::async, runner, guess));
    }
    for (auto& f : futures) runs.push_back(f.get());
  } else {
    for (double guess : ladder.guesses) runs.push_back(runner(guess));
  }

  int best = -1;
  for (int k = 0; k < static_cast<int>(runs.size()); ++k) {
    const SolveReport& r = runs[k];
    if (best < 0) {
      best = k;
      continue;
    }
    const SolveReport& b = runs[best];
    // Feasible beats infeasible, then larger value; ladder order keeps the
    // smaller guess on ties.
    if ((r.feasible && !b.feasible) ||
        (r.feasible == b.feasible && r.value > b.value)) {
      best = k;
    }
  }

  SolveReport report = runs[best];
  RoundCounter counter;
  counter.Record(static_cast<long>(report.solution.size()));
  std::vector<long> per_guess;
  bool any_converged = false;
  bool any_rejected = false;
  report.guess_trace.clear();
  report.invariants.clear();
  for (const SolveReport& r : runs) {
    per_guess.push_back(r.adaptive_rounds);
    any_converged = any_converged || r.termination == Termination::kConverged;
    any_rejected = any_rejected || r.termination == Termination::kGuessRejected;
    report.guess_trace.push_back({r.guess_used, r.value, r.termination,
                                  r.inner_iterations, r.adaptive_rounds,
                                  r.feasible});
    for (const auto& [name, tally] : r.invariants) {
      report.invariants[name].checked += tally.checked;
      report.invariants[name].violated += tally.violated;
    }
  }
  counter.RecordParallel(per_guess);
  report.adaptive_rounds = counter.rounds();
  report.termination = any_converged  ? Termination::kConverged
                       : any_rejected ? Termination::kGuessRejected
                                      : Termination::kIterationCap;
  return report;
}

SolveReport SolveMatroidWithGuessing(const Objective& objective,
                                     const Polymatroid& polymatroid,
                                     const MatroidSolverConfig& config,
                                     bool monotone, bool parallel) {
  const GuessLadder ladder = BuildLadder(
      objective, config.eps, PolymatroidSingletonScale(polymatroid));
  auto runner = [&](double guess) {
    MatroidSolverConfig c = config;
    c.guess = guess;
    return monotone ? SolveMatroidMonotone(objective, polymatroid, c)
                    : SolveMatroidNonmonotone(objective, polymatroid, c);
  };
  auto zero = [&] {
    SolveReport r;
    r.solution.assign(objective.dimension(), 0.0);
    r.value = objective.Value(r.solution);
    r.feasible = true;
    r.polymatroid_margin = polymatroid.Margin(r.solution);
    r.iteration_budget =
        MatroidIterationBudget(objective.dimension(), config.eps);
    return r;
  };
  return SolveWithGuessing(ladder, runner, zero, parallel);
}

SolveReport SolvePackingWithGuessing(const Objective& objective,
                                     const PackingInstance& instance,
                                     const PackingSolverConfig& config,
                                     bool monotone, bool parallel) {
  const GuessLadder ladder =
      BuildLadder(objective, config.eps, PackingSingletonScale(instance));
  auto runner = [&](double guess) {
    PackingSolverConfig c = config;
    c.guess = guess;
    return monotone ? SolvePackingMonotone(objective, instance, c)
                    : SolvePackingNonmonotone(objective, instance, c);
  };
  auto zero = [&] {
    SolveReport r;
    r.solution.assign(objective.dimension(), 0.0);
    r.value = objective.Value(r.solution);
    r.feasible = true;
    r.max_row_load = 0.0;
    const int n = objective.dimension();
    const int rows = instance.a.rows();
    r.iteration_budget = monotone
                             ? MonotonePackingBudget(n, rows, config.eps)
                             : NonmonotonePackingBudget(n, rows, config.eps);
    return r;
  };
  return SolveWithGuessing(ladder, runner, zero, parallel);
}

}  // namespace drmax
