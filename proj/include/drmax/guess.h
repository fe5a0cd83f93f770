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

#ifndef DRMAX_GUESS_H_
#define DRMAX_GUESS_H_

#include <functional>
#include <vector>

#include "drmax/objective.h"
#include "drmax/polymatroid.h"
#include "drmax/solve_report.h"
#include "drmax/solver_matroid.h"
#include "drmax/solver_packing.h"

namespace drmax {

// Geometric ladder m0 (1 + eps)^k, k = 0..ceil(2 ln n / eps). Some entry M
// satisfies M <= OPT <= (1 + eps) M whenever OPT lies in [m0, n m0].
struct GuessLadder {
  double m0 = 0.0;
  double eps = 0.0;
  std::vector<double> guesses;
};

// Counts synchronized oracle batches. Rounds only ever grow.
class RoundCounter {
 public:
  // Records one batch of `queries` independent oracle calls.
  void Record(long queries);
  // Accounts for independent runs executed side by side: round r of the
  // merged schedule batches round r of every run still active.
  void RecordParallel(const std::vector<long>& rounds);

  long rounds() const { return static_cast<long>(queries_.size()); }
  const std::vector<long>& queries_per_round() const { return queries_; }

 private:
  std::vector<long> queries_;
};

// m0 = max_i f(u_i e_i) over the singleton directions; `scale` defaults to
// all ones (m0 = max_i f(1_i)). eps must lie in (0, 1).
GuessLadder BuildLadder(const Objective& objective, double eps);
GuessLadder BuildLadder(const Objective& objective, double eps,
                        const std::vector<double>& scale);

// Largest feasible multiple of each unit vector, capped at 1:
// min(1, (1 - eps) / max_r A_ri) for packing and min(1, r({i})) for
// polymatroids.
std::vector<double> PackingSingletonScale(const PackingInstance& instance);
std::vector<double> PolymatroidSingletonScale(const Polymatroid& polymatroid);

using GuessRunner = std::function<SolveReport(double guess)>;

// Runs `runner` for every ladder entry and keeps the feasible report with the
// largest value (ties: smaller guess). Rejected runs compete too: their
// partial solutions are feasible. Rounds are 1 (the singleton batch) plus the
// maximum over guesses, since the guesses are independent. `zero` supplies
// the report for an all-zero ladder. With `parallel`, guesses run on
// separate threads; the result does not depend on it.
SolveReport SolveWithGuessing(const GuessLadder& ladder,
                              const GuessRunner& runner,
                              const std::function<SolveReport()>& zero,
                              bool parallel);

SolveReport SolveMatroidWithGuessing(const Objective& objective,
                                     const Polymatroid& polymatroid,
                                     const MatroidSolverConfig& config,
                                     bool monotone, bool parallel);

SolveReport SolvePackingWithGuessing(const Objective& objective,
                                     const PackingInstance& instance,
                                     const PackingSolverConfig& config,
                                     bool monotone, bool parallel);

}  // namespace drmax

#endif  // DRMAX_GUESS_H_
