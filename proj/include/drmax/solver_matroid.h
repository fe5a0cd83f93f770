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

#ifndef DRMAX_SOLVER_MATROID_H_
#define DRMAX_SOLVER_MATROID_H_

#include <cstdint>
#include <optional>

#include "drmax/objective.h"
#include "drmax/polymatroid.h"
#include "drmax/solve_report.h"

namespace drmax {

inline constexpr double kMaxSolverEps = 0.05;

struct MatroidSolverConfig {
  // Accuracy in (0, 0.05]. The solver runs ceil(1/eps) epochs and uses
  // 1/ceil(1/eps) as its working accuracy.
  double eps = 0.05;
  // Guess M of the optimum value, M <= f(x*) <= (1 + eps) M when valid.
  double guess = 0.0;
  // Gradient scale D; defaults to max(n/eps, max_i f(1_i)/M).
  std::optional<double> gradient_scale;
  // Safety cap on inner iterations; 0 means the iteration budget.
  long max_inner_iterations = 0;
  uint64_t seed = 0;
  bool record_trace = false;
};

// 64 ln^2(n/eps) / eps^3.
double MatroidIterationBudget(int n, double eps);

// Continuous greedy with tight-set bucketing for monotone f over P. Returns a
// point of P; for a valid guess f(z) >= (1 - 1/e - O(eps)) M.
SolveReport SolveMatroidMonotone(const Objective& objective,
                                 const Polymatroid& polymatroid,
                                 const MatroidSolverConfig& config);

// Measured-damping variant for arbitrary non-negative DR-submodular f. For a
// valid guess f(z) >= (1/e - O(eps)) M.
SolveReport SolveMatroidNonmonotone(const Objective& objective,
                                    const Polymatroid& polymatroid,
                                    const MatroidSolverConfig& config);

}  // namespace drmax

#endif  // DRMAX_SOLVER_MATROID_H_
