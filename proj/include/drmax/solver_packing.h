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

#ifndef DRMAX_SOLVER_PACKING_H_
#define DRMAX_SOLVER_PACKING_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drmax/objective.h"
#include "drmax/solve_report.h"
#include "drmax/sparse_matrix.h"

namespace drmax {

// Packing constraints A x <= 1 prepared for the solvers.
struct PackingInstance {
  SparseMatrix a;
  double eps = 0.05;
  // Rows of the caller's matrix; box rows, when present, follow them.
  int original_rows = 0;
  bool includes_box = false;
  // Columns whose entries exceed n/eps; the solvers keep them at 0.
  std::vector<bool> fixed_zero;
  // One line per modification made while normalizing.
  std::vector<std::string> transcript;

  friend bool operator==(const PackingInstance&,
                         const PackingInstance&) = default;
};

// Brings every non-zero entry into [eps/n, n/eps]: a column with an entry above
// n/eps can carry at most eps/n^2 of mass and is fixed to 0; entries below
// eps/n are raised to eps/n, which only shrinks the feasible region. Throws on
// negative entries, all-zero columns and eps outside (0, 1).
PackingInstance NormalizePacking(const SparseMatrix& a, double eps);

// Appends the identity rows x_i <= 1 (once; idempotent).
PackingInstance AppendBoxRows(PackingInstance instance);

enum class LambdaRule {
  // M - (1 + eta) f(x) for the monotone solver, M (e^-t - 2 eps) - f(x) for
  // the non-monotone one.
  kStandard,
  // lambda = M, as in the multiplicative-weights linear packing method.
  kGuess,
};

struct PackingSolverConfig {
  // Accuracy in (0, 0.05].
  double eps = 0.05;
  // Guess M of the optimum value.
  double guess = 0.0;
  // Overrides of the step parameter, the multiplier rule, the loop threshold
  // on f(x) and the gradient point; only for comparisons with the linear
  // method. Defaults follow the algorithm.
  std::optional<double> eta;
  LambdaRule lambda_rule = LambdaRule::kStandard;
  std::optional<double> stop_threshold;
  bool gradient_ahead = true;
  // Safety cap on iterations; 0 means the iteration budget.
  long max_iterations = 0;
  uint64_t seed = 0;
  bool record_trace = false;
};

// Default step parameters: eps / (2 (2 + ln m)) and eps / (2 ln m).
double MonotonePackingEta(double eps, int rows);
double NonmonotonePackingEta(double eps, int rows);

// 64 ln(n/eps) (2 + ln m) / eps^2 and 64 ln(n/eps) ln(1/eps) ln m / eps^2.
double MonotonePackingBudget(int n, int rows, double eps);
double NonmonotonePackingBudget(int n, int rows, double eps);

// Multiplicative updates driven by the softmax potential, for monotone f.
// Returns x with ||A x||_inf <= 1 - 2 eps; for a valid guess
// f(x) >= (1 - e^(-1 + 10 eps)) M.
SolveReport SolvePackingMonotone(const Objective& objective,
                                 const PackingInstance& instance,
                                 const PackingSolverConfig& config);

// Damped updates x <- x + d o (1 - x) for arbitrary non-negative f; requires
// box rows. For a valid guess f(x) >= e^(-1 - 10 eps) M.
SolveReport SolvePackingNonmonotone(const Objective& objective,
                                    const PackingInstance& instance,
                                    const PackingSolverConfig& config);

}  // namespace drmax

#endif  // DRMAX_SOLVER_PACKING_H_
