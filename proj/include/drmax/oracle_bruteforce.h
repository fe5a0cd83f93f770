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

#ifndef DRMAX_ORACLE_BRUTEFORCE_H_
#define DRMAX_ORACLE_BRUTEFORCE_H_

#include <span>
#include <vector>

#include "drmax/objective.h"
#include "drmax/polymatroid.h"
#include "drmax/solver_packing.h"

namespace drmax {

// Reference implementations by exhaustive search. They share nothing with the
// solvers beyond the instance types and the set-function values, and are
// meant for desk-sized inputs only.

inline constexpr int kMaxEnumerationSize = 20;
inline constexpr int kMaxGridSize = 4;
inline constexpr double kMinGridResolution = 1e-3;

enum class OracleMethod { kSubsetEnumeration, kGrid, kFiniteDifference };

const char* OracleMethodName(OracleMethod method);

struct OracleResult {
  double value = 0.0;
  SolutionVector argmax;
  OracleMethod method = OracleMethod::kSubsetEnumeration;
  // Guaranteed |value - true optimum| bound (grid only; 0 otherwise).
  double accuracy = 0.0;
};

// E[g(R(x))] by summing over all 2^n subsets. n <= 20.
double ExactMultilinear(const Objective& objective, std::span<const double> x);

// Best independent set: max g(S) over S with 1_S in P. For matroid rank
// functions this is also the optimum of the multilinear relaxation over P.
// Ties go to the lexicographically first subset in binary counting order.
OracleResult BruteForceMatroidOpt(const Objective& objective,
                                  const Polymatroid& polymatroid);

// Maximum of the exact objective over the grid {0, h, 2h, ..., 1}^n (plus the
// point 1) restricted to A x <= (1 - eps) 1, for the normalized instance the
// solver sees. n <= 4, h >= 1e-3. The reported accuracy is
// n h max_i max(|grad_i f(0)|, |grad_i f(1)|), valid because DR-submodular
// gradients are antitone.
OracleResult GridFractionalOpt(const Objective& objective,
                               const PackingInstance& instance,
                               double resolution);

// Central differences (f(x + h e_i) - f(x - h e_i)) / 2h. Requires
// h <= x_i <= 1 - h.
std::vector<double> FiniteDiffGrad(const Objective& objective,
                                   std::span<const double> x, double h);

// x(S) <= scale r(S) + tolerance for all 2^n subsets.
bool ExhaustiveMembership(const Polymatroid& polymatroid,
                          std::span<const double> x, double scale,
                          double tolerance = kTightTolerance);

// Union of all S with x(S) = scale r(S) (within kTightTolerance).
Subset ExhaustiveTightSet(const Polymatroid& polymatroid,
                          std::span<const double> x, double scale);

}  // namespace drmax

#endif  // DRMAX_ORACLE_BRUTEFORCE_H_
