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

#ifndef DRMAX_SOLVE_REPORT_H_
#define DRMAX_SOLVE_REPORT_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "drmax/objective.h"

namespace drmax {

enum class Termination { kConverged, kGuessRejected, kIterationCap };

const char* TerminationName(Termination termination);

// Count of checks of a named run-time invariant and how many failed.
struct InvariantTally {
  long checked = 0;
  long violated = 0;

  friend bool operator==(const InvariantTally&,
                         const InvariantTally&) = default;
};

// One solver run inside a guess ladder.
struct GuessTrial {
  double guess = 0.0;
  double value = 0.0;
  Termination termination = Termination::kConverged;
  long iterations = 0;
  long adaptive_rounds = 0;
  bool feasible = false;

  friend bool operator==(const GuessTrial&, const GuessTrial&) = default;
};

struct SolveReport {
  SolutionVector solution;
  double value = 0.0;
  long epochs = 0;
  // Inner iterations (matroid) or main-loop iterations (packing).
  long inner_iterations = 0;
  long adaptive_rounds = 0;
  bool feasible = false;
  double guess_used = 0.0;
  Termination termination = Termination::kConverged;
  // Exactly one of these is set: ||A x||_inf for packing (over every row the
  // solver saw, box rows included), min_S r(S) - x(S) for polymatroids.
  std::optional<double> max_row_load;
  std::optional<double> polymatroid_margin;
  // Iteration budget the run was measured against.
  double iteration_budget = 0.0;
  std::vector<GuessTrial> guess_trace;
  std::map<std::string, InvariantTally> invariants;
  // Free-form remarks (clamps, degenerate inputs). Deterministic.
  std::vector<std::string> notes;
  // Iterates after every iteration, starting with the initial point; only
  // filled when the solver was asked to record a trace.
  std::vector<SolutionVector> trace;

  // Records one evaluation of invariant `name`.
  // Invariants named "soft:..." are advisory and not counted as violations.
  void Check(const std::string& name, bool holds);
  long TotalViolations() const;
};

}  // namespace drmax

#endif  // DRMAX_SOLVE_REPORT_H_
