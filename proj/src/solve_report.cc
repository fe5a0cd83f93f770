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

#include "drmax/solve_report.h"

namespace drmax {

const char* TerminationName(Termination termination) {
  switch (termination) {
    case Termination::kConverged:
      return "converged";
    case Termination::kGuessRejected:
      return "guess_rejected";
    case Termination::kIterationCap:
      return "iteration_cap";
  }
  return "unknown";
}

void SolveReport::Check(const std::string& name, bool holds) {
  InvariantTally& tally = invariants[name];
  ++tally.checked;
  if (!holds) ++tally.violated;
}

long SolveReport::TotalViolations() const {
  long total = 0;
  for (const auto& [name, tally] : invariants) {
    if (name.rfind("soft:", 0) != 0) total += tally.violated;
  }
  return total;
}

}  // namespace drmax
