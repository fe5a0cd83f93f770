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

#include "drmax/solver_matroid.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "drmax/sparse_matrix.h"

namespace drmax {
namespace {

// Largest power of base that is <= v (v > 0), corrected for rounding in the
// logarithm.
double PowerBucket(double v, double base) {
  double bucket = std::pow(base, std::floor(std::log(v) / std::log(base)));
  while (bucket > v) bucket /= base;
  while (bucket * base <= v) bucket *= base;
  return bucket;
}

// Point at which the epoch objective g is evaluated: x + z, or the damped
// (1 - z) o x + z.
std::vector<double> Lift(const std::vector<double>& z,
                         const std::vector<double>& x, bool damped) {
  std::vector<double> out(z.size());
  for (size_t i = 0; i < z.size(); ++i) {
    out[i] = damped ? (1.0 - z[i]) * x[i] + z[i] : x[i] + z[i];
  }
  return out;
}

bool IsSubset(const Subset& a, const Subset& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

SolveReport Solve(const Objective& objective, const Polymatroid& pm,
                  const MatroidSolverConfig& config, bool damped) {
  const int n = objective.dimension();
  if (pm.size() != n) {
    throw std::invalid_argument("objective and polymatroid sizes differ");
  }
  if (!(config.eps > 0.0 && config.eps <= kMaxSolverEps)) {
    throw std::invalid_argument("eps must lie in (0, 0.05]");
  }
  if (!(config.guess > 0.0) || !std::isfinite(config.guess)) {
    throw std::invalid_argument("guess M must be finite and positive");
  }
  if (!damped && !objective.monotone()) {
    throw std::invalid_argument(
        "monotone solver called with a non-monotone objective");
  }

  const int epochs = static_cast<int>(std::ceil(1.0 / config.eps - 1e-9));
  const double eps = 1.0 / epochs;
  const double scale = eps / (1.0 + eps);
  const double m = config.guess;
  const double tol = 1e-12 * m;
  const bool exact_values = objective.kind() != ObjectiveKind::kSampled;

  SolveReport report;
  report.guess_used = m;
  report.iteration_budget = MatroidIterationBudget(n, config.eps);
  const long cap = config.max_inner_iterations > 0
                       ? config.max_inner_iterations
                       : static_cast<long>(std::ceil(report.iteration_budget));

  const std::vector<double> singles = objective.SingletonValues();
  const double max_single = *std::max_element(singles.begin(), singles.end());
  const double d_scale =
      config.gradient_scale.value_or(std::max(n / eps, max_single / m));
  if (!(d_scale > 0.0)) throw std::invalid_argument("D must be positive");

  // Starting point; elements of rank 0 stay at zero, and the rest shrink
  // until (1 + eps) x0 fits into eps P.
  std::vector<double> x0(n, eps * eps / (n * d_scale));
  for (int i = 0; i < n; ++i) {
    Subset single(n, false);
    single[i] = true;
    if (pm.Rank(single) <= 0.0) x0[i] = 0.0;
  }
  int shrinks = 0;
  while (!pm.Contains(x0, scale)) {
    if (++shrinks > 200) {
      throw std::logic_error("cannot fit the starting point into eps P");
    }
    for (double& v : x0) v *= 0.5;
  }
  if (shrinks > 0) {
    report.notes.push_back("starting point shrunk by 2^-" +
                           std::to_string(shrinks) + " to fit eps P");
  }

  auto g = [&](const std::vector<double>& z, const std::vector<double>& x) {
    return objective.Value(Lift(z, x, damped));
  };

  std::vector<double> z(n, 0.0);
  std::vector<double> x = x0;
  bool stopped = false;
  for (int j = 0; j < epochs && !stopped; ++j) {
    ++report.epochs;
    x = x0;
    const double g0 = g(z, x);
    const double level =
        damped ? std::pow(1.0 - scale, j) - 10.0 * eps : 1.0 - 10.0 * eps;
    const double target = eps * (level * m - g0);
    double gx = g0;
    double prev_bucket = std::numeric_limits<double>::infinity();
    std::optional<Subset> prev_tight;
    if (config.record_trace) report.trace.push_back(Lift(z, x, damped));

    while (gx - g0 <= target + tol) {
      if (report.inner_iterations >= cap) {
        report.termination = Termination::kIterationCap;
        stopped = true;
        break;
      }
      // Gradient at the future point (1 + eps) x, one batched round.
      std::vector<double> ahead(n);
      for (int i = 0; i < n; ++i) ahead[i] = (1.0 + eps) * x[i];
      const std::vector<double> grad =
          objective.Gradient(Lift(z, ahead, damped));
      std::vector<double> c(n);
      for (int i = 0; i < n; ++i) {
        c[i] = damped ? (1.0 - z[i]) * grad[i] : grad[i];
      }

      const Subset tight = pm.TightSet(x, scale);
      if (prev_tight) {
        report.Check("tight_set_growth", IsSubset(*prev_tight, tight));
      }
      prev_tight = tight;

      bool open = false;
      double v1 = -std::numeric_limits<double>::infinity();
      for (int i = 0; i < n; ++i) {
        if (tight[i]) continue;
        open = true;
        v1 = std::max(v1, c[i]);
      }
      if (!open) {
        report.termination = Termination::kGuessRejected;
        report.notes.push_back("epoch " + std::to_string(j) +
                               ": every coordinate is tight");
        stopped = true;
        break;
      }
      if (v1 <= 0.0) break;  // no useful direction left in this epoch
      const double bucket = PowerBucket(v1, 1.0 + eps);
      report.Check("bucket_nonincreasing",
                   bucket <= prev_bucket * (1.0 + 1e-12));
      prev_bucket = bucket;

      Subset eligible(n, false);
      for (int i = 0; i < n; ++i) eligible[i] = !tight[i] && c[i] >= bucket;
      const std::vector<double> y = Waterfill(pm, x, eligible, eps);
      if (std::all_of(y.begin(), y.end(), [](double v) { return v == 0.0; })) {
        report.termination = Termination::kGuessRejected;
        report.notes.push_back("epoch " + std::to_string(j) +
                               ": water-filling made no progress");
        stopped = true;
        break;
      }
      for (int i = 0; i < n; ++i) x[i] += y[i];
      ++report.inner_iterations;
      report.Check("epoch_step_in_scaled_polytope", pm.Contains(x, scale));
      const double next = g(z, x);
      if (exact_values) report.Check("inner_gain", next >= gx - tol);
      gx = next;
      if (config.record_trace) report.trace.push_back(Lift(z, x, damped));
    }
    z = Lift(z, x, damped);
    if (!stopped && damped) {
      report.Check("damped_sup_norm",
                   MaxNorm(z) <= 1.0 - std::pow(1.0 - scale, j + 1) + 1e-9);
    }
  }

  report.solution = z;
  report.value = objective.Value(z);
  report.feasible = pm.Contains(z, 1.0);
  report.polymatroid_margin = pm.Margin(z);
  report.adaptive_rounds = report.inner_iterations + report.epochs;
  report.Check("solution_in_polytope", report.feasible);
  // The budget is a guarantee for runs that reach their target; a capped run
  // is reported through its termination instead.
  if (report.termination == Termination::kConverged) {
    report.Check("iteration_budget",
                 report.inner_iterations <= report.iteration_budget);
  }
  return report;
}

}  // namespace

double MatroidIterationBudget(int n, double eps) {
  const double l = std::log(n / eps);
  return 64.0 * l * l / (eps * eps * eps);
}

SolveReport SolveMatroidMonotone(const Objective& objective,
                                 const Polymatroid& polymatroid,
                                 const MatroidSolverConfig& config) {
  return Solve(objective, polymatroid, config, /*damped=*/false);
}

SolveReport SolveMatroidNonmonotone(const Objective& objective,
                                    const Polymatroid& polymatroid,
                                    const MatroidSolverConfig& config) {
  return Solve(objective, polymatroid, config, /*damped=*/true);
}

}  // namespace drmax
