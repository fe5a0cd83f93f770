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

#include "drmax/solver_packing.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "drmax/softmax.h"

namespace drmax {
namespace {

// Slack for comparisons of exact objective values.
constexpr double kValueSlack = 1e-9;

std::string FormatDouble(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

void Validate(const Objective& objective, const PackingInstance& instance,
              const PackingSolverConfig& config) {
  const int n = objective.dimension();
  if (instance.a.cols() != n) {
    throw std::invalid_argument("objective and constraint matrix sizes differ");
  }
  if (static_cast<int>(instance.fixed_zero.size()) != n) {
    throw std::invalid_argument("packing instance is not normalized");
  }
  if (instance.a.rows() < 1) {
    throw std::invalid_argument("packing instance needs at least one row");
  }
  if (!(config.eps > 0.0 && config.eps <= 0.05)) {
    throw std::invalid_argument("eps must lie in (0, 0.05]");
  }
  if (!(config.guess > 0.0) || !std::isfinite(config.guess)) {
    throw std::invalid_argument("guess M must be finite and positive");
  }
  if (config.eta && !(*config.eta > 0.0)) {
    throw std::invalid_argument("eta override must be positive");
  }
  if (const SampledPayload* sampled = objective.sampled()) {
    // Keeps the standard error of f(x) well below eps M / 10.
    const double needed = n * 100.0 / (config.eps * config.eps);
    if (sampled->samples < needed) {
      throw std::invalid_argument(
          "sampled objective needs at least n * 100 / eps^2 = " +
          FormatDouble(std::ceil(needed)) + " samples for packing");
    }
  }
}

std::vector<double> StartingPoint(const PackingInstance& instance, double eps) {
  const int n = instance.a.cols();
  const std::vector<double> col_max = instance.a.ColumnMax();
  std::vector<double> x(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (!instance.fixed_zero[i]) x[i] = eps / (n * col_max[i]);
  }
  return x;
}

long IterationCap(const PackingSolverConfig& config, double budget) {
  return config.max_iterations > 0 ? config.max_iterations
                                   : static_cast<long>(std::ceil(budget));
}

// Step scaling m_i = max(1 - lambda w_i / c_i, 0), zero for fixed columns and
// for gradients that are numerically zero relative to M.
std::vector<double> Scaling(const std::vector<double>& c,
                            const std::vector<double>& w, double lambda,
                            double guess, const std::vector<bool>& fixed) {
  std::vector<double> m(c.size(), 0.0);
  for (size_t i = 0; i < c.size(); ++i) {
    if (fixed[i] || c[i] <= 1e-15 * guess) continue;
    m[i] = std::max(1.0 - lambda * w[i] / c[i], 0.0);
  }
  return m;
}

void Finish(const Objective& objective, const PackingInstance& instance,
            std::vector<double> x, SolveReport& report) {
  for (double& v : x) v = std::min(v, 1.0);
  const double load = MaxNorm(instance.a.Multiply(x));
  report.solution = std::move(x);
  report.value = objective.Value(report.solution);
  report.max_row_load = load;
  report.feasible = load <= 1.0 - 2.0 * instance.eps + 1e-12;
  report.adaptive_rounds = report.inner_iterations + 1;
  // The budget is a guarantee for runs that reach their target; a capped run
  // is reported through its termination instead.
  if (report.termination == Termination::kConverged) {
    report.Check("iteration_budget",
                 report.inner_iterations <= report.iteration_budget);
  }
}

void CheckCoordinateBudget(const std::vector<double>& x,
                           const std::vector<double>& scaling_sum, int n,
                           double eps, double eta, SolveReport& report) {
  const double limit = 16.0 * std::log(n / eps) / eta;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= n / eps) {
      report.Check("coordinate_update_budget", scaling_sum[i] <= limit);
    }
  }
}

}  // namespace

PackingInstance NormalizePacking(const SparseMatrix& a, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("eps must lie in (0, 1)");
  }
  const int n = a.cols();
  if (n < 1) throw std::invalid_argument("packing matrix needs columns");
  const double low = eps / n;
  const double high = n / eps;
  PackingInstance out;
  out.eps = eps;
  out.original_rows = a.rows();
  out.fixed_zero.assign(n, false);
  const std::vector<double> col_max = a.ColumnMax();
  for (int j = 0; j < n; ++j) {
    if (col_max[j] == 0.0) {
      throw std::invalid_argument("column " + std::to_string(j) +
                                  " is all zero; coordinate is unbounded");
    }
    if (col_max[j] > high) {
      out.fixed_zero[j] = true;
      out.transcript.push_back("column " + std::to_string(j) +
                               " fixed to 0: entry " +
                               FormatDouble(col_max[j]) + " > n/eps");
    }
  }
  std::vector<Triplet> triplets = a.ToTriplets();
  for (Triplet& t : triplets) {
    if (t.value < low && !out.fixed_zero[t.col]) {
      out.transcript.push_back("entry (" + std::to_string(t.row) + ", " +
                               std::to_string(t.col) + ") raised from " +
                               FormatDouble(t.value) + " to eps/n");
      t.value = low;
    }
  }
  out.a = SparseMatrix(a.rows(), n, std::move(triplets));
  return out;
}

PackingInstance AppendBoxRows(PackingInstance instance) {
  if (instance.includes_box) return instance;
  const int n = instance.a.cols();
  std::vector<Triplet> identity;
  for (int i = 0; i < n; ++i) identity.push_back({i, i, 1.0});
  instance.a = instance.a.StackBelow(SparseMatrix(n, n, std::move(identity)));
  instance.includes_box = true;
  return instance;
}

double MonotonePackingEta(double eps, int rows) {
  return eps / (2.0 * (2.0 + std::log(rows)));
}

double NonmonotonePackingEta(double eps, int rows) {
  if (rows < 2) throw std::invalid_argument("need at least two rows");
  return eps / (2.0 * std::log(rows));
}

double MonotonePackingBudget(int n, int rows, double eps) {
  return 64.0 * std::log(n / eps) * (2.0 + std::log(rows)) / (eps * eps);
}

double NonmonotonePackingBudget(int n, int rows, double eps) {
  return 64.0 * std::log(n / eps) * std::log(1.0 / eps) * std::log(rows) /
         (eps * eps);
}

SolveReport SolvePackingMonotone(const Objective& objective,
                                 const PackingInstance& instance,
                                 const PackingSolverConfig& config) {
  Validate(objective, instance, config);
  if (!objective.monotone()) {
    throw std::invalid_argument(
        "monotone solver called with a non-monotone objective");
  }
  const int n = objective.dimension();
  const int rows = instance.a.rows();
  const double eps = config.eps;
  const double m = config.guess;
  const double eta = config.eta.value_or(MonotonePackingEta(eps, rows));
  const SoftmaxParams params{eta};
  const double threshold =
      config.stop_threshold.value_or((1.0 - std::exp(-1.0 + 10.0 * eps)) * m);
  const double lambda_floor = m * (std::exp(10.0 * eps - 1.0) - eta);
  const bool standard = !config.eta && !config.stop_threshold &&
                        config.lambda_rule == LambdaRule::kStandard &&
                        config.gradient_ahead;
  const bool exact_values = objective.kind() != ObjectiveKind::kSampled;

  SolveReport report;
  report.guess_used = m;
  report.iteration_budget = MonotonePackingBudget(n, rows, eps);
  const long cap = IterationCap(config, report.iteration_budget);

  std::vector<double> x = StartingPoint(instance, eps);
  std::vector<double> scaling_sum(n, 0.0);
  double fx = objective.Value(x);
  long clamp_iteration = -1;
  bool smax_pending = false;
  if (config.record_trace) report.trace.push_back(x);

  while (fx <= threshold) {
    if (report.inner_iterations >= cap) {
      report.termination = Termination::kIterationCap;
      break;
    }
    const std::vector<double> ax = instance.a.Multiply(x);
    const double smax = Smax(ax, params);
    // Only the last iteration may leave smax above 1 - eps.
    if (smax_pending && standard) report.Check("smax_below_1_minus_eps", false);
    smax_pending = false;

    double lambda = m;
    if (config.lambda_rule == LambdaRule::kStandard) {
      lambda = m - (1.0 + eta) * fx;
      if (lambda < lambda_floor) {
        lambda = lambda_floor;
        clamp_iteration = report.inner_iterations;
      }
    }
    std::vector<double> point = x;
    if (config.gradient_ahead) {
      for (double& v : point) v *= 1.0 + eta;
    }
    const std::vector<double> c = objective.Gradient(point);
    const std::vector<double> w =
        instance.a.TransposeMultiply(SmaxGradient(ax, params));
    const std::vector<double> scaling =
        Scaling(c, w, lambda, m, instance.fixed_zero);
    std::vector<double> d(n);
    bool moved = false;
    for (int i = 0; i < n; ++i) {
      d[i] = eta * x[i] * scaling[i];
      moved = moved || d[i] != 0.0;
    }
    if (!moved) {
      report.termination = Termination::kGuessRejected;
      report.notes.push_back("update vanished at iteration " +
                             std::to_string(report.inner_iterations));
      break;
    }
    for (int i = 0; i < n; ++i) {
      x[i] += d[i];
      scaling_sum[i] += scaling[i];
    }
    ++report.inner_iterations;
    const double next = objective.Value(x);
    const double next_smax = Smax(instance.a.Multiply(x), params);
    if (standard && exact_values && clamp_iteration < 0 && next_smax > smax) {
      report.Check("gain_rate",
                   next - fx >= lambda * (next_smax - smax) - kValueSlack * m);
    }
    if (next_smax > 1.0 - eps) smax_pending = true;
    fx = next;
    if (config.record_trace) report.trace.push_back(x);
  }

  if (clamp_iteration >= 0) {
    const bool last = clamp_iteration + 1 == report.inner_iterations;
    report.notes.push_back("lambda clamped at its floor in iteration " +
                           std::to_string(clamp_iteration));
    report.Check("lambda_clamp_only_at_exit", last);
  }
  if (standard && report.termination == Termination::kConverged) {
    const std::vector<double> ax = instance.a.Multiply(x);
    const double smax = Smax(ax, params);
    report.Check("exit_feasibility",
                 MaxNorm(ax) <= smax && smax <= 1.0 - 2.0 * eps + 1e-12);
  }
  CheckCoordinateBudget(x, scaling_sum, n, eps, eta, report);
  Finish(objective, instance, std::move(x), report);
  return report;
}

SolveReport SolvePackingNonmonotone(const Objective& objective,
                                    const PackingInstance& instance,
                                    const PackingSolverConfig& config) {
  Validate(objective, instance, config);
  if (!instance.includes_box) {
    throw std::invalid_argument("non-monotone packing needs box rows");
  }
  const int n = objective.dimension();
  const int rows = instance.a.rows();
  if (rows < 2) {
    throw std::invalid_argument("non-monotone packing needs at least 2 rows");
  }
  const double eps = config.eps;
  const double m = config.guess;
  const double eta = config.eta.value_or(NonmonotonePackingEta(eps, rows));
  const SoftmaxParams params{eta};
  const double threshold =
      config.stop_threshold.value_or(std::exp(-1.0 - 10.0 * eps) * m);
  const bool standard = !config.eta && !config.stop_threshold &&
                        config.lambda_rule == LambdaRule::kStandard &&
                        config.gradient_ahead;
  const bool exact_values = objective.kind() != ObjectiveKind::kSampled;

  SolveReport report;
  report.guess_used = m;
  report.iteration_budget = NonmonotonePackingBudget(n, rows, eps);
  const long cap = IterationCap(config, report.iteration_budget);

  std::vector<double> x = StartingPoint(instance, eps);
  std::vector<double> z = x;
  std::vector<double> scaling_sum(n, 0.0);
  double t = Smax(instance.a.Multiply(z), params);
  double fx = objective.Value(x);
  if (config.record_trace) report.trace.push_back(x);

  while (fx <= threshold) {
    if (report.inner_iterations >= cap) {
      report.termination = Termination::kIterationCap;
      break;
    }
    double lambda = m;
    if (config.lambda_rule == LambdaRule::kStandard) {
      lambda = m * (std::exp(-t) - 2.0 * eps) - fx;
      if (lambda <= 0.0) {
        report.termination = Termination::kGuessRejected;
        report.notes.push_back("multiplier non-positive at iteration " +
                               std::to_string(report.inner_iterations));
        break;
      }
    }
    std::vector<double> point = x;
    if (config.gradient_ahead) {
      for (double& v : point) v *= 1.0 + eta;
    }
    const std::vector<double> grad = objective.Gradient(point);
    std::vector<double> c(n);
    for (int i = 0; i < n; ++i) c[i] = std::max((1.0 - x[i]) * grad[i], 0.0);
    const std::vector<double> w = instance.a.TransposeMultiply(
        SmaxGradient(instance.a.Multiply(z), params));
    const std::vector<double> scaling =
        Scaling(c, w, lambda, m, instance.fixed_zero);
    std::vector<double> d(n);
    bool moved = false;
    for (int i = 0; i < n; ++i) {
      d[i] = eta * x[i] * scaling[i];
      moved = moved || d[i] != 0.0;
    }
    if (!moved) {
      report.termination = Termination::kGuessRejected;
      report.notes.push_back("update vanished at iteration " +
                             std::to_string(report.inner_iterations));
      break;
    }
    for (int i = 0; i < n; ++i) {
      x[i] += d[i] * (1.0 - x[i]);
      z[i] += d[i];
      scaling_sum[i] += scaling[i];
    }
    ++report.inner_iterations;
    const double next_t = Smax(instance.a.Multiply(z), params);
    const double next = objective.Value(x);
    report.Check("damped_sup_norm",
                 MaxNorm(x) <= (1.0 + eps) * (1.0 - std::exp(-next_t)) + 1e-12);
    if (standard && exact_values) {
      if (next_t > t) {
        report.Check("gain_rate",
                     next - fx >= lambda * (next_t - t) - kValueSlack * m);
      }
      // Holds when M does not exceed the optimum, so it is only advisory.
      report.Check("soft:phase_gain",
                   std::exp(next_t) * next >=
                       (1.0 - 2.0 * std::exp(1.0) * eps) * (next_t - t) * m +
                           std::exp(t) * fx - kValueSlack * m);
    }
    t = next_t;
    fx = next;
    if (config.record_trace) report.trace.push_back(x);
  }

  if (standard && report.termination == Termination::kConverged) {
    report.Check("exit_feasibility", MaxNorm(instance.a.Multiply(x)) <= t &&
                                         t <= 1.0 - 2.0 * eps + 1e-12);
  }
  CheckCoordinateBudget(x, scaling_sum, n, eps, eta, report);
  Finish(objective, instance, std::move(x), report);
  return report;
}

}  // namespace drmax
