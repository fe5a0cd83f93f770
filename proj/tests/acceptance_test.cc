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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails. All tolerances are pinned below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "drmax/guess.h"
#include "drmax/objective.h"
#include "drmax/oracle_bruteforce.h"
#include "drmax/polymatroid.h"
#include "drmax/selftest.h"
#include "drmax/softmax.h"
#include "drmax/solver_matroid.h"
#include "drmax/solver_packing.h"

namespace drmax {
namespace {

constexpr double kEps = 0.05;
constexpr int kInstances = 50;
// Absolute slack on value comparisons and on the row-load bound.
constexpr double kValueSlack = 1e-9;
constexpr double kLoadSlack = 1e-12;
constexpr double kMatroidSeconds = 60.0;
constexpr double kPackingSeconds = 120.0;
constexpr int kSoftmaxDraws = 1000;
constexpr int kExchangeDraws = 1000;
constexpr int kGradientDraws = 100;
constexpr int kSampledInstances = 20;
constexpr int kSampledSamples = 100000;
constexpr int kReferenceInstances = 10;
constexpr long kReferenceCap = 20000;
constexpr double kRejectionFactor = 100.0;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void Report(int criterion, bool pass, const std::string& detail) {
  std::printf("criterion %2d %s: %s\n", criterion, pass ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string Format(const char* fmt, double a, double b = 0, double c = 0,
                   double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), fmt, a, b, c, d);
  return buf;
}

// Largest ladder entry not above `opt`: the valid guess M <= OPT.
double ValidGuess(const GuessLadder& ladder, double opt) {
  double best = 0.0;
  for (double g : ladder.guesses) {
    if (g <= opt * (1.0 + 1e-12)) best = std::max(best, g);
  }
  return best;
}

double GridResolution(int n) {
  if (n <= 2) return 1e-3;
  return n == 3 ? 0.01 : 0.03;
}

struct BudgetTally {
  long runs = 0;
  long over = 0;
  std::string worst;
  double worst_ratio = 0.0;

  void Add(const char* what, long iterations, double budget) {
    ++runs;
    const double ratio = iterations / budget;
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      worst = what;
    }
    if (iterations > budget) ++over;
  }
};

BudgetTally budgets;

// Criteria 1 and 2: one solver run at the valid ladder guess per instance.
void MatroidCriterion(int criterion, bool monotone, uint64_t seed) {
  const auto start = Clock::now();
  std::mt19937_64 rng(seed);
  const double rho = monotone ? 1.0 - std::exp(-1.0) - 15.0 * kEps
                              : std::exp(-1.0) - 15.0 * kEps;
  int done = 0, infeasible = 0, short_runs = 0;
  long violations = 0;
  double min_ratio = std::numeric_limits<double>::infinity();
  while (done < kInstances) {
    const int n = std::uniform_int_distribution<int>(4, 10)(rng);
    const Objective f =
        monotone
            ? RandomCoverage(
                  n, std::uniform_int_distribution<int>(n, 2 * n)(rng), rng)
            : RandomDirectedCut(n, rng);
    const LaminarPolymatroid pm =
        done % 2 ? RandomUniform(n, rng) : RandomPartition(n, rng);
    const double opt = BruteForceMatroidOpt(f, pm).value;
    if (!(opt > 0.0)) continue;
    ++done;
    MatroidSolverConfig config;
    config.eps = kEps;
    config.seed = seed + done;
    config.guess =
        ValidGuess(BuildLadder(f, kEps, PolymatroidSingletonScale(pm)), opt);
    const SolveReport r = monotone ? SolveMatroidMonotone(f, pm, config)
                                   : SolveMatroidNonmonotone(f, pm, config);
    const bool in_p = ExhaustiveMembership(pm, r.solution, 1.0);
    if (!r.feasible || !in_p) ++infeasible;
    if (r.value < rho * opt - kValueSlack) ++short_runs;
    violations += r.TotalViolations();
    min_ratio = std::min(min_ratio, r.value / opt);
    budgets.Add(monotone ? "matroid monotone" : "matroid non-monotone",
                r.inner_iterations, MatroidIterationBudget(n, kEps));
  }
  const double elapsed = Seconds(start);
  Report(criterion,
         infeasible == 0 && short_runs == 0 && violations == 0 &&
             elapsed < kMatroidSeconds,
         std::to_string(kInstances) + " instances, infeasible " +
             std::to_string(infeasible) + ", below bound " +
             std::to_string(short_runs) + ", invariant violations " +
             std::to_string(violations) +
             Format(", bound %.4f*OPT, min f(z)/OPT %.4f, %.1f s", rho,
                    min_ratio, elapsed));
}

struct PackingCase {
  Objective objective;
  PackingInstance instance;
  double opt;
};

std::vector<PackingCase> PackingCases(bool monotone, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PackingCase> cases;
  while (static_cast<int>(cases.size()) < kInstances) {
    const int n = std::uniform_int_distribution<int>(2, 4)(rng);
    const int m = std::uniform_int_distribution<int>(1, 3)(rng);
    Objective f =
        monotone
            ? (cases.size() % 2
                   ? RandomLinear(n, rng)
                   : RandomCoverage(
                         n, std::uniform_int_distribution<int>(1, 4)(rng), rng))
            : RandomDirectedCut(n, rng);
    PackingInstance instance =
        NormalizePacking(RandomPacking(m, n, 0.2, 2.0, rng), kEps);
    if (!monotone) instance = AppendBoxRows(std::move(instance));
    const double opt = GridFractionalOpt(f, instance, GridResolution(n)).value;
    if (!(opt > 0.0)) continue;
    cases.push_back({std::move(f), std::move(instance), opt});
  }
  return cases;
}

// Criteria 3, 4 and the ladder half of 10.
void PackingCriterion(int criterion, bool monotone,
                      const std::vector<PackingCase>& cases,
                      double setup_seconds, int* ladder_misses) {
  const auto start = Clock::now();
  const double rho_m = monotone ? 1.0 - std::exp(-1.0 + 10.0 * kEps)
                                : std::exp(-1.0 - 10.0 * kEps);
  const double rho_opt = monotone ? 1.0 - std::exp(-1.0) - 15.0 * kEps
                                  : std::exp(-1.0) - 15.0 * kEps;
  int infeasible = 0, below_m = 0, below_opt = 0;
  long violations = 0, damped_checked = 0, damped_violated = 0;
  double min_m_ratio = std::numeric_limits<double>::infinity();
  double min_opt_ratio = std::numeric_limits<double>::infinity();
  double max_load = 0.0;
  for (const PackingCase& c : cases) {
    PackingSolverConfig config;
    config.eps = kEps;
    const SolveReport r = SolvePackingWithGuessing(
        c.objective, c.instance, config, monotone, /*parallel=*/true);
    const double load =
        r.max_row_load.value_or(std::numeric_limits<double>::infinity());
    max_load = std::max(max_load, load);
    if (!r.feasible || load > 1.0 - 2.0 * kEps + kLoadSlack) ++infeasible;
    const GuessLadder ladder =
        BuildLadder(c.objective, kEps, PackingSingletonScale(c.instance));
    const double m = ValidGuess(ladder, c.opt);
    if (r.value < rho_m * m - kValueSlack) ++below_m;
    if (r.value < rho_opt * c.opt - kValueSlack) ++below_opt;
    min_m_ratio = std::min(min_m_ratio, r.value / m);
    min_opt_ratio = std::min(min_opt_ratio, r.value / c.opt);
    violations += r.TotalViolations();
    if (!monotone) {
      const auto it = r.invariants.find("damped_sup_norm");
      if (it != r.invariants.end()) {
        damped_checked += it->second.checked;
        damped_violated += it->second.violated;
      }
    }
    bool any_converged = false;
    const int n = c.objective.dimension();
    const int rows = c.instance.a.rows();
    const double budget = monotone ? MonotonePackingBudget(n, rows, kEps)
                                   : NonmonotonePackingBudget(n, rows, kEps);
    for (const GuessTrial& t : r.guess_trace) {
      if (t.termination == Termination::kConverged) {
        any_converged = true;
        budgets.Add(monotone ? "packing monotone" : "packing non-monotone",
                    t.iterations, budget);
      }
    }
    if (!any_converged) ++*ladder_misses;
  }
  const double elapsed = Seconds(start) + setup_seconds;
  bool pass = infeasible == 0 && below_m == 0 && below_opt == 0 &&
              violations == 0 && elapsed < kPackingSeconds;
  std::string detail = std::to_string(cases.size()) +
                       " instances, infeasible " + std::to_string(infeasible) +
                       ", below rho*M " + std::to_string(below_m) +
                       ", below OPT bound " + std::to_string(below_opt) +
                       ", invariant violations " + std::to_string(violations) +
                       Format(", min f/M %.4f (need %.4f), min f/OPT %.4f",
                              min_m_ratio, rho_m, min_opt_ratio) +
                       Format(", max ||Ax|| %.6f (limit %.2f), %.1f s",
                              max_load, 1.0 - 2.0 * kEps, elapsed);
  if (!monotone) {
    pass = pass && damped_checked > 0 && damped_violated == 0;
    detail += ", sup-norm invariant " + std::to_string(damped_checked) +
              " checks / " + std::to_string(damped_violated) + " violated";
  }
  Report(criterion, pass, detail);
}

// Multiplicative-weights linear packing, coded directly from its textbook
// description: eta = eps / (2 ln m), x_i = eps / (n max_r A_ri), and while
// <c, x> <= (1 - eps) M, x <- x + eta x o max(1 - M (A^T p)_i / c_i, 0) with p
// the softmax distribution of A x.
std::vector<std::vector<double>> LinearReference(
    const std::vector<double>& c, const std::vector<std::vector<double>>& a,
    double eps, double guess, long cap) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(c.size());
  const double eta = eps / (2.0 * std::log(m));
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) {
    double col = 0.0;
    for (int r = 0; r < m; ++r) col = std::max(col, a[r][i]);
    x[i] = eps / (n * col);
  }
  auto value = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += c[i] * std::min(x[i], 1.0);
    return s;
  };
  std::vector<std::vector<double>> trace = {x};
  for (long it = 0; it < cap && value() <= (1.0 - eps) * guess; ++it) {
    std::vector<double> ax(m, 0.0);
    for (int r = 0; r < m; ++r) {
      for (int i = 0; i < n; ++i) ax[r] += a[r][i] * x[i];
    }
    const double top = *std::max_element(ax.begin(), ax.end());
    std::vector<double> p(m);
    double sum = 0.0;
    for (int r = 0; r < m; ++r) {
      p[r] = std::exp((ax[r] - top) / eta);
      sum += p[r];
    }
    for (double& v : p) v /= sum;
    std::vector<double> d(n);
    bool moved = false;
    for (int i = 0; i < n; ++i) {
      double w = 0.0;
      for (int r = 0; r < m; ++r) w += a[r][i] * p[r];
      const double mi = std::max(1.0 - guess * w / c[i], 0.0);
      d[i] = eta * x[i] * mi;
      moved = moved || d[i] != 0.0;
    }
    if (!moved) break;
    for (int i = 0; i < n; ++i) x[i] += d[i];
    trace.push_back(x);
  }
  return trace;
}

void ReferenceCriterion(uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> entry(1.0, 3.0);
  int matched = 0;
  long min_length = std::numeric_limits<long>::max();
  std::string first_mismatch;
  for (int k = 0; k < kReferenceInstances; ++k) {
    const int n = std::uniform_int_distribution<int>(2, 4)(rng);
    const int m = std::uniform_int_distribution<int>(2, 3)(rng);
    std::vector<std::vector<double>> dense(m, std::vector<double>(n));
    for (auto& row : dense) {
      for (double& v : row) v = entry(rng);
    }
    const Objective f = RandomLinear(n, rng);
    const std::vector<double> c = f.linear()->weights;
    const PackingInstance instance =
        NormalizePacking(SparseMatrix::FromDense(dense), kEps);
    const double guess = GridFractionalOpt(f, instance, 0.05).value;

    PackingSolverConfig config;
    config.eps = kEps;
    config.guess = guess;
    config.eta = kEps / (2.0 * std::log(m));
    config.lambda_rule = LambdaRule::kGuess;
    config.stop_threshold = (1.0 - kEps) * guess;
    config.gradient_ahead = false;
    config.max_iterations = kReferenceCap;
    config.record_trace = true;
    const SolveReport r = SolvePackingMonotone(f, instance, config);
    const auto reference =
        LinearReference(c, instance.a.ToDense(), kEps, guess, kReferenceCap);
    min_length = std::min(min_length, static_cast<long>(reference.size()));
    if (r.trace == reference) {
      ++matched;
    } else if (first_mismatch.empty()) {
      first_mismatch = "instance " + std::to_string(k) + ": solver " +
                       std::to_string(r.trace.size()) +
                       " iterates, reference " +
                       std::to_string(reference.size());
    }
  }
  Report(9, matched == kReferenceInstances && min_length > 2,
         std::to_string(matched) + "/" + std::to_string(kReferenceInstances) +
             " iterate sequences identical bit for bit, shortest " +
             std::to_string(min_length) + " iterates" +
             (first_mismatch.empty() ? "" : "; " + first_mismatch));
}

void RejectionCriterion(const std::vector<PackingCase>& monotone_cases,
                        const std::vector<PackingCase>& cut_cases,
                        int ladder_misses) {
  int runs = 0, rejected = 0;
  for (int pass = 0; pass < 2; ++pass) {
    const auto& cases = pass == 0 ? monotone_cases : cut_cases;
    for (const PackingCase& c : cases) {
      PackingSolverConfig config;
      config.eps = kEps;
      config.guess = kRejectionFactor * c.opt;
      const SolveReport r =
          pass == 0 ? SolvePackingMonotone(c.objective, c.instance, config)
                    : SolvePackingNonmonotone(c.objective, c.instance, config);
      ++runs;
      if (r.termination == Termination::kGuessRejected) ++rejected;
    }
  }
  Report(10, rejected == runs && ladder_misses == 0,
         std::to_string(rejected) + "/" + std::to_string(runs) +
             " runs at M = 100*OPT rejected; ladders without a converged "
             "guess: " +
             std::to_string(ladder_misses));
}

void PropertyCriterion(int criterion, const std::vector<PropertyResult>& rs) {
  bool pass = true;
  std::string detail;
  for (const PropertyResult& r : rs) {
    pass = pass && r.passed();
    if (!detail.empty()) detail += "; ";
    detail += r.name + " " + std::to_string(r.trials) + " draws, " +
              std::to_string(r.violations) + " violations";
    if (!r.passed() && !r.first_counterexample.empty()) {
      detail += " (first: " + r.first_counterexample + ")";
    }
  }
  Report(criterion, pass, detail);
}

}  // namespace
}  // namespace drmax

int main() {
  using namespace drmax;
  MatroidCriterion(1, /*monotone=*/true, 101);
  MatroidCriterion(2, /*monotone=*/false, 202);

  auto start = Clock::now();
  const std::vector<PackingCase> monotone_cases = PackingCases(true, 303);
  const double monotone_setup = Seconds(start);
  start = Clock::now();
  const std::vector<PackingCase> cut_cases = PackingCases(false, 404);
  const double cut_setup = Seconds(start);
  int ladder_misses = 0;
  PackingCriterion(3, true, monotone_cases, monotone_setup, &ladder_misses);
  PackingCriterion(4, false, cut_cases, cut_setup, &ladder_misses);

  Report(5, budgets.runs > 0 && budgets.over == 0,
         std::to_string(budgets.runs) + " converged runs checked, " +
             std::to_string(budgets.over) + " over budget" +
             Format(", largest iterations/budget %.4f", budgets.worst_ratio) +
             " (" + budgets.worst + ")");

  PropertyCriterion(6, {CheckSoftmaxBounds(kSoftmaxDraws, 606)});
  PropertyCriterion(7, {CheckExchangeVectors(kExchangeDraws, 707)});
  PropertyCriterion(
      8, {CheckGradients(kGradientDraws, 808),
          CheckSampledEstimator(kSampledInstances, kSampledSamples, 809)});
  ReferenceCriterion(909);
  RejectionCriterion(monotone_cases, cut_cases, ladder_misses);

  std::printf("%s\n",
              failures == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return failures == 0 ? 0 : 1;
}
