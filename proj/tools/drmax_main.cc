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

// Command-line front end: solve-packing, solve-matroid, verify, selftest.
// Reports are JSON on stdout (and optionally in a file).

#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "drmax/guess.h"
#include "drmax/instance_io.h"
#include "drmax/oracle_bruteforce.h"
#include "drmax/selftest.h"
#include "drmax/solver_matroid.h"
#include "drmax/solver_packing.h"
#include "json.hpp"

namespace {

using drmax::SolveReport;
using drmax::Termination;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitGuessRejected = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitIterationCap = 4;

// Raised for bad flags or flag/instance combinations; maps to exit 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string instance_path;
  std::optional<double> eps;
  std::string guess = "auto";
  std::optional<uint64_t> seed;
  std::string monotone = "auto";
  long max_iters = 0;
  std::string report_path;
  bool wallclock_parallel = false;
  std::optional<double> resolution;
};

enum class Family { kPacking, kMatroid };

struct Loaded {
  drmax::InstanceFile file;
  double eps;
  uint64_t seed;
  bool monotone;
};

drmax::InstanceFile ReadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open instance file '" + path + "'");
  std::stringstream text;
  text << in.rdbuf();
  return drmax::ParseInstance(text.str());
}

Loaded Load(const Options& options, Family family) {
  drmax::InstanceFile file = ReadInstance(options.instance_path);
  const bool packing =
      std::holds_alternative<drmax::SparseMatrix>(file.constraint);
  if (packing != (family == Family::kPacking)) {
    throw UsageError(packing ? "instance has packing constraints; use "
                               "solve-packing"
                             : "instance has a polymatroid constraint; use "
                               "solve-matroid");
  }
  const double eps = options.eps.value_or(file.eps);
  if (!(eps > 0.0 && eps <= drmax::kMaxSolverEps)) {
    throw UsageError("eps " + std::to_string(eps) +
                     " out of supported range (0, 0.05]");
  }
  const uint64_t seed = options.seed.value_or(file.seed);
  const drmax::SampledPayload* sampled = file.objective.sampled();
  std::optional<bool> forced;
  if (options.monotone == "true") forced = true;
  if (options.monotone == "false") forced = false;
  if (sampled) {
    // Sampled objectives take the seed and the monotone override directly.
    file.objective = drmax::Objective::SampledFrom(
        *sampled->source, sampled->samples, options.seed ? seed : sampled->seed,
        forced.value_or(file.objective.monotone()));
  } else if (forced == true && !file.objective.monotone()) {
    throw UsageError(std::string("objective kind '") +
                     drmax::ObjectiveKindName(file.objective.kind()) +
                     "' is not monotone; the monotone solver does not apply");
  }
  const bool monotone = forced.value_or(file.objective.monotone());
  return Loaded{std::move(file), eps, seed, monotone};
}

std::optional<double> FixedGuess(const Options& options) {
  if (options.guess == "auto") return std::nullopt;
  double v = 0.0;
  try {
    size_t used = 0;
    v = std::stod(options.guess, &used);
    if (used != options.guess.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw UsageError("--guess expects 'auto' or a positive number");
  }
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw UsageError("--guess expects 'auto' or a positive number");
  }
  return v;
}

drmax::PackingInstance PreparePacking(const Loaded& loaded) {
  drmax::PackingInstance instance = drmax::NormalizePacking(
      std::get<drmax::SparseMatrix>(loaded.file.constraint), loaded.eps);
  if (!loaded.monotone) instance = drmax::AppendBoxRows(std::move(instance));
  return instance;
}

SolveReport RunPacking(const Options& options, const Loaded& loaded,
                       const drmax::PackingInstance& instance) {
  drmax::PackingSolverConfig config;
  config.eps = loaded.eps;
  config.seed = loaded.seed;
  config.max_iterations = options.max_iters;
  if (const std::optional<double> guess = FixedGuess(options)) {
    config.guess = *guess;
    SolveReport r = loaded.monotone
                        ? drmax::SolvePackingMonotone(loaded.file.objective,
                                                      instance, config)
                        : drmax::SolvePackingNonmonotone(loaded.file.objective,
                                                         instance, config);
    r.guess_trace.push_back({r.guess_used, r.value, r.termination,
                             r.inner_iterations, r.adaptive_rounds,
                             r.feasible});
    return r;
  }
  return drmax::SolvePackingWithGuessing(loaded.file.objective, instance,
                                         config, loaded.monotone,
                                         options.wallclock_parallel);
}

SolveReport RunMatroid(const Options& options, const Loaded& loaded) {
  const auto& pm = std::get<drmax::LaminarPolymatroid>(loaded.file.constraint);
  drmax::MatroidSolverConfig config;
  config.eps = loaded.eps;
  config.seed = loaded.seed;
  config.max_inner_iterations = options.max_iters;
  if (const std::optional<double> guess = FixedGuess(options)) {
    config.guess = *guess;
    SolveReport r =
        loaded.monotone
            ? drmax::SolveMatroidMonotone(loaded.file.objective, pm, config)
            : drmax::SolveMatroidNonmonotone(loaded.file.objective, pm, config);
    r.guess_trace.push_back({r.guess_used, r.value, r.termination,
                             r.inner_iterations, r.adaptive_rounds,
                             r.feasible});
    return r;
  }
  return drmax::SolveMatroidWithGuessing(loaded.file.objective, pm, config,
                                         loaded.monotone,
                                         options.wallclock_parallel);
}

int ExitCode(const SolveReport& report) {
  if (report.TotalViolations() > 0) return kExitInvariant;
  switch (report.termination) {
    case Termination::kConverged:
      return kExitOk;
    case Termination::kGuessRejected:
      return kExitGuessRejected;
    case Termination::kIterationCap:
      return kExitIterationCap;
  }
  return kExitInvariant;
}

void Emit(const Json& doc, const Options& options) {
  const std::string text = doc.dump(2) + "\n";
  std::cout << text;
  if (!options.report_path.empty()) {
    std::ofstream out(options.report_path);
    if (!out)
      throw UsageError("cannot write report to '" + options.report_path + "'");
    out << text;
  }
}

Json Header(const std::string& command, const Loaded& loaded) {
  Json doc;
  doc["schema"] = drmax::kSchemaVersion;
  doc["command"] = command;
  doc["eps"] = loaded.eps;
  doc["seed"] = loaded.seed;
  doc["monotone"] = loaded.monotone;
  return doc;
}

Json WithReport(Json doc, const SolveReport& report) {
  const Json body = drmax::ReportToJson(report);
  for (const auto& [key, value] : body.items()) {
    if (key != "schema") doc[key] = value;
  }
  return doc;
}

int SolvePacking(const Options& options) {
  const Loaded loaded = Load(options, Family::kPacking);
  const drmax::PackingInstance instance = PreparePacking(loaded);
  const SolveReport report = RunPacking(options, loaded, instance);
  Json doc = WithReport(Header("solve-packing", loaded), report);
  doc["normalization"] = instance.transcript;
  Emit(doc, options);
  return ExitCode(report);
}

int SolveMatroid(const Options& options) {
  const Loaded loaded = Load(options, Family::kMatroid);
  const SolveReport report = RunMatroid(options, loaded);
  Emit(WithReport(Header("solve-matroid", loaded), report), options);
  return ExitCode(report);
}

double DefaultResolution(int n) {
  if (n <= 2) return 1e-3;
  return n == 3 ? 1e-2 : 3e-2;
}

int Verify(const Options& options) {
  drmax::InstanceFile probe = ReadInstance(options.instance_path);
  const bool packing =
      std::holds_alternative<drmax::SparseMatrix>(probe.constraint);
  const Loaded loaded =
      Load(options, packing ? Family::kPacking : Family::kMatroid);
  const double eps = loaded.eps;
  const drmax::Objective& objective = loaded.file.objective;
  Json doc = Header("verify", loaded);

  SolveReport report;
  drmax::OracleResult oracle;
  double solver_ratio = 0.0;  // guarantee relative to the guess M
  double acceptance_ratio = 0.0;
  if (packing) {
    const drmax::PackingInstance instance = PreparePacking(loaded);
    report = RunPacking(options, loaded, instance);
    oracle = drmax::GridFractionalOpt(
        objective, instance,
        options.resolution.value_or(DefaultResolution(objective.dimension())));
    solver_ratio = loaded.monotone ? 1.0 - std::exp(-1.0 + 10.0 * eps)
                                   : std::exp(-1.0 - 10.0 * eps);
  } else {
    report = RunMatroid(options, loaded);
    oracle = drmax::BruteForceMatroidOpt(
        objective, std::get<drmax::LaminarPolymatroid>(loaded.file.constraint));
    solver_ratio = 0.0;  // the matroid guarantee is only asymptotic in eps
  }
  acceptance_ratio = loaded.monotone ? 1.0 - std::exp(-1.0) - 15.0 * eps
                                     : std::exp(-1.0) - 15.0 * eps;
  // Some ladder entry satisfies OPT <= (1 + eps) M, so a guarantee rho M
  // becomes rho / (1 + eps) relative to OPT.
  const double required =
      std::max({acceptance_ratio, solver_ratio / (1.0 + eps), 0.0});
  const double ratio = oracle.value > 0.0 ? report.value / oracle.value : 1.0;
  const bool holds =
      report.feasible && report.value >= required * oracle.value - 1e-9;

  Json ref;
  ref["method"] = drmax::OracleMethodName(oracle.method);
  ref["value"] = oracle.value;
  ref["argmax"] = oracle.argmax;
  ref["accuracy"] = oracle.accuracy;
  doc["oracle"] = ref;
  if (loaded.file.known_opt) doc["known_opt"] = *loaded.file.known_opt;
  doc["ratio"] = ratio;
  doc["required_ratio"] = required;
  doc["bound_holds"] = holds;
  doc["report"] = drmax::ReportToJson(report);
  Emit(doc, options);
  if (!holds) return kExitInvariant;
  return ExitCode(report);
}

int SelfTest(const Options& options) {
  const uint64_t seed = options.seed.value_or(1);
  Json doc;
  doc["schema"] = drmax::kSchemaVersion;
  doc["command"] = "selftest";
  doc["seed"] = seed;
  bool all = true;
  Json list = Json::array();
  for (const drmax::PropertyResult& r : drmax::RunSelfTest(seed)) {
    Json entry;
    entry["name"] = r.name;
    entry["trials"] = r.trials;
    entry["violations"] = r.violations;
    entry["passed"] = r.passed();
    if (!r.passed()) entry["first_counterexample"] = r.first_counterexample;
    all = all && r.passed();
    list.push_back(std::move(entry));
  }
  doc["properties"] = std::move(list);
  doc["passed"] = all;
  Emit(doc, options);
  return all ? kExitOk : kExitInvariant;
}

void AddSolveFlags(CLI::App* cmd, Options& options) {
  cmd->add_option("instance", options.instance_path, "Instance JSON file")
      ->required();
  cmd->add_option("--eps", options.eps, "Accuracy in (0, 0.05]");
  cmd->add_option("--guess", options.guess, "auto, or a fixed guess M > 0");
  cmd->add_option("--seed", options.seed, "Seed (reseeds sampled objectives)");
  cmd->add_option("--monotone", options.monotone, "auto|true|false")
      ->check(CLI::IsMember({"auto", "true", "false"}));
  cmd->add_option("--max-iters", options.max_iters,
                  "Iteration cap per guess (0: theoretical budget)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--report", options.report_path,
                  "Also write the report here");
  cmd->add_flag("--wallclock-parallel", options.wallclock_parallel,
                "Run the guesses on separate threads");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Low-adaptivity DR-submodular maximization"};
  app.require_subcommand(1);
  Options options;
  CLI::App* packing =
      app.add_subcommand("solve-packing", "Maximize subject to A x <= 1");
  AddSolveFlags(packing, options);
  CLI::App* matroid =
      app.add_subcommand("solve-matroid", "Maximize over a polymatroid");
  AddSolveFlags(matroid, options);
  CLI::App* verify = app.add_subcommand(
      "verify", "Solve, then compare with a brute-force optimum");
  AddSolveFlags(verify, options);
  verify->add_option("--resolution", options.resolution,
                     "Grid step for packing instances (>= 1e-3)");
  CLI::App* selftest =
      app.add_subcommand("selftest", "Run the randomized property suite");
  selftest->add_option("--seed", options.seed, "Seed");
  selftest->add_option("--report", options.report_path,
                       "Also write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (packing->parsed()) return SolvePacking(options);
    if (matroid->parsed()) return SolveMatroid(options);
    if (verify->parsed()) return Verify(options);
    return SelfTest(options);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const drmax::ParseError& e) {
    std::cerr << "error: invalid instance: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
}
