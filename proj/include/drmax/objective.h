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

#ifndef DRMAX_OBJECTIVE_H_
#define DRMAX_OBJECTIVE_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace drmax {

// A point of [0,1]^n. Entries above 1 are allowed as inputs to the oracles and
// are clamped (f(x) = f(min(x, 1))); negative entries are rejected.
using SolutionVector = std::vector<double>;

// Membership vector of a subset of the ground set.
using Subset = std::vector<bool>;

// Black-box set function g: 2^V -> R_+.
using SetFunction = std::function<double(const Subset&)>;

enum class ObjectiveKind { kCoverage, kDirectedCut, kLinear, kSampled };

const char* ObjectiveKindName(ObjectiveKind kind);

// Weighted coverage: element i covers the universe items covers[i].
struct CoveragePayload {
  std::vector<double> item_weights;
  std::vector<std::vector<int>> covers;
};

struct Arc {
  int tail = 0;
  int head = 0;
  double weight = 0.0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Weighted directed cut: value of S is the weight of arcs leaving S.
struct DirectedCutPayload {
  std::vector<Arc> arcs;
};

struct LinearPayload {
  std::vector<double> weights;
};

class Objective;

// Multilinear extension of an arbitrary set function estimated by sampling.
// `source` is kept when the set function came from a closed-form objective so
// that the instance can be written back out.
struct SampledPayload {
  SetFunction set_function;
  int samples = 10000;
  uint64_t seed = 0;
  std::shared_ptr<const Objective> source;
};

// Value estimate with its standard error (zero for closed-form kinds).
struct Estimate {
  double value = 0.0;
  double standard_error = 0.0;
};

// DR-submodular objective f: [0,1]^n -> R_+ with value and gradient oracles.
// All methods are const and thread-safe; sampled oracles reseed from the
// configured seed on every call so that results depend only on the input.
class Objective {
 public:
  static Objective Coverage(int n, std::vector<double> item_weights,
                            std::vector<std::vector<int>> covers);
  static Objective DirectedCut(int n, std::vector<Arc> arcs);
  static Objective Linear(std::vector<double> weights);
  static Objective Sampled(int n, SetFunction set_function, bool monotone,
                           int samples, uint64_t seed);
  // Wraps a closed-form objective's set function in the sampled estimator.
  // The monotone flag is inherited from `source` unless given.
  static Objective SampledFrom(const Objective& source, int samples,
                               uint64_t seed,
                               std::optional<bool> monotone = std::nullopt);

  ObjectiveKind kind() const { return kind_; }
  int dimension() const { return n_; }
  bool monotone() const { return monotone_; }

  double Value(std::span<const double> x) const;
  Estimate ValueEstimate(std::span<const double> x) const;
  std::vector<double> Gradient(std::span<const double> x) const;
  // (f(1_1), ..., f(1_n)).
  std::vector<double> SingletonValues() const;
  // Set-function value g(S); equals Value at the indicator vector of S.
  double SetValue(const Subset& s) const;

  const CoveragePayload* coverage() const;
  const DirectedCutPayload* directed_cut() const;
  const LinearPayload* linear() const;
  const SampledPayload* sampled() const;

 private:
  Objective() = default;

  ObjectiveKind kind_ = ObjectiveKind::kLinear;
  int n_ = 0;
  bool monotone_ = true;
  std::variant<CoveragePayload, DirectedCutPayload, LinearPayload,
               SampledPayload>
      payload_;
  // Coverage only: for each universe item, the elements covering it.
  std::vector<std::vector<int>> coverers_;
};

}  // namespace drmax

#endif  // DRMAX_OBJECTIVE_H_
