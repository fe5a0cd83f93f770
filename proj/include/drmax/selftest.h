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

#ifndef DRMAX_SELFTEST_H_
#define DRMAX_SELFTEST_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "drmax/objective.h"
#include "drmax/polymatroid.h"
#include "drmax/sparse_matrix.h"

namespace drmax {

// Outcome of a seeded randomized property check.
struct PropertyResult {
  std::string name;
  long trials = 0;
  long violations = 0;
  // Full description of the first failing draw, for reproduction.
  std::string first_counterexample;

  bool passed() const { return trials > 0 && violations == 0; }
};

// Random desk-sized instances. All weights are drawn from [0.5, 2] or similar
// ranges bounded away from zero.
Objective RandomCoverage(int n, int items, std::mt19937_64& rng);
Objective RandomDirectedCut(int n, std::mt19937_64& rng);
Objective RandomLinear(int n, std::mt19937_64& rng);
// Integer capacities, so the polytopes are matroid polytopes.
LaminarPolymatroid RandomPartition(int n, std::mt19937_64& rng);
LaminarPolymatroid RandomLaminar(int n, std::mt19937_64& rng);
LaminarPolymatroid RandomUniform(int n, std::mt19937_64& rng);
// Dense m x n matrix with entries in [lo, hi].
SparseMatrix RandomPacking(int m, int n, double lo, double hi,
                           std::mt19937_64& rng);

// Largest alpha in [0, 1] with alpha * y in scale * P, by bisection on the
// exact margin (no tolerance).
double MaxFeasibleScale(const Polymatroid& pm, const std::vector<double>& y,
                        double scale);

// Increment bound and both step-scaling inequalities of the softmax potential
// on `draws` random (x, d, A, eta); tolerance 1e-9.
PropertyResult CheckSoftmaxBounds(int draws, uint64_t seed);

// Exchange-vector postconditions 0 <= d <= c, b + d in P and
// ||c - d||_1 <= ||b - a||_1 on random partition and laminar triples, checked
// with the exhaustive membership oracle.
PropertyResult CheckExchangeVectors(int draws, uint64_t seed);

// Closed-form gradients against central differences (h = 1e-5), within
// 1e-5 * max(1, |grad_i|), on `draws` points per objective kind.
PropertyResult CheckGradients(int draws, uint64_t seed);

// Monte-Carlo multilinear estimates against subset enumeration, within three
// standard errors, on `instances` random objectives with n <= 12.
PropertyResult CheckSampledEstimator(int instances, int samples, uint64_t seed);

// Membership, tight sets and water-filling against exhaustive oracles, plus
// monotonicity and submodularity of the rank function, for n <= 8.
PropertyResult CheckPolymatroidOracles(int draws, uint64_t seed);

// DR property, the lattice lower bound and concavity along non-negative
// directions for the closed-form objectives.
PropertyResult CheckObjectiveShape(int draws, uint64_t seed);

// All of the above at reduced sizes.
std::vector<PropertyResult> RunSelfTest(uint64_t seed);

}  // namespace drmax

#endif  // DRMAX_SELFTEST_H_
