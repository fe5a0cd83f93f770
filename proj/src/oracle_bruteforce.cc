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

#include "drmax/oracle_bruteforce.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace drmax {
namespace {

void RequireEnumerable(int n) {
  if (n > kMaxEnumerationSize) {
    throw std::invalid_argument("subset enumeration is limited to n <= " +
                                std::to_string(kMaxEnumerationSize));
  }
}

Subset Members(uint32_t mask, int n) {
  Subset s(n, false);
  for (int i = 0; i < n; ++i) s[i] = (mask >> i) & 1u;
  return s;
}

double Load(uint32_t mask, std::span<const double> x) {
  double load = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    if ((mask >> i) & 1u) load += x[i];
  }
  return load;
}

// Depth-first walk over grid points, pruning on row loads (A >= 0, so loads
// only grow along a coordinate).
struct GridSearch {
  const Objective& objective;
  const std::vector<std::vector<double>>& columns;  // columns[i][r]
  const std::vector<double>& levels;
  const std::vector<bool>& fixed;
  double limit;
  std::vector<double> point;
  std::vector<double> load;
  double best = -1.0;
  std::vector<double> best_point;

  void Visit(size_t i) {
    if (i == point.size()) {
      // Sampled objectives are scored exactly, not by their estimator.
      const double v = objective.kind() == ObjectiveKind::kSampled
                           ? ExactMultilinear(objective, point)
                           : objective.Value(point);
      if (v > best) {
        best = v;
        best_point = point;
      }
      return;
    }
    for (double level : levels) {
      if (fixed[i] && level > 0.0) break;
      bool fits = true;
      for (size_t r = 0; r < load.size(); ++r) {
        if (load[r] + columns[i][r] * level > limit) fits = false;
      }
      if (!fits) break;
      for (size_t r = 0; r < load.size(); ++r) load[r] += columns[i][r] * level;
      point[i] = level;
      Visit(i + 1);
      for (size_t r = 0; r < load.size(); ++r) load[r] -= columns[i][r] * level;
    }
    point[i] = 0.0;
  }
};

}  // namespace

const char* OracleMethodName(OracleMethod method) {
  switch (method) {
    case OracleMethod::kSubsetEnumeration:
      return "subset-enum";
    case OracleMethod::kGrid:
      return "grid";
    case OracleMethod::kFiniteDifference:
      return "finite-diff";
  }
  return "unknown";
}

double ExactMultilinear(const Objective& objective, std::span<const double> x) {
  const int n = objective.dimension();
  RequireEnumerable(n);
  if (static_cast<int>(x.size()) != n) {
    throw std::invalid_argument("exact multilinear: dimension mismatch");
  }
  double total = 0.0;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    double p = 1.0;
    for (int i = 0; i < n; ++i) {
      const double xi = std::clamp(x[i], 0.0, 1.0);
      p *= ((mask >> i) & 1u) ? xi : 1.0 - xi;
    }
    if (p > 0.0) total += p * objective.SetValue(Members(mask, n));
  }
  return total;
}

OracleResult BruteForceMatroidOpt(const Objective& objective,
                                  const Polymatroid& polymatroid) {
  const int n = objective.dimension();
  RequireEnumerable(n);
  if (polymatroid.size() != n) {
    throw std::invalid_argument("objective and polymatroid sizes differ");
  }
  OracleResult result;
  result.method = OracleMethod::kSubsetEnumeration;
  result.value = -1.0;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<double> indicator(n);
    for (int i = 0; i < n; ++i) indicator[i] = (mask >> i) & 1u ? 1.0 : 0.0;
    if (!polymatroid.Contains(indicator, 1.0)) continue;
    const double v = objective.SetValue(Members(mask, n));
    if (v > result.value) {
      result.value = v;
      result.argmax = indicator;
    }
  }
  return result;
}

OracleResult GridFractionalOpt(const Objective& objective,
                               const PackingInstance& instance,
                               double resolution) {
  const int n = objective.dimension();
  if (n > kMaxGridSize) {
    throw std::invalid_argument("grid search is limited to n <= " +
                                std::to_string(kMaxGridSize));
  }
  if (!(resolution >= kMinGridResolution) || resolution > 1.0) {
    throw std::invalid_argument("grid resolution must lie in [1e-3, 1]");
  }
  if (instance.a.cols() != n) {
    throw std::invalid_argument("objective and constraint sizes differ");
  }
  std::vector<double> levels;
  const int steps = static_cast<int>(std::floor(1.0 / resolution + 1e-9));
  for (int k = 0; k <= steps; ++k) levels.push_back(k * resolution);
  if (levels.back() < 1.0 - 1e-12) levels.push_back(1.0);

  const std::vector<std::vector<double>> dense = instance.a.ToDense();
  std::vector<std::vector<double>> columns(n,
                                           std::vector<double>(dense.size()));
  for (size_t r = 0; r < dense.size(); ++r) {
    for (int i = 0; i < n; ++i) columns[i][r] = dense[r][i];
  }
  GridSearch search{objective,
                    columns,
                    levels,
                    instance.fixed_zero,
                    // Rounding slack so that boundary grid points count.
                    1.0 - instance.eps + 1e-12,
                    std::vector<double>(n, 0.0),
                    std::vector<double>(dense.size(), 0.0),
                    -1.0,
                    {}};
  search.Visit(0);

  const std::vector<double> zeros(n, 0.0);
  const std::vector<double> ones(n, 1.0);
  const std::vector<double> g0 = objective.Gradient(zeros);
  const std::vector<double> g1 = objective.Gradient(ones);
  double slope = 0.0;
  for (int i = 0; i < n; ++i) {
    slope = std::max({slope, std::abs(g0[i]), std::abs(g1[i])});
  }
  OracleResult result;
  result.method = OracleMethod::kGrid;
  result.value = search.best;
  result.argmax = search.best_point;
  result.accuracy = n * resolution * slope;
  return result;
}

std::vector<double> FiniteDiffGrad(const Objective& objective,
                                   std::span<const double> x, double h) {
  const int n = objective.dimension();
  if (static_cast<int>(x.size()) != n) {
    throw std::invalid_argument("finite differences: dimension mismatch");
  }
  if (!(h > 0.0)) throw std::invalid_argument("step h must be positive");
  std::vector<double> point(x.begin(), x.end());
  std::vector<double> grad(n);
  for (int i = 0; i < n; ++i) {
    if (x[i] < h || x[i] > 1.0 - h) {
      throw std::invalid_argument("point too close to the boundary for h");
    }
    point[i] = x[i] + h;
    const double up = objective.Value(point);
    point[i] = x[i] - h;
    const double down = objective.Value(point);
    point[i] = x[i];
    grad[i] = (up - down) / (2.0 * h);
  }
  return grad;
}

bool ExhaustiveMembership(const Polymatroid& polymatroid,
                          std::span<const double> x, double scale,
                          double tolerance) {
  const int n = polymatroid.size();
  RequireEnumerable(n);
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (Load(mask, x) >
        scale * polymatroid.Rank(Members(mask, n)) + tolerance) {
      return false;
    }
  }
  return true;
}

Subset ExhaustiveTightSet(const Polymatroid& polymatroid,
                          std::span<const double> x, double scale) {
  const int n = polymatroid.size();
  RequireEnumerable(n);
  uint32_t tight = 0;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    const double gap =
        scale * polymatroid.Rank(Members(mask, n)) - Load(mask, x);
    if (std::abs(gap) <= kTightTolerance) tight |= mask;
  }
  return Members(tight, n);
}

}  // namespace drmax
