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

#include "drmax/objective.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace drmax {
namespace {

void CheckWeight(double w, const char* what) {
  if (!std::isfinite(w) || w < 0.0) {
    throw std::invalid_argument(std::string(what) +
                                " must be finite and non-negative");
  }
}

void CheckElement(int i, int n, const char* what) {
  if (i < 0 || i >= n) {
    throw std::invalid_argument(std::string(what) + " index " +
                                std::to_string(i) + " out of range [0, " +
                                std::to_string(n) + ")");
  }
}

// Validates x and returns min(x, 1) entrywise.
std::vector<double> ClampedPoint(std::span<const double> x, int n) {
  if (static_cast<int>(x.size()) != n) {
    throw std::invalid_argument("point has dimension " +
                                std::to_string(x.size()) + ", expected " +
                                std::to_string(n));
  }
  std::vector<double> clamped(x.begin(), x.end());
  for (double& v : clamped) {
    if (!(v >= 0.0)) {
      throw std::invalid_argument("point has a negative or NaN entry");
    }
    v = std::min(v, 1.0);
  }
  return clamped;
}

Subset DrawSubset(std::span<const double> x, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Subset r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = unif(rng) < x[i];
  return r;
}

}  // namespace

const char* ObjectiveKindName(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::kCoverage:
      return "coverage";
    case ObjectiveKind::kDirectedCut:
      return "directed_cut";
    case ObjectiveKind::kLinear:
      return "linear";
    case ObjectiveKind::kSampled:
      return "sampled";
  }
  return "unknown";
}

Objective Objective::Coverage(int n, std::vector<double> item_weights,
                              std::vector<std::vector<int>> covers) {
  if (n <= 0) throw std::invalid_argument("coverage needs n >= 1");
  if (static_cast<int>(covers.size()) != n) {
    throw std::invalid_argument("coverage needs one cover list per element");
  }
  for (double w : item_weights) CheckWeight(w, "coverage item weight");
  const int items = static_cast<int>(item_weights.size());
  std::vector<std::vector<int>> coverers(items);
  for (int i = 0; i < n; ++i) {
    std::vector<int> sorted = covers[i];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("cover list of element " + std::to_string(i) +
                                  " repeats an item");
    }
    for (int u : covers[i]) {
      CheckElement(u, items, "covered item");
      coverers[u].push_back(i);
    }
  }
  Objective obj;
  obj.kind_ = ObjectiveKind::kCoverage;
  obj.n_ = n;
  obj.monotone_ = true;
  obj.payload_ = CoveragePayload{std::move(item_weights), std::move(covers)};
  obj.coverers_ = std::move(coverers);
  return obj;
}

Objective Objective::DirectedCut(int n, std::vector<Arc> arcs) {
  if (n <= 0) throw std::invalid_argument("directed cut needs n >= 1");
  for (const Arc& a : arcs) {
    CheckElement(a.tail, n, "arc tail");
    CheckElement(a.head, n, "arc head");
    if (a.tail == a.head) throw std::invalid_argument("self-loop arc");
    CheckWeight(a.weight, "arc weight");
  }
  Objective obj;
  obj.kind_ = ObjectiveKind::kDirectedCut;
  obj.n_ = n;
  obj.monotone_ = false;
  obj.payload_ = DirectedCutPayload{std::move(arcs)};
  return obj;
}

Objective Objective::Linear(std::vector<double> weights) {
  if (weights.empty()) throw std::invalid_argument("linear needs n >= 1");
  for (double w : weights) CheckWeight(w, "linear weight");
  Objective obj;
  obj.kind_ = ObjectiveKind::kLinear;
  obj.n_ = static_cast<int>(weights.size());
  obj.monotone_ = true;
  obj.payload_ = LinearPayload{std::move(weights)};
  return obj;
}

Objective Objective::Sampled(int n, SetFunction set_function, bool monotone,
                             int samples, uint64_t seed) {
  if (n <= 0) throw std::invalid_argument("sampled objective needs n >= 1");
  if (!set_function) throw std::invalid_argument("missing set function");
  if (samples <= 0) throw std::invalid_argument("sample count must be >= 1");
  Objective obj;
  obj.kind_ = ObjectiveKind::kSampled;
  obj.n_ = n;
  obj.monotone_ = monotone;
  obj.payload_ = SampledPayload{std::move(set_function), samples, seed, {}};
  return obj;
}

Objective Objective::SampledFrom(const Objective& source, int samples,
                                 uint64_t seed, std::optional<bool> monotone) {
  auto shared = std::make_shared<const Objective>(source);
  Objective obj = Sampled(
      source.dimension(),
      [shared](const Subset& s) { return shared->SetValue(s); },
      monotone.value_or(source.monotone()), samples, seed);
  std::get<SampledPayload>(obj.payload_).source = std::move(shared);
  return obj;
}

const CoveragePayload* Objective::coverage() const {
  return std::get_if<CoveragePayload>(&payload_);
}
const DirectedCutPayload* Objective::directed_cut() const {
  return std::get_if<DirectedCutPayload>(&payload_);
}
const LinearPayload* Objective::linear() const {
  return std::get_if<LinearPayload>(&payload_);
}
const SampledPayload* Objective::sampled() const {
  return std::get_if<SampledPayload>(&payload_);
}

double Objective::Value(std::span<const double> x) const {
  return ValueEstimate(x).value;
}

Estimate Objective::ValueEstimate(std::span<const double> x) const {
  const std::vector<double> p = ClampedPoint(x, n_);
  switch (kind_) {
    case ObjectiveKind::kCoverage: {
      const auto& cov = std::get<CoveragePayload>(payload_);
      double total = 0.0;
      for (size_t u = 0; u < cov.item_weights.size(); ++u) {
        double miss = 1.0;
        for (int i : coverers_[u]) miss *= 1.0 - p[i];
        total += cov.item_weights[u] * (1.0 - miss);
      }
      return {total, 0.0};
    }
    case ObjectiveKind::kDirectedCut: {
      double total = 0.0;
      for (const Arc& a : std::get<DirectedCutPayload>(payload_).arcs) {
        total += a.weight * p[a.tail] * (1.0 - p[a.head]);
      }
      return {total, 0.0};
    }
    case ObjectiveKind::kLinear: {
      const auto& w = std::get<LinearPayload>(payload_).weights;
      double total = 0.0;
      for (int i = 0; i < n_; ++i) total += w[i] * p[i];
      return {total, 0.0};
    }
    case ObjectiveKind::kSampled: {
      const auto& s = std::get<SampledPayload>(payload_);
      std::mt19937_64 rng(s.seed);
      double mean = 0.0;
      double m2 = 0.0;
      for (int k = 0; k < s.samples; ++k) {
        const double v = s.set_function(DrawSubset(p, rng));
        const double delta = v - mean;
        mean += delta / (k + 1);
        m2 += delta * (v - mean);
      }
      const double var = s.samples > 1 ? m2 / (s.samples - 1) : 0.0;
      return {mean, std::sqrt(var / s.samples)};
    }
  }
  return {};
}

std::vector<double> Objective::Gradient(std::span<const double> x) const {
  const std::vector<double> p = ClampedPoint(x, n_);
  std::vector<double> grad(n_, 0.0);
  switch (kind_) {
    case ObjectiveKind::kCoverage: {
      const auto& cov = std::get<CoveragePayload>(payload_);
      std::vector<double> prefix;
      for (size_t u = 0; u < cov.item_weights.size(); ++u) {
        const auto& who = coverers_[u];
        const size_t k = who.size();
        // prefix[j] = prod_{l<j} (1 - x_l); suffix folded in the second pass.
        prefix.assign(k + 1, 1.0);
        for (size_t j = 0; j < k; ++j) {
          prefix[j + 1] = prefix[j] * (1.0 - p[who[j]]);
        }
        double suffix = 1.0;
        for (size_t j = k; j-- > 0;) {
          grad[who[j]] += cov.item_weights[u] * prefix[j] * suffix;
          suffix *= 1.0 - p[who[j]];
        }
      }
      break;
    }
    case ObjectiveKind::kDirectedCut: {
      for (const Arc& a : std::get<DirectedCutPayload>(payload_).arcs) {
        grad[a.tail] += a.weight * (1.0 - p[a.head]);
        grad[a.head] -= a.weight * p[a.tail];
      }
      break;
    }
    case ObjectiveKind::kLinear:
      grad = std::get<LinearPayload>(payload_).weights;
      break;
    case ObjectiveKind::kSampled: {
      // Common random numbers: one sampled set per round serves every
      // coordinate.
      const auto& s = std::get<SampledPayload>(payload_);
      std::mt19937_64 rng(s.seed);
      for (int k = 0; k < s.samples; ++k) {
        Subset r = DrawSubset(p, rng);
        for (int i = 0; i < n_; ++i) {
          const bool had = r[i];
          r[i] = true;
          const double with = s.set_function(r);
          r[i] = false;
          const double without = s.set_function(r);
          r[i] = had;
          grad[i] += with - without;
        }
      }
      for (double& g : grad) g /= s.samples;
      break;
    }
  }
  // f(x) = f(min(x, 1)): coordinates past the box have no slope.
  for (int i = 0; i < n_; ++i) {
    if (x[i] > 1.0) grad[i] = 0.0;
  }
  return grad;
}

std::vector<double> Objective::SingletonValues() const {
  std::vector<double> values(n_);
  Subset s(n_, false);
  for (int i = 0; i < n_; ++i) {
    s[i] = true;
    values[i] = SetValue(s);
    s[i] = false;
  }
  return values;
}

double Objective::SetValue(const Subset& s) const {
  if (static_cast<int>(s.size()) != n_) {
    throw std::invalid_argument("subset has wrong ground-set size");
  }
  switch (kind_) {
    case ObjectiveKind::kCoverage: {
      const auto& cov = std::get<CoveragePayload>(payload_);
      double total = 0.0;
      for (size_t u = 0; u < cov.item_weights.size(); ++u) {
        const auto& who = coverers_[u];
        if (std::any_of(who.begin(), who.end(), [&](int i) { return s[i]; })) {
          total += cov.item_weights[u];
        }
      }
      return total;
    }
    case ObjectiveKind::kDirectedCut: {
      double total = 0.0;
      for (const Arc& a : std::get<DirectedCutPayload>(payload_).arcs) {
        if (s[a.tail] && !s[a.head]) total += a.weight;
      }
      return total;
    }
    case ObjectiveKind::kLinear: {
      const auto& w = std::get<LinearPayload>(payload_).weights;
      double total = 0.0;
      for (int i = 0; i < n_; ++i) {
        if (s[i]) total += w[i];
      }
      return total;
    }
    case ObjectiveKind::kSampled:
      return std::get<SampledPayload>(payload_).set_function(s);
  }
  return 0.0;
}

}  // namespace drmax
