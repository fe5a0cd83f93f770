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

#include "drmax/polymatroid.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace drmax {
namespace {

bool IsSubsetOf(const std::vector<int>& small, const std::vector<bool>& big) {
  return std::all_of(small.begin(), small.end(), [&](int i) { return big[i]; });
}

bool Intersects(const std::vector<int>& a, const std::vector<bool>& b) {
  return std::any_of(a.begin(), a.end(), [&](int i) { return b[i]; });
}

}  // namespace

const char* PolymatroidKindName(PolymatroidKind kind) {
  switch (kind) {
    case PolymatroidKind::kUniform:
      return "uniform";
    case PolymatroidKind::kPartition:
      return "partition";
    case PolymatroidKind::kLaminar:
      return "laminar";
  }
  return "unknown";
}

LaminarPolymatroid LaminarPolymatroid::Uniform(int n, double budget) {
  if (n <= 0) throw std::invalid_argument("uniform polymatroid needs n >= 1");
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  return LaminarPolymatroid(PolymatroidKind::kUniform, n,
                            {CapacitatedSet{std::move(all), budget}});
}

LaminarPolymatroid LaminarPolymatroid::Partition(
    int n, std::vector<CapacitatedSet> parts) {
  LaminarPolymatroid pm(PolymatroidKind::kPartition, n, std::move(parts));
  std::vector<bool> seen(n, false);
  for (const CapacitatedSet& part : pm.family_) {
    for (int i : part.members) {
      if (seen[i]) {
        throw std::invalid_argument("partition parts overlap at element " +
                                    std::to_string(i));
      }
      seen[i] = true;
    }
  }
  return pm;
}

LaminarPolymatroid LaminarPolymatroid::Laminar(
    int n, std::vector<CapacitatedSet> sets) {
  return LaminarPolymatroid(PolymatroidKind::kLaminar, n, std::move(sets));
}

LaminarPolymatroid::LaminarPolymatroid(PolymatroidKind kind, int n,
                                       std::vector<CapacitatedSet> family)
    : kind_(kind), n_(n), family_(std::move(family)) {
  if (n <= 0) throw std::invalid_argument("polymatroid needs n >= 1");
  sorted_ = family_;
  for (CapacitatedSet& s : sorted_) {
    if (!std::isfinite(s.capacity) || s.capacity < 0.0) {
      throw std::invalid_argument("set capacities must be finite and >= 0");
    }
    std::sort(s.members.begin(), s.members.end());
    if (std::adjacent_find(s.members.begin(), s.members.end()) !=
        s.members.end()) {
      throw std::invalid_argument("a constraint set repeats an element");
    }
    for (int i : s.members) {
      if (i < 0 || i >= n) {
        throw std::invalid_argument("element index " + std::to_string(i) +
                                    " out of range");
      }
    }
  }
  std::stable_sort(sorted_.begin(), sorted_.end(),
                   [](const CapacitatedSet& a, const CapacitatedSet& b) {
                     return a.members.size() < b.members.size();
                   });
  const int sets = static_cast<int>(sorted_.size());
  in_set_.assign(sets, std::vector<bool>(n, false));
  for (int f = 0; f < sets; ++f) {
    for (int i : sorted_[f].members) in_set_[f][i] = true;
  }
  parent_.assign(sets, -1);
  for (int f = 0; f < sets; ++f) {
    for (int g = f + 1; g < sets; ++g) {
      if (!Intersects(sorted_[f].members, in_set_[g])) continue;
      if (!IsSubsetOf(sorted_[f].members, in_set_[g])) {
        throw std::invalid_argument(
            "non-laminar family: sets overlap without"
            " nesting");
      }
      if (parent_[f] == -1) parent_[f] = g;
    }
  }
  chain_.assign(n, {});
  for (int f = 0; f < sets; ++f) {
    for (int i : sorted_[f].members) chain_[i].push_back(f);
  }
  direct_.assign(sets, {});
  for (int i = 0; i < n; ++i) {
    if (!chain_[i].empty()) direct_[chain_[i].front()].push_back(i);
  }
}

double LaminarPolymatroid::Rank(const Subset& s) const {
  if (static_cast<int>(s.size()) != n_) {
    throw std::invalid_argument("rank: subset has wrong ground-set size");
  }
  const int sets = static_cast<int>(sorted_.size());
  std::vector<double> children_value(sets, 0.0);
  double rank = 0.0;
  for (int f = 0; f < sets; ++f) {
    double inner = children_value[f];
    for (int i : direct_[f]) inner += s[i] ? 1.0 : 0.0;
    const double value = std::min(sorted_[f].capacity, inner);
    if (parent_[f] >= 0) {
      children_value[parent_[f]] += value;
    } else {
      rank += value;
    }
  }
  for (int i = 0; i < n_; ++i) {
    if (s[i] && chain_[i].empty()) rank += 1.0;
  }
  return rank;
}

double LaminarPolymatroid::Load(std::span<const double> x, int set) const {
  double load = 0.0;
  for (int i : sorted_[set].members) load += x[i];
  return load;
}

void LaminarPolymatroid::CheckPoint(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != n_) {
    throw std::invalid_argument("point has wrong dimension");
  }
  for (double v : x) {
    if (!(v >= 0.0)) throw std::invalid_argument("point has a negative entry");
  }
}

bool LaminarPolymatroid::Contains(std::span<const double> x,
                                  double scale) const {
  CheckPoint(x);
  for (double v : x) {
    if (v > scale + kTightTolerance) return false;
  }
  for (size_t f = 0; f < sorted_.size(); ++f) {
    if (Load(x, f) > scale * sorted_[f].capacity + kTightTolerance) {
      return false;
    }
  }
  return true;
}

Subset LaminarPolymatroid::TightSet(std::span<const double> x,
                                    double scale) const {
  if (!Contains(x, scale)) {
    throw std::invalid_argument("tight set: point is outside scale * P");
  }
  Subset tight(n_, false);
  for (int i = 0; i < n_; ++i) {
    if (x[i] >= scale - kTightTolerance) tight[i] = true;
  }
  for (size_t f = 0; f < sorted_.size(); ++f) {
    if (Load(x, f) >= scale * sorted_[f].capacity - kTightTolerance) {
      for (int i : sorted_[f].members) tight[i] = true;
    }
  }
  return tight;
}

double LaminarPolymatroid::Headroom(std::span<const double> x, double scale,
                                    int i) const {
  double room = scale - x[i];
  for (int f : chain_[i]) {
    room = std::min(room, scale * sorted_[f].capacity - Load(x, f));
  }
  return std::max(room, 0.0);
}

std::optional<Subset> LaminarPolymatroid::MinimalTightSet(
    std::span<const double> x, int i) const {
  // A tight set containing i must contain every element of the smallest tight
  // constraint through i that carries positive mass, and that set is itself
  // tight.
  Subset result(n_, false);
  if (x[i] >= 1.0 - kTightTolerance) {
    result[i] = true;
    return result;
  }
  for (int f : chain_[i]) {
    if (Load(x, f) >= sorted_[f].capacity - kTightTolerance) {
      for (int j : sorted_[f].members) result[j] = x[j] > 0.0;
      result[i] = true;
      return result;
    }
  }
  return std::nullopt;
}

double LaminarPolymatroid::SwapHeadroom(std::span<const double> x, int i,
                                        int j) const {
  if (i == j) return std::numeric_limits<double>::infinity();
  double room = 1.0 - x[i];
  for (int f : chain_[i]) {
    if (in_set_[f][j]) break;  // this set and every larger one contain j
    room = std::min(room, sorted_[f].capacity - Load(x, f));
  }
  return std::max(room, 0.0);
}

double LaminarPolymatroid::Margin(std::span<const double> x) const {
  CheckPoint(x);
  double margin = std::numeric_limits<double>::infinity();
  for (double v : x) margin = std::min(margin, 1.0 - v);
  for (size_t f = 0; f < sorted_.size(); ++f) {
    margin = std::min(margin, sorted_[f].capacity - Load(x, f));
  }
  return margin;
}

std::vector<double> Waterfill(const Polymatroid& pm, std::span<const double> x,
                              const Subset& eligible, double eps) {
  const int n = pm.size();
  if (static_cast<int>(x.size()) != n ||
      static_cast<int>(eligible.size()) != n) {
    throw std::invalid_argument("waterfill: dimension mismatch");
  }
  if (!(eps > 0.0)) throw std::invalid_argument("waterfill: eps must be > 0");
  const double scale = eps / (1.0 + eps);
  if (!pm.Contains(x, scale)) {
    throw std::invalid_argument("waterfill: (1+eps) x is not in eps * P");
  }
  std::vector<double> current(x.begin(), x.end());
  std::vector<double> y(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (!eligible[i]) continue;
    y[i] = std::min(eps * x[i], pm.Headroom(current, scale, i));
    current[i] += y[i];
  }
  return y;
}

ExchangeResult ExchangeVector(const Polymatroid& pm, std::span<const double> a,
                              std::span<const double> b,
                              std::span<const double> c) {
  const int n = pm.size();
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n ||
      static_cast<int>(c.size()) != n) {
    throw std::invalid_argument("exchange vector: dimension mismatch");
  }
  std::vector<double> a_plus_c(n);
  for (int i = 0; i < n; ++i) {
    if (!(a[i] >= 0.0) || !(c[i] >= 0.0) || !(b[i] >= 0.0)) {
      throw std::invalid_argument("exchange vector: negative entry");
    }
    if (a[i] > b[i] + kTightTolerance) {
      throw std::invalid_argument("exchange vector: a <= b violated");
    }
    a_plus_c[i] = a[i] + c[i];
  }
  if (!pm.Contains(a_plus_c, 1.0) || !pm.Contains(b, 1.0)) {
    throw std::invalid_argument("exchange vector: a + c or b outside P");
  }

  ExchangeResult result;
  std::vector<double> b_hat(a.begin(), a.end());
  std::vector<double>& d_hat = result.d;
  d_hat.assign(c.begin(), c.end());
  std::vector<double> sum(n);
  auto refresh = [&] {
    for (int k = 0; k < n; ++k) sum[k] = b_hat[k] + d_hat[k];
  };
  const int step_cap = 4 * n * n;

  for (int i = 0; i < n; ++i) {
    while (b_hat[i] < b[i]) {
      if (result.steps >= step_cap) {
        result.overrun = true;
        return result;
      }
      ++result.steps;
      refresh();
      const double need = b[i] - b_hat[i];
      const double delta = pm.Headroom(sum, 1.0, i);
      if (delta >= need) {
        b_hat[i] = b[i];
        break;
      }
      b_hat[i] += delta;
      sum[i] += delta;
      const std::optional<Subset> tight = pm.MinimalTightSet(sum, i);
      if (!tight) continue;
      int donor = -1;
      for (int j = 0; j < n; ++j) {
        if ((*tight)[j] && d_hat[j] > 0.0) {
          donor = j;
          break;
        }
      }
      const double remaining = b[i] - b_hat[i];
      if (donor < 0) {
        if (remaining <= kTightTolerance) {
          b_hat[i] = b[i];
          break;
        }
        throw std::logic_error(
            "exchange vector: tight set has no donor coordinate; the rank "
            "oracle is inconsistent");
      }
      const double gamma = pm.SwapHeadroom(sum, i, donor);
      const double shift = std::min({remaining, gamma, d_hat[donor]});
      if (shift >= remaining) {
        b_hat[i] = b[i];
      } else {
        b_hat[i] += shift;
      }
      d_hat[donor] -= shift;
    }
  }
  return result;
}

}  // namespace drmax
