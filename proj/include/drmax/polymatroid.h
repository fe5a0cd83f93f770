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

#ifndef DRMAX_POLYMATROID_H_
#define DRMAX_POLYMATROID_H_

#include <optional>
#include <span>
#include <vector>

#include "drmax/objective.h"

namespace drmax {

// Absolute slack used when deciding whether x(S) == scale * r(S).
inline constexpr double kTightTolerance = 1e-9;

// Polytope P = {x >= 0 : x(S) <= r(S) for all S} of a monotone, submodular,
// normalized rank function r.
//
// This is the extension point for user rank functions: an implementation has
// to provide the exact tight-set and headroom primitives below, since no
// generic submodular minimization is shipped. All methods are const and
// thread-safe.
class Polymatroid {
 public:
  virtual ~Polymatroid() = default;

  virtual int size() const = 0;
  virtual double Rank(const Subset& s) const = 0;

  // True iff x(S) <= scale * r(S) for every S (within kTightTolerance).
  // Throws std::invalid_argument on negative entries.
  virtual bool Contains(std::span<const double> x, double scale) const = 0;

  // The unique maximal S with x(S) = scale * r(S). Requires x in scale * P.
  virtual Subset TightSet(std::span<const double> x, double scale) const = 0;

  // Largest delta >= 0 with x + delta e_i in scale * P.
  virtual double Headroom(std::span<const double> x, double scale,
                          int i) const = 0;

  // Minimal x-tight set (scale 1) containing i; nullopt if i is in no tight
  // set.
  virtual std::optional<Subset> MinimalTightSet(std::span<const double> x,
                                                int i) const = 0;

  // Largest gamma >= 0 with x + gamma (e_i - e_j) satisfying every rank
  // constraint (non-negativity of x_j is the caller's concern).
  virtual double SwapHeadroom(std::span<const double> x, int i,
                              int j) const = 0;

  // min_S r(S) - x(S) over the defining constraints; negative when x is
  // outside P.
  virtual double Margin(std::span<const double> x) const = 0;
};

enum class PolymatroidKind { kUniform, kPartition, kLaminar };

const char* PolymatroidKindName(PolymatroidKind kind);

struct CapacitatedSet {
  std::vector<int> members;
  double capacity = 0.0;

  friend bool operator==(const CapacitatedSet&,
                         const CapacitatedSet&) = default;
};

// Polymatroid of a laminar family with per-set capacities, plus an implicit
// capacity of 1 on every singleton. Uniform (one set holding everything) and
// partition (disjoint sets) constraints are the special cases; with integer
// capacities this is the laminar matroid polytope.
class LaminarPolymatroid final : public Polymatroid {
 public:
  static LaminarPolymatroid Uniform(int n, double budget);
  static LaminarPolymatroid Partition(int n, std::vector<CapacitatedSet> parts);
  static LaminarPolymatroid Laminar(int n, std::vector<CapacitatedSet> sets);

  PolymatroidKind kind() const { return kind_; }
  // The family as given (before internal sorting).
  const std::vector<CapacitatedSet>& family() const { return family_; }

  int size() const override { return n_; }
  double Rank(const Subset& s) const override;
  bool Contains(std::span<const double> x, double scale) const override;
  Subset TightSet(std::span<const double> x, double scale) const override;
  double Headroom(std::span<const double> x, double scale,
                  int i) const override;
  std::optional<Subset> MinimalTightSet(std::span<const double> x,
                                        int i) const override;
  double SwapHeadroom(std::span<const double> x, int i, int j) const override;
  double Margin(std::span<const double> x) const override;

 private:
  LaminarPolymatroid(PolymatroidKind kind, int n,
                     std::vector<CapacitatedSet> family);

  double Load(std::span<const double> x, int set) const;
  void CheckPoint(std::span<const double> x) const;

  PolymatroidKind kind_;
  int n_;
  std::vector<CapacitatedSet> family_;
  // Sets ordered by size, ascending.
  std::vector<CapacitatedSet> sorted_;
  std::vector<std::vector<bool>> in_set_;
  // For each element, the indices into sorted_ of the sets containing it,
  // smallest first (a chain, by laminarity).
  std::vector<std::vector<int>> chain_;
  // Smallest strict superset in sorted_, or -1.
  std::vector<int> parent_;
  // Elements of a set not covered by any child set.
  std::vector<std::vector<int>> direct_;
};

// Sequential water-filling step: visits i = 0..n-1 in order and, for eligible
// i, raises y_i to the largest value with y_i <= eps * x_i and
// (1 + eps)(x + y) in eps * P. Requires (1 + eps) x in eps * P.
std::vector<double> Waterfill(const Polymatroid& pm, std::span<const double> x,
                              const Subset& eligible, double eps);

struct ExchangeResult {
  std::vector<double> d;
  int steps = 0;
  // True when the 4 n^2 step cap was hit; d is then not meaningful.
  bool overrun = false;
};

// Given a + c in P, b in P and a <= b, constructs d with 0 <= d <= c,
// b + d in P and ||c - d||_1 <= ||b - a||_1 by moving b-hat from a up to b
// and shifting mass out of d-hat along minimal tight sets. Test support for
// the solver analysis; not used on the solve path.
ExchangeResult ExchangeVector(const Polymatroid& pm, std::span<const double> a,
                              std::span<const double> b,
                              std::span<const double> c);

}  // namespace drmax

#endif  // DRMAX_POLYMATROID_H_
