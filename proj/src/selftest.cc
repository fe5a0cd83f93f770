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

#include "drmax/selftest.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <utility>

#include "drmax/oracle_bruteforce.h"
#include "drmax/softmax.h"

namespace drmax {
namespace {

double Uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int UniformInt(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool Coin(std::mt19937_64& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

std::string Describe(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

std::string Describe(const std::vector<double>& v) {
  std::ostringstream out;
  out.precision(17);
  out << "[";
  for (size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << "]";
  return out.str();
}

std::string Describe(const SparseMatrix& a) {
  std::string out = "[";
  for (const std::vector<double>& row : a.ToDense()) {
    out += (out.size() > 1 ? ", " : "") + Describe(row);
  }
  return out + "]";
}

std::string Describe(const LaminarPolymatroid& pm) {
  std::ostringstream out;
  out << PolymatroidKindName(pm.kind()) << " n=" << pm.size() << " {";
  for (const CapacitatedSet& s : pm.family()) {
    out << " {";
    for (int i : s.members) out << i << ",";
    out << "}:" << s.capacity;
  }
  out << " }";
  return out.str();
}

void Record(PropertyResult& result, bool ok, const std::string& detail) {
  if (ok) return;
  if (result.violations++ == 0) result.first_counterexample = detail;
}

double Dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Largest t in [0, hi] such that `fits(t)`, assuming fits is monotone.
double Bisect(const std::function<bool(double)>& fits, double hi) {
  if (fits(hi)) return hi;
  double lo = 0.0;
  for (int k = 0; k < 200 && hi - lo > 1e-15; ++k) {
    const double mid = 0.5 * (lo + hi);
    (fits(mid) ? lo : hi) = mid;
  }
  return lo;
}

Objective RandomClosedForm(int kind, int n, std::mt19937_64& rng) {
  switch (kind % 3) {
    case 0:
      return RandomCoverage(n, UniformInt(rng, 1, 6), rng);
    case 1:
      return RandomDirectedCut(n, rng);
    default:
      return RandomLinear(n, rng);
  }
}

LaminarPolymatroid RandomKind(int kind, int n, std::mt19937_64& rng) {
  switch (kind % 3) {
    case 0:
      return RandomUniform(n, rng);
    case 1:
      return RandomPartition(n, rng);
    default:
      return RandomLaminar(n, rng);
  }
}

void Split(std::vector<int>::const_iterator begin,
           std::vector<int>::const_iterator end, std::mt19937_64& rng,
           std::vector<CapacitatedSet>& sets) {
  const int size = static_cast<int>(end - begin);
  if (size <= 1) return;
  const int cut = UniformInt(rng, 1, size - 1);
  for (auto [b, e] :
       {std::pair{begin, begin + cut}, std::pair{begin + cut, end}}) {
    if (Coin(rng, 0.6)) {
      const int len = static_cast<int>(e - b);
      sets.push_back({std::vector<int>(b, e),
                      static_cast<double>(UniformInt(rng, 1, len))});
    }
    Split(b, e, rng, sets);
  }
}

}  // namespace

Objective RandomCoverage(int n, int items, std::mt19937_64& rng) {
  std::vector<double> weights(items);
  for (double& w : weights) w = Uniform(rng, 0.5, 2.0);
  std::vector<std::vector<int>> covers(n);
  for (int i = 0; i < n; ++i) {
    for (int u = 0; u < items; ++u) {
      if (Coin(rng, 0.4)) covers[i].push_back(u);
    }
    if (covers[i].empty()) covers[i].push_back(UniformInt(rng, 0, items - 1));
  }
  return Objective::Coverage(n, std::move(weights), std::move(covers));
}

Objective RandomDirectedCut(int n, std::mt19937_64& rng) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && Coin(rng, 0.5))
        arcs.push_back({u, v, Uniform(rng, 0.5, 2.0)});
    }
  }
  if (arcs.empty() && n >= 2) arcs.push_back({0, 1, Uniform(rng, 0.5, 2.0)});
  return Objective::DirectedCut(n, std::move(arcs));
}

Objective RandomLinear(int n, std::mt19937_64& rng) {
  std::vector<double> weights(n);
  for (double& w : weights) w = Uniform(rng, 0.5, 2.0);
  return Objective::Linear(std::move(weights));
}

LaminarPolymatroid RandomPartition(int n, std::mt19937_64& rng) {
  const int parts = UniformInt(rng, 1, n);
  std::vector<std::vector<int>> members(parts);
  for (int i = 0; i < n; ++i)
    members[UniformInt(rng, 0, parts - 1)].push_back(i);
  std::vector<CapacitatedSet> sets;
  for (auto& m : members) {
    if (m.empty()) continue;
    const int cap = UniformInt(rng, 1, static_cast<int>(m.size()));
    sets.push_back({std::move(m), static_cast<double>(cap)});
  }
  return LaminarPolymatroid::Partition(n, std::move(sets));
}

LaminarPolymatroid RandomLaminar(int n, std::mt19937_64& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<CapacitatedSet> sets;
  sets.push_back({order, static_cast<double>(UniformInt(rng, 1, n))});
  Split(order.cbegin(), order.cend(), rng, sets);
  return LaminarPolymatroid::Laminar(n, std::move(sets));
}

LaminarPolymatroid RandomUniform(int n, std::mt19937_64& rng) {
  return LaminarPolymatroid::Uniform(n, UniformInt(rng, 1, n));
}

SparseMatrix RandomPacking(int m, int n, double lo, double hi,
                           std::mt19937_64& rng) {
  std::vector<Triplet> triplets;
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c)
      triplets.push_back({r, c, Uniform(rng, lo, hi)});
  }
  return SparseMatrix(m, n, std::move(triplets));
}

double MaxFeasibleScale(const Polymatroid& pm, const std::vector<double>& y,
                        double scale) {
  // Exact test (no tolerance), so the result lies inside scale * P.
  return Bisect(
      [&](double alpha) {
        std::vector<double> x(y.size());
        for (size_t i = 0; i < y.size(); ++i) x[i] = alpha * y[i] / scale;
        return pm.Margin(x) >= 0.0;
      },
      1.0);
}

PropertyResult CheckSoftmaxBounds(int draws, uint64_t seed) {
  PropertyResult result;
  result.name = "softmax_increment_bounds";
  std::mt19937_64 rng(seed);
  constexpr double kTol = 1e-9;
  while (result.trials < draws) {
    const int m = UniformInt(rng, 1, 5);
    const int n = UniformInt(rng, 1, 5);
    std::vector<Triplet> triplets;
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < n; ++c) {
        if (Coin(rng, 0.7)) triplets.push_back({r, c, Uniform(rng, 0.0, 1.0)});
      }
    }
    const SparseMatrix a(m, n, std::move(triplets));
    const SoftmaxParams params{Uniform(rng, 0.02, 1.0)};
    std::vector<double> x(n);
    for (double& v : x) v = Coin(rng, 0.2) ? 0.0 : Uniform(rng, 0.0, 1.0);
    const double load = MaxNorm(a.Multiply(x));
    if (load > 0.0) {
      const double target = Uniform(rng, 0.0, 1.0);
      for (double& v : x) v *= target / load;
    }
    const std::vector<double> ax = a.Multiply(x);
    const double base = Smax(ax, params);

    // Multiplicative step with the diagonal scaling; the draw only counts when
    // the increment hypothesis ||A d|| / eta <= 1/2 holds for it.
    std::vector<double> c(n);
    for (double& v : c) v = Coin(rng, 0.2) ? 0.0 : Uniform(rng, 0.0, 2.0);
    const double lambda = Uniform(rng, 0.05, 5.0);
    const std::vector<double> scaling = StepScaling(x, c, lambda, a, params);
    std::vector<double> step(n);
    for (int i = 0; i < n; ++i) step[i] = params.eta * scaling[i] * x[i];
    if (MaxNorm(a.Multiply(step)) / params.eta > 0.5) continue;

    // Arbitrary update supported on supp(x).
    std::vector<double> d(n);
    for (int i = 0; i < n; ++i)
      d[i] = x[i] > 0.0 ? Uniform(rng, 0.0, 1.0) : 0.0;
    const double reach = MaxNorm(a.Multiply(d)) / params.eta;
    if (reach > 0.0) {
      const double target = Uniform(rng, 0.0, 0.5);
      for (double& v : d) v *= target / reach;
    }
    ++result.trials;
    const std::string draw = "A=" + Describe(a) +
                             " eta=" + Describe(params.eta) +
                             " x=" + Describe(x);

    std::vector<double> moved(n);
    for (int i = 0; i < n; ++i) moved[i] = x[i] + d[i];
    const double lhs = Smax(a.Multiply(moved), params);
    const double rhs = IncrementBound(x, d, a, params);
    Record(result, lhs <= rhs + kTol,
           "increment bound: " + draw + " d=" + Describe(d));

    for (int i = 0; i < n; ++i) moved[i] = x[i] + step[i];
    const double after = Smax(a.Multiply(moved), params);
    Record(result, after <= ScaledStepBound(x, scaling, a, params) + kTol,
           "scaled step bound: " + draw + " c=" + Describe(c) +
               " lambda=" + Describe(lambda));
    const double gain = Dot(c, step);
    if (gain > 0.0) {
      Record(result, after - base <= gain / lambda + kTol,
             "step ratio bound: " + draw + " c=" + Describe(c) +
                 " lambda=" + Describe(lambda));
    }
  }
  return result;
}

PropertyResult CheckExchangeVectors(int draws, uint64_t seed) {
  PropertyResult result;
  result.name = "exchange_vector";
  std::mt19937_64 rng(seed);
  for (int k = 0; k < draws; ++k) {
    const int n = UniformInt(rng, 1, 6);
    const LaminarPolymatroid pm =
        k % 2 == 0 ? RandomPartition(n, rng) : RandomLaminar(n, rng);
    std::vector<double> y(n);
    for (double& v : y) v = Uniform(rng, 0.0, 1.0);
    const double alpha = MaxFeasibleScale(pm, y, 1.0) *
                         (Coin(rng, 0.5) ? 1.0 : Uniform(rng, 0, 1));
    std::vector<double> b(n), a(n), dir(n);
    for (int i = 0; i < n; ++i) {
      b[i] = alpha * y[i];
      const double share = Coin(rng, 0.2)   ? 1.0
                           : Coin(rng, 0.2) ? 0.0
                                            : Uniform(rng, 0, 1);
      a[i] = b[i] * share;
      dir[i] = Coin(rng, 0.2) ? 0.0 : Uniform(rng, 0.0, 1.0);
    }
    const double beta = Bisect(
                            [&](double t) {
                              std::vector<double> p(n);
                              for (int i = 0; i < n; ++i)
                                p[i] = a[i] + t * dir[i];
                              return pm.Margin(p) >= 0.0;
                            },
                            1.0) *
                        (Coin(rng, 0.5) ? 1.0 : Uniform(rng, 0, 1));
    std::vector<double> c(n);
    for (int i = 0; i < n; ++i) c[i] = beta * dir[i];
    ++result.trials;
    const std::string draw = Describe(pm) + " a=" + Describe(a) +
                             " b=" + Describe(b) + " c=" + Describe(c);
    try {
      const ExchangeResult ex = ExchangeVector(pm, a, b, c);
      if (ex.overrun) {
        Record(result, false, "step cap reached: " + draw);
        continue;
      }
      bool bounds = true;
      std::vector<double> sum(n);
      double lost = 0.0, moved = 0.0;
      for (int i = 0; i < n; ++i) {
        bounds = bounds && ex.d[i] >= -1e-12 && ex.d[i] <= c[i] + 1e-12;
        sum[i] = b[i] + ex.d[i];
        lost += std::abs(c[i] - ex.d[i]);
        moved += std::abs(b[i] - a[i]);
      }
      Record(result, bounds, "0 <= d <= c fails: " + draw);
      Record(result, ExhaustiveMembership(pm, sum, 1.0),
             "b + d outside P: " + draw + " d=" + Describe(ex.d));
      Record(result, lost <= moved + 1e-9,
             "||c - d|| > ||b - a||: " + draw + " d=" + Describe(ex.d));
    } catch (const std::exception& e) {
      Record(result, false, std::string(e.what()) + ": " + draw);
    }
  }
  return result;
}

PropertyResult CheckGradients(int draws, uint64_t seed) {
  PropertyResult result;
  result.name = "gradient_vs_finite_differences";
  std::mt19937_64 rng(seed);
  for (int kind = 0; kind < 3; ++kind) {
    for (int k = 0; k < draws; ++k) {
      const int n = UniformInt(rng, 2, 6);
      const Objective obj = RandomClosedForm(kind, n, rng);
      std::vector<double> x(n);
      for (double& v : x) v = Uniform(rng, 0.05, 0.95);
      const std::vector<double> fd = FiniteDiffGrad(obj, x, 1e-5);
      const std::vector<double> g = obj.Gradient(x);
      ++result.trials;
      bool ok = true;
      for (int i = 0; i < n; ++i) {
        ok = ok &&
             std::abs(fd[i] - g[i]) <= 1e-5 * std::max(1.0, std::abs(g[i]));
      }
      Record(result, ok,
             std::string(ObjectiveKindName(obj.kind())) + " x=" + Describe(x) +
                 " grad=" + Describe(g) + " fd=" + Describe(fd));
    }
  }
  return result;
}

PropertyResult CheckSampledEstimator(int instances, int samples,
                                     uint64_t seed) {
  PropertyResult result;
  result.name = "sampled_vs_enumeration";
  std::mt19937_64 rng(seed);
  for (int k = 0; k < instances; ++k) {
    const int n = UniformInt(rng, 2, 12);
    const Objective source = k % 2 == 0
                                 ? RandomCoverage(n, UniformInt(rng, 1, 8), rng)
                                 : RandomDirectedCut(n, rng);
    const Objective sampled = Objective::SampledFrom(source, samples, rng());
    std::vector<double> x(n);
    for (double& v : x) v = Uniform(rng, 0.0, 1.0);
    const Estimate est = sampled.ValueEstimate(x);
    const double exact = ExactMultilinear(source, x);
    ++result.trials;
    const double allowed =
        est.standard_error > 0.0 ? 3.0 * est.standard_error : 1e-12;
    Record(result, std::abs(est.value - exact) <= allowed,
           std::string(ObjectiveKindName(source.kind())) +
               " n=" + std::to_string(n) + " x=" + Describe(x) + " estimate=" +
               std::to_string(est.value) + " exact=" + std::to_string(exact) +
               " se=" + std::to_string(est.standard_error));
  }
  return result;
}

PropertyResult CheckPolymatroidOracles(int draws, uint64_t seed) {
  PropertyResult result;
  result.name = "polymatroid_vs_exhaustive";
  std::mt19937_64 rng(seed);
  for (int k = 0; k < draws; ++k) {
    const int n = UniformInt(rng, 1, 8);
    const LaminarPolymatroid pm = RandomKind(k, n, rng);
    const std::string name = Describe(pm);
    ++result.trials;

    // Rank: normalized, monotone and submodular (local exchange form).
    bool rank_ok = pm.Rank(Subset(n, false)) == 0.0;
    for (uint32_t mask = 0; mask < (1u << n) && rank_ok; ++mask) {
      Subset s(n);
      for (int i = 0; i < n; ++i) s[i] = (mask >> i) & 1u;
      const double rs = pm.Rank(s);
      for (int i = 0; i < n; ++i) {
        if (s[i]) continue;
        Subset si = s;
        si[i] = true;
        const double rsi = pm.Rank(si);
        rank_ok = rank_ok && rsi >= rs;
        for (int j = i + 1; j < n; ++j) {
          if (s[j]) continue;
          Subset sj = s, sij = si;
          sj[j] = sij[j] = true;
          rank_ok = rank_ok && rsi + pm.Rank(sj) >= pm.Rank(sij) + rs - 1e-12;
        }
      }
    }
    Record(result, rank_ok, "rank not monotone submodular: " + name);

    const double scale = Coin(rng, 0.5) ? 1.0 : Uniform(rng, 0.05, 1.0);
    std::vector<double> y(n);
    for (double& v : y) v = Coin(rng, 0.2) ? 0.0 : Uniform(rng, 0.0, 1.0);
    const double alpha = MaxFeasibleScale(pm, y, scale);
    const double factor = Coin(rng, 0.5)   ? 1.0
                          : Coin(rng, 0.5) ? 1.2
                                           : Uniform(rng, 0, 1);
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = alpha * factor * y[i];
    const bool inside = pm.Contains(x, scale);
    Record(result, inside == ExhaustiveMembership(pm, x, scale),
           "membership disagrees: " + name + " x=" + Describe(x) +
               " scale=" + Describe(scale));
    if (inside) {
      Record(result, pm.TightSet(x, scale) == ExhaustiveTightSet(pm, x, scale),
             "tight set disagrees: " + name + " x=" + Describe(x) +
                 " scale=" + Describe(scale));
    }

    // Water-filling against per-coordinate bisection on the exhaustive
    // oracle (strict tolerance so that the oracle does not overshoot).
    const double eps = Coin(rng, 0.5) ? 0.05 : Uniform(rng, 0.01, 0.5);
    const double s = eps / (1.0 + eps);
    const double beta = MaxFeasibleScale(pm, y, s) *
                        (Coin(rng, 0.3) ? 1.0 : Uniform(rng, 0, 1));
    std::vector<double> base(n);
    for (int i = 0; i < n; ++i) base[i] = beta * y[i];
    Subset eligible(n);
    for (int i = 0; i < n; ++i) eligible[i] = Coin(rng, 0.7);
    const std::vector<double> fill = Waterfill(pm, base, eligible, eps);
    std::vector<double> current = base;
    bool fill_ok = true;
    for (int i = 0; i < n; ++i) {
      double expected = 0.0;
      if (eligible[i]) {
        expected = Bisect(
            [&](double t) {
              std::vector<double> p = current;
              p[i] += t;
              return ExhaustiveMembership(pm, p, s, 1e-13);
            },
            eps * base[i]);
      }
      fill_ok = fill_ok && std::abs(fill[i] - expected) <= 1e-9;
      current[i] += expected;
    }
    std::vector<double> filled(n);
    for (int i = 0; i < n; ++i) filled[i] = base[i] + fill[i];
    fill_ok = fill_ok && ExhaustiveMembership(pm, filled, s);
    Record(result, fill_ok,
           "water-filling disagrees: " + name + " x=" + Describe(base) +
               " eps=" + Describe(eps) + " y=" + Describe(fill));
  }
  return result;
}

PropertyResult CheckObjectiveShape(int draws, uint64_t seed) {
  PropertyResult result;
  result.name = "objective_shape";
  std::mt19937_64 rng(seed);
  constexpr double kSlack = 1e-9;
  for (int kind = 0; kind < 3; ++kind) {
    for (int k = 0; k < draws; ++k) {
      const int n = UniformInt(rng, 2, 6);
      const Objective obj = RandomClosedForm(kind, n, rng);
      std::vector<double> x(n), y(n), opt(n), d(n);
      for (int i = 0; i < n; ++i) {
        x[i] = Uniform(rng, 0.0, 1.0);
        y[i] = x[i] + Uniform(rng, 0.0, 1.0 - x[i]);
        opt[i] = Uniform(rng, 0.0, 1.0);
        d[i] = Uniform(rng, 0.0, 1.0 - x[i]);
      }
      ++result.trials;
      const std::string draw =
          std::string(ObjectiveKindName(obj.kind())) + " x=" + Describe(x);
      const std::vector<double> gx = obj.Gradient(x);
      const std::vector<double> gy = obj.Gradient(y);
      bool dr = true, sign = true;
      for (int i = 0; i < n; ++i) {
        dr = dr && gx[i] >= gy[i] - kSlack;
        sign = sign && (!obj.monotone() || gx[i] >= -kSlack);
      }
      Record(result, dr,
             "gradient not antitone: " + draw + " y=" + Describe(y));
      Record(result, sign, "monotone gradient negative: " + draw);

      std::vector<double> join(n);
      for (int i = 0; i < n; ++i) join[i] = std::max(x[i], opt[i]);
      Record(result,
             obj.Value(join) >= (1.0 - MaxNorm(x)) * obj.Value(opt) - kSlack,
             "lattice bound fails: " + draw + " opt=" + Describe(opt));

      double prev_slope = std::numeric_limits<double>::infinity();
      double prev = obj.Value(x);
      bool concave = true;
      for (double t : {0.25, 0.5, 0.75, 1.0}) {
        std::vector<double> p(n);
        for (int i = 0; i < n; ++i) p[i] = x[i] + t * d[i];
        const double v = obj.Value(p);
        const double slope = (v - prev) / 0.25;
        concave = concave && slope <= prev_slope + kSlack;
        prev_slope = slope;
        prev = v;
      }
      Record(result, concave, "slope increases: " + draw + " d=" + Describe(d));
    }
  }
  return result;
}

std::vector<PropertyResult> RunSelfTest(uint64_t seed) {
  return {CheckSoftmaxBounds(200, seed),
          CheckExchangeVectors(200, seed + 1),
          CheckGradients(30, seed + 2),
          CheckSampledEstimator(5, 20000, seed + 3),
          CheckPolymatroidOracles(100, seed + 4),
          CheckObjectiveShape(50, seed + 5)};
}

}  // namespace drmax
