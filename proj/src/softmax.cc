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

#include "drmax/softmax.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace drmax {
namespace {

void CheckInput(std::span<const double> z, const SoftmaxParams& params) {
  if (z.empty()) throw std::invalid_argument("softmax of an empty vector");
  if (!(params.eta > 0.0) || !std::isfinite(params.eta)) {
    throw std::invalid_argument("softmax eta must be finite and positive");
  }
  for (double v : z) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("softmax input has a non-finite entry");
    }
  }
}

double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

double Smax(std::span<const double> z, const SoftmaxParams& params) {
  CheckInput(z, params);
  const double zmax = *std::max_element(z.begin(), z.end());
  double sum = 0.0;
  for (double v : z) sum += std::exp((v - zmax) / params.eta);
  return zmax + params.eta * std::log(sum);
}

std::vector<double> SmaxGradient(std::span<const double> z,
                                 const SoftmaxParams& params) {
  CheckInput(z, params);
  const double zmax = *std::max_element(z.begin(), z.end());
  std::vector<double> p(z.size());
  double sum = 0.0;
  for (size_t j = 0; j < z.size(); ++j) {
    p[j] = std::exp((z[j] - zmax) / params.eta);
    sum += p[j];
  }
  for (double& v : p) v /= sum;
  return p;
}

double IncrementBound(std::span<const double> x, std::span<const double> d,
                      const SparseMatrix& a, const SoftmaxParams& params) {
  if (static_cast<int>(x.size()) != a.cols() || d.size() != x.size()) {
    throw std::invalid_argument("increment bound: dimension mismatch");
  }
  const double reach = MaxNorm(a.Multiply(d)) / params.eta;
  if (reach > 0.5) {
    throw std::domain_error("increment bound: ||A d||/eta = " +
                            std::to_string(reach) + " exceeds 1/2");
  }
  const std::vector<double> ax = a.Multiply(x);
  const double load = MaxNorm(ax);
  const std::vector<double> w = a.TransposeMultiply(SmaxGradient(ax, params));
  std::vector<double> step(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    const double second = x[i] != 0.0 ? d[i] * d[i] / x[i] : 0.0;
    step[i] = d[i] + load / params.eta * second;
  }
  return Smax(ax, params) + Dot(w, step);
}

std::vector<double> StepScaling(std::span<const double> x,
                                std::span<const double> c, double lambda,
                                const SparseMatrix& a,
                                const SoftmaxParams& params) {
  if (c.size() != x.size()) {
    throw std::invalid_argument("step scaling: dimension mismatch");
  }
  const std::vector<double> w =
      a.TransposeMultiply(SmaxGradient(a.Multiply(x), params));
  std::vector<double> scaling(x.size(), 0.0);
  for (size_t i = 0; i < x.size(); ++i) {
    if (c[i] != 0.0) scaling[i] = std::max(1.0 - lambda * w[i] / c[i], 0.0);
  }
  return scaling;
}

double ScaledStepBound(std::span<const double> x,
                       std::span<const double> scaling, const SparseMatrix& a,
                       const SoftmaxParams& params) {
  const std::vector<double> ax = a.Multiply(x);
  const std::vector<double> w = a.TransposeMultiply(SmaxGradient(ax, params));
  std::vector<double> step(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    step[i] = scaling[i] * x[i] + scaling[i] * scaling[i] * x[i];
  }
  return Smax(ax, params) + params.eta * Dot(w, step);
}

}  // namespace drmax
