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

#ifndef DRMAX_SOFTMAX_H_
#define DRMAX_SOFTMAX_H_

#include <span>
#include <vector>

#include "drmax/sparse_matrix.h"

namespace drmax {

struct SoftmaxParams {
  double eta = 1.0;
};

// smax_eta(z) = eta * ln(sum_j exp(z_j / eta)), evaluated with a max shift.
// Satisfies ||z||_inf <= smax(z) <= eta ln m + ||z||_inf for z >= 0.
double Smax(std::span<const double> z, const SoftmaxParams& params);

// Softmax distribution exp(z_j/eta) / sum_l exp(z_l/eta).
std::vector<double> SmaxGradient(std::span<const double> z,
                                 const SoftmaxParams& params);

// Upper bound on smax(A(x + d)) for a non-negative update d:
//
//   smax(Ax) + <A^T grad smax(Ax), d + ||Ax||_inf / eta * D(x)^+ (d o d)>
//
// where D(x)^+ inverts the non-zero entries of x. Requires
// ||A d||_inf / eta <= 1/2 and throws std::domain_error otherwise.
double IncrementBound(std::span<const double> x, std::span<const double> d,
                      const SparseMatrix& a, const SoftmaxParams& params);

// Diagonal step scaling max(1 - lambda (A^T grad smax(Ax))_i / c_i, 0), with 0
// wherever c_i == 0. With d = eta * scaling o x this is the update rule of the
// packing solvers.
std::vector<double> StepScaling(std::span<const double> x,
                                std::span<const double> c, double lambda,
                                const SparseMatrix& a,
                                const SoftmaxParams& params);

// smax(Ax) + eta <A^T grad smax(Ax), M x + M^2 x> for diagonal M = scaling.
double ScaledStepBound(std::span<const double> x,
                       std::span<const double> scaling, const SparseMatrix& a,
                       const SoftmaxParams& params);

}  // namespace drmax

#endif  // DRMAX_SOFTMAX_H_
