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

#ifndef DRMAX_SPARSE_MATRIX_H_
#define DRMAX_SPARSE_MATRIX_H_

#include <span>
#include <vector>

namespace drmax {

struct Triplet {
  int row = 0;
  int col = 0;
  double value = 0.0;

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

// Non-negative matrix in compressed sparse row form. Products use a fixed
// summation order (ascending column within a row for A x, ascending row within
// a column for A^T p) so results are reproducible bit for bit.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  // Triplets may come in any order; they are sorted by (row, col). Duplicate
  // positions, negative or non-finite values, and out-of-range indices throw.
  // Explicit zeros are dropped.
  SparseMatrix(int rows, int cols, std::vector<Triplet> triplets);

  static SparseMatrix FromDense(const std::vector<std::vector<double>>& dense);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nonzeros() const { return static_cast<int>(values_.size()); }

  std::vector<double> Multiply(std::span<const double> x) const;
  std::vector<double> TransposeMultiply(std::span<const double> p) const;
  // max_r A[r][c] for every column.
  std::vector<double> ColumnMax() const;
  // Sorted (row, col) triplets.
  std::vector<Triplet> ToTriplets() const;
  std::vector<std::vector<double>> ToDense() const;

  // Stacks `other` below this matrix; column counts must agree.
  SparseMatrix StackBelow(const SparseMatrix& other) const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> row_start_{0};
  std::vector<int> col_index_;
  std::vector<double> values_;
};

// Infinity norm of a vector (0 for an empty vector).
double MaxNorm(std::span<const double> v);

}  // namespace drmax

#endif  // DRMAX_SPARSE_MATRIX_H_
