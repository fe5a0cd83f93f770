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

#include "drmax/sparse_matrix.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace drmax {

SparseMatrix::SparseMatrix(int rows, int cols, std::vector<Triplet> triplets)
    : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) {
    throw std::invalid_argument("matrix dimensions must be non-negative");
  }
  std::sort(triplets.begin(), triplets.end(),
            [](const Triplet& a, const Triplet& b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });
  row_start_.assign(rows + 1, 0);
  for (size_t k = 0; k < triplets.size(); ++k) {
    const Triplet& t = triplets[k];
    if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols) {
      throw std::invalid_argument("triplet (" + std::to_string(t.row) + ", " +
                                  std::to_string(t.col) + ") out of range");
    }
    if (k > 0 && triplets[k - 1].row == t.row && triplets[k - 1].col == t.col) {
      throw std::invalid_argument("duplicate triplet at (" +
                                  std::to_string(t.row) + ", " +
                                  std::to_string(t.col) + ")");
    }
    if (!std::isfinite(t.value) || t.value < 0.0) {
      throw std::invalid_argument("matrix entries must be finite and >= 0");
    }
    if (t.value == 0.0) continue;
    col_index_.push_back(t.col);
    values_.push_back(t.value);
    ++row_start_[t.row + 1];
  }
  for (int r = 0; r < rows; ++r) row_start_[r + 1] += row_start_[r];
}

SparseMatrix SparseMatrix::FromDense(
    const std::vector<std::vector<double>>& dense) {
  const int rows = static_cast<int>(dense.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(dense[0].size());
  std::vector<Triplet> triplets;
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(dense[r].size()) != cols) {
      throw std::invalid_argument("ragged dense matrix");
    }
    for (int c = 0; c < cols; ++c) {
      if (dense[r][c] != 0.0) triplets.push_back({r, c, dense[r][c]});
    }
  }
  return SparseMatrix(rows, cols, std::move(triplets));
}

std::vector<double> SparseMatrix::Multiply(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != cols_) {
    throw std::invalid_argument("A x: dimension mismatch");
  }
  std::vector<double> out(rows_, 0.0);
  for (int r = 0; r < rows_; ++r) {
    double s = 0.0;
    for (int k = row_start_[r]; k < row_start_[r + 1]; ++k) {
      s += values_[k] * x[col_index_[k]];
    }
    out[r] = s;
  }
  return out;
}

std::vector<double> SparseMatrix::TransposeMultiply(
    std::span<const double> p) const {
  if (static_cast<int>(p.size()) != rows_) {
    throw std::invalid_argument("A^T p: dimension mismatch");
  }
  std::vector<double> out(cols_, 0.0);
  for (int r = 0; r < rows_; ++r) {
    for (int k = row_start_[r]; k < row_start_[r + 1]; ++k) {
      out[col_index_[k]] += values_[k] * p[r];
    }
  }
  return out;
}

std::vector<double> SparseMatrix::ColumnMax() const {
  std::vector<double> out(cols_, 0.0);
  for (size_t k = 0; k < values_.size(); ++k) {
    out[col_index_[k]] = std::max(out[col_index_[k]], values_[k]);
  }
  return out;
}

std::vector<Triplet> SparseMatrix::ToTriplets() const {
  std::vector<Triplet> out;
  out.reserve(values_.size());
  for (int r = 0; r < rows_; ++r) {
    for (int k = row_start_[r]; k < row_start_[r + 1]; ++k) {
      out.push_back({r, col_index_[k], values_[k]});
    }
  }
  return out;
}

std::vector<std::vector<double>> SparseMatrix::ToDense() const {
  std::vector<std::vector<double>> dense(rows_, std::vector<double>(cols_));
  for (const Triplet& t : ToTriplets()) dense[t.row][t.col] = t.value;
  return dense;
}

SparseMatrix SparseMatrix::StackBelow(const SparseMatrix& other) const {
  if (other.cols_ != cols_) {
    throw std::invalid_argument("stacked matrices need equal column counts");
  }
  std::vector<Triplet> triplets = ToTriplets();
  for (Triplet t : other.ToTriplets()) {
    t.row += rows_;
    triplets.push_back(t);
  }
  return SparseMatrix(rows_ + other.rows_, cols_, std::move(triplets));
}

double MaxNorm(std::span<const double> v) {
  double m = 0.0;
  for (double e : v) m = std::max(m, std::abs(e));
  return m;
}

}  // namespace drmax
