// Copyright 2026 The qpa authors.
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

#include "qpa/linalg.hpp"

namespace qpa {

ScalarMatrix::ScalarMatrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f)) {}

ScalarMatrix ScalarMatrix::identity(std::size_t n, Field f) {
  ScalarMatrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
  if (cols_ != o.rows_ || field_ != o.field_)
    throw InputError("matrix product shape/field mismatch");
  ScalarMatrix r(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

std::vector<std::size_t> ScalarMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot = row;
    while (pivot < rows_ && at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(row, j), at(pivot, j));
    Scalar inv = at(row, col).inverse();
    for (std::size_t j = col; j < cols_; ++j) at(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || at(i, col).is_zero()) continue;
      Scalar factor = at(i, col);
      for (std::size_t j = col; j < cols_; ++j) at(i, j) -= factor * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t ScalarMatrix::rank() const {
  ScalarMatrix copy = *this;
  return copy.rref().size();
}

bool ScalarMatrix::is_invertible() const {
  return rows_ == cols_ && rank() == rows_;
}

std::optional<ScalarMatrix> ScalarMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  // [A | I] -> [I | A^-1]
  ScalarMatrix aug(rows_, 2 * cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = Scalar::one(field_);
  }
  auto pivots = aug.rref();
  if (pivots.size() != rows_) return std::nullopt;
  for (std::size_t i = 0; i < rows_; ++i)
    if (pivots[i] != i) return std::nullopt;
  ScalarMatrix inv(rows_, cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

std::vector<std::vector<Scalar>> ScalarMatrix::nullspace_basis() const {
  ScalarMatrix r = *this;
  auto pivots = r.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols_, Scalar::zero(field_));
    v[free] = Scalar::one(field_);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -r.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qpa
