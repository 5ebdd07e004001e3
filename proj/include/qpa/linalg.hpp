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

#ifndef QPA_LINALG_HPP_
#define QPA_LINALG_HPP_

#include <optional>
#include <vector>

#include "qpa/field.hpp"

namespace qpa {

/// Dense matrix of exact field elements. Just enough linear algebra for the
/// rank/nullspace/inverse computations the invariants and the iso search need.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols, Field f);
  static ScalarMatrix identity(std::size_t n, Field f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const ScalarMatrix& o) const = default;

  ScalarMatrix operator*(const ScalarMatrix& o) const;

  /// Row-reduce in place to reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref();

  std::size_t rank() const;
  bool is_invertible() const;
  std::optional<ScalarMatrix> inverse() const;

  /// Basis of the right nullspace {x : Ax = 0}, one column vector per entry.
  std::vector<std::vector<Scalar>> nullspace_basis() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

}  // namespace qpa

#endif  // QPA_LINALG_HPP_
