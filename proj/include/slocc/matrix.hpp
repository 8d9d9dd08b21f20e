// Copyright 2026 The slocc Authors
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

#ifndef SLOCC_MATRIX_HPP
#define SLOCC_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "slocc/scalar.hpp"

namespace slocc {

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(size_t rows, size_t cols, std::vector<Scalar> data);

  static Matrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Scalar& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& data() const { return data_; }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// Rows stacked above o's rows.
  Matrix vstack(const Matrix& o) const;
  Matrix hstack(const Matrix& o) const;
  Matrix column(size_t c) const;
  Matrix row(size_t r) const;
  Matrix select_rows(const std::vector<size_t>& idx) const;
  Matrix select_cols(const std::vector<size_t>& idx) const;

  size_t rank() const;
  /// Reduced row echelon form in place; returns pivot columns in order.
  std::vector<size_t> rref();
  /// Columns form a basis of the right kernel (cols() x nullity).
  Matrix kernel_basis() const;
  Scalar determinant() const;
  /// Throws std::domain_error when singular.
  Matrix inverse() const;

  std::string to_string() const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace slocc

#endif  // SLOCC_MATRIX_HPP
