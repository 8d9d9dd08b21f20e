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

#include "slocc/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace slocc {

Matrix::Matrix(size_t rows, size_t cols, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("matrix data size mismatch");
}

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix p(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) p(i, j) += a * b;
      }
    }
  }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix s = *this;
  for (size_t k = 0; k < data_.size(); ++k) s.data_[k] += o.data_[k];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  Matrix s = *this;
  for (size_t k = 0; k < data_.size(); ++k) s.data_[k] -= o.data_[k];
  return s;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix s = *this;
  for (auto& x : s.data_) x *= c;
  return s;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("vstack column mismatch");
  Matrix s(rows_ + o.rows_, cols_);
  std::copy(data_.begin(), data_.end(), s.data_.begin());
  std::copy(o.data_.begin(), o.data_.end(), s.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return s;
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("hstack row mismatch");
  Matrix s(rows_, cols_ + o.cols_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) s(r, c) = (*this)(r, c);
    for (size_t c = 0; c < o.cols_; ++c) s(r, cols_ + c) = o(r, c);
  }
  return s;
}

Matrix Matrix::column(size_t c) const { return select_cols({c}); }
Matrix Matrix::row(size_t r) const { return select_rows({r}); }

Matrix Matrix::select_rows(const std::vector<size_t>& idx) const {
  Matrix s(idx.size(), cols_);
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t c = 0; c < cols_; ++c) s(i, c) = (*this)(idx[i], c);
  return s;
}

Matrix Matrix::select_cols(const std::vector<size_t>& idx) const {
  Matrix s(rows_, idx.size());
  for (size_t r = 0; r < rows_; ++r)
    for (size_t j = 0; j < idx.size(); ++j) s(r, j) = (*this)(r, idx[j]);
  return s;
}

std::vector<size_t> Matrix::rref() {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols_ && row < rows_; ++col) {
    size_t piv = row;
    while (piv < rows_ && (*this)(piv, col).is_zero()) ++piv;
    if (piv == rows_) continue;
    if (piv != row) {
      for (size_t c = col; c < cols_; ++c) std::swap((*this)(piv, c), (*this)(row, c));
    }
    Scalar inv = (*this)(row, col).inverse();
    for (size_t c = col; c < cols_; ++c) (*this)(row, c) *= inv;
    for (size_t r = 0; r < rows_; ++r) {
      if (r == row || (*this)(r, col).is_zero()) continue;
      Scalar f = (*this)(r, col);
      for (size_t c = col; c < cols_; ++c) {
        if (!(*this)(row, c).is_zero()) (*this)(r, c) -= f * (*this)(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

namespace {

// Gaussian integer for fraction-free elimination.
struct GaussInt {
  mpz_class re, im;
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
  if (sgn(a.im) == 0 && sgn(b.im) == 0) return {a.re * b.re, 0};
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// a / b, known to be exact.
GaussInt exact_quotient(const GaussInt& a, const GaussInt& b) {
  GaussInt q;
  if (sgn(b.im) == 0) {
    mpz_divexact(q.re.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), a.im.get_mpz_t(), b.re.get_mpz_t());
    return q;
  }
  const mpz_class n = b.re * b.re + b.im * b.im;
  const GaussInt t = mul(a, GaussInt{b.re, -b.im});
  mpz_divexact(q.re.get_mpz_t(), t.re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(q.im.get_mpz_t(), t.im.get_mpz_t(), n.get_mpz_t());
  return q;
}

}  // namespace

size_t Matrix::rank() const {
  // Bareiss elimination on rows scaled to Gaussian integers: every division
  // is exact, so no gcd normalization happens inside the loop.
  std::vector<GaussInt> m(data_.size());
  for (size_t r = 0; r < rows_; ++r) {
    mpz_class l = 1;
    for (size_t c = 0; c < cols_; ++c) {
      const Scalar& x = (*this)(r, c);
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.im().get_den_mpz_t());
    }
    for (size_t c = 0; c < cols_; ++c) {
      const Scalar& x = (*this)(r, c);
      GaussInt& g = m[r * cols_ + c];
      g.re = x.re().get_num() * (l / x.re().get_den());
      g.im = x.im().get_num() * (l / x.im().get_den());
    }
  }
  auto at = [&](size_t r, size_t c) -> GaussInt& { return m[r * cols_ + c]; };
  GaussInt prev{1, 0};
  size_t row = 0;
  for (size_t col = 0; col < cols_ && row < rows_; ++col) {
    size_t piv = row;
    while (piv < rows_ && at(piv, col).is_zero()) ++piv;
    if (piv == rows_) continue;
    if (piv != row)
      for (size_t c = col; c < cols_; ++c) std::swap(at(piv, c), at(row, c));
    const GaussInt p = at(row, col);
    for (size_t r = row + 1; r < rows_; ++r) {
      const GaussInt f = at(r, col);
      for (size_t c = col + 1; c < cols_; ++c) {
        GaussInt v = mul(p, at(r, c));
        if (!f.is_zero() && !at(row, c).is_zero()) {
          GaussInt w = mul(f, at(row, c));
          v.re -= w.re;
          v.im -= w.im;
        }
        at(r, c) = exact_quotient(v, prev);
      }
      at(r, col) = GaussInt{0, 0};
    }
    prev = p;
    ++row;
  }
  return row;
}

Matrix Matrix::kernel_basis() const {
  Matrix m = *this;
  std::vector<size_t> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (size_t p : pivots) is_pivot[p] = true;
  Matrix k(cols_, cols_ - pivots.size());
  size_t j = 0;
  for (size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    k(free, j) = 1;
    for (size_t i = 0; i < pivots.size(); ++i) k(pivots[i], j) = -m(i, free);
    ++j;
  }
  return k;
}

Scalar Matrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  Matrix m = *this;
  Scalar det(1);
  for (size_t col = 0; col < cols_; ++col) {
    size_t piv = col;
    while (piv < rows_ && m(piv, col).is_zero()) ++piv;
    if (piv == rows_) return Scalar();
    if (piv != col) {
      for (size_t c = col; c < cols_; ++c) std::swap(m(piv, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    Scalar inv = m(col, col).inverse();
    for (size_t r = col + 1; r < rows_; ++r) {
      if (m(r, col).is_zero()) continue;
      Scalar f = m(r, col) * inv;
      for (size_t c = col + 1; c < cols_; ++c) {
        if (!m(col, c).is_zero()) m(r, c) -= f * m(col, c);
      }
    }
  }
  return det;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  Matrix aug = hstack(identity(rows_));
  std::vector<size_t> pivots = aug.rref();
  if (pivots.size() < rows_ || pivots.back() >= cols_) throw std::domain_error("matrix is singular");
  std::vector<size_t> right(cols_);
  for (size_t c = 0; c < cols_; ++c) right[c] = cols_ + c;
  return aug.select_cols(right);
}

std::string Matrix::to_string() const {
  std::string s = "[";
  for (size_t r = 0; r < rows_; ++r) {
    s += r ? ", [" : "[";
    for (size_t c = 0; c < cols_; ++c) {
      if (c) s += ", ";
      s += (*this)(r, c).to_string();
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace slocc
