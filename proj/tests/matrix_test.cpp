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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace slocc;

namespace {

// Largest k with a nonzero k x k minor, by exhaustive subset search.
size_t minor_rank(const Matrix& m) {
  size_t best = 0;
  size_t n = std::min(m.rows(), m.cols());
  for (size_t k = 1; k <= n; ++k) {
    std::vector<bool> rs(m.rows(), false), cs(m.cols(), false);
    std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
    bool found = false;
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
      std::vector<size_t> ri;
      for (size_t i = 0; i < rs.size(); ++i)
        if (rs[i]) ri.push_back(i);
      do {
        std::vector<size_t> ci;
        for (size_t j = 0; j < cs.size(); ++j)
          if (cs[j]) ci.push_back(j);
        if (!m.select_rows(ri).select_cols(ci).determinant().is_zero()) found = true;
      } while (!found && std::prev_permutation(cs.begin(), cs.end()));
    } while (!found && std::prev_permutation(rs.begin(), rs.end()));
    if (!found) break;
    best = k;
  }
  return best;
}

}  // namespace

TEST(Matrix, rank_and_kernel) {
  Matrix m(3, 4, {1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 0, 1});
  EXPECT_EQ(m.rank(), 2u);
  Matrix k = m.kernel_basis();
  EXPECT_EQ(k.cols(), 2u);
  EXPECT_TRUE((m * k).is_zero());
  EXPECT_EQ(k.rank(), 2u);
}

TEST(Matrix, determinant_and_inverse) {
  Matrix m(3, 3, {2, 0, 1, 1, Scalar::imag_unit(), 0, 0, 3, 1});
  Scalar det = m.determinant();
  // Cofactor expansion along the first row.
  Scalar expect = Scalar(2) * (Scalar::imag_unit() - Scalar(0)) + Scalar(1) * (Scalar(3) - Scalar(0));
  EXPECT_EQ(det, expect);
  EXPECT_EQ(m * m.inverse(), Matrix::identity(3));
  Matrix s(2, 2, {1, 2, 2, 4});
  EXPECT_TRUE(s.determinant().is_zero());
  EXPECT_THROW(s.inverse(), std::domain_error);
}

TEST(Matrix, random_rank_matches_factor_construction) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(-2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    size_t r = 1 + trial % 4;
    Matrix a(5, r), b(r, 6);
    for (size_t i = 0; i < 5; ++i)
      for (size_t j = 0; j < r; ++j) a(i, j) = Scalar(e(rng), e(rng));
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < 6; ++j) b(i, j) = Scalar(e(rng), e(rng));
    Matrix p = a * b;
    EXPECT_LE(p.rank(), r);
    EXPECT_EQ(p.rank(), minor_rank(p));
    Matrix q = p;
    EXPECT_EQ(q.rref().size(), p.rank());
    EXPECT_EQ(p.kernel_basis().cols(), 6 - p.rank());
    EXPECT_EQ(p.transpose().rank(), p.rank());
  }
}
