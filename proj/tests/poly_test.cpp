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

#include "slocc/poly.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace slocc;

namespace {

UniPoly from_roots(const std::map<Scalar, int>& roots) {
  UniPoly p(Scalar(1));
  for (const auto& [r, m] : roots)
    for (int k = 0; k < m; ++k) p *= UniPoly::linear(r);
  return p;
}

UniPoly X() { return UniPoly::linear(Scalar(0)); }

}  // namespace

TEST(UniPoly, basics) {
  UniPoly p({1, 2, 3});
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.eval(2), Scalar(17));
  EXPECT_EQ(p.derivative(), UniPoly({2, 6}));
  EXPECT_EQ(UniPoly({1, 0, 0}).degree(), 0);
  EXPECT_EQ(UniPoly().degree(), -1);
  EXPECT_EQ((p * UniPoly()).degree(), -1);
  EXPECT_EQ((p * UniPoly({1, 1})).degree(), 3);
  auto [q, r] = divmod(p, UniPoly({1, 1}));
  EXPECT_EQ(q * UniPoly({1, 1}) + r, p);
  EXPECT_LT(r.degree(), 1);
  EXPECT_THROW(divmod(p, UniPoly()), std::domain_error);
  EXPECT_THROW(exact_div(p, UniPoly({1, 1})), std::domain_error);
}

TEST(UniPoly, gcd_examples) {
  UniPoly one(Scalar(1));
  UniPoly x = X();
  EXPECT_EQ(poly_gcd(x * x - one, x - one), x - one);
  EXPECT_EQ(poly_gcd(UniPoly({2, 2}), UniPoly()), x + one);
  EXPECT_EQ(poly_gcd(UniPoly(), UniPoly()), UniPoly());
  // Factor multiset min of {0,0,1} and {0,1,1} is {0,1}.
  UniPoly a = x * x * (x - one);
  UniPoly b = x * (x - one) * (x - one);
  EXPECT_EQ(poly_gcd(a, b), x * x - x);
  EXPECT_EQ(poly_gcd(UniPoly({3}), a), one);
}

TEST(UniPoly, squarefree_examples) {
  UniPoly one(Scalar(1));
  UniPoly x = X();
  EXPECT_EQ(squarefree_part((x - one) * (x - one) * (x - one)), x - one);
  EXPECT_EQ(squarefree_part(x * x * (x + one)), x * x + x);
  UniPoly two(Scalar(2));
  EXPECT_EQ(squarefree_part(x * x * (x + one) * (x + two) * (x + two)).degree(), 3);
  EXPECT_THROW(squarefree_part(UniPoly()), std::domain_error);
}

// Factorization oracle: polynomials built from random root multisets; the gcd
// must be the product over the minimum multiplicities.
TEST(UniPoly, gcd_matches_factor_multiset_oracle) {
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<int> root_pick(-3, 3);
  std::uniform_int_distribution<int> mult(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::map<Scalar, int> ra, rb, rmin;
    for (int k = 0; k < 3; ++k) {
      Scalar r(root_pick(rng), root_pick(rng) % 2);
      ra[r] += mult(rng);
      rb[r] += mult(rng);
    }
    for (auto& [r, m] : ra) rmin[r] = std::min(m, rb[r]);
    UniPoly a = from_roots(ra) * Scalar(trial + 1);
    UniPoly b = from_roots(rb) * Scalar(0, 2);
    EXPECT_EQ(poly_gcd(a, b), from_roots(rmin));
    std::map<Scalar, int> distinct;
    for (auto& [r, m] : ra)
      if (m > 0) distinct[r] = 1;
    EXPECT_EQ(squarefree_part(a), from_roots(distinct));
    EXPECT_TRUE(divides(squarefree_part(a), a));
  }
}

TEST(BinaryForm, roots_and_infinity) {
  // alpha*beta*(alpha+beta): dehomogenized alpha^2 + alpha, degree 3.
  BinaryForm f({0, 1, 1, 0}, 3);
  EXPECT_EQ(f.infinity_multiplicity(), 1);
  EXPECT_EQ(distinct_projective_roots(f), 3);
  BinaryForm a2({0, 0, 1}, 2);
  EXPECT_EQ(distinct_projective_roots(a2), 1);
  EXPECT_EQ(a2.infinity_multiplicity(), 0);
  // alpha*beta*(alpha+beta)*(alpha+2beta) = alpha^3 beta + 3 alpha^2 beta^2 + 2 alpha beta^3.
  BinaryForm g({0, 2, 3, 1, 0}, 4);
  EXPECT_EQ(distinct_projective_roots(g), 4);
  EXPECT_THROW(distinct_projective_roots(BinaryForm({}, 2)), std::domain_error);
  EXPECT_EQ(distinct_projective_roots(BinaryForm({0, 1}, 1) * BinaryForm({0, 1}, 1)), 1);
}

TEST(BinaryForm, eval_and_gcd) {
  BinaryForm f({0, 2, 3, 1, 0}, 4);
  EXPECT_TRUE(f.eval(1, 0).is_zero());
  EXPECT_TRUE(f.eval(-2, 1).is_zero());
  EXPECT_FALSE(f.eval(1, 1).is_zero());
  BinaryForm h({0, 1, 1}, 2);  // alpha(alpha+beta)
  BinaryForm beta({1, 0}, 1);
  EXPECT_EQ(form_gcd(f, h), h);
  EXPECT_EQ(form_gcd(f, beta * beta), beta);
  EXPECT_TRUE(form_divides(h, f));
  EXPECT_FALSE(form_divides(beta * beta, f));
  EXPECT_EQ(form_exact_div(f, h) * h, f);
  EXPECT_EQ(f.squarefree().degree(), 4);
}

TEST(BinaryForm, root_count_invariant_under_substitution) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> small(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Scalar> c(6);
    for (auto& v : c) v = Scalar(small(rng), small(rng) % 2);
    BinaryForm f(c, 5);
    if (f.is_zero()) continue;
    // Square one factor sometimes to exercise repeated roots.
    if (trial % 3 == 0) f = f * BinaryForm({small(rng), 1}, 1) * BinaryForm({small(rng), 1}, 1);
    Scalar a(small(rng)), b(small(rng)), cc(small(rng)), d(small(rng));
    if ((a * d - b * cc).is_zero()) continue;
    EXPECT_EQ(distinct_projective_roots(f), distinct_projective_roots(f.substitute(a, b, cc, d)));
  }
}
