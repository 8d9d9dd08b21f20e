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

#include "slocc/harness.hpp"

#include <gtest/gtest.h>

#include "slocc/classifier.hpp"

using namespace slocc;

namespace {

PureState kets(const Dims& dims, const std::vector<std::vector<size_t>>& list) {
  PureState s = PureState::zeros(dims);
  for (const auto& k : list) s.add_ket(k);
  return s;
}

}  // namespace

TEST(FloatOracle, examples) {
  PureState phi0 = build(ClassId::parse("phi0"));
  EXPECT_EQ(float_product_count_oracle(phi0, ProductSide::bc, kOracleDigits), Count(1));
  EXPECT_EQ(float_product_count_oracle(phi0, ProductSide::bc, kOracleDigits), range_signature(phi0).a1);

  PureState x2 = build(ClassId::parse("Phi3[x=2]"));
  EXPECT_EQ(float_product_count_oracle(x2, ProductSide::ac, kOracleDigits), Count(4));
  EXPECT_EQ(float_product_count_oracle(x2, ProductSide::ab, kOracleDigits), Count(4));

  OracleReport r = check_range_signature(random_integer_state({2, 3, 4}, 11, 2));
  EXPECT_TRUE(r.agree) << r.exact << " vs " << r.oracle;
  EXPECT_EQ(r.digits, kOracleDigits);
}

TEST(FloatOracle, infinite_counts) {
  // W state: a single product vector in the BC range, infinitely many in
  // the qubit-side ranges.
  PureState w = kets({2, 2, 2}, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  EXPECT_EQ(float_range_signature(w, kOracleDigits).to_string(), range_signature(w).to_string());
  PureState ups = build(ClassId::parse("Upsilon0[M=2]"));
  EXPECT_EQ(float_range_signature(ups, kOracleDigits), range_signature(ups));
}

TEST(FloatOracle, rejects_states_without_leading_qubit) {
  PureState s = kets({3, 3, 2}, {{0, 0, 0}, {1, 1, 1}, {2, 2, 0}});
  EXPECT_THROW(float_range_signature(s, kOracleDigits), std::invalid_argument);
}

TEST(BruteKronecker, examples) {
  Pencil ups = pencil_of(build(ClassId::parse("Upsilon0[M=2]")));
  KroneckerData k = brute_kronecker_oracle(ups, static_cast<int>(ups.cols()));
  EXPECT_EQ(k.col_min_indices, (std::vector<int>{1, 1}));
  EXPECT_TRUE(k.row_min_indices.empty());

  Pencil ghz = pencil_of(kets({2, 2, 2}, {{0, 0, 0}, {1, 1, 1}}));
  KroneckerData g = brute_kronecker_oracle(ghz, 2);
  EXPECT_TRUE(g.col_min_indices.empty());
  EXPECT_TRUE(g.row_min_indices.empty());
  ASSERT_EQ(g.eig_partition_classes.size(), 1u);
  EXPECT_EQ(g.eig_partition_classes[0].partition, (std::vector<int>{1}));
  EXPECT_EQ(g.eig_partition_classes[0].count, 2);
  EXPECT_EQ(g.n_distinct_eigs, Count(2));
}

TEST(BruteKronecker, agrees_on_all_phi_classes) {
  for (const ClassId& sym : enumerate({2, 4, 4})) {
    ClassId id = sym;
    if (id.takes_param()) id.param = representative_param(id);
    Pencil p = pencil_of(build(id));
    EXPECT_EQ(brute_kronecker_oracle(p, 4), kronecker_data(p)) << id.to_string();
  }
}

TEST(OrbitSample, deterministic_and_in_orbit) {
  ClassId v5 = ClassId::parse("varphi5");
  EXPECT_TRUE(orbit_sample(v5, 0, 1, 3).empty());
  EXPECT_EQ(orbit_sample(v5, 3, 9, 3), orbit_sample(v5, 3, 9, 3));
  EXPECT_NE(orbit_sample(v5, 1, 9, 3), orbit_sample(v5, 1, 10, 3));
  for (const PureState& s : orbit_sample(v5, 50, 21, 3)) EXPECT_EQ(classify(s).id(), v5);
}

TEST(RandomIntegerState, deterministic) {
  EXPECT_EQ(random_integer_state({2, 3, 3}, 5, 2), random_integer_state({2, 3, 3}, 5, 2));
  EXPECT_NE(random_integer_state({2, 3, 3}, 5, 2), random_integer_state({2, 3, 3}, 6, 2));
}
