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

#include "slocc/catalog.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace slocc;

namespace {

const Count kInf = Count::infinite();

PureState kets(const Dims& dims, const std::vector<std::vector<size_t>>& list) {
  PureState s = PureState::zeros(dims);
  for (const auto& k : list) s.add_ket(k);
  return s;
}

// Literal kets whose printed bracket disagrees with a hand computation.
// Gamma2 at M = 1 (and Lambda4, built on it): the a = 1 slice is the single
// ket |1,0,1>, a rank-one element of R(rho^BC), so a1 = 1.
// Lambda28 at M = 2: writing the AC range as |0>u + |1>v over the six B
// coefficients g, u = 0 forces g0 = g1 = g3 = g4 = 0 and g5 = -g2, leaving
// the product vector |1>(|1> - |7>); v = t u has no other solution, so a2 = 1.
const std::map<std::string, RangeSignature> kPrintedDisagrees{
    {"Gamma2[M=1]", {1, kInf, kInf}},
    {"Lambda4[M=1]", {1, kInf, kInf}},
    {"Lambda28[M=2]", {0, 1, kInf}},
};

ClassId concrete(ClassId id) {
  if (id.takes_param() && !id.param) id.param = representative_param(id);
  return id;
}

std::vector<Dims> sample_dims() {
  std::vector<Dims> out;
  for (size_t n = 1; n <= 4; ++n) out.push_back({2, 2, n});
  for (size_t n = 1; n <= 6; ++n) out.push_back({2, 3, n});
  for (size_t n = 1; n <= 8; ++n) out.push_back({2, 4, n});
  for (size_t m = 2; m <= 3; ++m)
    for (size_t k = 0; k <= 4; ++k) out.push_back({2, m + k, 2 * m + k});
  out.push_back({2, 5, 6});
  return out;
}

}  // namespace

TEST(ClassId, text_round_trip) {
  for (const char* text : {"Phi3[x=2]", "Gamma7[M=3]", "Upsilon0[M=2]", "t233-4", "FourQubitPhi[x=3]",
                           "Lambda3[M=2,x=5]", "LambdaExtra[M=1]", "phi1", "varphi5", "t221-0", "Phi3",
                           "Phi3[x=1/2-i]"}) {
    EXPECT_EQ(ClassId::parse(text).to_string(), text);
  }
  ClassId g = ClassId::parse("Gamma7[M=3]");
  EXPECT_EQ(g.family, Family::Gamma);
  EXPECT_EQ(g.index, 7);
  EXPECT_EQ(g.size, 3);
  EXPECT_EQ(ClassId::parse("t233-4").family, Family::T23N);
  EXPECT_THROW(ClassId::parse("Psi3"), ParseError);
  EXPECT_THROW(ClassId::parse("Phi"), ParseError);
  EXPECT_THROW(ClassId::parse("Phi3[y=2]"), ParseError);
  EXPECT_THROW(ClassId::parse("Gamma7[M=3"), ParseError);
}

TEST(Catalog, validation) {
  EXPECT_THROW(build(ClassId::parse("phi2")), CatalogError);
  EXPECT_THROW(build(ClassId::parse("Phi16")), CatalogError);
  EXPECT_THROW(build(ClassId::parse("Phi3")), CatalogError);
  EXPECT_THROW(build(ClassId::parse("Phi3[x=1]")), CatalogError);
  EXPECT_THROW(build(ClassId::parse("Phi3[x=0]")), CatalogError);
  EXPECT_THROW(build(ClassId::parse("Phi2[x=2]")), CatalogError);
  EXPECT_THROW(build(ClassId::parse("FourQubitPhi[x=1]")), CatalogError);
  EXPECT_THROW(build(ClassId::parse("Gamma7[M=1]")), CatalogError);
  EXPECT_THROW(build(ClassId::parse("Gamma11[M=1]")), CatalogError);
  EXPECT_THROW(build(ClassId::parse("Lambda31[M=1]")), CatalogError);
  EXPECT_THROW(build(ClassId::parse("LambdaExtra[M=2]")), CatalogError);
  EXPECT_THROW(build(ClassId::parse("Gamma2")), CatalogError);
  EXPECT_THROW(build(ClassId::parse("t234-5")), CatalogError);
  EXPECT_NO_THROW(build(ClassId::parse("Gamma7[M=2]")));
  EXPECT_NO_THROW(build(ClassId::parse("Lambda31[M=2]")));
}

TEST(Catalog, build_examples) {
  EXPECT_EQ(build(ClassId::parse("varphi2")), kets({2, 3, 3}, {{0, 1, 0}, {0, 0, 1}, {1, 1, 2}, {1, 2, 1}}));
  PureState phi3 = kets({2, 4, 4}, {{0, 3, 3}, {0, 0, 0}, {1, 1, 1}, {0, 2, 2}, {1, 2, 2}});
  phi3.add_ket({1, 3, 3}, Scalar(2));
  EXPECT_EQ(build(ClassId::parse("Phi3[x=2]")), phi3);
  EXPECT_EQ(build(ClassId::parse("Upsilon0[M=3]")),
            kets({2, 3, 6}, {{0, 0, 0}, {0, 1, 1}, {0, 2, 2}, {1, 0, 3}, {1, 1, 4}, {1, 2, 5}}));
  EXPECT_EQ(build(ClassId::parse("t233-2")), build(ClassId::parse("varphi2")));
}

TEST(Catalog, build_exceptional_examples) {
  PureState s = build_exceptional(4, 5, ClassId::parse("varphi2"));
  EXPECT_EQ(s, build(ClassId::parse("Gamma14[M=1]")));
  EXPECT_EQ(s.dims(), (Dims{2, 4, 5}));
  EXPECT_THROW(build_exceptional(4, 4, ClassId::parse("varphi2")), CatalogError);
  EXPECT_THROW(build_exceptional(4, 5, ClassId::parse("t222-0")), CatalogError);
  PureState g = build_exceptional(3, 4, ClassId::parse("t222-0"));
  EXPECT_EQ(g, kets({2, 3, 4}, {{0, 2, 3}, {1, 2, 2}, {0, 0, 0}, {1, 1, 1}}));
}

TEST(Catalog, enumerate_counts) {
  std::vector<size_t> c3, c4;
  for (size_t n = 1; n <= 6; ++n) c3.push_back(enumerate({2, 3, n}).size());
  for (size_t n = 1; n <= 8; ++n) c4.push_back(enumerate({2, 4, n}).size());
  EXPECT_EQ(c3, (std::vector<size_t>{1, 2, 6, 5, 2, 1}));
  EXPECT_EQ(c4, (std::vector<size_t>{1, 1, 5, 16, 12, 6, 2, 1}));
  EXPECT_EQ(enumerate({2, 5, 7}).size(), 15u);
  EXPECT_EQ(enumerate({2, 6, 8}).size(), 37u);
  EXPECT_EQ(enumerate({2, 5, 6}).size(), 29u);
  EXPECT_EQ(enumerate({2, 4, 3}), enumerate({2, 3, 4}));
  EXPECT_THROW(enumerate({2, 5, 5}), CatalogError);
  EXPECT_THROW(enumerate({3, 3, 3}), CatalogError);
  EXPECT_FALSE(is_covered({2, 6, 6}));
  EXPECT_TRUE(is_covered({2, 7, 10}));
  int symbolic = 0;
  for (const auto& id : enumerate({2, 4, 4})) symbolic += id.takes_param() && !id.param;
  EXPECT_EQ(symbolic, 1);
}

TEST(Catalog, expected_examples) {
  EXPECT_EQ(expected(ClassId::parse("Phi10")).signature, (RangeSignature{0, 3, 3}));
  EXPECT_EQ(expected(ClassId::parse("Theta1[M=2]")).signature, (RangeSignature{0, kInf, kInf}));
  EXPECT_EQ(expected(ClassId::parse("Lambda3[M=2]")).signature, (RangeSignature{0, 4, kInf}));
  EXPECT_EQ(expected(ClassId::parse("Phi4")).rank_profile, (RankProfileSet{2, 3}));
  EXPECT_FALSE(expected(ClassId::parse("LambdaExtra[M=1]")).signature);
}

// Every catalog class is a true state of its declared dims and carries the
// signature printed next to it.
TEST(Catalog, states_are_true_and_match_printed_signatures) {
  int checked = 0;
  for (const Dims& dims : sample_dims()) {
    for (const ClassId& sym : enumerate(dims)) {
      ClassId id = concrete(sym);
      PureState s = build(id);
      Dims want = dims_of(id);
      EXPECT_EQ(s.dims(), want) << id.to_string();
      EXPECT_EQ(local_ranks(s), want) << id.to_string();
      ExpectedSignature e = expected(id);
      if (auto it = kPrintedDisagrees.find(id.to_string()); it != kPrintedDisagrees.end()) {
        ASSERT_TRUE(e.signature);
        EXPECT_NE(*e.signature, it->second);
        EXPECT_EQ(range_signature(s), it->second) << id.to_string();
      } else if (e.signature) {
        EXPECT_EQ(range_signature(s), *e.signature) << id.to_string();
        ++checked;
      }
      if (e.rank_profile) EXPECT_EQ(rank_profile_set(pencil_of(s)), *e.rank_profile) << id.to_string();
    }
  }
  EXPECT_GT(checked, 150);
}

// A class embedded in a larger space trims back to itself.
TEST(Catalog, trim_recovers_embedded_class) {
  PureState phi0 = build(ClassId::parse("Phi0"));
  PureState big = PureState::zeros({2, 5, 5});
  for (size_t a = 0; a < 2; ++a)
    for (size_t b = 0; b < 4; ++b)
      for (size_t c = 0; c < 4; ++c)
        if (!phi0.at({a, b, c}).is_zero()) big.add_ket({a, b + 1, c}, phi0.at({a, b, c}));
  Trimmed t = trim(big);
  EXPECT_EQ(t.state.dims(), (Dims{2, 4, 4}));
  EXPECT_EQ(range_signature(t.state), range_signature(phi0));
  EXPECT_EQ(rank_profile_set(pencil_of(t.state)), (RankProfileSet{2, 4}));
}
