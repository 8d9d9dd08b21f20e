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

#include "slocc/classifier.hpp"

#include <gtest/gtest.h>

#include <iostream>

using namespace slocc;

namespace {

PureState kets(const Dims& dims, const std::vector<std::vector<size_t>>& list) {
  PureState s = PureState::zeros(dims);
  for (const auto& k : list) s.add_ket(k);
  return s;
}

PureState phi3(const Scalar& x) {
  ClassId id = ClassId::parse("Phi3");
  id.param = x;
  return build(id);
}

PureState random_orbit_point(const PureState& s, uint64_t seed) {
  std::vector<LocalOperator> ops;
  for (size_t k = 0; k < s.parties(); ++k) ops.push_back(random_ilo(s.dims()[k], seed * 7 + k, 3));
  return apply_ilo(s, ops);
}

Matrix swap_rows(size_t n, size_t i, size_t j) {
  Matrix m = Matrix::identity(n);
  m(i, i) = m(j, j) = Scalar(0);
  m(i, j) = m(j, i) = Scalar(1);
  return m;
}

}  // namespace

TEST(InvariantTuple, examples) {
  InvariantTuple ghz = invariant_tuple(kets({2, 2, 2}, {{0, 0, 0}, {1, 1, 1}}));
  EXPECT_EQ(ghz.dims, (Dims{2, 2, 2}));
  EXPECT_EQ(ghz.kron.n_distinct_eigs, Count(2));
  EXPECT_EQ(invariant_tuple(build(ClassId::parse("varphi3"))).signature, (RangeSignature{0, 1, 1}));
  PureState phi7 = build(ClassId::parse("Phi7"));
  for (uint64_t seed = 1; seed <= 5; ++seed)
    EXPECT_EQ(invariant_tuple(random_orbit_point(phi7, seed)), invariant_tuple(phi7));
}

TEST(InvariantTuple, qubit_party_moves_first) {
  // varphi1 with the qubit held by C.
  PureState s = kets({3, 3, 2}, {{0, 0, 0}, {1, 1, 1}, {2, 2, 0}, {2, 2, 1}});
  OrientedTuple ot = oriented_invariant_tuple(s);
  EXPECT_EQ(ot.tuple.dims, (Dims{2, 3, 3}));
  EXPECT_EQ(ot.orientation.perm[0], 2u);
  EXPECT_EQ(ot.tuple, invariant_tuple(build(ClassId::parse("varphi1"))));
}

TEST(InvariantTuple, scope_errors) {
  PureState w3 = kets({3, 3, 3}, {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}});
  EXPECT_THROW(invariant_tuple(w3), ScopeError);
  EXPECT_THROW(invariant_tuple(kets({2, 2}, {{0, 0}, {1, 1}})), ScopeError);
  PureState bell = kets({2, 2, 2}, {{0, 0, 0}, {0, 1, 1}});
  EXPECT_THROW(invariant_tuple(bell), DegenerateState);
  ClassLabel l = classify(bell);
  EXPECT_EQ(l.kind, LabelKind::degenerate);
  EXPECT_EQ(l.note, "bipartite/product degenerate");
}

TEST(Lookup, key_counts) {
  EXPECT_EQ(build_lookup({{2, 3, 3}}).key_count(), 6u);
  LookupTable t44 = build_lookup({{2, 4, 4}});
  EXPECT_EQ(t44.key_count(), 16u);
  auto hit = t44.find(invariant_tuple(phi3(Scalar(5))));
  ASSERT_EQ(hit.size(), 1u);
  EXPECT_TRUE(hit[0].takes_param());
}

// Injectivity over every covered dims with M <= 4 outside the Gamma and
// Lambda families, which are checked (and reported) by the acceptance run.
TEST(Lookup, injective_on_small_dims) {
  for (size_t m = 2; m <= 4; ++m)
    for (size_t n = 1; n <= 2 * m; ++n) {
      Dims d{2, m, n};
      if (n == 2 * m - 3 || n == 2 * m - 4) continue;
      EXPECT_NO_THROW(build_lookup({d})) << m << "x" << n;
    }
  for (size_t m = 2; m <= 4; ++m) {
    EXPECT_NO_THROW(build_lookup({{2, m + 1, 2 * m + 1}}));
    EXPECT_NO_THROW(build_lookup({{2, m + 2, 2 * m + 2}}));
  }
}

TEST(Lookup, collision_names_both_ids) {
  // The 2x3x3 table row is the same state as varphi1.
  LookupTable t;
  t.add(ClassId::parse("varphi1"), true);
  try {
    t.add(ClassId::parse("t233-1"), true);
    FAIL() << "expected a collision";
  } catch (const LookupCollision& e) {
    EXPECT_EQ(e.first().to_string(), "varphi1");
    EXPECT_EQ(e.second().to_string(), "t233-1");
  }
  t.add(ClassId::parse("t233-1"), false);
  ASSERT_EQ(t.shared_keys().size(), 1u);
  EXPECT_EQ(t.shared_keys()[0].second.size(), 2u);
  LookupTable u;
  u.add(ClassId::parse("Phi11"), true);
  u.add(ClassId::parse("Phi15"), true);
  EXPECT_EQ(u.key_count(), 2u);
}

TEST(Classify, examples) {
  ClassLabel l = classify(kets({2, 3, 3}, {{0, 0, 0}, {1, 1, 1}, {0, 2, 2}, {1, 2, 2}}));
  ASSERT_EQ(l.kind, LabelKind::recognized);
  EXPECT_EQ(l.id().to_string(), "varphi1");
  EXPECT_FALSE(l.param_invariant);

  for (uint64_t seed = 1; seed <= 3; ++seed) {
    ClassLabel p = classify(random_orbit_point(phi3(Scalar(2)), seed));
    ASSERT_EQ(p.kind, LabelKind::recognized);
    EXPECT_EQ(p.id().to_string(), "Phi3");
    ASSERT_TRUE(p.param_invariant);
    EXPECT_EQ(*p.param_invariant, Scalar(1728));
  }
  ClassLabel m = classify(phi3(Scalar(-1)));
  EXPECT_EQ(m.id().to_string(), "Phi3");
  EXPECT_EQ(*m.param_invariant, Scalar(1728));

  ClassLabel p12 = classify(build(ClassId::parse("Phi12")));
  EXPECT_EQ(p12.id().to_string(), "Phi12");
  EXPECT_EQ(p12.tuple->signature, (RangeSignature{0, 1, 1}));
}

TEST(Classify, uncataloged_and_unrecognized) {
  // Generic 2x5x5 pencil: dims outside the catalog.
  PureState s = PureState::zeros({2, 5, 5});
  for (size_t i = 0; i < 5; ++i) {
    s.add_ket({0, i, i});
    s.add_ket({1, i, i}, Scalar(static_cast<long>(i + 2)));
  }
  ClassLabel l = classify(s);
  EXPECT_EQ(l.kind, LabelKind::uncataloged);
  ASSERT_TRUE(l.tuple);
  EXPECT_EQ(l.tuple->kron.n_distinct_eigs, Count(5));
}

TEST(Classify, every_catalog_class_round_trips) {
  for (size_t m = 2; m <= 4; ++m)
    for (size_t n = m; n <= 2 * m; ++n) {
      if (!is_covered({2, m, n})) continue;
      for (ClassId id : enumerate({2, m, n})) {
        ClassId c = id;
        if (c.takes_param()) c.param = representative_param(c);
        ClassLabel l = classify(random_orbit_point(build(c), 11));
        ASSERT_EQ(l.kind, LabelKind::recognized) << id.to_string();
        EXPECT_TRUE(l.has_id(id)) << id.to_string();
      }
    }
}

TEST(Classify, bc_swap_of_mirror_classes) {
  std::vector<size_t> swap{0, 2, 1};
  ClassLabel a = classify(permute_parties(build(ClassId::parse("Phi11")), swap));
  ClassLabel b = classify(permute_parties(build(ClassId::parse("Phi15")), swap));
  EXPECT_EQ(a.id().to_string(), "Phi15");
  EXPECT_EQ(b.id().to_string(), "Phi11");
  ClassLabel g = classify(permute_parties(build(ClassId::parse("Phi0")), swap));
  EXPECT_EQ(g.id().to_string(), "Phi0");
}

TEST(Equivalence, examples) {
  EXPECT_EQ(are_equivalent(build(ClassId::parse("Phi5")), build(ClassId::parse("Phi13"))).verdict,
            Verdict::inequivalent);
  EXPECT_EQ(are_equivalent(phi3(Scalar(2)), phi3(Scalar(-1))).verdict, Verdict::equivalent);
  EquivalenceResult r = are_equivalent(phi3(Scalar(2)), phi3(Scalar(3)));
  EXPECT_EQ(r.verdict, Verdict::inequivalent);
  EXPECT_EQ(r.differing, "anharmonic invariant");
  EXPECT_EQ(to_string(Verdict::equal_invariants), "EQUAL-INVARIANTS");

  PureState s = PureState::zeros({2, 5, 5});
  for (size_t i = 0; i < 5; ++i) {
    s.add_ket({0, i, i});
    s.add_ket({1, i, i}, Scalar(static_cast<long>(i + 2)));
  }
  EXPECT_EQ(are_equivalent(s, random_orbit_point(s, 4)).verdict, Verdict::equal_invariants);
}

TEST(Witness, identity_and_random) {
  PureState s = build(ClassId::parse("Phi4"));
  std::vector<LocalOperator> id{LocalOperator::identity(2), LocalOperator::identity(4), LocalOperator::identity(4)};
  EXPECT_TRUE(verify_witness(s, s, id));
  std::vector<LocalOperator> ops;
  for (size_t k = 0; k < 3; ++k) ops.push_back(random_ilo(s.dims()[k], 40 + k, 3));
  EXPECT_FALSE(verify_witness(s, build(ClassId::parse("Phi5")), ops));
  EXPECT_THROW(verify_witness(s, build(ClassId::parse("varphi1")), id), std::invalid_argument);
}

// The reduction of Phi3 at x = 1 into Phi2, written out as matrices.
TEST(Witness, phi3_at_one_goes_to_phi2) {
  PureState s = kets({2, 4, 4}, {{0, 3, 3}, {1, 3, 3}, {0, 0, 0}, {1, 1, 1}, {0, 2, 2}, {1, 2, 2}});
  Matrix va(2, 2, {Scalar(-1), Scalar(1), Scalar(0), Scalar(1)});
  Matrix diag = Matrix::identity(4);
  diag(0, 0) = Scalar(-1);
  Matrix vb = swap_rows(4, 1, 2) * diag;
  Matrix vc = swap_rows(4, 1, 2);
  std::vector<LocalOperator> ops{LocalOperator(va), LocalOperator(vb), LocalOperator(vc)};
  EXPECT_TRUE(verify_witness(s, build(ClassId::parse("Phi2")), ops));
}
