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

#include <algorithm>
#include <mutex>

namespace slocc {

namespace {

std::string dims_string(const Dims& d) {
  std::string s;
  for (size_t k = 0; k < d.size(); ++k) s += (k ? "x" : "") + std::to_string(d[k]);
  return s;
}

std::string profile_string(const RankProfileSet& p) {
  std::string s = "(";
  for (size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
  return s + ")";
}

std::strong_ordering compare_optional(const std::optional<Scalar>& a, const std::optional<Scalar>& b) {
  if (a.has_value() != b.has_value()) return a ? std::strong_ordering::greater : std::strong_ordering::less;
  if (!a || *a == *b) return std::strong_ordering::equal;
  return *a < *b ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace

std::strong_ordering operator<=>(const InvariantTuple& a, const InvariantTuple& b) {
  if (auto c = a.dims <=> b.dims; c != 0) return c;
  if (auto c = a.signature <=> b.signature; c != 0) return c;
  if (auto c = a.profile <=> b.profile; c != 0) return c;
  if (auto c = a.kron <=> b.kron; c != 0) return c;
  return compare_optional(a.anharmonic, b.anharmonic);
}

InvariantTuple InvariantTuple::stripped() const {
  InvariantTuple t = *this;
  if (t.anharmonic) t.anharmonic = Scalar(0);
  return t;
}

std::string InvariantTuple::to_string() const {
  std::string s = "dims=" + dims_string(dims) + " sig=" + signature.to_string() + " ranks=" + profile_string(profile) +
                  " " + kron.to_string();
  if (anharmonic) s += " j=" + anharmonic->to_string();
  return s;
}

namespace {

InvariantTuple tuple_of_oriented(const PureState& s) {
  Pencil p = pencil_of(s);
  DeterminantalProfile prof = determinantal_divisors(p);
  InvariantTuple t;
  t.dims = s.dims();
  t.signature = range_signature(p, prof);
  t.profile = rank_profile_set(prof);
  t.kron = kronecker_data(p, prof);
  if (t.kron.n_distinct_eigs == Count(4)) t.anharmonic = anharmonic_invariant(t.kron.eig_form.squarefree());
  return t;
}

}  // namespace

OrientedTuple oriented_invariant_tuple(const PureState& state) {
  if (state.parties() != 3) throw ScopeError("outside 2xMxN scope: classification needs three parties");
  PureState s = trim(state).state;
  const Dims& r = s.dims();
  // A rank-1 party splits off as a product factor.
  if (std::find(r.begin(), r.end(), size_t{1}) != r.end()) throw DegenerateState("degenerate state");
  std::vector<size_t> qubits;
  for (size_t k = 0; k < 3; ++k)
    if (r[k] == 2) qubits.push_back(k);
  if (qubits.empty()) throw ScopeError("outside 2xMxN scope");
  std::optional<OrientedTuple> best;
  for (size_t q : qubits) {
    Orientation o;
    o.perm = {q};
    for (size_t k = 0; k < 3; ++k)
      if (k != q) o.perm.push_back(k);
    // Larger side last; equal sides keep the input order.
    if (r[o.perm[1]] > r[o.perm[2]]) {
      std::swap(o.perm[1], o.perm[2]);
      o.bc_swapped = true;
    }
    InvariantTuple t = tuple_of_oriented(permute_parties(s, o.perm));
    if (!best || t < best->tuple) best = OrientedTuple{std::move(t), o};
  }
  return *best;
}

InvariantTuple invariant_tuple(const PureState& state) { return oriented_invariant_tuple(state).tuple; }

LookupCollision::LookupCollision(const ClassId& a, const ClassId& b, const InvariantTuple& t)
    : std::runtime_error("lookup collision: " + a.to_string() + " and " + b.to_string() + " share " + t.to_string()),
      a_(a),
      b_(b) {}

void LookupTable::add(const ClassId& id, bool strict) {
  ClassId concrete = id;
  if (concrete.takes_param()) concrete.param = representative_param(id);
  InvariantTuple t;
  try {
    t = invariant_tuple(build(concrete));
  } catch (const DegenerateState&) {
    // The 2x2x1 row is a bipartite state; classify reports it before lookup.
    return;
  }
  const ClassId key_id = id.family_key();

  auto claim = [&](std::vector<ClassId>& slot, const InvariantTuple& shown) {
    if (std::find(slot.begin(), slot.end(), key_id) != slot.end()) return;
    if (strict && !slot.empty()) throw LookupCollision(slot.front(), key_id, shown);
    slot.push_back(key_id);
  };

  if (id.takes_param()) {
    InvariantTuple s = t.stripped();
    for (const auto& [k, ids] : exact_) {
      if (k.stripped() == s && strict) throw LookupCollision(ids.front(), key_id, s);
    }
    claim(family_[s], s);
    return;
  }
  if (t.anharmonic) {
    if (auto it = family_.find(t.stripped()); it != family_.end() && strict) {
      throw LookupCollision(it->second.front(), key_id, t);
    }
  }
  claim(exact_[t], t);
}

void LookupTable::add_dims(const Dims& dims, bool strict) {
  if (loaded_.contains(dims)) return;
  for (const ClassId& id : enumerate(dims)) add(id, strict);
  loaded_.insert(dims);
}

std::vector<ClassId> LookupTable::find(const InvariantTuple& t) const {
  if (auto it = exact_.find(t); it != exact_.end()) return it->second;
  if (t.anharmonic) {
    if (auto it = family_.find(t.stripped()); it != family_.end()) return it->second;
  }
  return {};
}

std::vector<std::pair<InvariantTuple, std::vector<ClassId>>> LookupTable::shared_keys() const {
  std::vector<std::pair<InvariantTuple, std::vector<ClassId>>> out;
  for (const auto* m : {&exact_, &family_})
    for (const auto& [k, ids] : *m)
      if (ids.size() > 1) out.emplace_back(k, ids);
  return out;
}

LookupTable build_lookup(const std::vector<Dims>& dims_list) {
  LookupTable table;
  for (const Dims& d : dims_list) table.add_dims(d, true);
  return table;
}

const ClassId& ClassLabel::id() const {
  if (ids.empty()) throw std::logic_error("label carries no class id");
  return ids.front();
}

bool ClassLabel::has_id(const ClassId& id) const {
  ClassId key = id.family_key();
  return std::any_of(ids.begin(), ids.end(), [&](const ClassId& c) { return c.family_key() == key; });
}

namespace {

std::mutex g_cache_mutex;

LookupTable& cache() {
  static LookupTable table;
  return table;
}

}  // namespace

ClassLabel classify(const PureState& state) {
  ClassLabel label;
  OrientedTuple ot;
  try {
    ot = oriented_invariant_tuple(state);
  } catch (const DegenerateState& e) {
    label.kind = LabelKind::degenerate;
    label.note = "bipartite/product degenerate";
    return label;
  }
  label.orientation = ot.orientation;
  label.tuple = ot.tuple;
  if (!is_covered(ot.tuple.dims)) {
    label.kind = LabelKind::uncataloged;
    label.note = "uncataloged dims";
    return label;
  }
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    cache().add_dims(ot.tuple.dims, false);
    label.ids = cache().find(ot.tuple);
  }
  if (label.ids.empty()) {
    label.kind = LabelKind::unrecognized;
    label.note = "unrecognized at covered dims";
    return label;
  }
  label.kind = LabelKind::recognized;
  if (label.ids.front().takes_param()) label.param_invariant = ot.tuple.anharmonic;
  return label;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::equivalent: return "EQUIVALENT";
    case Verdict::inequivalent: return "INEQUIVALENT";
    case Verdict::equal_invariants: return "EQUAL-INVARIANTS";
  }
  return "?";
}

EquivalenceResult are_equivalent(const PureState& s1, const PureState& s2) {
  EquivalenceResult res{Verdict::inequivalent, "", {}, {}};
  if (s1.dims() != s2.dims()) {
    res.differing = "dims";
    return res;
  }
  if (local_ranks(s1) != local_ranks(s2)) {
    res.differing = "local ranks";
    return res;
  }
  bool d1 = false, d2 = false;
  try {
    res.first = invariant_tuple(s1);
  } catch (const DegenerateState&) {
    d1 = true;
  }
  try {
    res.second = invariant_tuple(s2);
  } catch (const DegenerateState&) {
    d2 = true;
  }
  // Product and bipartite states are classified by their local ranks alone.
  if (d1 && d2) {
    res.verdict = Verdict::equivalent;
    return res;
  }
  const InvariantTuple& a = res.first;
  const InvariantTuple& b = res.second;
  if (a.dims != b.dims) res.differing = "trimmed dims";
  else if (a.signature != b.signature) res.differing = "range signature";
  else if (a.profile != b.profile) res.differing = "rank profile";
  else if (a.kron.col_min_indices != b.kron.col_min_indices) res.differing = "column minimal indices";
  else if (a.kron.row_min_indices != b.kron.row_min_indices) res.differing = "row minimal indices";
  else if (a.kron.eig_partition_classes != b.kron.eig_partition_classes) res.differing = "eigenvalue partitions";
  else if (a.kron.n_distinct_eigs != b.kron.n_distinct_eigs) res.differing = "distinct eigenvalues";
  else if (a.anharmonic != b.anharmonic) res.differing = "anharmonic invariant";
  if (!res.differing.empty()) return res;
  bool few = !a.kron.n_distinct_eigs.is_infinite() && a.kron.n_distinct_eigs.value() <= 4;
  res.verdict = is_covered(a.dims) && few ? Verdict::equivalent : Verdict::equal_invariants;
  return res;
}

bool verify_witness(const PureState& s1, const PureState& s2, const std::vector<LocalOperator>& ops) {
  if (s1.dims() != s2.dims()) throw std::invalid_argument("witness states differ in shape");
  PureState t = apply_ilo(s1, ops);
  const auto& u = t.coeffs();
  const auto& v = s2.coeffs();
  size_t k = 0;
  while (k < v.size() && v[k].is_zero()) ++k;
  if (k == v.size() || u[k].is_zero()) return false;
  Scalar c = u[k] / v[k];
  for (size_t i = 0; i < v.size(); ++i)
    if (u[i] != c * v[i]) return false;
  return true;
}

}  // namespace slocc
