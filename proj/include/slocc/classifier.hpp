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

#ifndef SLOCC_CLASSIFIER_HPP
#define SLOCC_CLASSIFIER_HPP

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "slocc/catalog.hpp"
#include "slocc/pencil.hpp"
#include "slocc/state.hpp"

namespace slocc {

class ScopeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Product or bipartite state: some party has local rank 1.
class DegenerateState : public ScopeError {
 public:
  using ScopeError::ScopeError;
};

struct InvariantTuple {
  Dims dims;
  RangeSignature signature;
  RankProfileSet profile;
  KroneckerData kron;
  /// Klein j-invariant of the eigenvalues when there are exactly four.
  std::optional<Scalar> anharmonic;

  friend bool operator==(const InvariantTuple& a, const InvariantTuple& b) { return (a <=> b) == 0; }
  friend std::strong_ordering operator<=>(const InvariantTuple& a, const InvariantTuple& b);

  /// Copy with the anharmonic value dropped, keeping only whether it exists.
  InvariantTuple stripped() const;
  std::string to_string() const;
};

/// How a state was brought into catalog orientation: trimmed, then parties
/// reordered so that new party k is old party perm[k].
struct Orientation {
  std::vector<size_t> perm{0, 1, 2};
  bool bc_swapped = false;
};

struct OrientedTuple {
  InvariantTuple tuple;
  Orientation orientation;
};

/// Throws DegenerateState when some party has local rank 1, and
/// ScopeError("outside 2xMxN scope") for non-tripartite states or when no
/// party has local rank 2.
OrientedTuple oriented_invariant_tuple(const PureState& state);
InvariantTuple invariant_tuple(const PureState& state);

class LookupCollision : public std::runtime_error {
 public:
  LookupCollision(const ClassId& a, const ClassId& b, const InvariantTuple& t);
  const ClassId& first() const { return a_; }
  const ClassId& second() const { return b_; }

 private:
  ClassId a_;
  ClassId b_;
};

/// Invariant tuple -> catalog ids. Parameterized families are keyed on the
/// stripped tuple; everything else on the full tuple.
class LookupTable {
 public:
  /// Adds every id of enumerate(dims). In strict mode a second id on an
  /// occupied key throws LookupCollision; otherwise it is recorded as an
  /// alias of the first.
  void add_dims(const Dims& dims, bool strict);
  void add(const ClassId& id, bool strict);

  /// All ids sharing the tuple's key; empty when unknown.
  std::vector<ClassId> find(const InvariantTuple& t) const;
  size_t key_count() const { return exact_.size() + family_.size(); }
  /// Keys carrying more than one id.
  std::vector<std::pair<InvariantTuple, std::vector<ClassId>>> shared_keys() const;

 private:
  std::map<InvariantTuple, std::vector<ClassId>> exact_;
  std::map<InvariantTuple, std::vector<ClassId>> family_;
  std::set<Dims> loaded_;
};

/// Strict construction; throws LookupCollision naming both ids and the tuple.
LookupTable build_lookup(const std::vector<Dims>& dims_list);

enum class LabelKind { recognized, degenerate, unrecognized, uncataloged };

struct ClassLabel {
  LabelKind kind = LabelKind::recognized;
  /// First id is the primary label; further ids share its invariants.
  std::vector<ClassId> ids;
  Orientation orientation;
  std::optional<Scalar> param_invariant;
  std::optional<InvariantTuple> tuple;
  std::string note;

  const ClassId& id() const;
  bool has_id(const ClassId& id) const;
};

/// Classification against a process-wide lookup cache built lazily per dims.
ClassLabel classify(const PureState& state);

enum class Verdict { equivalent, inequivalent, equal_invariants };

struct EquivalenceResult {
  Verdict verdict;
  /// Name of the first differing invariant for inequivalent pairs.
  std::string differing;
  InvariantTuple first;
  InvariantTuple second;
};

EquivalenceResult are_equivalent(const PureState& s1, const PureState& s2);
std::string to_string(Verdict v);

/// apply_ilo(s1, ops) equals s2 up to a nonzero global scalar. Throws
/// std::invalid_argument on shape mismatch.
bool verify_witness(const PureState& s1, const PureState& s2, const std::vector<LocalOperator>& ops);

}  // namespace slocc

#endif  // SLOCC_CLASSIFIER_HPP
