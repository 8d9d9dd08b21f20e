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

#ifndef SLOCC_PENCIL_HPP
#define SLOCC_PENCIL_HPP

#include <compare>
#include <ostream>
#include <optional>
#include <string>
#include <vector>

#include "slocc/poly.hpp"
#include "slocc/state.hpp"

namespace slocc {

/// Nonnegative integer or infinity.
class Count {
 public:
  constexpr Count() = default;
  constexpr Count(long n) : value_(n) {  // NOLINT(google-explicit-constructor)
    if (n < 0) throw std::invalid_argument("negative count");
  }
  static constexpr Count infinite() {
    Count c;
    c.infinite_ = true;
    return c;
  }

  bool is_infinite() const { return infinite_; }
  /// Throws std::logic_error for Infinite.
  long value() const;

  friend constexpr bool operator==(const Count&, const Count&) = default;
  friend constexpr std::strong_ordering operator<=>(const Count& a, const Count& b) {
    if (a.infinite_ != b.infinite_) return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

  /// "inf" or the decimal value.
  std::string to_string() const;
  /// "∞" or the decimal value.
  std::string to_human() const;
  /// Accepts "inf", "∞" or a nonnegative integer.
  static Count parse(const std::string& s);

 private:
  long value_ = 0;
  bool infinite_ = false;
};

/// Product-state counts in R(rho^BC), R(rho^AC), R(rho^AB).
struct RangeSignature {
  Count a1;
  Count a2;
  Count a3;

  friend auto operator<=>(const RangeSignature&, const RangeSignature&) = default;
  std::string to_string() const;
  std::string to_human() const;
};

std::ostream& operator<<(std::ostream& os, const Count& c);
std::ostream& operator<<(std::ostream& os, const RangeSignature& s);

using RankProfileSet = std::vector<int>;

/// d[j] is the monic gcd of all (j+1)-minors of alpha*A0 + beta*A1, for
/// j < normal_rank.
struct DeterminantalProfile {
  std::vector<BinaryForm> d;
  int normal_rank = 0;

  /// Rank of the pencil at (alpha:beta).
  int rank_at(const Scalar& alpha, const Scalar& beta) const;
};

/// Jordan-block sizes shared by `count` distinct eigenvalues.
struct EigClass {
  std::vector<int> partition;
  int count = 0;
  friend auto operator<=>(const EigClass&, const EigClass&) = default;
};

struct KroneckerData {
  std::vector<int> col_min_indices;
  std::vector<int> row_min_indices;
  std::vector<EigClass> eig_partition_classes;
  BinaryForm eig_form;
  Count n_distinct_eigs;

  /// Structural data only; eig_form is covariant and left out.
  friend bool operator==(const KroneckerData& a, const KroneckerData& b) { return (a <=> b) == 0; }
  friend std::strong_ordering operator<=>(const KroneckerData& a, const KroneckerData& b);
  std::string to_string() const;
};

DeterminantalProfile determinantal_divisors(const Pencil& p);
RankProfileSet rank_profile_set(const DeterminantalProfile& prof);
RankProfileSet rank_profile_set(const Pencil& p);

Count product_count_bc(const DeterminantalProfile& prof);
Count product_count_bc(const Pencil& p);

/// Product rays in the span of the columns of `span`, a (2*m) x d matrix
/// whose row q*m + j is the coefficient of |q>|j>.
Count product_count_qubit_side(const Matrix& span, size_t m);

/// The state must have three parties and dims[0] == 2.
RangeSignature range_signature(const PureState& state);
RangeSignature range_signature(const Pencil& p, const DeterminantalProfile& prof);

/// Counts for the pairs AB, AC, AD, BC, BD, CD of a four-party state.
std::vector<Count> multipartite_signature(const PureState& state);

KroneckerData kronecker_data(const Pencil& p);
KroneckerData kronecker_data(const Pencil& p, const DeterminantalProfile& prof);
/// Column minimal indices, from kernel dimensions of the block bidiagonal
/// coefficient matrices.
std::vector<int> column_minimal_indices(const Pencil& p, int normal_rank);
/// Eigenvalue classes from the divisor chain, without root extraction.
std::vector<EigClass> eig_partition_classes(const DeterminantalProfile& prof);

/// Klein j-invariant of the four roots of a quartic form, from its two
/// classical invariants. Throws std::domain_error on repeated roots.
Scalar anharmonic_invariant(const BinaryForm& f);
/// 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2) for a cross-ratio l not in {0, 1}.
Scalar j_of_cross_ratio(const Scalar& lambda);

}  // namespace slocc

#endif  // SLOCC_PENCIL_HPP
