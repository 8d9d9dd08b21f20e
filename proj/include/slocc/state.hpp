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

#ifndef SLOCC_STATE_HPP
#define SLOCC_STATE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "slocc/matrix.hpp"
#include "slocc/scalar.hpp"

namespace slocc {

using Dims = std::vector<size_t>;

/// Dense coefficient tensor of a multipartite pure state, row-major in the
/// party order. Global scale is irrelevant and never normalized.
class PureState {
 public:
  PureState(Dims dims, std::vector<Scalar> coeffs);

  /// All-zero tensor; only for building states ket by ket. Call validate()
  /// (or pass through any operation) before using it as a state.
  static PureState zeros(Dims dims);

  const Dims& dims() const { return dims_; }
  size_t parties() const { return dims_.size(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  size_t offset(const std::vector<size_t>& index) const;
  const Scalar& at(const std::vector<size_t>& index) const { return coeffs_[offset(index)]; }
  Scalar& at(const std::vector<size_t>& index) { return coeffs_[offset(index)]; }
  /// Adds c times the basis ket |index>.
  PureState& add_ket(const std::vector<size_t>& index, const Scalar& c = Scalar(1));

  /// Throws std::invalid_argument when the tensor is zero.
  void validate() const;

  /// Party index as rows, remaining indices (row-major) as columns.
  Matrix flattening(size_t party) const;

  friend bool operator==(const PureState&, const PureState&) = default;

 private:
  PureState(Dims dims, std::vector<Scalar> coeffs, bool check);
  Dims dims_;
  std::vector<Scalar> coeffs_;
};

/// Invertible square matrix acting on one party.
class LocalOperator {
 public:
  explicit LocalOperator(Matrix m);
  static LocalOperator identity(size_t dim) { return LocalOperator(Matrix::identity(dim)); }

  size_t dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

/// Ordered slices (A0, A1) of a state along its qubit party.
class Pencil {
 public:
  Pencil(Matrix a0, Matrix a1);

  size_t rows() const { return a0_.rows(); }
  size_t cols() const { return a0_.cols(); }
  const Matrix& a0() const { return a0_; }
  const Matrix& a1() const { return a1_; }
  /// alpha*A0 + beta*A1.
  Matrix at(const Scalar& alpha, const Scalar& beta) const;
  Pencil transpose() const { return Pencil(a0_.transpose(), a1_.transpose()); }

  friend bool operator==(const Pencil&, const Pencil&) = default;

 private:
  Matrix a0_;
  Matrix a1_;
};

struct Trimmed {
  PureState state;
  /// maps[k] is dims[k] x trimmed_dims[k]; applying every map to the trimmed
  /// state reproduces the input exactly.
  std::vector<Matrix> maps;
};

size_t local_rank(const PureState& state, size_t party);
std::vector<size_t> local_ranks(const PureState& state);
Trimmed trim(const PureState& state);

/// Contracts m (rows x dims[party]) into one party; m need not be square.
PureState apply_to_party(const PureState& state, size_t party, const Matrix& m);
PureState apply_ilo(const PureState& state, const std::vector<LocalOperator>& ops);
/// New party k is old party perm[k].
PureState permute_parties(const PureState& state, const std::vector<size_t>& perm);
/// Permutes the parties into block order, then merges each block into one party.
PureState group_parties(const PureState& state, const std::vector<std::vector<size_t>>& blocks);
Pencil pencil_of(const PureState& state);
/// The inverse of pencil_of.
PureState state_of(const Pencil& p);

LocalOperator random_ilo(size_t dim, uint64_t seed, int height);

/// Error in a state document, with 1-based position.
class StateParseError : public ParseError {
 public:
  StateParseError(const std::string& what, size_t line, size_t column);
  size_t line() const { return line_; }
  size_t column() const { return column_; }

 private:
  size_t line_;
  size_t column_;
};

/// Parses `dims: [..]` and `coeffs: [..]` (flat, row-major). `#` starts a
/// comment; other keys are ignored.
PureState parse_state(std::string_view text);
std::string format_state(const PureState& state);

}  // namespace slocc

#endif  // SLOCC_STATE_HPP
