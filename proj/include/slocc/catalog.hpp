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

#ifndef SLOCC_CATALOG_HPP
#define SLOCC_CATALOG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slocc/pencil.hpp"
#include "slocc/state.hpp"

namespace slocc {

enum class Family { phi, varphi, Phi, Upsilon, Theta, Gamma, Lambda, LambdaExtra, T23N, T22N, FourQubitPhi };

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Names one canonical class. For the M-parameterized families `size` is M;
/// for the T22N/T23N table rows it is the C dimension N. A missing `param`
/// on Phi3/Lambda3/FourQubitPhi marks the symbolic (whole-family) entry.
struct ClassId {
  Family family = Family::phi;
  int index = 0;
  std::optional<int> size;
  std::optional<Scalar> param;

  friend bool operator==(const ClassId&, const ClassId&) = default;
  friend std::strong_ordering operator<=>(const ClassId& a, const ClassId& b);

  /// `Phi3[x=2]`, `Gamma7[M=3]`, `t233-4`, `Lambda3[M=2,x=5]`, ...
  std::string to_string() const;
  /// Throws ParseError.
  static ClassId parse(std::string_view text);

  bool takes_param() const;
  /// Same class ignoring the parameter value.
  ClassId family_key() const;
};

struct ExpectedSignature {
  std::optional<RangeSignature> signature;
  std::optional<RankProfileSet> rank_profile;
};

/// Throws CatalogError on out-of-range ids, forbidden parameters, missing
/// parameters and the indices absent at M = 1.
void validate(const ClassId& id);
PureState build(const ClassId& id);
Dims dims_of(const ClassId& id);

/// Chain of pairs |0,M-1-i,N-1-2i> + |1,M-1-i,N-2-2i> followed by `tail` on
/// the residual (2, 2M-N, 2M-N) block. Requires M < N < 2M.
PureState build_exceptional(int m, int n, const PureState& tail);
PureState build_exceptional(int m, int n, const ClassId& tail);

/// True class ids of the given (2, M, N) dims; (2, N, M) gives the same list.
/// Throws CatalogError("dims outside catalog coverage").
std::vector<ClassId> enumerate(const Dims& dims);
bool is_covered(const Dims& dims);

/// Values printed in the source tables; empty where none are given.
ExpectedSignature expected(const ClassId& id);

/// Parameter used when a symbolic family entry needs a concrete state.
Scalar representative_param(const ClassId& id);

}  // namespace slocc

#endif  // SLOCC_CATALOG_HPP
