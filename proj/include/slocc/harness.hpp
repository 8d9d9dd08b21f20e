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

#ifndef SLOCC_HARNESS_HPP
#define SLOCC_HARNESS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "slocc/catalog.hpp"
#include "slocc/pencil.hpp"
#include "slocc/state.hpp"

namespace slocc {

class OracleInconclusive : public std::runtime_error {
 public:
  OracleInconclusive() : std::runtime_error("oracle inconclusive, raise precision") {}
};

struct OracleReport {
  std::string quantity;
  std::string exact;
  std::string oracle;
  bool agree = false;
  /// Decimal digits of the run that decided, or of the last attempt.
  int digits = 0;
};

/// Which range the product rays are counted in.
enum class ProductSide { bc, ac, ab };

constexpr int kOracleDigits = 30;
constexpr int kOracleMaxDigits = 120;

/// Counts product rays numerically: roots of a random compression of the
/// relevant minors, filtered by singular-value rank tests at tolerance
/// 10^(-digits/2). The state is trimmed first and must then have a qubit as
/// party 0. Throws OracleInconclusive on near-ties at this precision.
Count float_product_count_oracle(const PureState& state, ProductSide side, int digits);
RangeSignature float_range_signature(const PureState& state, int digits);

/// Exact range_signature against the float oracle, doubling the precision
/// from kOracleDigits up to kOracleMaxDigits while inconclusive.
OracleReport check_range_signature(const PureState& state);

/// Kronecker data through a separate route: minimal indices from explicit
/// polynomial kernel bases degree by degree, eigenvalue structure from
/// Cauchy-Binet compressions of the minors and squarefree decompositions of
/// the invariant factors. eig_form is left as the unit form.
KroneckerData brute_kronecker_oracle(const Pencil& p, int max_degree);

/// Sparse random state: each amplitude is zero with probability 1/2 and
/// otherwise a nonzero integer in [-height, height]. Deterministic in seed.
PureState random_integer_state(const Dims& dims, uint64_t seed, int height);

/// n states build(id) under fresh random ILOs; deterministic in seed. A
/// parameterized id without x uses representative_param.
std::vector<PureState> orbit_sample(const ClassId& id, int n, uint64_t seed, int height);

}  // namespace slocc

#endif  // SLOCC_HARNESS_HPP
