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

#ifndef SLOCC_ACCEPTANCE_HPP
#define SLOCC_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace slocc {

struct AcceptanceOptions {
  /// Random ILO images per catalog class (criterion 5).
  int orbit_n = 200;
  /// Random states per dims for the oracle cross-check (criterion 7).
  int random_n = 100;
  uint64_t seed = 20260101;
  int height = 3;
};

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  /// One line: what was checked and, on failure, what disagreed.
  std::string detail;
  double seconds = 0;
};

CriterionResult criterion_signatures();
CriterionResult criterion_rank_profiles();
CriterionResult criterion_class_counts();
CriterionResult criterion_lookup_injectivity();
CriterionResult criterion_orbit_invariance(const AcceptanceOptions& opt);
CriterionResult criterion_four_qubit();
CriterionResult criterion_oracle_agreement(const AcceptanceOptions& opt);
CriterionResult criterion_exceptional_reductions();

/// Criteria 1-8 in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);

/// "criterion N [PASS|FAIL] name (t s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace slocc

#endif  // SLOCC_ACCEPTANCE_HPP
