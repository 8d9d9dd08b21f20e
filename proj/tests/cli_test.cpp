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


#include "slocc/cli.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "slocc/catalog.hpp"
#include "slocc/classifier.hpp"
#include "slocc/harness.hpp"

using namespace slocc;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / ("slocc_cli_" + name);
  std::ofstream(p) << content;
  return p.string();
}

std::string value_of(const std::string& report, const std::string& key) {
  std::istringstream in(report);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
  return "";
}

}  // namespace

TEST(Cli, catalog_counts) {
  EXPECT_EQ(value_of(run({"catalog", "2x3x3", "--format", "machine"}).out, "count"), "6");
  EXPECT_EQ(value_of(run({"catalog", "2x4x5", "--format", "machine"}).out, "count"), "12");
  EXPECT_EQ(run({"catalog", "2x5x5"}).code, kExitUncovered);
  EXPECT_EQ(run({"catalog", "Bogus7"}).code, kExitParse);
}

TEST(Cli, classify_examples) {
  std::string phi12 = temp_file("phi12", format_state(build(ClassId::parse("Phi12"))));
  CliRun r = run({"classify", phi12});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "Phi12 [0,1,1]");

  ClassId x5 = ClassId::parse("Phi3[x=5]");
  std::string moved = temp_file("phi3x5", format_state(orbit_sample(x5, 1, 3, 3).front()));
  CliRun m = run({"classify", moved, "--format", "machine"});
  EXPECT_EQ(m.code, kExitOk);
  EXPECT_EQ(value_of(m.out, "ids"), "[Phi3]");
  EXPECT_EQ(value_of(m.out, "j_invariant"), j_of_cross_ratio(Scalar(5)).to_string());

  std::string bad = temp_file("bad", "dims: [2, 2, 2]\ncoeffs: [1, 0, 0]\n");
  CliRun b = run({"classify", bad});
  EXPECT_EQ(b.code, kExitParse);
  EXPECT_NE(b.err.find("line"), std::string::npos);
  EXPECT_EQ(run({"classify", "/nonexistent/state"}).code, kExitParse);

  PureState diag = PureState::zeros({2, 5, 5});
  for (size_t k = 0; k < 5; ++k) diag.add_ket({0, k, k}).add_ket({1, k, k}, Scalar(static_cast<long>(k)));
  EXPECT_EQ(run({"classify", temp_file("diag", format_state(diag))}).code, kExitUncovered);
}

TEST(Cli, equiv_and_invariants) {
  std::string a = temp_file("e1", format_state(build(ClassId::parse("Phi3[x=2]"))));
  std::string b = temp_file("e2", format_state(build(ClassId::parse("Phi3[x=-1]"))));
  std::string c = temp_file("e3", format_state(build(ClassId::parse("Phi3[x=3]"))));
  EXPECT_EQ(run({"equiv", a, b}).code, kExitOk);
  CliRun r = run({"equiv", a, c, "--format", "machine"});
  EXPECT_EQ(r.code, kExitInequivalent);
  EXPECT_EQ(value_of(r.out, "differing"), "anharmonic invariant");

  PureState d1 = PureState::zeros({2, 5, 5});
  PureState d2 = PureState::zeros({2, 5, 5});
  for (size_t k = 0; k < 5; ++k) {
    d1.add_ket({0, k, k}).add_ket({1, k, k}, Scalar(static_cast<long>(k)));
    d2.add_ket({0, k, k}).add_ket({1, k, k}, Scalar(static_cast<long>(k * k + 7)));
  }
  EXPECT_EQ(run({"equiv", temp_file("d1", format_state(d1)), temp_file("d2", format_state(d2))}).code,
            kExitEqualInvariants);

  CliRun inv = run({"invariants", a, "--format", "machine"});
  EXPECT_EQ(inv.code, kExitOk);
  EXPECT_EQ(value_of(inv.out, "anharmonic"), "1728");
}

TEST(Cli, orbit_check_is_reproducible) {
  CliRun r = run({"orbit-check", "varphi5", "--n", "5", "--seed", "7", "--format", "machine"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(value_of(r.out, "seed"), "7");
  EXPECT_EQ(value_of(r.out, "height"), "3");
  EXPECT_EQ(value_of(r.out, "pass"), "5");
  EXPECT_EQ(r.out, run({"orbit-check", "varphi5", "--n", "5", "--seed", "7", "--format", "machine"}).out);
}

TEST(Cli, every_emitted_catalog_state_round_trips) {
  int checked = 0;
  for (size_t m = 2; m <= 7; ++m)
    for (size_t n = m; n <= 11; ++n) {
      if (!is_covered({2, m, n})) continue;
      for (const ClassId& id : enumerate({2, m, n})) {
        CliRun e = run({"catalog", id.to_string(), "--emit"});
        ASSERT_EQ(e.code, kExitOk) << id.to_string();
        CliRun c = run({"classify", temp_file("rt", e.out), "--format", "machine"});
        const std::vector<size_t> ranks = local_ranks(parse_state(e.out));
        if (std::find(ranks.begin(), ranks.end(), size_t{1}) != ranks.end()) {
          EXPECT_EQ(value_of(c.out, "kind"), "degenerate") << id.to_string();
          continue;
        }
        ++checked;
        EXPECT_EQ(c.code, kExitOk) << id.to_string();
        std::string ids = value_of(c.out, "ids");
        ids = ", " + ids.substr(1, ids.size() - 2) + ", ";
        EXPECT_NE(ids.find(", " + id.family_key().to_string() + ", "), std::string::npos) << id.to_string();
      }
    }
  EXPECT_GT(checked, 200);
}
