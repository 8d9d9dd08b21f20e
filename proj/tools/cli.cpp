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

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <utility>

#include "slocc/acceptance.hpp"
#include "slocc/catalog.hpp"
#include "slocc/classifier.hpp"
#include "slocc/harness.hpp"

namespace slocc {

namespace {

// Thrown for unreadable inputs; maps to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Key/value report. Machine format prints "key: value" lines in insertion
// order; human format aligns the keys.
class Report {
 public:
  explicit Report(bool machine) : machine_(machine) {}

  void add(const std::string& key, const std::string& value) { rows_.emplace_back(key, value); }

  void print(std::ostream& os) const {
    size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    for (const auto& [k, v] : rows_) {
      if (machine_)
        os << k << ": " << v << "\n";
      else
        os << k << std::string(width - k.size() + 2, ' ') << v << "\n";
    }
  }

 private:
  bool machine_;
  std::vector<std::pair<std::string, std::string>> rows_;
};

template <typename T, typename F>
std::string list(const std::vector<T>& xs, F fmt) {
  std::string s = "[";
  for (size_t k = 0; k < xs.size(); ++k) s += (k ? ", " : "") + fmt(xs[k]);
  return s + "]";
}

std::string int_list(const std::vector<int>& xs) {
  return list(xs, [](int x) { return std::to_string(x); });
}

std::string dims_list(const Dims& d) {
  return list(d, [](size_t x) { return std::to_string(x); });
}

std::string ids_list(const std::vector<ClassId>& ids) {
  return list(ids, [](const ClassId& id) { return id.to_string(); });
}

std::string eig_list(const std::vector<EigClass>& cs) {
  return list(cs, [](const EigClass& c) { return int_list(c.partition) + "x" + std::to_string(c.count); });
}

std::string kind_name(LabelKind k) {
  switch (k) {
    case LabelKind::recognized: return "recognized";
    case LabelKind::degenerate: return "degenerate";
    case LabelKind::unrecognized: return "unrecognized";
    case LabelKind::uncataloged: return "uncataloged";
  }
  return "?";
}

void add_tuple(Report& r, const InvariantTuple& t, const std::string& prefix = "") {
  r.add(prefix + "dims", dims_list(t.dims));
  r.add(prefix + "signature", t.signature.to_string());
  r.add(prefix + "rank_profile", int_list(t.profile));
  r.add(prefix + "col_min_indices", int_list(t.kron.col_min_indices));
  r.add(prefix + "row_min_indices", int_list(t.kron.row_min_indices));
  r.add(prefix + "eig_partitions", eig_list(t.kron.eig_partition_classes));
  r.add(prefix + "distinct_eigs", t.kron.n_distinct_eigs.to_string());
  r.add(prefix + "anharmonic", t.anharmonic ? t.anharmonic->to_string() : "none");
}

PureState read_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_state(ss.str());
}

std::optional<Dims> parse_dims(const std::string& text) {
  static const std::regex re(R"(\d+(x\d+)+)");
  if (!std::regex_match(text, re)) return std::nullopt;
  Dims d;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, 'x')) d.push_back(std::stoul(part));
  return d;
}

struct Options {
  bool machine = false;
  uint64_t seed = 1;
  int n = 200;
  int height = 3;
};

int cmd_classify(const std::string& file, const Options& opt, std::ostream& out) {
  ClassLabel l = classify(read_state(file));
  Report r(opt.machine);
  r.add("command", "classify");
  r.add("file", file);
  r.add("kind", kind_name(l.kind));
  r.add("ids", ids_list(l.ids));
  if (!l.note.empty()) r.add("note", l.note);
  if (l.tuple) {
    r.add("orientation", list(l.orientation.perm, [](size_t k) { return std::string(1, "ABC"[k]); }));
    add_tuple(r, *l.tuple);
  }
  if (l.param_invariant) r.add("j_invariant", l.param_invariant->to_string());
  int code = kExitOk;
  if (l.kind == LabelKind::unrecognized) code = kExitUnrecognized;
  if (l.kind == LabelKind::uncataloged || l.kind == LabelKind::degenerate) code = kExitUncovered;
  if (!opt.machine && l.kind == LabelKind::recognized) {
    std::string head;
    for (size_t k = 0; k < l.ids.size(); ++k) head += (k ? " = " : "") + l.ids[k].to_string();
    head += " " + l.tuple->signature.to_string();
    if (l.param_invariant) head += ", j-invariant = " + l.param_invariant->to_string();
    out << head << "\n";
  }
  r.add("exit", std::to_string(code));
  r.print(out);
  return code;
}

int cmd_invariants(const std::string& file, const Options& opt, std::ostream& out) {
  OrientedTuple ot = oriented_invariant_tuple(read_state(file));
  Report r(opt.machine);
  r.add("command", "invariants");
  r.add("file", file);
  add_tuple(r, ot.tuple);
  r.add("exit", "0");
  r.print(out);
  return kExitOk;
}

int cmd_catalog(const std::string& target, bool emit, const Options& opt, std::ostream& out) {
  if (std::optional<Dims> d = parse_dims(target)) {
    if (!is_covered(*d)) throw ScopeError("uncovered dims " + target);
    std::vector<ClassId> ids = enumerate(*d);
    Report r(opt.machine);
    r.add("command", "catalog");
    r.add("dims", dims_list(*d));
    r.add("count", std::to_string(ids.size()));
    for (const ClassId& id : ids) {
      ExpectedSignature e = expected(id);
      std::string v = e.signature ? e.signature->to_string() : "-";
      if (e.rank_profile) v += " profile " + int_list(*e.rank_profile);
      r.add(id.to_string(), v);
    }
    r.add("exit", "0");
    r.print(out);
    return kExitOk;
  }
  ClassId id = ClassId::parse(target);
  if (id.takes_param() && !id.param) id.param = representative_param(id);
  validate(id);
  if (emit) {
    out << format_state(build(id));
    return kExitOk;
  }
  ExpectedSignature e = expected(id);
  Report r(opt.machine);
  r.add("command", "catalog");
  r.add("id", id.to_string());
  r.add("dims", dims_list(dims_of(id)));
  r.add("printed_signature", e.signature ? e.signature->to_string() : "none");
  r.add("computed_signature", range_signature(build(id)).to_string());
  if (e.rank_profile) r.add("printed_rank_profile", int_list(*e.rank_profile));
  r.add("exit", "0");
  r.print(out);
  return kExitOk;
}

int cmd_equiv(const std::string& f1, const std::string& f2, const Options& opt, std::ostream& out) {
  EquivalenceResult res = are_equivalent(read_state(f1), read_state(f2));
  Report r(opt.machine);
  r.add("command", "equiv");
  r.add("files", "[" + f1 + ", " + f2 + "]");
  r.add("verdict", to_string(res.verdict));
  if (!res.differing.empty()) r.add("differing", res.differing);
  int code = kExitOk;
  if (res.verdict == Verdict::inequivalent) code = kExitInequivalent;
  if (res.verdict == Verdict::equal_invariants) code = kExitEqualInvariants;
  r.add("exit", std::to_string(code));
  r.print(out);
  return code;
}

int cmd_orbit_check(const std::string& target, const Options& opt, std::ostream& out) {
  ClassId id = ClassId::parse(target);
  if (id.takes_param() && !id.param) id.param = representative_param(id);
  validate(id);
  const ClassLabel want = classify(build(id));
  int pass = 0;
  int fail = 0;
  for (const PureState& s : orbit_sample(id, opt.n, opt.seed, opt.height)) {
    ClassLabel got = classify(s);
    if (got.kind == want.kind && got.ids == want.ids && got.param_invariant == want.param_invariant)
      ++pass;
    else
      ++fail;
  }
  Report r(opt.machine);
  r.add("command", "orbit-check");
  r.add("id", id.to_string());
  r.add("label", ids_list(want.ids));
  r.add("n", std::to_string(opt.n));
  r.add("seed", std::to_string(opt.seed));
  r.add("height", std::to_string(opt.height));
  r.add("pass", std::to_string(pass));
  r.add("fail", std::to_string(fail));
  const int code = fail ? kExitUnrecognized : kExitOk;
  r.add("exit", std::to_string(code));
  r.print(out);
  return code;
}

int cmd_selftest(const Options& opt, const AcceptanceOptions& acc, std::ostream& out) {
  Report r(opt.machine);
  r.add("command", "selftest");
  r.add("seed", std::to_string(acc.seed));
  r.add("height", std::to_string(acc.height));
  r.add("orbit_n", std::to_string(acc.orbit_n));
  int failed = 0;
  for (const CriterionResult& c : run_acceptance(acc)) {
    r.add("criterion_" + std::to_string(c.number), format_result(c));
    if (!c.pass) ++failed;
  }
  r.add("failed", std::to_string(failed));
  const int code = failed ? kExitUnrecognized : kExitOk;
  r.add("exit", std::to_string(code));
  r.print(out);
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact SLOCC classification of pure 2xMxN states"};
  app.require_subcommand(1);
  // Global flags may follow the subcommand.
  app.fallthrough();
  std::string format = "human";
  Options opt;
  std::optional<uint64_t> seed;
  std::optional<int> n;
  app.add_option("--format", format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--seed", seed, "random seed");
  app.add_option("--n", n, "sample count");
  app.add_option("--height", opt.height, "entry bound of random local operators")->check(CLI::PositiveNumber);

  std::string file1, file2, target;
  bool emit = false;
  auto* classify_cmd = app.add_subcommand("classify", "label a state file with its catalog class");
  classify_cmd->add_option("file", file1)->required();
  auto* invariants_cmd = app.add_subcommand("invariants", "print the invariant tuple of a state file");
  invariants_cmd->add_option("file", file1)->required();
  auto* catalog_cmd = app.add_subcommand("catalog", "list the classes at dims like 2x3x3, or show one id");
  catalog_cmd->add_option("target", target)->required();
  catalog_cmd->add_flag("--emit", emit, "print the catalog state as a state file");
  auto* equiv_cmd = app.add_subcommand("equiv", "decide SLOCC equivalence of two state files");
  equiv_cmd->add_option("file1", file1)->required();
  equiv_cmd->add_option("file2", file2)->required();
  auto* orbit_cmd = app.add_subcommand("orbit-check", "classify random local-operator images of a class");
  orbit_cmd->add_option("id", target)->required();
  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance criteria");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }
  opt.machine = format == "machine";

  try {
    if (classify_cmd->parsed()) return cmd_classify(file1, opt, out);
    if (invariants_cmd->parsed()) return cmd_invariants(file1, opt, out);
    if (catalog_cmd->parsed()) return cmd_catalog(target, emit, opt, out);
    if (equiv_cmd->parsed()) return cmd_equiv(file1, file2, opt, out);
    if (orbit_cmd->parsed()) {
      opt.seed = seed.value_or(1);
      opt.n = n.value_or(200);
      return cmd_orbit_check(target, opt, out);
    }
    if (selftest_cmd->parsed()) {
      AcceptanceOptions acc;
      if (seed) acc.seed = *seed;
      if (n) acc.orbit_n = *n;
      acc.height = opt.height;
      return cmd_selftest(opt, acc, out);
    }
  } catch (const StateParseError& e) {
    err << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CatalogError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ScopeError& e) {
    err << "out of scope: " << e.what() << "\n";
    return kExitUncovered;
  }
  return kExitParse;
}

}  // namespace slocc
