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

#include "slocc/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "slocc/catalog.hpp"
#include "slocc/classifier.hpp"
#include "slocc/harness.hpp"

namespace slocc {

namespace {

const Count kInf = Count::infinite();

CriterionResult timed(int number, const std::string& name, const std::function<void(CriterionResult&)>& body) {
  CriterionResult r;
  r.number = number;
  r.name = name;
  auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

ClassId id_of(const std::string& text) { return ClassId::parse(text); }

ClassId concrete(ClassId id) {
  if (id.takes_param() && !id.param) id.param = representative_param(id);
  return id;
}

bool valid(const ClassId& id) {
  try {
    validate(concrete(id));
    return true;
  } catch (const CatalogError&) {
    return false;
  }
}

std::string dims_text(const Dims& d) {
  std::string s;
  for (size_t k = 0; k < d.size(); ++k) s += (k ? "x" : "") + std::to_string(d[k]);
  return s;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (size_t k = 0; k < parts.size(); ++k) s += (k ? sep : "") + parts[k];
  return s;
}

std::string family_id(const std::string& name, int index, int m) {
  return name + std::to_string(index) + "[M=" + std::to_string(m) + "]";
}

// Every bracket-carrying id of the signature criterion.
std::vector<ClassId> signature_ids() {
  std::vector<ClassId> ids;
  for (int i = 0; i < 2; ++i) ids.push_back(id_of("phi" + std::to_string(i)));
  for (int i = 0; i < 6; ++i) ids.push_back(id_of("varphi" + std::to_string(i)));
  for (int i = 0; i < 16; ++i)
    if (i != 3) ids.push_back(id_of("Phi" + std::to_string(i)));
  for (const char* x : {"2", "3", "-1", "5/7"}) ids.push_back(id_of(std::string("Phi3[x=") + x + "]"));
  for (int m = 2; m <= 4; ++m) {
    for (int i = 0; i < 3; ++i) ids.push_back(id_of(family_id("Upsilon", i, m)));
    for (int i = 0; i < 6; ++i) ids.push_back(id_of(family_id("Theta", i, m)));
  }
  for (int m = 1; m <= 3; ++m)
    for (int i = 0; i < 15; ++i) ids.push_back(id_of(family_id("Gamma", i, m)));
  for (int m = 1; m <= 2; ++m)
    for (int i = 0; i < 37; ++i) ids.push_back(id_of(family_id("Lambda", i, m)));
  std::vector<ClassId> out;
  for (const ClassId& id : ids)
    if (valid(id)) out.push_back(concrete(id));
  return out;
}

// Covered dims of the injectivity criterion: every 2x2xN, 2x3xN, 2x4xN
// table, Upsilon/Theta/Gamma up to M = 4 and Lambda up to M = 2.
std::vector<Dims> lookup_dims() {
  std::set<Dims> out;
  for (size_t n = 1; n <= 4; ++n) out.insert({2, 2, n});
  for (size_t n = 1; n <= 6; ++n) out.insert({2, 3, n});
  for (size_t n = 1; n <= 8; ++n) out.insert({2, 4, n});
  for (size_t m = 1; m <= 4; ++m) {
    if (m >= 2) out.insert({2, m, 2 * m});
    out.insert({2, m + 1, 2 * m + 1});
    if (m >= 2) out.insert({2, m + 2, 2 * m + 2});
    out.insert({2, m + 3, 2 * m + 3});
  }
  for (size_t m = 1; m <= 2; ++m) out.insert({2, m + 4, 2 * m + 4});
  return {out.begin(), out.end()};
}

bool is_true_state(const PureState& s) {
  for (size_t r : local_ranks(s))
    if (r < 2) return false;
  return true;
}

// The j value carried by a label, or nothing.
std::string j_text(const ClassLabel& l) { return l.param_invariant ? l.param_invariant->to_string() : "-"; }

std::string ids_text(const ClassLabel& l) {
  std::vector<std::string> parts;
  for (const ClassId& id : l.ids) parts.push_back(id.to_string());
  return parts.empty() ? "<none>" : join(parts, "=");
}

PureState phi3_at(const Scalar& x) {
  ClassId id = id_of("Phi3");
  id.param = x;
  return build(id);
}

std::vector<Scalar> cross_ratio_orbit(const Scalar& x) {
  Scalar one(1);
  Scalar inv = one / x;
  return {x, inv, one - x, one / (one - x), one - inv, one / (one - inv)};
}

Scalar random_param(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 20);
  while (true) {
    Scalar x = Scalar::ratio(num(rng), den(rng));
    if (!x.is_zero() && x != Scalar(1)) return x;
  }
}

PureState kets(const Dims& dims, const std::vector<std::vector<size_t>>& list) {
  PureState s = PureState::zeros(dims);
  for (const auto& k : list) s.add_ket(k);
  return s;
}

// Theta_i written out from the family formulas on top of Upsilon_1 and
// Upsilon_2; used at M = 1, where the catalog does not list the family.
PureState theta_by_formula(size_t m, int i) {
  std::vector<std::vector<size_t>> k;
  for (size_t j = 0; j < m; ++j) {
    k.push_back({0, j, j});
    k.push_back({1, j, j + m});
  }
  k.push_back({0, m, 2 * m});
  const bool ups2 = i == 2 || i == 4 || i == 5;
  if (ups2) k.push_back({1, m, m - 1});
  switch (i) {
    case 0:
    case 2: k.push_back({1, m + 1, 2 * m + 1}); break;
    case 1: k.push_back({0, m + 1, 2 * m + 1}); break;
    case 3:
    case 5:
      k.push_back({0, m + 1, 2 * m + 1});
      k.push_back({1, m + 1, 2 * m});
      break;
    case 4:
      k.push_back({0, m + 1, 2 * m + 1});
      k.push_back({1, m + 1, 0});
      break;
  }
  return kets({2, m + 2, 2 * m + 2}, k);
}

}  // namespace

CriterionResult criterion_signatures() {
  return timed(1, "signature reproduction", [](CriterionResult& r) {
    int checked = 0;
    int skipped = 0;
    std::vector<std::string> bad;
    for (const ClassId& id : signature_ids()) {
      ExpectedSignature e = expected(id);
      if (!e.signature) {
        ++skipped;
        continue;
      }
      RangeSignature got = range_signature(build(id));
      ++checked;
      if (got != *e.signature)
        bad.push_back(id.to_string() + " engine " + got.to_string() + " printed " + e.signature->to_string());
    }
    r.pass = bad.empty();
    r.detail = std::to_string(checked) + " brackets checked exactly (" + std::to_string(skipped) +
               " ids without a printed bracket)";
    if (!bad.empty()) r.detail += "; mismatches: " + join(bad, "; ");
  });
}

CriterionResult criterion_rank_profiles() {
  return timed(2, "rank-profile reproduction", [](CriterionResult& r) {
    const std::map<std::string, RankProfileSet> printed{
        {"Phi0", {2, 4}},  {"Phi5", {2, 4}},  {"Phi13", {2, 4}},   {"Phi2", {2, 3, 4}}, {"Phi7", {2, 3, 4}},
        {"Phi9", {2, 3, 4}}, {"Phi4", {2, 3}}, {"Phi11", {3}},     {"Phi15", {3}},      {"Phi1", {1, 3, 4}},
        {"Phi8", {1, 4}},  {"Phi6", {3, 4}},  {"Phi14", {3, 4}},
    };
    std::vector<std::string> bad;
    for (const auto& [name, want] : printed) {
      RankProfileSet got = rank_profile_set(pencil_of(build(id_of(name))));
      if (got != want) bad.push_back(name);
    }
    r.pass = bad.empty();
    r.detail = std::to_string(printed.size()) + " Phi profiles compared exactly";
    if (!bad.empty()) r.detail += "; mismatches: " + join(bad, ", ");
  });
}

CriterionResult criterion_class_counts() {
  return timed(3, "class counts", [](CriterionResult& r) {
    std::vector<std::string> bad;
    const std::vector<size_t> row{1, 2, 6, 5, 2, 1};
    for (size_t n = 1; n <= 6; ++n) {
      size_t got = enumerate({2, 3, n}).size();
      if (got != row[n - 1]) bad.push_back("2x3x" + std::to_string(n) + " has " + std::to_string(got));
    }
    const std::vector<std::pair<Dims, size_t>> more{{{2, 4, 5}, 12}, {{2, 5, 7}, 15}, {{2, 6, 8}, 37}};
    for (const auto& [d, want] : more) {
      size_t got = enumerate(d).size();
      if (got != want) bad.push_back(dims_text(d) + " has " + std::to_string(got));
    }
    r.pass = bad.empty();
    r.detail = "2x3xN = 1,2,6,5,2,1; 2x4x5 = 12; Gamma(M=2) = 15; Lambda(M=2) = 37";
    if (!bad.empty()) r.detail += "; wrong: " + join(bad, ", ");
  });
}

CriterionResult criterion_lookup_injectivity() {
  return timed(4, "lookup injectivity", [](CriterionResult& r) {
    int ok = 0;
    std::vector<std::string> bad;
    for (const Dims& d : lookup_dims()) {
      try {
        build_lookup({d});
        ++ok;
      } catch (const LookupCollision&) {
        LookupTable t;
        t.add_dims(d, false);
        std::vector<std::string> groups;
        for (const auto& [key, ids] : t.shared_keys()) {
          std::vector<std::string> names;
          for (const ClassId& id : ids) names.push_back(id.to_string());
          groups.push_back(join(names, "="));
        }
        bad.push_back(dims_text(d) + " " + std::to_string(t.key_count()) + " keys for " +
                      std::to_string(enumerate(d).size()) + " ids (" + join(groups, ", ") + ")");
      }
    }
    r.pass = bad.empty();
    r.detail = std::to_string(ok) + "/" + std::to_string(lookup_dims().size()) + " dims injective";
    if (!bad.empty()) r.detail += "; collisions: " + join(bad, "; ");
  });
}

CriterionResult criterion_orbit_invariance(const AcceptanceOptions& opt) {
  return timed(5, "orbit invariance", [&](CriterionResult& r) {
    // Same family range as the signature criterion: Gamma stops at M = 3.
    std::vector<ClassId> work;
    for (const Dims& d : lookup_dims()) {
      if (d == Dims{2, 7, 11}) continue;
      for (const ClassId& sym : enumerate(d)) {
        ClassId id = concrete(sym);
        if (is_true_state(build(id))) work.push_back(id);
      }
    }
    // Classes are independent; spread them over the hardware threads.
    std::vector<std::string> verdict(work.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (size_t k = next++; k < work.size(); k = next++) {
        const ClassId& id = work[k];
        ClassLabel want = classify(build(id));
        int misses = 0;
        for (const PureState& s : orbit_sample(id, opt.orbit_n, opt.seed + k, opt.height)) {
          ClassLabel got = classify(s);
          if (got.kind != LabelKind::recognized || got.ids != want.ids || got.param_invariant != want.param_invariant ||
              got.tuple != want.tuple)
            ++misses;
        }
        if (want.kind != LabelKind::recognized || !want.has_id(id))
          verdict[k] = id.to_string() + " not self-labelled";
        else if (misses)
          verdict[k] = id.to_string() + " " + std::to_string(misses) + " misses";
      }
    };
    const unsigned n_threads = std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();
    std::vector<std::string> bad;
    for (const std::string& v : verdict)
      if (!v.empty()) bad.push_back(v);
    const size_t classes = work.size();

    // Phi3: the six members of each cross-ratio orbit share label and j.
    std::mt19937_64 rng(opt.seed);
    int orbits = 0;
    for (int t = 0; t < 20; ++t) {
      Scalar x = random_param(rng);
      ClassLabel first = classify(phi3_at(x));
      for (const Scalar& y : cross_ratio_orbit(x)) {
        ClassLabel l = classify(phi3_at(y));
        if (l.ids != first.ids || l.param_invariant != first.param_invariant || !first.param_invariant)
          bad.push_back("Phi3 orbit of x=" + x.to_string() + " splits at y=" + y.to_string());
      }
      ++orbits;
    }
    int pairs = 0;
    while (pairs < 20) {
      Scalar x = random_param(rng);
      Scalar y = random_param(rng);
      auto orbit = cross_ratio_orbit(x);
      if (std::find(orbit.begin(), orbit.end(), y) != orbit.end()) continue;
      ++pairs;
      if (classify(phi3_at(x)).param_invariant == classify(phi3_at(y)).param_invariant)
        bad.push_back("Phi3 x=" + x.to_string() + " and y=" + y.to_string() + " share j");
    }
    for (const Scalar& x : {Scalar(2), Scalar::ratio(1, 2), Scalar(-1)}) {
      if (j_of_cross_ratio(x) != Scalar(1728)) bad.push_back("j(" + x.to_string() + ") != 1728");
      ClassLabel l = classify(phi3_at(x));
      if (!l.param_invariant || *l.param_invariant != Scalar(1728))
        bad.push_back("classify(Phi3[x=" + x.to_string() + "]) j = " + j_text(l));
    }
    r.pass = bad.empty();
    r.detail = std::to_string(classes) + " classes x " + std::to_string(opt.orbit_n) + " ILO images on " + std::to_string(n_threads) + " threads (seed " +
               std::to_string(opt.seed) + ", height " + std::to_string(opt.height) + "); " + std::to_string(orbits) +
               " Phi3 orbits; " + std::to_string(pairs) + " non-orbit pairs; j(2)=j(1/2)=j(-1)=1728";
    if (!bad.empty()) r.detail += "; failures: " + join(bad, "; ");
  });
}

CriterionResult criterion_four_qubit() {
  return timed(6, "four-qubit example", [](CriterionResult& r) {
    const std::vector<Count> want{Count(2), kInf, kInf, kInf, kInf, Count(2)};
    std::vector<std::string> got;
    bool ok = true;
    for (const char* x : {"2", "3"}) {
      std::vector<Count> sig = multipartite_signature(build(id_of(std::string("FourQubitPhi[x=") + x + "]")));
      std::vector<std::string> parts;
      for (const Count& c : sig) parts.push_back(c.to_string());
      got.push_back(std::string("x=") + x + " [" + join(parts, ",") + "]");
      ok = ok && sig == want;
    }
    r.pass = ok;
    r.detail = join(got, ", ");
  });
}

CriterionResult criterion_oracle_agreement(const AcceptanceOptions& opt) {
  return timed(7, "oracle agreement", [&](CriterionResult& r) {
    std::vector<std::string> bad;
    // Catalog signatures.
    std::vector<ClassId> catalog = signature_ids();
    for (const Dims& d : lookup_dims())
      for (const ClassId& id : enumerate(d)) catalog.push_back(concrete(id));
    std::set<std::string> seen;
    int sig_checked = 0;
    int escalated = 0;
    for (const ClassId& id : catalog) {
      if (!seen.insert(id.to_string()).second) continue;
      PureState s = build(id);
      if (!is_true_state(s)) continue;
      OracleReport rep = check_range_signature(s);
      ++sig_checked;
      if (rep.digits > kOracleDigits) ++escalated;
      if (!rep.agree) bad.push_back(id.to_string() + " exact " + rep.exact + " oracle " + rep.oracle);
    }
    // Random states.
    int random_checked = 0;
    const std::vector<Dims> random_dims{{2, 2, 3}, {2, 3, 3}, {2, 3, 4}, {2, 4, 4}, {2, 4, 5}};
    for (size_t di = 0; di < random_dims.size(); ++di) {
      uint64_t seed = opt.seed + 1000 * (di + 1);
      for (int k = 0; k < opt.random_n; ++seed) {
        PureState s = random_integer_state(random_dims[di], seed, 2);
        if (local_ranks(s)[0] != 2) continue;
        ++k;
        ++random_checked;
        OracleReport rep = check_range_signature(s);
        if (rep.digits > kOracleDigits) ++escalated;
        if (!rep.agree)
          bad.push_back(dims_text(random_dims[di]) + " seed " + std::to_string(seed) + " exact " + rep.exact +
                        " oracle " + rep.oracle);
      }
    }
    // Kronecker data on every catalog pencil: tables, Upsilon/Theta up to
    // M = 4, Gamma/Lambda up to M = 3.
    std::set<Dims> kdims;
    for (const Dims& d : lookup_dims())
      if (d[1] <= 4 || d[2] != 2 * d[1] - 3) kdims.insert(d);
    for (size_t m = 1; m <= 3; ++m) {
      kdims.insert({2, m + 3, 2 * m + 3});
      kdims.insert({2, m + 4, 2 * m + 4});
    }
    kdims.erase({2, 7, 11});
    int kron_checked = 0;
    for (const Dims& d : kdims)
      for (const ClassId& sym : enumerate(d)) {
        PureState s = build(concrete(sym));
        if (!is_true_state(s)) continue;
        Pencil p = pencil_of(s);
        ++kron_checked;
        if (brute_kronecker_oracle(p, static_cast<int>(p.cols())) != kronecker_data(p))
          bad.push_back("Kronecker " + sym.to_string() + " at " + dims_text(d));
      }
    r.pass = bad.empty();
    r.detail = std::to_string(sig_checked) + " catalog signatures, " + std::to_string(random_checked) +
               " random states, " + std::to_string(kron_checked) + " Kronecker pencils; float oracle at " +
               std::to_string(kOracleDigits) + " digits, rank tolerance 10^-(digits/2), doubling to " +
               std::to_string(kOracleMaxDigits) + " (" + std::to_string(escalated) + " escalations)";
    if (!bad.empty()) r.detail += "; disagreements: " + join(bad, "; ");
  });
}

CriterionResult criterion_exceptional_reductions() {
  return timed(8, "exceptional-family reductions", [](CriterionResult& r) {
    std::vector<std::string> bad;
    std::vector<std::string> seen;
    auto record = [&](const std::string& what, const ClassLabel& got, const std::set<std::vector<ClassId>>& allowed) {
      seen.push_back(what + " -> " + ids_text(got));
      if (got.kind != LabelKind::recognized || !allowed.contains(got.ids)) bad.push_back(what + " -> " + ids_text(got));
    };
    // N = 2M-1: a 2x1x1 tail gives Upsilon1 one size down.
    const PureState tails[] = {kets({2, 1, 1}, {{0, 0, 0}}), kets({2, 1, 1}, {{0, 0, 0}, {1, 0, 0}})};
    for (int m : {3, 4})
      for (const PureState& tail : tails) {
        ClassLabel want = classify(build(id_of(family_id("Upsilon", 1, m - 1))));
        record("(ii) M=" + std::to_string(m), classify(build_exceptional(m, 2 * m - 1, tail)), {want.ids});
      }
    // N = 2M-2: a GHZ tail lands among the one-ket extensions Theta0-2 and a
    // W tail among the two-ket extensions Theta3-5, one size down.
    const PureState ghz = kets({2, 2, 2}, {{0, 0, 0}, {1, 1, 1}});
    const PureState w = kets({2, 2, 2}, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    for (int m : {3, 4}) {
      const size_t mm = static_cast<size_t>(m - 2);
      std::set<std::vector<ClassId>> omega0, omega23;
      for (int i = 0; i < 6; ++i) {
        PureState t = theta_by_formula(mm, i);
        if (mm >= 2 && t != build(id_of(family_id("Theta", i, m - 2))))
          bad.push_back("Theta" + std::to_string(i) + " formula differs from catalog");
        if (!is_true_state(t) || local_ranks(t) != t.dims()) continue;
        (i < 3 ? omega0 : omega23).insert(classify(t).ids);
      }
      record("(iii) GHZ M=" + std::to_string(m), classify(build_exceptional(m, 2 * m - 2, ghz)), omega0);
      record("(iii) W M=" + std::to_string(m), classify(build_exceptional(m, 2 * m - 2, w)), omega23);
    }
    // Case (iv) at M = 4.
    ClassLabel iv = classify(build_exceptional(4, 5, id_of("varphi2")));
    seen.push_back("(iv) M=4 -> " + ids_text(iv));
    if (!iv.has_id(id_of("Gamma14[M=1]"))) bad.push_back("(iv) M=4 -> " + ids_text(iv));
    r.pass = bad.empty();
    r.detail = join(seen, ", ");
    if (!bad.empty()) r.detail += "; failures: " + join(bad, "; ");
  });
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
  return {criterion_signatures(),           criterion_rank_profiles(),    criterion_class_counts(),
          criterion_lookup_injectivity(),   criterion_orbit_invariance(opt), criterion_four_qubit(),
          criterion_oracle_agreement(opt), criterion_exceptional_reductions()};
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(1);
  os << "criterion " << r.number << " [" << (r.pass ? "PASS" : "FAIL") << "] " << r.name << " (" << r.seconds
     << " s): " << r.detail;
  return os.str();
}

}  // namespace slocc
