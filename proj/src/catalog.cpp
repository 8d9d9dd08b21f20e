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

#include "slocc/catalog.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>

namespace slocc {

namespace {

struct FamilyName {
  Family family;
  const char* name;
};

constexpr std::array<FamilyName, 9> kNames{{
    {Family::LambdaExtra, "LambdaExtra"},
    {Family::FourQubitPhi, "FourQubitPhi"},
    {Family::varphi, "varphi"},
    {Family::phi, "phi"},
    {Family::Phi, "Phi"},
    {Family::Upsilon, "Upsilon"},
    {Family::Theta, "Theta"},
    {Family::Gamma, "Gamma"},
    {Family::Lambda, "Lambda"},
}};

const char* family_name(Family f) {
  for (const auto& n : kNames)
    if (n.family == f) return n.name;
  return f == Family::T22N ? "t22" : "t23";
}

bool is_sized(Family f) {
  return f == Family::Upsilon || f == Family::Theta || f == Family::Gamma || f == Family::Lambda ||
         f == Family::LambdaExtra || f == Family::T22N || f == Family::T23N;
}

bool is_table(Family f) { return f == Family::T22N || f == Family::T23N; }

// Literal ket lists; higher families extend lower ones in place.
struct Ket {
  size_t a, b, c;
  Scalar coeff;
};
using Kets = std::vector<Ket>;

Kets operator+(Kets x, const Kets& y) {
  x.insert(x.end(), y.begin(), y.end());
  return x;
}

Kets ket(size_t a, size_t b, size_t c, const Scalar& coeff = Scalar(1)) { return {{a, b, c, coeff}}; }

// (|0> + x|1>)|b, c>
Kets mixed(size_t b, size_t c, const Scalar& x) { return ket(0, b, c) + ket(1, b, c, x); }

PureState to_state(const Dims& dims, const Kets& kets) {
  PureState s = PureState::zeros(dims);
  for (const auto& k : kets) s.add_ket({k.a, k.b, k.c}, k.coeff);
  s.validate();
  return s;
}

Kets phi_kets(int i) {
  Kets base = ket(0, 0, 0) + ket(0, 1, 1) + ket(1, 2, 1);
  return i == 0 ? base : base + ket(1, 1, 0);
}

Kets varphi_kets(int i) {
  Kets w = ket(1, 0, 0) + ket(0, 1, 0) + ket(0, 0, 1);
  switch (i) {
    case 0: return ket(0, 0, 0) + ket(1, 1, 1) + ket(0, 2, 2);
    case 1: return ket(0, 0, 0) + ket(1, 1, 1) + mixed(2, 2, Scalar(1));
    case 2: return ket(0, 1, 0) + ket(0, 0, 1) + ket(1, 1, 2) + ket(1, 2, 1);
    case 3: return w + ket(1, 1, 2) + ket(1, 2, 1);
    case 4: return w + ket(0, 2, 2);
    default: return w + ket(1, 2, 2);
  }
}

Kets big_phi_kets(int i, const Scalar& x) {
  switch (i) {
    case 0: return ket(1, 3, 3) + varphi_kets(0);
    case 1: return ket(0, 3, 3) + varphi_kets(0);
    case 2: return ket(1, 3, 3) + varphi_kets(1);
    case 3: return mixed(3, 3, x) + varphi_kets(1);
    case 4: return ket(1, 3, 3) + varphi_kets(2);
    case 5: return ket(1, 3, 3) + varphi_kets(3);
    case 6: return ket(0, 3, 3) + varphi_kets(3);
    case 7: return ket(1, 3, 3) + varphi_kets(4);
    case 8: return ket(0, 3, 3) + varphi_kets(4);
    case 9: return ket(1, 3, 3) + varphi_kets(5);
    case 10: return mixed(3, 3, Scalar(1)) + varphi_kets(5);
    case 11: return ket(1, 3, 3) + ket(0, 3, 2) + varphi_kets(2);
    case 12: return ket(1, 3, 3) + ket(0, 3, 2) + varphi_kets(3);
    case 13: return ket(0, 3, 3) + ket(1, 3, 2) + varphi_kets(4);
    case 14: return ket(1, 3, 3) + ket(0, 3, 2) + varphi_kets(5);
    default: return ket(0, 3, 3) + ket(1, 3, 2) + phi_kets(1);
  }
}

Kets t22_kets(int n, int i) {
  switch (n) {
    case 1: return ket(0, 0, 0) + ket(1, 1, 0);
    case 2: return i == 0 ? ket(0, 0, 0) + ket(1, 1, 1) : ket(0, 0, 1) + ket(0, 1, 0) + ket(1, 0, 0);
    case 3: return ket(0, 0, 0) + ket(0, 1, 1) + ket(1, 1, 2) + (i == 0 ? Kets{} : ket(1, 0, 1));
    default: return ket(0, 0, 0) + ket(0, 1, 1) + ket(1, 0, 2) + ket(1, 1, 3);
  }
}

Kets t23_kets(int n, int i) {
  switch (n) {
    case 2: return phi_kets(i);
    case 3: return varphi_kets(i);
    case 4: {
      Kets base = ket(0, 1, 2) + ket(0, 0, 0) + ket(1, 0, 1);
      switch (i) {
        case 0: return ket(1, 2, 3) + base;
        case 1: return ket(0, 2, 3) + base;
        case 2: return ket(1, 2, 3) + ket(1, 1, 0) + base;
        case 3: return ket(0, 2, 3) + ket(1, 2, 2) + base;
        default: return ket(0, 2, 3) + ket(1, 2, 2) + ket(1, 1, 0) + base;
      }
    }
    case 5: {
      Kets base = ket(0, 2, 4) + ket(0, 0, 0) + ket(0, 1, 1) + ket(1, 0, 2) + ket(1, 1, 3);
      return i == 0 ? base : base + ket(1, 2, 1);
    }
    default: return ket(0, 0, 0) + ket(0, 1, 1) + ket(0, 2, 2) + ket(1, 0, 3) + ket(1, 1, 4) + ket(1, 2, 5);
  }
}

Kets upsilon_kets(size_t m, int i) {
  Kets k;
  for (size_t j = 0; j < m; ++j) k = k + ket(0, j, j) + ket(1, j, j + m);
  if (i >= 1) k = k + ket(0, m, 2 * m);
  if (i == 2) k = k + ket(1, m, m - 1);
  return k;
}

Kets theta_kets(size_t m, int i) {
  const size_t b = m + 1, c = 2 * m + 1;
  switch (i) {
    case 0: return ket(1, b, c) + upsilon_kets(m, 1);
    case 1: return ket(0, b, c) + upsilon_kets(m, 1);
    case 2: return ket(1, b, c) + upsilon_kets(m, 2);
    case 3: return ket(0, b, c) + ket(1, b, c - 1) + upsilon_kets(m, 1);
    case 4: return ket(0, b, c) + ket(1, b, 0) + upsilon_kets(m, 2);
    default: return ket(0, b, c) + ket(1, b, c - 1) + upsilon_kets(m, 2);
  }
}

// Pairs |0, top-i, topc-2i> + |1, top-i, topc-1-2i> for i < m.
Kets staircase(size_t m, size_t top, size_t topc) {
  Kets k;
  for (size_t i = 0; i < m; ++i) k = k + ket(0, top - i, topc - 2 * i) + ket(1, top - i, topc - 1 - 2 * i);
  return k;
}

Kets gamma_kets(size_t m, int i) {
  const size_t b = m + 2, c = 2 * m + 2;
  switch (i) {
    case 0: return ket(1, b, c) + theta_kets(m, 0);
    case 1: return mixed(b, c, Scalar(1)) + theta_kets(m, 0);
    case 2: return ket(0, b, c) + theta_kets(m, 1);
    case 3: return ket(1, b, c) + theta_kets(m, 2);
    case 4: return ket(0, b, c) + theta_kets(m, 2);
    case 5: return ket(1, b, c) + theta_kets(m, 3);
    case 6: return ket(0, b, c) + theta_kets(m, 3);
    case 7: return ket(1, b, c) + theta_kets(m, 4);
    case 8: return ket(1, b, c) + theta_kets(m, 5);
    case 9: return ket(1, b, c) + ket(0, b, c - 1) + theta_kets(m, 2);
    case 10: return ket(0, b, c) + ket(1, b, c - 1) + theta_kets(m, 3);
    case 11: return ket(1, b, c) + ket(0, b, m + 1) + theta_kets(m, 4);
    case 12: return ket(1, b, c) + ket(0, b, m) + theta_kets(m, 5);
    case 13: return ket(0, b, c) + ket(1, b, c - 1) + theta_kets(m, 5);
    default: return staircase(m, b, c) + varphi_kets(2);
  }
}

Kets lambda_kets(size_t m, int i, const Scalar& x) {
  const size_t b = m + 3, c = 2 * m + 3;
  const Kets one = ket(1, b, c);
  const Kets zero = ket(0, b, c);
  const Kets both = mixed(b, c, Scalar(1));
  const Kets one_zero = one + ket(0, b, c - 1);
  const Kets zero_one = zero + ket(1, b, c - 1);
  switch (i) {
    case 0: return one + gamma_kets(m, 0);
    case 1: return zero + gamma_kets(m, 0);
    case 2: return both + gamma_kets(m, 0);
    case 3: return mixed(b, c, x) + gamma_kets(m, 1);
    case 4: return zero + gamma_kets(m, 2);
    case 5: return one + gamma_kets(m, 3);
    case 6: return zero + gamma_kets(m, 3);
    case 7: return both + gamma_kets(m, 4);
    case 8: return one + gamma_kets(m, 5);
    case 9: return zero + gamma_kets(m, 5);
    case 10: return both + gamma_kets(m, 5);
    case 11: return zero + gamma_kets(m, 6);
    case 12: return one + gamma_kets(m, 7);
    case 13: return zero + gamma_kets(m, 7);
    case 14: return one + gamma_kets(m, 8);
    case 15: return zero + gamma_kets(m, 8);
    case 16: return one + gamma_kets(m, 9);
    case 17: return zero + gamma_kets(m, 9);
    case 18: return one + gamma_kets(m, 10);
    case 19: return zero + gamma_kets(m, 10);
    case 20: return one + gamma_kets(m, 11);
    case 21: return one + gamma_kets(m, 12);
    case 22: return one + gamma_kets(m, 13);
    case 23: return one + gamma_kets(m, 14);
    case 24: return one_zero + gamma_kets(m, 5);
    case 25: return one_zero + gamma_kets(m, 7);
    case 26: return one_zero + gamma_kets(m, 8);
    case 27: return one_zero + gamma_kets(m, 9);
    case 28: return one + ket(0, b, m + 2) + gamma_kets(m, 11);
    case 29: return one_zero + gamma_kets(m, 11);
    case 30: return one_zero + gamma_kets(m, 12);
    case 31: return zero + ket(1, b, 0) + gamma_kets(m, 13);
    case 32: return zero_one + gamma_kets(m, 13);
    case 33: return one + ket(0, b, c - 2) + gamma_kets(m, 14);
    case 34: return zero_one + gamma_kets(m, 6);
    case 35: return zero_one + gamma_kets(m, 10);
    default: return staircase(m, b, c) + big_phi_kets(15, Scalar(0));
  }
}

// The extra M = 1 class of the Lambda level.
Kets lambda_extra_kets() { return ket(0, 4, 5) + ket(1, 4, 2) + gamma_kets(1, 9); }

const std::set<int> kGammaAbsentAtOne{7, 11, 13};
const std::set<int> kLambdaAbsentAtOne{12, 13, 20, 22, 25, 28, 29, 31, 32};

int family_size(Family f, int size) {
  switch (f) {
    case Family::phi: return 2;
    case Family::varphi: return 6;
    case Family::Phi: return 16;
    case Family::Upsilon: return 3;
    case Family::Theta: return 6;
    case Family::Gamma: return 15;
    case Family::Lambda: return 37;
    case Family::LambdaExtra: return 1;
    case Family::FourQubitPhi: return 1;
    case Family::T22N: return std::array{0, 1, 2, 2, 1}[static_cast<size_t>(std::clamp(size, 0, 4))];
    case Family::T23N: return std::array{0, 0, 2, 6, 5, 2, 1}[static_cast<size_t>(std::clamp(size, 0, 6))];
  }
  return 0;
}

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
    throw ParseError("malformed " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::string_view trim_ws(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::strong_ordering operator<=>(const ClassId& a, const ClassId& b) {
  if (auto c = a.family <=> b.family; c != 0) return c;
  if (auto c = a.size <=> b.size; c != 0) return c;
  if (auto c = a.index <=> b.index; c != 0) return c;
  if (a.param.has_value() != b.param.has_value()) {
    return a.param.has_value() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (!a.param) return std::strong_ordering::equal;
  if (*a.param == *b.param) return std::strong_ordering::equal;
  return *a.param < *b.param ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string ClassId::to_string() const {
  if (is_table(family)) {
    return std::string(family_name(family)) + std::to_string(size.value_or(0)) + "-" + std::to_string(index);
  }
  std::string s = family_name(family);
  if (family != Family::LambdaExtra && family != Family::FourQubitPhi) s += std::to_string(index);
  std::vector<std::string> opts;
  if (size) opts.push_back("M=" + std::to_string(*size));
  if (param) opts.push_back("x=" + param->to_string());
  if (!opts.empty()) {
    s += "[";
    for (size_t k = 0; k < opts.size(); ++k) s += (k ? "," : "") + opts[k];
    s += "]";
  }
  return s;
}

ClassId ClassId::parse(std::string_view text) {
  text = trim_ws(text);
  ClassId id;
  if (text.size() >= 3 && text[0] == 't' && text[1] == '2' && (text[2] == '2' || text[2] == '3')) {
    id.family = text[2] == '2' ? Family::T22N : Family::T23N;
    auto dash = text.find('-');
    if (dash == std::string_view::npos) throw ParseError("malformed class id '" + std::string(text) + "'");
    id.size = parse_int(text.substr(3, dash - 3), "table dimension");
    id.index = parse_int(text.substr(dash + 1), "class index");
    return id;
  }
  std::string_view head = text.substr(0, text.find('['));
  bool matched = false;
  for (const auto& n : kNames) {
    std::string_view name = n.name;
    if (head.substr(0, name.size()) != name) continue;
    std::string_view rest = head.substr(name.size());
    bool unindexed = n.family == Family::LambdaExtra || n.family == Family::FourQubitPhi;
    if (unindexed != rest.empty()) continue;
    id.family = n.family;
    id.index = unindexed ? 0 : parse_int(rest, "class index");
    matched = true;
    break;
  }
  if (!matched) throw ParseError("unknown class id '" + std::string(text) + "'");
  if (head.size() == text.size()) return id;
  std::string_view opts = text.substr(head.size());
  if (opts.size() < 2 || opts.back() != ']') throw ParseError("malformed options in '" + std::string(text) + "'");
  opts = opts.substr(1, opts.size() - 2);
  while (!opts.empty()) {
    auto comma = opts.find(',');
    std::string_view item = trim_ws(opts.substr(0, comma));
    opts = comma == std::string_view::npos ? std::string_view{} : opts.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("malformed option '" + std::string(item) + "'");
    std::string_view key = trim_ws(item.substr(0, eq));
    std::string_view value = trim_ws(item.substr(eq + 1));
    if (key == "M" && !id.size) {
      id.size = parse_int(value, "M");
    } else if (key == "x" && !id.param) {
      id.param = Scalar::parse(std::string(value));
    } else {
      throw ParseError("unexpected option '" + std::string(item) + "'");
    }
  }
  return id;
}

bool ClassId::takes_param() const {
  return (family == Family::Phi && index == 3) || (family == Family::Lambda && index == 3) ||
         family == Family::FourQubitPhi;
}

ClassId ClassId::family_key() const {
  ClassId k = *this;
  k.param.reset();
  return k;
}

namespace {

// Checks everything except the presence of a parameter on parameterized ids.
void validate_shape(const ClassId& id) {
  const std::string name = id.to_string();
  if (is_sized(id.family) && !id.size) throw CatalogError(name + ": missing M");
  if (!is_sized(id.family) && id.size) throw CatalogError(name + ": family takes no M");
  int size = id.size.value_or(0);
  int count = family_size(id.family, size);
  if (count == 0) throw CatalogError(name + ": no table for this dimension");
  if (id.index < 0 || id.index >= count) throw CatalogError(name + ": index out of range");
  switch (id.family) {
    case Family::Upsilon:
      if (size < (id.index == 0 ? 2 : 1)) throw CatalogError(name + ": M out of range");
      break;
    case Family::Theta:
      if (size < 2) throw CatalogError(name + ": M out of range");
      break;
    case Family::Gamma:
      if (size < 1) throw CatalogError(name + ": M out of range");
      if (size == 1 && kGammaAbsentAtOne.contains(id.index)) throw CatalogError(name + ": class absent at M=1");
      break;
    case Family::Lambda:
      if (size < 1) throw CatalogError(name + ": M out of range");
      if (size == 1 && kLambdaAbsentAtOne.contains(id.index)) throw CatalogError(name + ": class absent at M=1");
      break;
    case Family::LambdaExtra:
      if (size != 1) throw CatalogError(name + ": exists only at M=1");
      break;
    default:
      break;
  }
  if (id.param) {
    if (!id.takes_param()) throw CatalogError(name + ": class takes no parameter");
    const Scalar& x = *id.param;
    if (x.is_zero() || x == Scalar(1)) throw CatalogError(name + ": parameter must avoid 0 and 1");
  }
}

}  // namespace

void validate(const ClassId& id) {
  validate_shape(id);
  if (id.takes_param() && !id.param) throw CatalogError(id.to_string() + ": missing parameter x");
}

Dims dims_of(const ClassId& id) {
  validate_shape(id);
  const size_t m = static_cast<size_t>(id.size.value_or(0));
  switch (id.family) {
    case Family::phi: return {2, 3, 2};
    case Family::varphi: return {2, 3, 3};
    case Family::Phi: return {2, 4, 4};
    case Family::T22N: return {2, 2, m};
    case Family::T23N: return {2, 3, m};
    case Family::Upsilon: return id.index == 0 ? Dims{2, m, 2 * m} : Dims{2, m + 1, 2 * m + 1};
    case Family::Theta: return {2, m + 2, 2 * m + 2};
    case Family::Gamma: return {2, m + 3, 2 * m + 3};
    case Family::Lambda:
    case Family::LambdaExtra: return {2, m + 4, 2 * m + 4};
    case Family::FourQubitPhi: return {2, 2, 2, 2};
  }
  throw std::logic_error("unknown family");
}

PureState build(const ClassId& id) {
  validate(id);
  const Dims dims = dims_of(id);
  const size_t m = static_cast<size_t>(id.size.value_or(0));
  const Scalar x = id.param.value_or(Scalar(0));
  switch (id.family) {
    case Family::phi: return to_state(dims, phi_kets(id.index));
    case Family::varphi: return to_state(dims, varphi_kets(id.index));
    case Family::Phi: return to_state(dims, big_phi_kets(id.index, x));
    case Family::T22N: return to_state(dims, t22_kets(static_cast<int>(m), id.index));
    case Family::T23N: return to_state(dims, t23_kets(static_cast<int>(m), id.index));
    case Family::Upsilon: return to_state(dims, upsilon_kets(m, id.index));
    case Family::Theta: return to_state(dims, theta_kets(m, id.index));
    case Family::Gamma: return to_state(dims, gamma_kets(m, id.index));
    case Family::Lambda: return to_state(dims, lambda_kets(m, id.index, x));
    case Family::LambdaExtra: return to_state(dims, lambda_extra_kets());
    case Family::FourQubitPhi: {
      // |00>(|00> + |11>) + |11>(|00> + x|11>)
      PureState s = PureState::zeros(dims);
      s.add_ket({0, 0, 0, 0}).add_ket({0, 0, 1, 1}).add_ket({1, 1, 0, 0}).add_ket({1, 1, 1, 1}, x);
      return s;
    }
  }
  throw std::logic_error("unknown family");
}

PureState build_exceptional(int m, int n, const PureState& tail) {
  if (!(m < n && n < 2 * m)) throw CatalogError("exceptional state requires M < N < 2M");
  const size_t q = static_cast<size_t>(2 * m - n);
  if (tail.dims() != Dims{2, q, q}) {
    throw CatalogError("tail dims must be (2, " + std::to_string(q) + ", " + std::to_string(q) + ")");
  }
  const size_t mm = static_cast<size_t>(m);
  const size_t nn = static_cast<size_t>(n);
  PureState s = PureState::zeros({2, mm, nn});
  for (size_t i = 0; i < nn - mm; ++i) {
    s.add_ket({0, mm - 1 - i, nn - 1 - 2 * i});
    s.add_ket({1, mm - 1 - i, nn - 2 - 2 * i});
  }
  for (size_t a = 0; a < 2; ++a)
    for (size_t b = 0; b < q; ++b)
      for (size_t c = 0; c < q; ++c) {
        const Scalar& v = tail.at({a, b, c});
        if (!v.is_zero()) s.add_ket({a, b, c}, v);
      }
  s.validate();
  return s;
}

PureState build_exceptional(int m, int n, const ClassId& tail) { return build_exceptional(m, n, build(tail)); }

namespace {

std::vector<ClassId> family_ids(Family f, std::optional<int> size, int count, const std::set<int>& absent = {}) {
  std::vector<ClassId> out;
  for (int i = 0; i < count; ++i)
    if (!absent.contains(i)) out.push_back({f, i, size, std::nullopt});
  return out;
}

std::optional<std::vector<ClassId>> enumerate_sorted(size_t a, size_t b) {
  const ClassId bipartite{Family::T22N, 0, 1, std::nullopt};
  if (a == 1) return b >= 2 ? std::vector<ClassId>{bipartite} : std::vector<ClassId>{};
  if (b > 2 * a) return std::vector<ClassId>{};
  const int n = static_cast<int>(b);
  if (a == 2) return family_ids(Family::T22N, n, family_size(Family::T22N, n));
  if (a == 3) {
    if (b == 2) return family_ids(Family::phi, std::nullopt, 2);
    if (b == 3) return family_ids(Family::varphi, std::nullopt, 6);
    return family_ids(Family::T23N, n, family_size(Family::T23N, n));
  }
  if (a == 4 && b == 4) return family_ids(Family::Phi, std::nullopt, 16);
  if (2 * a - b > 4) return std::nullopt;
  const int k = static_cast<int>(2 * a - b);
  const int m = static_cast<int>(b - a);
  switch (k) {
    case 0: return family_ids(Family::Upsilon, m, 1);
    case 1: return std::vector<ClassId>{{Family::Upsilon, 1, m, std::nullopt}, {Family::Upsilon, 2, m, std::nullopt}};
    case 2: return family_ids(Family::Theta, m, 6);
    case 3: return family_ids(Family::Gamma, m, 15, m == 1 ? kGammaAbsentAtOne : std::set<int>{});
    default: {
      auto ids = family_ids(Family::Lambda, m, 37, m == 1 ? kLambdaAbsentAtOne : std::set<int>{});
      if (m == 1) ids.push_back({Family::LambdaExtra, 0, 1, std::nullopt});
      return ids;
    }
  }
}

std::optional<std::vector<ClassId>> try_enumerate(const Dims& dims) {
  if (dims.size() != 3 || dims[0] != 2 || dims[1] == 0 || dims[2] == 0) return std::nullopt;
  return enumerate_sorted(std::min(dims[1], dims[2]), std::max(dims[1], dims[2]));
}

}  // namespace

std::vector<ClassId> enumerate(const Dims& dims) {
  auto ids = try_enumerate(dims);
  if (!ids) throw CatalogError("dims outside catalog coverage");
  return *ids;
}

bool is_covered(const Dims& dims) { return try_enumerate(dims).has_value(); }

namespace {

RangeSignature sig(long a1, long a2, long a3) {
  auto c = [](long v) { return v < 0 ? Count::infinite() : Count(v); };
  return {c(a1), c(a2), c(a3)};
}

constexpr long kInf = -1;

}  // namespace

ExpectedSignature expected(const ClassId& id) {
  validate_shape(id);
  ExpectedSignature e;
  switch (id.family) {
    case Family::phi:
      e.signature = id.index == 0 ? sig(1, kInf, 1) : sig(0, kInf, 0);
      break;
    case Family::varphi: {
      static const std::array<RangeSignature, 6> v{sig(1, kInf, kInf), sig(0, 3, 3), sig(0, kInf, kInf),
                                                   sig(0, 1, 1),       sig(1, kInf, kInf), sig(0, 2, 2)};
      e.signature = v[static_cast<size_t>(id.index)];
      break;
    }
    case Family::Phi: {
      static const std::array<RangeSignature, 16> v{
          sig(0, kInf, kInf), sig(1, kInf, kInf), sig(0, kInf, kInf), sig(0, 4, 4),
          sig(0, kInf, kInf), sig(0, kInf, kInf), sig(0, 2, 2),       sig(0, kInf, kInf),
          sig(1, kInf, kInf), sig(0, kInf, kInf), sig(0, 3, 3),       sig(0, kInf, kInf),
          sig(0, 1, 1),       sig(0, kInf, kInf), sig(0, 2, 2),       sig(0, kInf, kInf)};
      e.signature = v[static_cast<size_t>(id.index)];
      static const std::array<RankProfileSet, 16> p{
          RankProfileSet{2, 4}, {1, 3, 4}, {2, 3, 4}, {}, {2, 3}, {2, 4},    {3, 4}, {2, 3, 4},
          {1, 4},               {2, 3, 4}, {},        {3}, {},    {2, 4}, {3, 4}, {3}};
      if (!p[static_cast<size_t>(id.index)].empty()) e.rank_profile = p[static_cast<size_t>(id.index)];
      break;
    }
    case Family::T23N:
      if (id.size == 2) return expected({Family::phi, id.index, std::nullopt, std::nullopt});
      if (id.size == 3) return expected({Family::varphi, id.index, std::nullopt, std::nullopt});
      break;
    case Family::Upsilon: {
      static const std::array<RangeSignature, 3> v{sig(0, 0, kInf), sig(0, 1, kInf), sig(0, 0, kInf)};
      e.signature = v[static_cast<size_t>(id.index)];
      break;
    }
    case Family::Theta: {
      static const std::array<RangeSignature, 6> v{sig(0, 2, kInf), sig(0, kInf, kInf), sig(0, 1, kInf),
                                                   sig(0, 1, kInf), sig(0, 0, kInf),    sig(0, 0, kInf)};
      e.signature = v[static_cast<size_t>(id.index)];
      break;
    }
    case Family::Gamma: {
      static const std::array<RangeSignature, 15> v{
          sig(0, kInf, kInf), sig(0, 3, kInf), sig(0, kInf, kInf), sig(0, kInf, kInf), sig(0, 2, kInf),
          sig(0, 2, kInf),    sig(0, kInf, kInf), sig(0, 1, kInf), sig(0, 1, kInf),    sig(0, 1, kInf),
          sig(0, 1, kInf),    sig(0, 0, kInf), sig(0, 0, kInf),    sig(0, 0, kInf),    sig(0, kInf, kInf)};
      e.signature = v[static_cast<size_t>(id.index)];
      break;
    }
    case Family::Lambda: {
      static const std::array<RangeSignature, 37> v{
          sig(0, kInf, kInf), sig(0, kInf, kInf), sig(0, kInf, kInf), sig(0, 4, kInf),    sig(0, kInf, kInf),
          sig(0, kInf, kInf), sig(0, kInf, kInf), sig(0, 3, kInf),    sig(0, kInf, kInf), sig(0, kInf, kInf),
          sig(0, 3, kInf),    sig(0, kInf, kInf), sig(0, kInf, kInf), sig(0, 2, kInf),    sig(0, kInf, kInf),
          sig(0, 2, kInf),    sig(0, kInf, kInf), sig(0, 2, kInf),    sig(0, 2, kInf),    sig(0, kInf, kInf),
          sig(0, 1, kInf),    sig(0, 1, kInf),    sig(0, 1, kInf),    sig(0, kInf, kInf), sig(0, 2, kInf),
          sig(0, 1, kInf),    sig(0, 1, kInf),    sig(0, 1, kInf),    sig(0, 0, kInf),    sig(0, 0, kInf),
          sig(0, 0, kInf),    sig(0, 0, kInf),    sig(0, 0, kInf),    sig(0, kInf, kInf), sig(0, kInf, kInf),
          sig(0, 1, kInf),    sig(0, kInf, kInf)};
      e.signature = v[static_cast<size_t>(id.index)];
      break;
    }
    default:
      break;
  }
  return e;
}

Scalar representative_param(const ClassId& id) {
  if (!id.takes_param()) throw CatalogError(id.to_string() + ": class takes no parameter");
  return id.param.value_or(Scalar(3));
}

}  // namespace slocc
