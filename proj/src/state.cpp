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

#include "slocc/state.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>

namespace slocc {

namespace {

size_t product(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), size_t{1}, std::multiplies<>());
}

std::vector<size_t> strides_of(const Dims& dims) {
  std::vector<size_t> s(dims.size(), 1);
  for (size_t k = dims.size(); k-- > 1;) s[k - 1] = s[k] * dims[k];
  return s;
}

}  // namespace

PureState::PureState(Dims dims, std::vector<Scalar> coeffs, bool check)
    : dims_(std::move(dims)), coeffs_(std::move(coeffs)) {
  if (dims_.size() < 2) throw std::invalid_argument("a state needs at least two parties");
  if (std::any_of(dims_.begin(), dims_.end(), [](size_t d) { return d == 0; })) {
    throw std::invalid_argument("party dimensions must be positive");
  }
  if (coeffs_.size() != product(dims_)) {
    throw std::invalid_argument("coefficient count " + std::to_string(coeffs_.size()) + " does not match dims (expected " +
                                std::to_string(product(dims_)) + ")");
  }
  if (check) validate();
}

PureState::PureState(Dims dims, std::vector<Scalar> coeffs) : PureState(std::move(dims), std::move(coeffs), true) {}

PureState PureState::zeros(Dims dims) {
  size_t n = product(dims);
  return PureState(std::move(dims), std::vector<Scalar>(n), false);
}

void PureState::validate() const {
  if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& s) { return s.is_zero(); })) {
    throw std::invalid_argument("state tensor is zero");
  }
}

size_t PureState::offset(const std::vector<size_t>& index) const {
  if (index.size() != dims_.size()) throw std::out_of_range("ket arity does not match party count");
  size_t off = 0;
  for (size_t k = 0; k < dims_.size(); ++k) {
    if (index[k] >= dims_[k]) {
      throw std::out_of_range("ket index " + std::to_string(index[k]) + " out of range for party " + std::to_string(k));
    }
    off = off * dims_[k] + index[k];
  }
  return off;
}

PureState& PureState::add_ket(const std::vector<size_t>& index, const Scalar& c) {
  coeffs_[offset(index)] += c;
  return *this;
}

Matrix PureState::flattening(size_t party) const {
  if (party >= dims_.size()) throw std::out_of_range("party index out of range");
  const size_t d = dims_[party];
  const size_t rest = coeffs_.size() / d;
  const std::vector<size_t> strides = strides_of(dims_);
  const size_t inner = strides[party];
  Matrix f(d, rest);
  // Column index enumerates the other parties in row-major order.
  for (size_t off = 0; off < coeffs_.size(); ++off) {
    size_t i = (off / inner) % d;
    size_t outer = off / (inner * d);
    size_t col = outer * inner + off % inner;
    f(i, col) = coeffs_[off];
  }
  return f;
}

LocalOperator::LocalOperator(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("local operator must be square");
  if (m_.rows() == 0) throw std::invalid_argument("local operator must be nonempty");
  if (m_.rank() != m_.rows()) throw std::invalid_argument("local operator is singular");
}

Pencil::Pencil(Matrix a0, Matrix a1) : a0_(std::move(a0)), a1_(std::move(a1)) {
  if (a0_.rows() != a1_.rows() || a0_.cols() != a1_.cols()) throw std::invalid_argument("pencil slices differ in shape");
  if (a0_.is_zero() && a1_.is_zero()) throw std::invalid_argument("pencil is zero");
}

Matrix Pencil::at(const Scalar& alpha, const Scalar& beta) const {
  return a0_.scaled(alpha) + a1_.scaled(beta);
}

size_t local_rank(const PureState& state, size_t party) { return state.flattening(party).rank(); }

std::vector<size_t> local_ranks(const PureState& state) {
  std::vector<size_t> r;
  for (size_t p = 0; p < state.parties(); ++p) r.push_back(local_rank(state, p));
  return r;
}

PureState apply_to_party(const PureState& state, size_t party, const Matrix& m) {
  const Dims& dims = state.dims();
  if (party >= dims.size()) throw std::out_of_range("party index out of range");
  if (m.cols() != dims[party]) throw std::invalid_argument("operator dimension does not match party");
  Dims out_dims = dims;
  out_dims[party] = m.rows();
  const std::vector<size_t> in_strides = strides_of(dims);
  const size_t inner = in_strides[party];
  const size_t d_in = dims[party];
  const size_t d_out = m.rows();
  const size_t outer_count = state.coeffs().size() / (inner * d_in);
  std::vector<Scalar> out(outer_count * d_out * inner);
  const auto& in = state.coeffs();
  for (size_t o = 0; o < outer_count; ++o) {
    for (size_t j = 0; j < d_in; ++j) {
      const size_t in_base = (o * d_in + j) * inner;
      for (size_t i = 0; i < d_out; ++i) {
        const Scalar& v = m(i, j);
        if (v.is_zero()) continue;
        const size_t out_base = (o * d_out + i) * inner;
        for (size_t t = 0; t < inner; ++t) {
          const Scalar& c = in[in_base + t];
          if (!c.is_zero()) out[out_base + t] += v * c;
        }
      }
    }
  }
  return PureState(std::move(out_dims), std::move(out));
}

PureState apply_ilo(const PureState& state, const std::vector<LocalOperator>& ops) {
  if (ops.size() != state.parties()) throw std::invalid_argument("operator count does not match party count");
  PureState s = state;
  for (size_t p = 0; p < ops.size(); ++p) {
    if (ops[p].dim() != s.dims()[p]) throw std::invalid_argument("operator dimension does not match party");
    s = apply_to_party(s, p, ops[p].matrix());
  }
  return s;
}

Trimmed trim(const PureState& state) {
  PureState s = state;
  std::vector<Matrix> maps;
  for (size_t p = 0; p < state.parties(); ++p) {
    // Rows of rref(F^T) span the local support; the trimmed coordinates are
    // the flattening rows at the pivot positions.
    Matrix ft = s.flattening(p).transpose();
    std::vector<size_t> pivots = ft.rref();
    Matrix embed(state.dims()[p], pivots.size());
    for (size_t i = 0; i < pivots.size(); ++i)
      for (size_t r = 0; r < embed.rows(); ++r) embed(r, i) = ft(i, r);
    Matrix select(pivots.size(), state.dims()[p]);
    for (size_t i = 0; i < pivots.size(); ++i) select(i, pivots[i]) = 1;
    s = apply_to_party(s, p, select);
    maps.push_back(std::move(embed));
  }
  return {std::move(s), std::move(maps)};
}

PureState permute_parties(const PureState& state, const std::vector<size_t>& perm) {
  const size_t n = state.parties();
  if (perm.size() != n) throw std::invalid_argument("invalid permutation");
  std::vector<bool> seen(n, false);
  for (size_t p : perm) {
    if (p >= n || seen[p]) throw std::invalid_argument("invalid permutation");
    seen[p] = true;
  }
  Dims new_dims(n);
  for (size_t k = 0; k < n; ++k) new_dims[k] = state.dims()[perm[k]];
  const std::vector<size_t> old_strides = strides_of(state.dims());
  std::vector<Scalar> out(state.coeffs().size());
  std::vector<size_t> idx(n, 0);
  for (size_t off = 0; off < out.size(); ++off) {
    size_t src = 0;
    for (size_t k = 0; k < n; ++k) src += idx[k] * old_strides[perm[k]];
    out[off] = state.coeffs()[src];
    for (size_t k = n; k-- > 0;) {
      if (++idx[k] < new_dims[k]) break;
      idx[k] = 0;
    }
  }
  return PureState(std::move(new_dims), std::move(out));
}

PureState group_parties(const PureState& state, const std::vector<std::vector<size_t>>& blocks) {
  std::vector<size_t> perm;
  for (const auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("invalid partition: empty block");
    perm.insert(perm.end(), b.begin(), b.end());
  }
  if (blocks.size() < 2) throw std::invalid_argument("invalid partition: need at least two blocks");
  if (perm.size() != state.parties()) throw std::invalid_argument("invalid partition: blocks must cover all parties");
  PureState permuted = [&] {
    try {
      return permute_parties(state, perm);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("invalid partition: blocks overlap");
    }
  }();
  Dims dims;
  for (const auto& b : blocks) {
    size_t d = 1;
    for (size_t p : b) d *= state.dims()[p];
    dims.push_back(d);
  }
  return PureState(std::move(dims), permuted.coeffs());
}

Pencil pencil_of(const PureState& state) {
  if (state.parties() != 3 || state.dims()[0] != 2) throw std::invalid_argument("pencil view requires a qubit party");
  const size_t m = state.dims()[1];
  const size_t n = state.dims()[2];
  std::vector<Scalar> a0(state.coeffs().begin(), state.coeffs().begin() + static_cast<std::ptrdiff_t>(m * n));
  std::vector<Scalar> a1(state.coeffs().begin() + static_cast<std::ptrdiff_t>(m * n), state.coeffs().end());
  return Pencil(Matrix(m, n, std::move(a0)), Matrix(m, n, std::move(a1)));
}

PureState state_of(const Pencil& p) {
  std::vector<Scalar> c = p.a0().data();
  c.insert(c.end(), p.a1().data().begin(), p.a1().data().end());
  return PureState({2, p.rows(), p.cols()}, std::move(c));
}

LocalOperator random_ilo(size_t dim, uint64_t seed, int height) {
  if (dim == 0) throw std::invalid_argument("operator dimension must be positive");
  if (height < 1) throw std::invalid_argument("height must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-height, height);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Matrix m(dim, dim);
    for (size_t r = 0; r < dim; ++r)
      for (size_t c = 0; c < dim; ++c) m(r, c) = Scalar(mpq_class(entry(rng)), mpq_class(entry(rng)));
    if (m.rank() == dim) return LocalOperator(std::move(m));
  }
  throw std::runtime_error("random_ilo: no invertible sample after 1000 attempts");
}

StateParseError::StateParseError(const std::string& what, size_t line, size_t column)
    : ParseError(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line), column_(column) {}

namespace {

struct Cursor {
  std::string_view text;
  size_t pos = 0;
  size_t line = 1;
  size_t col = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  [[noreturn]] void fail(const std::string& what) const { throw StateParseError(what, line, col); }

  // Skips whitespace (optionally newlines) and comments.
  void skip(bool newlines) {
    while (!done()) {
      char c = peek();
      if (c == '#') {
        while (!done() && peek() != '\n') advance();
      } else if (c == '\n' ? newlines : std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }
};

struct Item {
  std::string text;
  size_t line;
  size_t col;
};

struct Value {
  bool is_list = false;
  std::vector<Item> items;
  size_t line;
  size_t col;
};

Value parse_value(Cursor& c) {
  c.skip(false);
  Value v{false, {}, c.line, c.col};
  if (c.done() || c.peek() != '[') {
    Item it{"", c.line, c.col};
    while (!c.done() && c.peek() != '\n' && c.peek() != '#') {
      it.text.push_back(c.peek());
      c.advance();
    }
    v.items.push_back(std::move(it));
    return v;
  }
  v.is_list = true;
  c.advance();
  c.skip(true);
  if (!c.done() && c.peek() == ']') {
    c.advance();
    return v;
  }
  while (true) {
    c.skip(true);
    Item it{"", c.line, c.col};
    while (!c.done() && c.peek() != ',' && c.peek() != ']' && c.peek() != '#' && c.peek() != '\n') {
      it.text.push_back(c.peek());
      c.advance();
    }
    c.skip(true);
    if (c.done()) c.fail("unterminated list");
    if (std::all_of(it.text.begin(), it.text.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); })) {
      throw StateParseError("empty list element", it.line, it.col);
    }
    v.items.push_back(std::move(it));
    if (c.peek() == ']') {
      c.advance();
      return v;
    }
    if (c.peek() != ',') c.fail("expected ',' or ']'");
    c.advance();
  }
}

}  // namespace

PureState parse_state(std::string_view text) {
  Cursor c{text};
  std::optional<Value> dims_v;
  std::optional<Value> coeffs_v;
  while (true) {
    c.skip(true);
    if (c.done()) break;
    size_t kl = c.line, kc = c.col;
    std::string key;
    while (!c.done() && (std::isalnum(static_cast<unsigned char>(c.peek())) || c.peek() == '_' || c.peek() == '-')) {
      key.push_back(c.peek());
      c.advance();
    }
    if (key.empty()) c.fail("expected a key");
    c.skip(false);
    if (c.done() || c.peek() != ':') c.fail("expected ':' after key '" + key + "'");
    c.advance();
    Value v = parse_value(c);
    if (key == "dims" || key == "coeffs") {
      auto& slot = key == "dims" ? dims_v : coeffs_v;
      if (slot) throw StateParseError("duplicate key '" + key + "'", kl, kc);
      if (!v.is_list) throw StateParseError("'" + key + "' must be a list", v.line, v.col);
      slot = std::move(v);
    }
    c.skip(false);
    if (!c.done() && c.peek() != '\n') c.fail("unexpected text after value");
  }
  if (!dims_v) throw StateParseError("missing 'dims'", c.line, c.col);
  if (!coeffs_v) throw StateParseError("missing 'coeffs'", c.line, c.col);

  Dims dims;
  for (const Item& it : dims_v->items) {
    std::string t;
    for (char ch : it.text)
      if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
        t.size() > 6 || std::stoul(t) == 0) {
      throw StateParseError("dimension must be a positive integer", it.line, it.col);
    }
    dims.push_back(std::stoul(t));
  }
  if (dims.size() < 2) throw StateParseError("a state needs at least two parties", dims_v->line, dims_v->col);
  if (dims.size() > 6) throw StateParseError("at most six parties are supported", dims_v->line, dims_v->col);
  std::vector<Scalar> coeffs;
  for (const Item& it : coeffs_v->items) {
    try {
      coeffs.push_back(Scalar::parse(it.text));
    } catch (const ParseError& e) {
      throw StateParseError(e.what(), it.line, it.col);
    }
  }
  size_t expected = product(dims);
  if (coeffs.size() != expected) {
    throw StateParseError("coeffs has " + std::to_string(coeffs.size()) + " entries, dims require " + std::to_string(expected),
                          coeffs_v->line, coeffs_v->col);
  }
  if (std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar& s) { return s.is_zero(); })) {
    throw StateParseError("state tensor is zero", coeffs_v->line, coeffs_v->col);
  }
  return PureState(std::move(dims), std::move(coeffs));
}

std::string format_state(const PureState& state) {
  std::string s = "dims: [";
  for (size_t k = 0; k < state.dims().size(); ++k) {
    if (k) s += ", ";
    s += std::to_string(state.dims()[k]);
  }
  s += "]\ncoeffs: [";
  const size_t last = state.dims().back();
  for (size_t k = 0; k < state.coeffs().size(); ++k) {
    if (k) s += (k % last == 0) ? ",\n  " : ", ";
    s += state.coeffs()[k].to_string();
  }
  return s + "]\n";
}

}  // namespace slocc
