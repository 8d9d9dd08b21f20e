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

#include "slocc/pencil.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace slocc {

long Count::value() const {
  if (infinite_) throw std::logic_error("infinite count has no value");
  return value_;
}

std::string Count::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }
std::string Count::to_human() const { return infinite_ ? "∞" : std::to_string(value_); }

Count Count::parse(const std::string& s) {
  if (s == "inf" || s == "∞") return infinite();
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) || s.size() > 12) {
    throw ParseError("malformed count '" + s + "'");
  }
  return Count(std::stol(s));
}

std::string RangeSignature::to_string() const {
  return "[" + a1.to_string() + "," + a2.to_string() + "," + a3.to_string() + "]";
}

std::string RangeSignature::to_human() const {
  return "[" + a1.to_human() + "," + a2.to_human() + "," + a3.to_human() + "]";
}

std::ostream& operator<<(std::ostream& os, const Count& c) { return os << c.to_string(); }
std::ostream& operator<<(std::ostream& os, const RangeSignature& s) { return os << s.to_string(); }

int DeterminantalProfile::rank_at(const Scalar& alpha, const Scalar& beta) const {
  int r = 0;
  for (const auto& f : d) {
    if (f.eval(alpha, beta).is_zero()) break;
    ++r;
  }
  return r;
}

std::strong_ordering operator<=>(const KroneckerData& a, const KroneckerData& b) {
  if (auto c = a.col_min_indices <=> b.col_min_indices; c != 0) return c;
  if (auto c = a.row_min_indices <=> b.row_min_indices; c != 0) return c;
  if (auto c = a.eig_partition_classes <=> b.eig_partition_classes; c != 0) return c;
  return a.n_distinct_eigs <=> b.n_distinct_eigs;
}

namespace {

std::string int_list(const std::vector<int>& v) {
  std::string s = "[";
  for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "]";
}

}  // namespace

std::string KroneckerData::to_string() const {
  std::string s = "col=" + int_list(col_min_indices) + " row=" + int_list(row_min_indices) + " eig=[";
  for (size_t k = 0; k < eig_partition_classes.size(); ++k) {
    if (k) s += ",";
    s += int_list(eig_partition_classes[k].partition) + "x" + std::to_string(eig_partition_classes[k].count);
  }
  return s + "] distinct=" + n_distinct_eigs.to_string();
}

namespace {

size_t coeff_size(const UniPoly& p) {
  size_t n = 0;
  for (const Scalar& c : p.coeffs()) {
    n += mpz_sizeinbase(c.re().get_num_mpz_t(), 2) + mpz_sizeinbase(c.re().get_den_mpz_t(), 2) +
         mpz_sizeinbase(c.im().get_num_mpz_t(), 2) + mpz_sizeinbase(c.im().get_den_mpz_t(), 2);
  }
  return n;
}

// Diagonal of a Smith form of lambda*X + Y over Q(i)[lambda]: monic, each
// entry dividing the next, zero entries dropped.
std::vector<UniPoly> smith_diagonal(Matrix x, Matrix y) {
  // Constant equivalences keep the divisors. Bring X to [I 0; 0 0], then
  // clear the constant block of Y: each pivot there is a unit entry and
  // removes a row and a column before any polynomial arithmetic.
  size_t units = 0;
  {
    const size_t m = x.rows();
    const size_t n = x.cols();
    size_t r = 0;
    for (; r < std::min(m, n); ++r) {
      size_t pi = m, pj = n;
      for (size_t i = r; i < m && pi == m; ++i)
        for (size_t j = r; j < n; ++j)
          if (!x(i, j).is_zero()) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == m) break;
      for (size_t j = 0; j < n; ++j) {
        std::swap(x(pi, j), x(r, j));
        std::swap(y(pi, j), y(r, j));
      }
      for (size_t i = 0; i < m; ++i) {
        std::swap(x(i, pj), x(i, r));
        std::swap(y(i, pj), y(i, r));
      }
      const Scalar inv = x(r, r).inverse();
      for (size_t j = 0; j < n; ++j) {
        x(r, j) *= inv;
        y(r, j) *= inv;
      }
      for (size_t i = 0; i < m; ++i) {
        if (i == r || x(i, r).is_zero()) continue;
        const Scalar f = x(i, r);
        for (size_t j = 0; j < n; ++j) {
          x(i, j) -= f * x(r, j);
          y(i, j) -= f * y(r, j);
        }
      }
      for (size_t j = 0; j < n; ++j) {
        if (j == r || x(r, j).is_zero()) continue;
        const Scalar f = x(r, j);
        for (size_t i = 0; i < m; ++i) {
          x(i, j) -= f * x(i, r);
          y(i, j) -= f * y(i, r);
        }
      }
    }
    std::vector<bool> row_live(m, true), col_live(n, true);
    while (true) {
      size_t pi = m, pj = n;
      for (size_t i = r; i < m && pi == m; ++i)
        for (size_t j = r; j < n; ++j)
          if (row_live[i] && col_live[j] && !y(i, j).is_zero()) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == m) break;
      // Row pi of X is zero, so row operations with it leave X alone; after
      // them column pj is zero off the pivot and the row can be dropped.
      const Scalar inv = y(pi, pj).inverse();
      for (size_t i = 0; i < m; ++i) {
        if (i == pi || !row_live[i] || y(i, pj).is_zero()) continue;
        const Scalar f = y(i, pj) * inv;
        for (size_t j = 0; j < n; ++j)
          if (col_live[j]) y(i, j) -= f * y(pi, j);
      }
      row_live[pi] = false;
      col_live[pj] = false;
      ++units;
    }
    std::vector<size_t> keep_rows, keep_cols;
    for (size_t i = 0; i < m; ++i)
      if (row_live[i]) keep_rows.push_back(i);
    for (size_t j = 0; j < n; ++j)
      if (col_live[j]) keep_cols.push_back(j);
    x = x.select_rows(keep_rows).select_cols(keep_cols);
    y = y.select_rows(keep_rows).select_cols(keep_cols);
  }

  const size_t rows = x.rows();
  const size_t cols = x.cols();
  std::vector<UniPoly> p(rows * cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) p[i * cols + j] = UniPoly({y(i, j), x(i, j)});
  auto at = [&](size_t i, size_t j) -> UniPoly& { return p[i * cols + j]; };

  std::vector<UniPoly> diag(units, UniPoly(Scalar(1)));
  for (size_t k = 0; k < std::min(rows, cols); ++k) {
    bool found = false;
    while (true) {
      size_t bi = 0, bj = 0;
      int best = -1;
      size_t best_size = 0;
      for (size_t i = k; i < rows; ++i)
        for (size_t j = k; j < cols; ++j) {
          int d = at(i, j).degree();
          if (d < 0 || (best >= 0 && d > best)) continue;
          // Among lowest-degree entries take the one with the shortest
          // coefficients; it keeps the quotients small.
          size_t size = coeff_size(at(i, j));
          if (best < 0 || d < best || size < best_size) {
            best = d;
            best_size = size;
            bi = i;
            bj = j;
          }
        }
      if (best < 0) break;
      found = true;
      if (bi != k)
        for (size_t j = 0; j < cols; ++j) std::swap(at(bi, j), at(k, j));
      if (bj != k)
        for (size_t i = 0; i < rows; ++i) std::swap(at(i, bj), at(i, k));
      const UniPoly piv = at(k, k);
      bool clean = true;
      for (size_t i = k + 1; i < rows; ++i) {
        if (at(i, k).is_zero()) continue;
        auto [q, r] = divmod(at(i, k), piv);
        for (size_t j = k + 1; j < cols; ++j)
          if (!at(k, j).is_zero()) at(i, j) -= q * at(k, j);
        at(i, k) = r;
        if (!r.is_zero()) clean = false;
      }
      for (size_t j = k + 1; j < cols; ++j) {
        if (at(k, j).is_zero()) continue;
        auto [q, r] = divmod(at(k, j), piv);
        for (size_t i = k + 1; i < rows; ++i)
          if (!at(i, k).is_zero()) at(i, j) -= q * at(i, k);
        at(k, j) = r;
        if (!r.is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (!found) break;
    diag.push_back(at(k, k).monic());
  }
  // diag(a, b) ~ diag(gcd, lcm) turns any diagonal form into Smith form.
  for (size_t i = 0; i < diag.size(); ++i) {
    for (size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[i].is_constant()) break;
      if (divides(diag[i], diag[j])) continue;
      UniPoly g = poly_gcd(diag[i], diag[j]);
      diag[j] = exact_div(diag[i] * diag[j], g);
      diag[i] = g;
    }
  }
  return diag;
}

}  // namespace

DeterminantalProfile determinantal_divisors(const Pencil& pen) {
  const size_t bound = std::min(pen.rows(), pen.cols());
  // A nonzero d[r-1] has at most r <= bound roots, so bound+1 distinct points
  // include one of full normal rank.
  Scalar best_p, best_q;
  size_t best_rank = 0;
  bool have = false;
  for (size_t t = 0; t <= bound && best_rank < bound; ++t) {
    Scalar p = t == 0 ? Scalar(1) : Scalar(static_cast<long>(t) - 1);
    Scalar q = t == 0 ? Scalar(0) : Scalar(1);
    size_t r = pen.at(p, q).rank();
    if (!have || r > best_rank) {
      best_rank = r;
      best_p = p;
      best_q = q;
      have = true;
    }
  }
  DeterminantalProfile prof;
  prof.normal_rank = static_cast<int>(best_rank);
  if (best_rank == 0) return prof;

  // alpha*A0 + beta*A1 = mu*X + nu*Y with X of full normal rank, so no
  // divisor vanishes at (mu:nu) = (1:0).
  Matrix x = pen.at(best_p, best_q);
  Scalar a, b, c, d;
  Matrix y;
  if (best_q.is_zero()) {
    y = pen.a1();
    a = best_p.inverse();
    d = 1;
  } else {
    y = pen.a0();
    b = best_q.inverse();
    c = 1;
    d = -best_p / best_q;
  }
  std::vector<UniPoly> diag = smith_diagonal(x, y);
  if (diag.size() != best_rank) throw std::logic_error("smith form rank disagrees with normal rank");
  UniPoly acc(Scalar(1));
  for (const UniPoly& e : diag) {
    acc *= e;
    BinaryForm g = BinaryForm::from_poly(acc, acc.degree());
    prof.d.push_back(g.substitute(a, b, c, d).monic());
  }
  return prof;
}

RankProfileSet rank_profile_set(const DeterminantalProfile& prof) {
  RankProfileSet out;
  int prev = 0;
  for (int j = 0; j < prof.normal_rank; ++j) {
    int roots = distinct_projective_roots(prof.d[static_cast<size_t>(j)]);
    if (roots > prev) out.push_back(j);
    prev = roots;
  }
  out.push_back(prof.normal_rank);
  return out;
}

RankProfileSet rank_profile_set(const Pencil& p) { return rank_profile_set(determinantal_divisors(p)); }

Count product_count_bc(const DeterminantalProfile& prof) {
  if (prof.normal_rank <= 1) return Count::infinite();
  return distinct_projective_roots(prof.d[1]) - distinct_projective_roots(prof.d[0]);
}

Count product_count_bc(const Pencil& p) { return product_count_bc(determinantal_divisors(p)); }

namespace {

// Product rays in a span of dimension s whose two halves form the pencil
// behind `prof` with s columns.
Count qubit_side_from_profile(const DeterminantalProfile& prof, size_t s) {
  if (static_cast<size_t>(prof.normal_rank) < s) return Count::infinite();
  if (s >= 2 && !prof.d[s - 2].is_unit()) return Count::infinite();
  return distinct_projective_roots(prof.d[s - 1]);
}

Matrix top_half(const Matrix& m, size_t h) {
  std::vector<size_t> idx(h);
  for (size_t i = 0; i < h; ++i) idx[i] = i;
  return m.select_rows(idx);
}

Matrix bottom_half(const Matrix& m, size_t h) {
  std::vector<size_t> idx(h);
  for (size_t i = 0; i < h; ++i) idx[i] = h + i;
  return m.select_rows(idx);
}

}  // namespace

Count product_count_qubit_side(const Matrix& span, size_t m) {
  if (span.rows() != 2 * m) throw std::invalid_argument("span rows must equal 2*m");
  Matrix reduced = span;
  std::vector<size_t> pivots = reduced.rref();
  if (pivots.empty()) throw std::invalid_argument("zero span");
  Matrix basis = span.select_cols(pivots);
  Pencil pen(top_half(basis, m), bottom_half(basis, m));
  return qubit_side_from_profile(determinantal_divisors(pen), pivots.size());
}

RangeSignature range_signature(const Pencil& p, const DeterminantalProfile& prof) {
  RangeSignature sig;
  sig.a1 = product_count_bc(prof);
  Matrix ab = p.a0().vstack(p.a1());
  if (ab.rank() == p.cols()) {
    sig.a3 = qubit_side_from_profile(prof, p.cols());
  } else {
    sig.a3 = product_count_qubit_side(ab, p.rows());
  }
  Matrix ac = p.a0().transpose().vstack(p.a1().transpose());
  if (ac.rank() == p.rows()) {
    sig.a2 = qubit_side_from_profile(prof, p.rows());
  } else {
    sig.a2 = product_count_qubit_side(ac, p.cols());
  }
  return sig;
}

RangeSignature range_signature(const PureState& state) {
  Pencil p = pencil_of(state);
  return range_signature(p, determinantal_divisors(p));
}

std::vector<Count> multipartite_signature(const PureState& state) {
  if (state.parties() != 4) throw std::invalid_argument("multipartite signature needs four parties");
  if (local_ranks(state) != state.dims()) throw std::invalid_argument("state must be trimmed");
  const std::vector<std::pair<size_t, size_t>> pairs{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::vector<Count> out;
  for (auto [i, j] : pairs) {
    std::vector<size_t> rest;
    for (size_t k = 0; k < 4; ++k)
      if (k != i && k != j) rest.push_back(k);
    const Dims& d = state.dims();
    if (d[i] == 2 || d[j] == 2) {
      if (d[i] != 2) std::swap(i, j);
      Matrix span = group_parties(state, {{i, j}, rest}).flattening(0);
      out.push_back(product_count_qubit_side(span, d[j]));
      continue;
    }
    Matrix span = group_parties(state, {{i, j}, rest}).flattening(0);
    Matrix reduced = span;
    std::vector<size_t> piv = reduced.rref();
    if (piv.size() != 2) throw std::invalid_argument("unsupported geometry");
    auto reshape = [&](size_t col) {
      Matrix m(d[i], d[j]);
      for (size_t a = 0; a < d[i]; ++a)
        for (size_t b = 0; b < d[j]; ++b) m(a, b) = span(a * d[j] + b, col);
      return m;
    };
    out.push_back(product_count_bc(Pencil(reshape(piv[0]), reshape(piv[1]))));
  }
  return out;
}

std::vector<int> column_minimal_indices(const Pencil& p, int normal_rank) {
  const size_t m = p.rows();
  const size_t n = p.cols();
  const size_t need = n - static_cast<size_t>(normal_rank);
  std::vector<int> out;
  long prev_n = 0;
  long prev_m = 0;
  for (size_t k = 0; out.size() < need; ++k) {
    if (k > n) throw std::logic_error("minimal index search did not terminate");
    Matrix t((k + 2) * m, (k + 1) * n);
    for (size_t blk = 0; blk <= k; ++blk) {
      for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) {
          t(blk * m + i, blk * n + j) = p.a0()(i, j);
          t((blk + 1) * m + i, blk * n + j) = p.a1()(i, j);
        }
    }
    long nk = static_cast<long>((k + 1) * n - t.rank());
    long mk = nk - prev_n;
    for (long c = 0; c < mk - prev_m; ++c) out.push_back(static_cast<int>(k));
    prev_n = nk;
    prev_m = mk;
  }
  if (out.size() != need) throw std::logic_error("minimal index count mismatch");
  return out;
}

std::vector<EigClass> eig_partition_classes(const DeterminantalProfile& prof) {
  if (prof.normal_rank == 0) return {};
  const BinaryForm& top = prof.d.back();
  if (top.is_unit()) return {};
  std::vector<std::pair<std::vector<int>, BinaryForm>> pieces{{{}, top.squarefree()}};
  BinaryForm prev = BinaryForm::one();
  for (const BinaryForm& dk : prof.d) {
    BinaryForm inv = form_exact_div(dk, prev);
    prev = dk;
    std::vector<std::pair<std::vector<int>, BinaryForm>> next;
    for (auto& [vec, piece] : pieces) {
      // level[m] collects the roots of `piece` with exponent >= m in inv.
      std::vector<BinaryForm> level{piece};
      BinaryForm f = inv;
      while (true) {
        BinaryForm g = form_gcd(level.back(), f);
        if (g.is_unit()) break;
        f = form_exact_div(f, g);
        level.push_back(g);
      }
      level.push_back(BinaryForm::one());
      for (size_t e = 0; e + 1 < level.size(); ++e) {
        BinaryForm exact = form_exact_div(level[e], level[e + 1]);
        if (exact.is_unit()) continue;
        std::vector<int> v = vec;
        v.push_back(static_cast<int>(e));
        next.emplace_back(std::move(v), std::move(exact));
      }
    }
    pieces = std::move(next);
  }
  std::map<std::vector<int>, int> classes;
  for (const auto& [vec, piece] : pieces) {
    std::vector<int> part;
    for (int e : vec)
      if (e > 0) part.push_back(e);
    std::sort(part.rbegin(), part.rend());
    classes[part] += piece.degree();
  }
  std::vector<EigClass> out;
  for (auto& [part, count] : classes) out.push_back({part, count});
  return out;
}

KroneckerData kronecker_data(const Pencil& p, const DeterminantalProfile& prof) {
  KroneckerData k;
  k.col_min_indices = column_minimal_indices(p, prof.normal_rank);
  k.row_min_indices = column_minimal_indices(p.transpose(), prof.normal_rank);
  k.eig_partition_classes = eig_partition_classes(prof);
  k.eig_form = prof.normal_rank > 0 ? prof.d.back() : BinaryForm::one();
  k.n_distinct_eigs = distinct_projective_roots(k.eig_form);
  return k;
}

KroneckerData kronecker_data(const Pencil& p) { return kronecker_data(p, determinantal_divisors(p)); }

Scalar anharmonic_invariant(const BinaryForm& f) {
  if (f.degree() != 4 || f.is_zero() || distinct_projective_roots(f) != 4) {
    throw std::domain_error("anharmonic invariant undefined for degenerate quadruple");
  }
  const auto& c = f.coeffs();
  // f = a x^4 + 4b x^3 y + 6c x^2 y^2 + 4d x y^3 + e y^4 with x = alpha.
  Scalar a = c[4];
  Scalar b = c[3] / Scalar(4);
  Scalar cc = c[2] / Scalar(6);
  Scalar d = c[1] / Scalar(4);
  Scalar e = c[0];
  Scalar i = a * e - Scalar(4) * b * d + Scalar(3) * cc * cc;
  Scalar j = a * cc * e + Scalar(2) * b * cc * d - a * d * d - e * b * b - cc * cc * cc;
  Scalar i3 = i * i * i;
  return Scalar(1728) * i3 / (i3 - Scalar(27) * j * j);
}

Scalar j_of_cross_ratio(const Scalar& l) {
  if (l.is_zero() || l == Scalar(1)) throw std::domain_error("cross-ratio must avoid 0 and 1");
  Scalar u = l * l - l + Scalar(1);
  Scalar v = l * (l - Scalar(1));
  return Scalar(256) * u * u * u / (v * v);
}

}  // namespace slocc
