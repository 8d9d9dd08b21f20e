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

#include "slocc/harness.hpp"

#include <algorithm>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <functional>
#include <numeric>
#include <random>

namespace slocc {

namespace {

namespace mp = boost::multiprecision;
using Real = mp::mpfr_float;

// ---------------------------------------------------------------------------
// Complex arithmetic over MPFR reals.

struct Cx {
  Real re;
  Real im;
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx operator*(const Real& s, const Cx& a) { return {s * a.re, s * a.im}; }
Real abs2(const Cx& a) { return a.re * a.re + a.im * a.im; }
Real absv(const Cx& a) { return mp::sqrt(abs2(a)); }
Cx conj(const Cx& a) { return {a.re, -a.im}; }
Cx operator/(const Cx& a, const Cx& b) {
  Real d = abs2(b);
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Cx zero() { return {Real(0), Real(0)}; }

Real to_real(const mpq_class& q) { return Real(q.get_num().get_str()) / Real(q.get_den().get_str()); }
Cx to_cx(const Scalar& s) { return {to_real(s.re()), to_real(s.im())}; }

struct CMat {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<Cx> a;

  CMat(size_t r, size_t c) : rows(r), cols(c), a(r * c, zero()) {}
  Cx& operator()(size_t i, size_t j) { return a[i * cols + j]; }
  const Cx& operator()(size_t i, size_t j) const { return a[i * cols + j]; }
};

CMat to_cmat(const Matrix& m) {
  CMat out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out(i, j) = to_cx(m(i, j));
  return out;
}

CMat mul(const CMat& x, const CMat& y) {
  CMat out(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      if (x(i, k).re == 0 && x(i, k).im == 0) continue;
      for (size_t j = 0; j < y.cols; ++j) out(i, j) = out(i, j) + x(i, k) * y(k, j);
    }
  return out;
}

// x + t*y
CMat axpy(const CMat& x, const Cx& t, const CMat& y) {
  CMat out = x;
  for (size_t k = 0; k < out.a.size(); ++k) out.a[k] = out.a[k] + t * y.a[k];
  return out;
}

Cx det(CMat m) {
  const size_t n = m.rows;
  Cx d{Real(1), Real(0)};
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    for (size_t r = c + 1; r < n; ++r)
      if (abs2(m(r, c)) > abs2(m(piv, c))) piv = r;
    if (abs2(m(piv, c)) == 0) return zero();
    if (piv != c) {
      for (size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      d = Real(-1) * d;
    }
    d = d * m(c, c);
    for (size_t r = c + 1; r < n; ++r) {
      Cx f = m(r, c) / m(c, c);
      for (size_t j = c; j < n; ++j) m(r, j) = m(r, j) - f * m(c, j);
    }
  }
  return d;
}

// One-sided Jacobi on the columns; returns singular values in decreasing order.
std::vector<Real> singular_values(const CMat& in, const Real& eps) {
  CMat a = in;
  if (a.rows < a.cols) {
    CMat t(a.cols, a.rows);
    for (size_t i = 0; i < a.rows; ++i)
      for (size_t j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
    a = std::move(t);
  }
  const size_t m = a.rows;
  const size_t n = a.cols;
  for (int sweep = 0; sweep < 80; ++sweep) {
    bool rotated = false;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        Real alpha(0), beta(0);
        Cx gamma = zero();
        for (size_t k = 0; k < m; ++k) {
          alpha += abs2(a(k, i));
          beta += abs2(a(k, j));
          gamma = gamma + conj(a(k, i)) * a(k, j);
        }
        Real g = absv(gamma);
        if (g == 0 || g <= eps * mp::sqrt(alpha * beta)) continue;
        rotated = true;
        Cx phase = conj(gamma / Cx{g, Real(0)});
        Real zeta = (beta - alpha) / (2 * g);
        Real t = (zeta >= 0 ? Real(1) : Real(-1)) / (mp::abs(zeta) + mp::sqrt(1 + zeta * zeta));
        Real c = 1 / mp::sqrt(1 + t * t);
        Real s = c * t;
        for (size_t k = 0; k < m; ++k) {
          Cx ai = a(k, i);
          Cx aj = a(k, j) * phase;
          a(k, i) = c * ai - s * aj;
          a(k, j) = s * ai + c * aj;
        }
      }
    if (!rotated) break;
  }
  std::vector<Real> sv;
  for (size_t j = 0; j < n; ++j) {
    Real norm(0);
    for (size_t k = 0; k < m; ++k) norm += abs2(a(k, j));
    sv.push_back(mp::sqrt(norm));
  }
  std::sort(sv.begin(), sv.end(), [](const Real& x, const Real& y) { return x > y; });
  return sv;
}

Real pow10(double e) { return mp::pow(Real(10), Real(e)); }

struct Tolerance {
  Real lo;   // relative singular values below this count as zero
  Real hi;   // and above this as nonzero; in between is undecided
  Real eps;  // convergence target for the iterations
};

Tolerance tolerance(int digits) { return {pow10(-digits / 2.0), pow10(-digits / 4.0), pow10(-digits - 5.0)}; }

int numeric_rank(const CMat& m, const Tolerance& tol) {
  std::vector<Real> sv = singular_values(m, tol.eps);
  if (sv.empty() || sv[0] == 0) return 0;
  int rank = 0;
  for (const Real& s : sv) {
    Real ratio = s / sv[0];
    if (ratio > tol.hi) ++rank;
    else if (ratio >= tol.lo) throw OracleInconclusive();
  }
  return rank;
}

// Durand-Kerner iteration on coefficients given lowest degree first.
std::vector<Cx> poly_roots(const std::vector<Cx>& c, const Tolerance& tol) {
  const size_t deg = c.size() - 1;
  std::vector<Cx> monic(c.size());
  for (size_t k = 0; k <= deg; ++k) monic[k] = c[k] / c[deg];
  Real radius(1);
  for (size_t k = 0; k < deg; ++k) radius = std::max(radius, 1 + absv(monic[k]));
  std::vector<Cx> z(deg);
  Cx seed{Real("0.4"), Real("0.9")};
  Cx p{Real(1), Real(0)};
  for (size_t i = 0; i < deg; ++i) {
    p = p * seed;
    z[i] = radius * p;
  }
  auto eval = [&](const Cx& x) {
    Cx v = monic[deg];
    for (size_t k = deg; k-- > 0;) v = v * x + monic[k];
    return v;
  };
  for (int it = 0; it < 1000; ++it) {
    Real worst(0);
    for (size_t i = 0; i < deg; ++i) {
      Cx den{Real(1), Real(0)};
      for (size_t j = 0; j < deg; ++j)
        if (j != i) den = den * (z[i] - z[j]);
      if (abs2(den) == 0) den = Cx{tol.eps, Real(0)};
      Cx step = eval(z[i]) / den;
      z[i] = z[i] - step;
      worst = std::max(worst, absv(step) / (1 + absv(z[i])));
    }
    if (worst < tol.eps) break;
  }
  return z;
}

// Newton on the (m-1)-th derivative, where an m-fold root is simple.
Cx polish(const std::vector<Cx>& c, size_t m, Cx z, const Tolerance& tol) {
  std::vector<Cx> d = c;
  for (size_t k = 1; k < m; ++k) {
    std::vector<Cx> next;
    for (size_t j = 1; j < d.size(); ++j) next.push_back(Real(static_cast<long>(j)) * d[j]);
    d = std::move(next);
  }
  if (d.size() < 2) return z;
  for (int it = 0; it < 100; ++it) {
    Cx v = d.back();
    Cx dv = zero();
    for (size_t k = d.size() - 1; k-- > 0;) {
      dv = dv * z + v;
      v = v * z + d[k];
    }
    if (abs2(dv) == 0) break;
    Cx step = v / dv;
    z = z - step;
    if (absv(step) < tol.eps * (1 + absv(z))) break;
  }
  return z;
}

std::mt19937_64 oracle_rng(int digits, uint64_t salt) { return std::mt19937_64(0x51a77e5ULL * (digits + 1) + salt); }

Cx random_cx(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double re = u(rng);
  double im = u(rng);
  return {Real(re), Real(im)};
}

CMat random_cmat(size_t r, size_t c, std::mt19937_64& rng) {
  CMat m(r, c);
  for (auto& x : m.a) x = random_cx(rng);
  return m;
}

// Number of points of the line where rank(alpha*A0 + beta*A1) < s, infinite
// when that holds everywhere or the rank drops by two at some point.
Count count_rank_drops(const CMat& a0, const CMat& a1, size_t s, int digits, std::mt19937_64& rng) {
  Tolerance tol = tolerance(digits);
  // Random chart so that no special point sits at infinity.
  CMat x = axpy(a0, random_cx(rng), a1);
  CMat y = axpy(a1, random_cx(rng), a0);

  int generic = 0;
  for (int k = 0; k < 3; ++k) generic = std::max(generic, numeric_rank(axpy(x, random_cx(rng), y), tol));
  if (static_cast<size_t>(generic) < s) return Count::infinite();

  CMat l = random_cmat(s, a0.rows, rng);
  CMat r = random_cmat(a0.cols, s, rng);
  const size_t n = s + 1;
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  std::vector<Cx> nodes(n), values(n);
  for (size_t j = 0; j < n; ++j) {
    Real ang = two_pi * j / n;
    nodes[j] = {mp::cos(ang), mp::sin(ang)};
    values[j] = det(mul(mul(l, axpy(x, nodes[j], y)), r));
  }
  std::vector<Cx> coeffs(n, zero());
  Real cmax(0);
  for (size_t k = 0; k < n; ++k) {
    for (size_t j = 0; j < n; ++j) coeffs[k] = coeffs[k] + values[j] * conj(nodes[(j * k) % n]);
    coeffs[k] = Real(1) / n * coeffs[k];
    cmax = std::max(cmax, absv(coeffs[k]));
  }
  if (cmax == 0 || absv(coeffs[s]) < tol.hi * cmax) throw OracleInconclusive();
  std::vector<Cx> roots = poly_roots(coeffs, tol);

  // Multiple roots come back as clusters of radius about eps^(1/m); their
  // mean is accurate to about eps.
  const Real radius = pow10(-digits / (2.0 * static_cast<double>(s)));
  std::vector<size_t> group(roots.size());
  std::iota(group.begin(), group.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t i) { return group[i] == i ? i : group[i] = find(group[i]); };
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (absv(roots[i] - roots[j]) < radius * (1 + absv(roots[i]))) group[find(i)] = find(j);
  std::vector<Cx> centers;
  for (size_t i = 0; i < roots.size(); ++i) {
    if (find(i) != i) continue;
    Cx sum = zero();
    size_t members = 0;
    for (size_t j = 0; j < roots.size(); ++j)
      if (find(j) == i) {
        sum = sum + roots[j];
        ++members;
      }
    centers.push_back(polish(coeffs, members, Real(1) / members * sum, tol));
  }
  for (size_t i = 0; i < centers.size(); ++i)
    for (size_t j = i + 1; j < centers.size(); ++j)
      if (absv(centers[i] - centers[j]) < 10 * radius * (1 + absv(centers[i]))) throw OracleInconclusive();

  int count = 0;
  for (const Cx& t : centers) {
    int rank = numeric_rank(axpy(x, t, y), tol);
    if (static_cast<size_t>(rank) >= s) continue;
    if (static_cast<size_t>(rank) + 2 <= s) return Count::infinite();
    ++count;
  }
  return Count(count);
}

class PrecisionScope {
 public:
  explicit PrecisionScope(int digits) : old_(Real::default_precision()) {
    Real::default_precision(static_cast<unsigned>(digits + 20));
  }
  ~PrecisionScope() { Real::default_precision(old_); }

 private:
  unsigned old_;
};

Pencil qubit_pencil(const PureState& state) {
  if (state.parties() != 3) throw std::invalid_argument("float oracle needs a tripartite state");
  PureState s = trim(state).state;
  if (s.dims()[0] != 2) throw std::invalid_argument("float oracle needs a qubit as party 0 after trimming");
  return pencil_of(s);
}

Count side_count(const Pencil& p, ProductSide side, int digits) {
  CMat a0 = to_cmat(p.a0());
  CMat a1 = to_cmat(p.a1());
  std::mt19937_64 rng = oracle_rng(digits, static_cast<uint64_t>(side));
  switch (side) {
    case ProductSide::bc: return count_rank_drops(a0, a1, 2, digits, rng);
    case ProductSide::ac: return count_rank_drops(a0, a1, p.rows(), digits, rng);
    case ProductSide::ab: return count_rank_drops(a0, a1, p.cols(), digits, rng);
  }
  throw std::logic_error("unknown side");
}

// ---------------------------------------------------------------------------
// Exact brute-force Kronecker route.

int generic_rank(const Matrix& a0, const Matrix& a1) {
  int r = 0;
  const long points = static_cast<long>(std::min(a0.rows(), a0.cols())) + 2;
  for (long t = 0; t <= points; ++t) r = std::max(r, static_cast<int>((a0 + a1.scaled(Scalar(t))).rank()));
  return std::max(r, static_cast<int>(a1.rank()));
}

// Minimal indices of the right polynomial kernel of A0 + lambda*A1, built
// from explicit kernel vectors: a kernel vector of degree k is new when it
// is not spanned by lambda-shifts of the generators found so far.
std::vector<int> kernel_minimal_indices(const Matrix& a0, const Matrix& a1, size_t need, int max_degree) {
  const size_t m = a0.rows();
  const size_t n = a0.cols();
  std::vector<std::pair<int, Matrix>> gens;  // degree, stacked coefficient column
  std::vector<int> out;
  for (int k = 0; k <= max_degree && out.size() < need; ++k) {
    const size_t kk = static_cast<size_t>(k);
    Matrix eq((kk + 2) * m, (kk + 1) * n);
    for (size_t blk = 0; blk <= kk; ++blk)
      for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) {
          eq(blk * m + i, blk * n + j) = a0(i, j);
          eq((blk + 1) * m + i, blk * n + j) = a1(i, j);
        }
    Matrix ker = eq.kernel_basis();
    Matrix span((kk + 1) * n, 0);
    for (const auto& [d, y] : gens)
      for (size_t shift = 0; shift + static_cast<size_t>(d) <= kk; ++shift) {
        Matrix col((kk + 1) * n, 1);
        for (size_t i = 0; i < y.rows(); ++i) col(shift * n + i, 0) = y(i, 0);
        span = span.hstack(col);
      }
    size_t rank = span.cols() == 0 ? 0 : span.rank();
    for (size_t c = 0; c < ker.cols(); ++c) {
      Matrix v = ker.column(c);
      Matrix trial = span.cols() == 0 ? v : span.hstack(v);
      if (trial.rank() > rank) {
        span = trial;
        ++rank;
        gens.emplace_back(k, v);
        out.push_back(k);
      }
    }
  }
  if (out.size() != need) throw std::logic_error("minimal indices not found within max_degree");
  return out;
}

// Values at 0, 1, ..., k to coefficients, through Newton divided differences.
UniPoly interpolate(const std::vector<Scalar>& values) {
  const size_t n = values.size();
  std::vector<Scalar> dd = values;
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / Scalar(static_cast<long>(level));
  UniPoly result;
  UniPoly basis(Scalar(1));
  for (size_t i = 0; i < n; ++i) {
    result += basis * dd[i];
    basis *= UniPoly::linear(Scalar(static_cast<long>(i)));
  }
  return result;
}

Matrix random_int_matrix(size_t r, size_t c, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> u(-60, 60);
  Matrix m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m(i, j) = Scalar(u(rng));
  return m;
}

// gcd of the k-minors of X + lambda*Y, through random Cauchy-Binet
// combinations det(L (X + lambda Y) R).
UniPoly minors_gcd_by_compression(const Matrix& x, const Matrix& y, size_t k, std::mt19937_64& rng) {
  UniPoly g;
  for (int trial = 0; trial < 3; ++trial) {
    Matrix l = random_int_matrix(k, x.rows(), rng);
    Matrix r = random_int_matrix(x.cols(), k, rng);
    std::vector<Scalar> values;
    for (size_t t = 0; t <= k; ++t) values.push_back((l * (x + y.scaled(Scalar(static_cast<long>(t)))) * r).determinant());
    g = poly_gcd(g, interpolate(values));
  }
  if (g.is_zero()) throw std::logic_error("compressed minors vanish below the normal rank");
  return g;
}

// f = prod_i out[i-1]^i, squarefree and pairwise coprime (Yun).
std::vector<UniPoly> yun(const UniPoly& f) {
  std::vector<UniPoly> out;
  if (f.is_constant()) return out;
  UniPoly c = poly_gcd(f, f.derivative());
  UniPoly w = exact_div(f.monic(), c);
  while (!w.is_constant()) {
    UniPoly y = poly_gcd(w, c);
    out.push_back(exact_div(w, y));
    w = y;
    c = exact_div(c, y);
  }
  return out;
}

}  // namespace

Count float_product_count_oracle(const PureState& state, ProductSide side, int digits) {
  PrecisionScope scope(digits);
  return side_count(qubit_pencil(state), side, digits);
}

RangeSignature float_range_signature(const PureState& state, int digits) {
  PrecisionScope scope(digits);
  Pencil p = qubit_pencil(state);
  return {side_count(p, ProductSide::bc, digits), side_count(p, ProductSide::ac, digits),
          side_count(p, ProductSide::ab, digits)};
}

OracleReport check_range_signature(const PureState& state) {
  OracleReport rep;
  rep.quantity = "range signature";
  rep.exact = range_signature(state).to_string();
  for (int digits = kOracleDigits; digits <= kOracleMaxDigits; digits *= 2) {
    rep.digits = digits;
    try {
      rep.oracle = float_range_signature(state, digits).to_string();
      rep.agree = rep.oracle == rep.exact;
      return rep;
    } catch (const OracleInconclusive&) {
      rep.oracle = "inconclusive";
    }
  }
  rep.agree = false;
  return rep;
}

KroneckerData brute_kronecker_oracle(const Pencil& p, int max_degree) {
  const Matrix& a0 = p.a0();
  const Matrix& a1 = p.a1();
  const int r = generic_rank(a0, a1);
  KroneckerData k;
  k.col_min_indices = kernel_minimal_indices(a0, a1, a0.cols() - static_cast<size_t>(r), max_degree);
  k.row_min_indices =
      kernel_minimal_indices(a0.transpose(), a1.transpose(), a0.rows() - static_cast<size_t>(r), max_degree);
  k.eig_form = BinaryForm::one();
  k.n_distinct_eigs = Count(0);
  if (r == 0) return k;

  int singular = 0;
  for (int e : k.col_min_indices) singular += e;
  for (int e : k.row_min_indices) singular += e;
  const int regular_degree = r - singular;

  // Charts x = A0 + c*A1, y = A1 + d*A0; one with no eigenvalue at infinity
  // shows the full regular degree in the top divisor.
  const std::pair<long, long> charts[] = {{1, 2}, {2, -1}, {-3, 1}, {5, 3}, {7, -2}, {-4, 9}};
  std::mt19937_64 rng(0xb2a7e);
  for (const auto& [c, d] : charts) {
    Matrix x = a0 + a1.scaled(Scalar(c));
    Matrix y = a1 + a0.scaled(Scalar(d));
    std::vector<UniPoly> divisors{UniPoly(Scalar(1))};
    for (size_t j = 1; j <= static_cast<size_t>(r); ++j) divisors.push_back(minors_gcd_by_compression(x, y, j, rng));
    if (divisors.back().degree() != regular_degree) continue;
    if (regular_degree == 0) return k;

    std::vector<std::pair<std::vector<int>, UniPoly>> pieces{{{}, squarefree_part(divisors.back())}};
    for (size_t j = 1; j < divisors.size(); ++j) {
      std::vector<UniPoly> parts = yun(exact_div(divisors[j], divisors[j - 1]));
      std::vector<std::pair<std::vector<int>, UniPoly>> next;
      for (auto& [vec, piece] : pieces) {
        UniPoly rest = piece;
        for (size_t e = 0; e < parts.size(); ++e) {
          UniPoly g = poly_gcd(rest, parts[e]);
          if (g.degree() <= 0) continue;
          std::vector<int> v = vec;
          v.push_back(static_cast<int>(e + 1));
          next.emplace_back(v, g);
          rest = exact_div(rest, g);
        }
        if (rest.degree() > 0) {
          std::vector<int> v = vec;
          v.push_back(0);
          next.emplace_back(v, rest);
        }
      }
      pieces = std::move(next);
    }
    int distinct = 0;
    for (const auto& [vec, piece] : pieces) {
      std::vector<int> part;
      for (int e : vec)
        if (e > 0) part.push_back(e);
      std::sort(part.rbegin(), part.rend());
      auto it = std::find_if(k.eig_partition_classes.begin(), k.eig_partition_classes.end(),
                             [&](const EigClass& ec) { return ec.partition == part; });
      if (it == k.eig_partition_classes.end()) k.eig_partition_classes.push_back({part, piece.degree()});
      else it->count += piece.degree();
      distinct += piece.degree();
    }
    std::sort(k.eig_partition_classes.begin(), k.eig_partition_classes.end());
    k.n_distinct_eigs = Count(distinct);
    return k;
  }
  throw std::logic_error("no chart without an eigenvalue at infinity");
}

PureState random_integer_state(const Dims& dims, uint64_t seed, int height) {
  PureState s = PureState::zeros(dims);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> value(-height, height);
  std::vector<size_t> idx(dims.size(), 0);
  while (true) {
    long v = 0;
    if (rng() % 2 == 0) {
      while (v == 0) v = value(rng);
    }
    if (v != 0) s.add_ket(idx, Scalar(v));
    size_t k = dims.size();
    while (k > 0 && ++idx[k - 1] == dims[k - 1]) idx[--k] = 0;
    if (k == 0) break;
  }
  return s;
}

std::vector<PureState> orbit_sample(const ClassId& id, int n, uint64_t seed, int height) {
  ClassId concrete = id;
  if (concrete.takes_param() && !concrete.param) concrete.param = representative_param(concrete);
  PureState base = build(concrete);
  std::vector<PureState> out;
  std::mt19937_64 seeds(seed);
  for (int i = 0; i < n; ++i) {
    std::vector<LocalOperator> ops;
    for (size_t k = 0; k < base.parties(); ++k) ops.push_back(random_ilo(base.dims()[k], seeds(), height));
    out.push_back(apply_ilo(base, ops));
  }
  return out;
}

}  // namespace slocc
