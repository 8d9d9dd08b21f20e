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

#include "slocc/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace slocc {

UniPoly::UniPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UniPoly::UniPoly(Scalar constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

UniPoly UniPoly::linear(const Scalar& root) { return UniPoly({-root, Scalar(1)}); }

UniPoly UniPoly::monomial(const Scalar& c, int degree) {
  std::vector<Scalar> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Scalar& UniPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Scalar UniPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return Scalar();
  return coeffs_[static_cast<size_t>(k)];
}

Scalar UniPoly::eval(const Scalar& x) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<Scalar> d;
  for (size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * Scalar(static_cast<long>(k)));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  Scalar inv = leading().inverse();
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Scalar> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(r);
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string UniPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Scalar& c = coeffs_[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    if (!c.is_real()) cs = "(" + cs + ")";
    if (!out.empty()) out += (cs.front() == '-') ? " - " : " + ";
    else if (cs.front() == '-') out += "-";
    if (cs.front() == '-') cs.erase(0, 1);
    bool unit = cs == "1";
    if (k == 0 || !unit) out += cs;
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Scalar> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Scalar> quot(static_cast<size_t>(a.degree() - db) + 1);
  Scalar inv = b.leading().inverse();
  for (int k = a.degree(); k >= db; --k) {
    Scalar c = rem[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    c *= inv;
    for (int j = 0; j <= db; ++j) {
      const Scalar& bj = b.coeffs()[static_cast<size_t>(j)];
      if (!bj.is_zero()) rem[static_cast<size_t>(k - db + j)] -= c * bj;
    }
    quot[static_cast<size_t>(k - db)] = std::move(c);
  }
  rem.resize(static_cast<size_t>(db));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

bool divides(const UniPoly& d, const UniPoly& p) {
  if (d.is_zero()) return p.is_zero();
  return divmod(p, d).second.is_zero();
}

UniPoly poly_gcd(const UniPoly& p, const UniPoly& q) {
  UniPoly a = p.monic();
  UniPoly b = q.monic();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return UniPoly(Scalar(1));
    UniPoly r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("zero polynomial has no squarefree part");
  return exact_div(p, poly_gcd(p, p.derivative())).monic();
}

BinaryForm::BinaryForm(std::vector<Scalar> coeffs, int degree) : coeffs_(std::move(coeffs)), degree_(degree) {
  if (degree < 0) throw std::invalid_argument("negative form degree");
  if (coeffs_.size() > static_cast<size_t>(degree) + 1) {
    for (size_t k = static_cast<size_t>(degree) + 1; k < coeffs_.size(); ++k) {
      if (!coeffs_[k].is_zero()) throw std::invalid_argument("form coefficient beyond degree");
    }
  }
  coeffs_.resize(static_cast<size_t>(degree) + 1);
}

BinaryForm BinaryForm::from_poly(const UniPoly& p, int degree) {
  if (p.degree() > degree) throw std::invalid_argument("polynomial degree exceeds form degree");
  return BinaryForm(p.coeffs(), degree);
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_zero(); });
}

int BinaryForm::infinity_multiplicity() const {
  if (is_zero()) throw std::domain_error("form vanishes identically");
  return degree_ - dehomogenize().degree();
}

Scalar BinaryForm::eval(const Scalar& alpha, const Scalar& beta) const {
  Scalar acc;
  Scalar bpow(1);
  // Horner in alpha with beta powers accumulated from the top coefficient down.
  for (int k = degree_; k >= 0; --k) {
    acc = acc * alpha + coeffs_[static_cast<size_t>(k)] * bpow;
    bpow *= beta;
  }
  return acc;
}

BinaryForm BinaryForm::substitute(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) const {
  UniPoly x({b, a});
  UniPoly y({d, c});
  UniPoly acc;
  std::vector<UniPoly> ypow(static_cast<size_t>(degree_) + 1, UniPoly(Scalar(1)));
  for (int k = 1; k <= degree_; ++k) ypow[static_cast<size_t>(k)] = ypow[static_cast<size_t>(k) - 1] * y;
  UniPoly xpow(Scalar(1));
  for (int k = 0; k <= degree_; ++k) {
    const Scalar& ck = coeffs_[static_cast<size_t>(k)];
    if (!ck.is_zero()) acc += xpow * ypow[static_cast<size_t>(degree_ - k)] * ck;
    xpow *= x;
  }
  return from_poly(acc, degree_);
}

BinaryForm BinaryForm::monic() const {
  if (is_zero()) return *this;
  return from_poly(dehomogenize().monic(), degree_);
}

BinaryForm BinaryForm::squarefree() const {
  if (is_zero()) throw std::domain_error("form vanishes identically");
  UniPoly p = squarefree_part(dehomogenize());
  return from_poly(p, p.degree() + (infinity_multiplicity() > 0 ? 1 : 0));
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  UniPoly p = a.dehomogenize() * b.dehomogenize();
  return BinaryForm(p.coeffs(), a.degree_ + b.degree_);
}

std::string BinaryForm::to_string() const {
  if (is_zero()) return "0";
  UniPoly p = dehomogenize();
  int inf = infinity_multiplicity();
  std::string s = p.to_string('a');
  if (inf == 0) return s;
  std::string b = inf == 1 ? "b" : "b^" + std::to_string(inf);
  if (p.degree() == 0 && p.leading().is_one()) return b;
  return b + "*(" + s + ")";
}

BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g) {
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  UniPoly p = poly_gcd(f.dehomogenize(), g.dehomogenize());
  int inf = std::min(f.infinity_multiplicity(), g.infinity_multiplicity());
  return BinaryForm::from_poly(p, p.degree() + inf);
}

BinaryForm form_exact_div(const BinaryForm& f, const BinaryForm& g) {
  if (g.is_zero()) throw std::domain_error("form division by zero");
  if (f.is_zero()) return BinaryForm({}, std::max(0, f.degree() - g.degree()));
  if (f.degree() < g.degree() || f.infinity_multiplicity() < g.infinity_multiplicity()) {
    throw std::domain_error("form division is not exact");
  }
  UniPoly q = exact_div(f.dehomogenize(), g.dehomogenize());
  return BinaryForm::from_poly(q, f.degree() - g.degree());
}

bool form_divides(const BinaryForm& g, const BinaryForm& f) {
  if (g.is_zero()) return f.is_zero();
  if (f.is_zero()) return true;
  return f.degree() >= g.degree() && f.infinity_multiplicity() >= g.infinity_multiplicity() &&
         divides(g.dehomogenize(), f.dehomogenize());
}

int distinct_projective_roots(const BinaryForm& f) {
  if (f.is_zero()) throw std::domain_error("form vanishes identically");
  UniPoly p = f.dehomogenize();
  return squarefree_part(p).degree() + (f.infinity_multiplicity() > 0 ? 1 : 0);
}

}  // namespace slocc
