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

#ifndef SLOCC_POLY_HPP
#define SLOCC_POLY_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "slocc/scalar.hpp"

namespace slocc {

/// Univariate polynomial over Gaussian rationals, lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> coeffs);
  UniPoly(std::initializer_list<Scalar> coeffs) : UniPoly(std::vector<Scalar>(coeffs)) {}
  UniPoly(Scalar constant);  // NOLINT(google-explicit-constructor)

  /// x - root
  static UniPoly linear(const Scalar& root);
  static UniPoly monomial(const Scalar& c, int degree);

  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const Scalar& leading() const;
  Scalar coeff(int k) const;

  Scalar eval(const Scalar& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Scalar& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Scalar& c) { return a *= c; }
  UniPoly operator-() const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string to_string(char var = 'x') const;

 private:
  void normalize();
  std::vector<Scalar> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Exact quotient; throws std::domain_error when b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& d, const UniPoly& p);

/// Monic gcd; gcd(p, 0) = monic(p), gcd(0, 0) = 0.
UniPoly poly_gcd(const UniPoly& p, const UniPoly& q);
/// Monic p / gcd(p, p'); throws std::domain_error for the zero polynomial.
UniPoly squarefree_part(const UniPoly& p);

/// Homogeneous form in (alpha, beta): coeffs[k] multiplies alpha^k beta^(d-k).
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(std::vector<Scalar> coeffs, int degree);

  /// Homogenizes p to the given degree (must be >= p.degree()).
  static BinaryForm from_poly(const UniPoly& p, int degree);
  static BinaryForm one() { return from_poly(UniPoly(Scalar(1)), 0); }

  int degree() const { return degree_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  /// Nonzero form with no projective roots.
  bool is_unit() const { return !is_zero() && degree_ == 0; }

  /// Sets beta = 1.
  UniPoly dehomogenize() const { return UniPoly(coeffs_); }
  /// Multiplicity of the root (1:0); the form must be nonzero.
  int infinity_multiplicity() const;

  Scalar eval(const Scalar& alpha, const Scalar& beta) const;
  /// f(a*alpha + b*beta, c*alpha + d*beta).
  BinaryForm substitute(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) const;
  /// Scaled so that the dehomogenization is monic.
  BinaryForm monic() const;
  /// Product of the distinct linear factors, monic.
  BinaryForm squarefree() const;

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

  std::string to_string() const;

 private:
  std::vector<Scalar> coeffs_;
  int degree_ = 0;
};

/// Monic gcd of two forms; gcd with the zero form is the other form.
BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g);
/// Exact quotient of forms; throws std::domain_error when g does not divide f.
BinaryForm form_exact_div(const BinaryForm& f, const BinaryForm& g);
bool form_divides(const BinaryForm& g, const BinaryForm& f);

/// Number of distinct points of the projective line where f vanishes.
/// Throws std::domain_error("form vanishes identically") for the zero form.
int distinct_projective_roots(const BinaryForm& f);

}  // namespace slocc

#endif  // SLOCC_POLY_HPP
