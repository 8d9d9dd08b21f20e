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

#ifndef SLOCC_SCALAR_HPP
#define SLOCC_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace slocc {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact Gaussian rational re + im*i.
///
/// Both parts are kept as canonical GMP rationals (reduced, positive
/// denominator), so structural equality is numeric equality.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im = 0);

  static Scalar ratio(long num, long den);
  static Scalar imag_unit() { return Scalar(0, 1); }

  /// Parses `p/q`, `p/q+r/si`, `-r/si`, `i`, `3` etc. Whitespace is ignored.
  static Scalar parse(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// re^2 + im^2.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Lexicographic on (re, im); only used to give containers a total order.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// Canonical whitespace-free text form.
  std::string to_string() const;
  double real_approx() const { return re_.get_d(); }
  double imag_approx() const { return im_.get_d(); }

 private:
  mpq_class re_;
  mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace slocc

#endif  // SLOCC_SCALAR_HPP
