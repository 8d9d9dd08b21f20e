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

#include "slocc/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace slocc {

namespace {

bool is_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

mpq_class parse_rational(std::string_view text, std::string_view whole) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!is_digits(num) || (slash != std::string_view::npos && !is_digits(den))) {
    throw ParseError("malformed scalar '" + std::string(whole) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d = 1;
  if (slash != std::string_view::npos) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in scalar '" + std::string(whole) + "'");
  }
  mpq_class q(negative ? mpz_class(-n) : n, d);
  q.canonicalize();
  return q;
}

std::string rational_text(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::ratio(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty scalar");
  if (s.back() != 'i') return Scalar(parse_rational(s, s));

  std::string body = s.substr(0, s.size() - 1);
  if (!body.empty() && body.back() == '*') body.pop_back();
  size_t split = std::string::npos;
  for (size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  std::string real_part = split == std::string::npos ? std::string{} : body.substr(0, split);
  std::string imag_part = split == std::string::npos ? body : body.substr(split);
  mpq_class im;
  if (imag_part.empty() || imag_part == "+") {
    im = 1;
  } else if (imag_part == "-") {
    im = -1;
  } else {
    im = parse_rational(imag_part, s);
  }
  mpq_class re = real_part.empty() ? mpq_class(0) : parse_rational(real_part, s);
  return Scalar(re, im);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  if (is_real()) return Scalar(1 / re_);
  mpq_class n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(o.im_) == 0) {
    re_ *= o.re_;
    if (sgn(im_) != 0) im_ *= o.re_;
    return *this;
  }
  if (sgn(im_) == 0) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  const bool has_re = sgn(re_) != 0;
  const bool has_im = sgn(im_) != 0;
  if (!has_im) return rational_text(re_);
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = rational_text(im_) + "i";
  }
  if (!has_re) return imag;
  return rational_text(re_) + (sgn(im_) > 0 ? "+" : "") + imag;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace slocc
