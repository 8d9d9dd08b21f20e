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

#include <gtest/gtest.h>

using slocc::ParseError;
using slocc::Scalar;

TEST(Scalar, canonical_form) {
  Scalar a(mpq_class(2, 4), mpq_class(-3, -6));
  EXPECT_EQ(a.re(), mpq_class(1, 2));
  EXPECT_EQ(a.im().get_den(), 2);
  EXPECT_EQ(a, Scalar::parse("1/2+1/2i"));
  EXPECT_EQ(Scalar::ratio(6, -4), Scalar::parse("-3/2"));
}

TEST(Scalar, arithmetic) {
  Scalar i = Scalar::imag_unit();
  EXPECT_EQ(i * i, Scalar(-1));
  Scalar a = Scalar::parse("1+2i");
  Scalar b = Scalar::parse("3-i");
  EXPECT_EQ(a * b, Scalar::parse("5+5i"));
  EXPECT_EQ(a / b * b, a);
  EXPECT_EQ(a - a, Scalar());
  EXPECT_EQ(a.inverse() * a, Scalar(1));
  EXPECT_EQ(a.conj(), Scalar::parse("1-2i"));
  EXPECT_EQ(a.norm(), 5);
  EXPECT_THROW(a / Scalar(), std::domain_error);
}

TEST(Scalar, parse_grammar) {
  EXPECT_EQ(Scalar::parse("3"), Scalar(3));
  EXPECT_EQ(Scalar::parse(" -7 / 9 "), Scalar::ratio(-7, 9));
  EXPECT_EQ(Scalar::parse("i"), Scalar::imag_unit());
  EXPECT_EQ(Scalar::parse("-i"), -Scalar::imag_unit());
  EXPECT_EQ(Scalar::parse("-1/3 i"), Scalar(0, mpq_class(-1, 3)));
  EXPECT_EQ(Scalar::parse("1/2 + 3/4 i"), Scalar(mpq_class(1, 2), mpq_class(3, 4)));
  EXPECT_EQ(Scalar::parse("2-i"), Scalar(2, -1));
  EXPECT_EQ(Scalar::parse("+5i"), Scalar(0, 5));
  EXPECT_THROW(Scalar::parse(""), ParseError);
  EXPECT_THROW(Scalar::parse("1/0"), ParseError);
  EXPECT_THROW(Scalar::parse("abc"), ParseError);
  EXPECT_THROW(Scalar::parse("1..2"), ParseError);
  EXPECT_THROW(Scalar::parse("1+2"), ParseError);
}

TEST(Scalar, text_round_trip) {
  for (const char* s : {"0", "1", "-1", "5/7", "-5/7", "i", "-i", "3i", "-2/3i", "1+i", "1/2-3/4i", "-4+i"}) {
    Scalar v = Scalar::parse(s);
    EXPECT_EQ(v.to_string(), s);
    EXPECT_EQ(Scalar::parse(v.to_string()), v);
  }
}

TEST(Scalar, ordering_is_total) {
  EXPECT_LT(Scalar(1), Scalar(2));
  EXPECT_LT(Scalar(1, 0), Scalar(1, 1));
  EXPECT_LT(Scalar(0, 5), Scalar(1, -5));
}
