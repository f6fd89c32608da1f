// Copyright 2026 The gcf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"
#include "gcf/error.hpp"
#include "gcf/factor.hpp"
#include "gcf/matrix.hpp"
#include "gcf/text.hpp"
#include "oracle.hpp"

using namespace gcf;

TEST_CASE("field strings") {
  CHECK(parse_field("GF(2)") == Field::prime(2));
  CHECK(parse_field(" GF( 3 ) ") == Field::prime(3));
  CHECK(parse_field("GF(2^2)") == make_field(2, 2));
  CHECK(format_field(make_field(3, 2)) == "GF(3^2)");
  CHECK(format_field(Field::prime(7)) == "GF(7)");
  const Field G = parse_field("GF(2^3;mod=t^3+t+1)");
  CHECK_FALSE(G.has_default_modulus());
  CHECK(format_field(G) == "GF(2^3;mod=t^3+t+1)");
  CHECK(parse_field(format_field(G)) == G);
  CHECK_THROWS_AS(parse_field("GF(4)"), Error);
  CHECK_THROWS_AS(parse_field("GF(2^2;mod=t^2+1)"), Error);
  CHECK_THROWS_AS(parse_field("F(2)"), ParseError);
  CHECK_THROWS_AS(parse_field("GF(2"), ParseError);
}

TEST_CASE("polynomial text") {
  const Field F2 = Field::prime(2);
  CHECK(format_poly(parse_poly(F2, "X^4+X+1")) == "X^4+X+1");
  CHECK(format_poly(parse_poly(F2, "1+X+X^4")) == "X^4+X+1");
  CHECK(format_poly(parse_poly(F2, "X^2+X^2")) == "0");
  const Field F3 = Field::prime(3);
  CHECK(format_poly(parse_poly(F3, "X^3-X-1")) == "X^3+2*X+2");
  CHECK(format_poly(parse_poly(F3, "2X^2 + 4")) == "2*X^2+1");
  CHECK(format_poly(parse_poly(F3, "2*2*X")) == "X");
  const Field F4 = make_field(2, 2);
  CHECK(format_poly(parse_poly(F4, "(t+1)*X^2+t")) == "(t+1)*X^2+t");
  CHECK(format_poly(parse_poly(F4, "t*t*X")) == "(t+1)*X");
  CHECK_THROWS_AS(parse_poly(F2, "X^"), ParseError);
  CHECK_THROWS_AS(parse_poly(F2, "Y"), ParseError);
  CHECK_THROWS_AS(parse_poly(F2, ""), ParseError);
  CHECK_THROWS_AS(parse_poly(F2, "t*X"), ParseError);
}

TEST_CASE("polynomials round-trip through text") {
  oracle::Gen gen(9);
  for (const Field& F : {Field::prime(2), Field::prime(7), make_field(2, 3), make_field(3, 2)}) {
    for (int i = 0; i < 300; ++i) {
      const Poly p = gen.poly_below(F, 8);
      CHECK(parse_poly(F, format_poly(p)) == p);
    }
  }
}

TEST_CASE("elements and lists") {
  const Field F9 = make_field(3, 2);
  for (FieldElem a : F9.elements()) CHECK(parse_elem(F9, format_elem(F9, a)) == a);
  CHECK(format_elem(F9, F9.element(3)) == "t");
  CHECK(format_elem(F9, F9.element(7)) == "(2*t+1)");
  CHECK(parse_elem(F9, "-1") == F9.element(2));
  const auto list = parse_poly_list(F9, "X+(t+1),X^2");
  REQUIRE(list.size() == 2);
  CHECK(format_poly(list[0]) == "X+(t+1)");
}

TEST_CASE("factorization text") {
  const Field F3 = Field::prime(3);
  CHECK(format_factorization(F3, factor(parse_poly(F3, "2*X^2+2"))) == "2*(X^2+1)");
  CHECK(format_factorization(F3, factor(parse_poly(F3, "X^3"))) == "(X)^3");
}

TEST_CASE("matrix text format") {
  const char* text =
      "# a comment\n"
      "GF(2^2)\n"
      "2\n"
      "t (t+1)\n"
      "0 1   # trailing\n";
  const Matrix m = parse_matrix(text);
  CHECK(m.size() == 2);
  CHECK(m(0, 1) == m.field().element(3));
  CHECK(format_matrix(m) == "GF(2^2)\n2\nt (t+1)\n0 1\n");
  CHECK(parse_matrix(format_matrix(m)) == m);
  CHECK_THROWS_AS(parse_matrix("GF(2)\n2\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("GF(2)\n2\n1 0\n0\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("GF(2)\nx\n"), ParseError);
}
