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

#include <algorithm>

#include "doctest.h"
#include "gcf/error.hpp"
#include "gcf/factor.hpp"
#include "gcf/poly.hpp"
#include "gcf/text.hpp"
#include "oracle.hpp"

using namespace gcf;

namespace {
Poly P(const Field& F, const char* s) { return parse_poly(F, s); }
}  // namespace

TEST_CASE("multiplication agrees with schoolbook products") {
  oracle::Gen gen(1);
  for (const Field& F : {Field::prime(2), Field::prime(5), make_field(2, 2), make_field(3, 2)}) {
    for (int i = 0; i < 200; ++i) {
      const Poly a = gen.poly_below(F, 7), b = gen.poly_below(F, 6);
      CHECK(oracle::from_poly((a * b)) == oracle::mul(F, oracle::from_poly(a), oracle::from_poly(b)));
      CHECK((a + b) - b == a);
    }
  }
}

TEST_CASE("division with remainder") {
  oracle::Gen gen(2);
  for (const Field& F : {Field::prime(3), make_field(2, 3)}) {
    for (int i = 0; i < 300; ++i) {
      const Poly a = gen.poly_below(F, 9);
      Poly b = gen.poly_below(F, 5);
      if (b.is_zero()) continue;
      const DivRem qr = divrem(a, b);
      CHECK(qr.quotient * b + qr.remainder == a);
      CHECK(qr.remainder.degree() < b.degree());
      if (b.is_monic()) CHECK(oracle::from_poly(qr.remainder) == oracle::rem(F, oracle::from_poly(a), oracle::from_poly(b)));
    }
  }
  CHECK_THROWS_AS(divrem(P(Field::prime(2), "X"), Poly(Field::prime(2))), DomainError);
}

TEST_CASE("gcd and Bezout coefficients") {
  oracle::Gen gen(3);
  const Field F = Field::prime(5);
  for (int i = 0; i < 300; ++i) {
    const Poly c = gen.monic(F, static_cast<int>(gen.below(3)));
    const Poly a = gen.poly_below(F, 5) * c, b = gen.poly_below(F, 5) * c;
    if (a.is_zero() && b.is_zero()) continue;
    const Poly g = gcd(a, b);
    CHECK(g.is_monic());
    CHECK((a % g).is_zero());
    CHECK((b % g).is_zero());
    CHECK((g % c).is_zero());
    const Xgcd x = xgcd(a, b);
    CHECK(x.gcd == g);
    CHECK(x.s * a + x.t * b == g);
  }
}

TEST_CASE("inverse modulo a polynomial") {
  const Field F = Field::prime(3);
  const Poly m = P(F, "X^3+2*X+1");
  for (const Poly& a : polys_below_degree(F, 3)) {
    auto inv = inverse_mod(a, m);
    if (a.is_zero()) {
      CHECK_FALSE(inv.has_value());
      continue;
    }
    REQUIRE(inv.has_value());
    CHECK(mulmod(a, *inv, m).is_one());
  }
  CHECK_FALSE(inverse_mod(P(F, "X+1"), P(F, "X^2+2")).has_value());
}

TEST_CASE("resultant matches the Sylvester determinant") {
  for (const Field& F : {Field::prime(2), Field::prime(3), make_field(2, 2)}) {
    oracle::Gen gen(4);
    for (int i = 0; i < 400; ++i) {
      const Poly f = gen.monic(F, 1 + static_cast<int>(gen.below(4)));
      Poly g = gen.poly_below(F, 5);
      if (g.is_zero()) continue;
      CHECK(resultant(f, g) == oracle::sylvester_resultant(F, oracle::from_poly(f), oracle::from_poly(g)));
      // zero exactly when there is a common factor
      CHECK(resultant(f, g).is_zero() == !gcd(f, g).is_one());
    }
  }
}

TEST_CASE("Chinese remaindering") {
  const Field F = Field::prime(3);
  // g(0) = 1, g(2) = 2, g(1) = 0
  const std::vector<std::pair<Poly, Poly>> sys{
      {P(F, "1"), P(F, "X")}, {P(F, "2"), P(F, "X+1")}, {P(F, "0"), P(F, "X+2")}};
  const Poly g = crt(sys);
  CHECK(g == P(F, "2*X+1"));

  oracle::Gen gen(5);
  const Field G = make_field(2, 2);
  const Poly m1 = P(G, "X^2+X+t"), m2 = P(G, "X^3+1");
  REQUIRE(gcd(m1, m2).is_one());
  for (int i = 0; i < 50; ++i) {
    const Poly r1 = gen.poly_below(G, 2), r2 = gen.poly_below(G, 3);
    const std::vector<std::pair<Poly, Poly>> s2{{r1, m1}, {r2, m2}};
    const Poly x = crt(s2);
    CHECK(x.degree() < 5);
    CHECK(x % m1 == r1);
    CHECK(x % m2 == r2);
  }
  const std::vector<std::pair<Poly, Poly>> bad{{P(F, "1"), P(F, "X")}, {P(F, "1"), P(F, "X^2")}};
  CHECK_THROWS_AS(crt(bad), DomainError);
}

TEST_CASE("composition and modular powers") {
  oracle::Gen gen(6);
  const Field F = make_field(3, 2);
  for (int i = 0; i < 100; ++i) {
    const Poly a = gen.poly_below(F, 4), b = gen.poly_below(F, 3);
    const Poly m = gen.monic(F, 4);
    const FieldElem x = gen.elem(F);
    CHECK(eval(compose(a, b), x) == eval(a, eval(b, x)));
    CHECK(compose_mod(a, b, m) == compose(a, b) % m);
    CHECK(powmod(b, 13, m) == pow(b, 13) % m);
  }
}

TEST_CASE("derivative") {
  const Field F = Field::prime(3);
  CHECK(derivative(P(F, "X^4+2*X^3+X")) == P(F, "X^3+1"));
  CHECK(derivative(P(F, "X^6+X^3")).is_zero());
}

TEST_CASE("canonical order: degree first, then constant term most significant") {
  const Field F = Field::prime(2);
  std::vector<Poly> v{P(F, "X^2+X"), P(F, "X+1"), P(F, "X"), P(F, "1"), Poly(F), P(F, "X^2+1")};
  std::sort(v.begin(), v.end());
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(format_poly(p));
  CHECK(out == std::vector<std::string>{"0", "1", "X", "X+1", "X^2+X", "X^2+1"});
}

TEST_CASE("enumerations are in canonical order with the right sizes") {
  for (const Field& F : {Field::prime(2), Field::prime(3), make_field(2, 2)}) {
    for (int n = 0; n <= 3; ++n) {
      const auto below = polys_below_degree(F, n);
      CHECK(below.size() == monic_count(F, n));
      CHECK(std::is_sorted(below.begin(), below.end()));
      CHECK(std::adjacent_find(below.begin(), below.end()) == below.end());
      for (std::size_t r = 0; r < below.size(); ++r) CHECK(poly_below_from_rank(F, r) == below[r]);
      const auto monics = monic_polys(F, n);
      CHECK(monics.size() == monic_count(F, n));
      CHECK(std::is_sorted(monics.begin(), monics.end()));
    }
  }
  CHECK(monic_from_rank(Field::prime(2), 2, 0) == P(Field::prime(2), "X^2"));
  CHECK(monic_from_rank(Field::prime(2), 2, 1) == P(Field::prime(2), "X^2+X"));
  CHECK(monic_from_rank(Field::prime(2), 2, 2) == P(Field::prime(2), "X^2+1"));
}

TEST_CASE("mixing fields is an error") {
  CHECK_THROWS_AS(P(Field::prime(2), "X") + P(Field::prime(3), "X"), DomainError);
}

TEST_CASE("small worked examples") {
  const Field F2 = Field::prime(2);
  CHECK(P(F2, "X^2+X+1") % P(F2, "X+1") == P(F2, "1"));
  const DivRem qr = divrem(P(F2, "X^4+X+1"), P(F2, "X^2+X+1"));
  CHECK(qr.quotient == P(F2, "X^2+X"));
  CHECK(qr.remainder == P(F2, "1"));
  CHECK(gcd(P(F2, "X^3"), P(F2, "X^4")) == P(F2, "X^3"));
  CHECK(gcd(P(F2, "X^2+X"), P(F2, "X^3+X")) == P(F2, "X^2+X"));
  const Field F3 = Field::prime(3);
  CHECK(gcd(P(F3, "2*X+1"), Poly(F3)) == P(F3, "X+2"));
  CHECK_THROWS_AS(gcd(Poly(F3), Poly(F3)), DomainError);
  CHECK(compose(P(F2, "X^2+X+1"), P(F2, "X^2+X")) == P(F2, "X^4+X+1"));
  CHECK(resultant(P(F2, "X"), P(F2, "X+1")) == F2.one());
  CHECK(resultant(P(F2, "X^2+X+1"), P(F2, "X^2+1")) == F2.one());
  CHECK(resultant(P(F3, "X^2+1"), P(F3, "X^2+1")).is_zero());
  const std::vector<std::pair<Poly, Poly>> sys{{P(F2, "1"), P(F2, "X")}, {P(F2, "0"), P(F2, "X+1")}};
  CHECK(crt(sys) == P(F2, "X+1"));
}

TEST_CASE("gcd is divisible by every common divisor, exhaustively") {
  const Field F = Field::prime(2);
  std::vector<Poly> all = polys_below_degree(F, 5);
  std::vector<Poly> divisors;
  for (int d = 1; d <= 4; ++d)
    for (const Poly& m : monic_polys(F, d)) divisors.push_back(m);
  for (std::size_t i = 1; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      const Poly& a = all[i];
      const Poly& b = all[j];
      const Poly g = gcd(a, b);
      for (const Poly& c : divisors)
        if ((a % c).is_zero() && (b % c).is_zero()) CHECK((g % c).is_zero());
    }
  }
}

TEST_CASE("CRT output is the unique solution below the degree bound") {
  const Field F = Field::prime(3);
  const Poly m1 = P(F, "X^2+1"), m2 = P(F, "X+1");
  for (const Poly& r1 : polys_below_degree(F, 2)) {
    const Poly r2 = P(F, "2");
    const std::vector<std::pair<Poly, Poly>> sys{{r1, m1}, {r2, m2}};
    const Poly x = crt(sys);
    std::size_t solutions = 0;
    for (const Poly& y : polys_below_degree(F, 3))
      if (y % m1 == r1 % m1 && y % m2 == r2) {
        ++solutions;
        CHECK(y == x);
      }
    CHECK(solutions == 1);
  }
}
