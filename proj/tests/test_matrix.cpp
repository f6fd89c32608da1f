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
#include "gcf/polytype.hpp"
#include "gcf/text.hpp"
#include "oracle.hpp"

using namespace gcf;

namespace {
Poly P(const Field& F, const char* s) { return parse_poly(F, s); }
}  // namespace

TEST_CASE("companion matrices") {
  const Field F2 = Field::prime(2);
  CHECK(companion(P(F2, "X^2+X+1")) == Matrix::from_ints(F2, {{0, 1}, {1, 1}}));
  CHECK(companion(P(F2, "X")) == Matrix::square(F2, 1));
  const Field F3 = Field::prime(3);
  CHECK(companion(P(F3, "X^2+2*X+2")) == Matrix::from_ints(F3, {{0, 1}, {1, 1}}));
  CHECK_THROWS_AS(companion(P(F3, "2*X+1")), DomainError);
  CHECK_THROWS_AS(companion(P(F3, "1")), DomainError);
  oracle::Gen gen(10);
  for (int i = 0; i < 50; ++i) {
    const Poly f = gen.monic(F3, 1 + static_cast<int>(gen.below(6)));
    CHECK(oracle::to_dense(companion(f)) == oracle::companion(F3, oracle::from_poly(f)));
  }
}

TEST_CASE("direct sums and Jordan blocks") {
  const Field F2 = Field::prime(2);
  CHECK(jordan_block(F2, F2.zero(), 2) == Matrix::from_ints(F2, {{0, 1}, {0, 0}}));
  const Matrix m = Matrix::from_ints(F2, {{1, 1}, {0, 1}});
  CHECK(direct_sum({m}) == m);
  const Matrix cex = direct_sum({jordan_block(F2, F2.zero(), 3), jordan_block(F2, F2.zero(), 1),
                                 jordan_block(F2, F2.one(), 1)});
  CHECK(cex == Matrix::from_ints(F2, {{0, 1, 0, 0, 0},
                                      {0, 0, 1, 0, 0},
                                      {0, 0, 0, 0, 0},
                                      {0, 0, 0, 0, 0},
                                      {0, 0, 0, 0, 1}}));
  CHECK(cex == counterexample_matrix(F2));
  CHECK_THROWS_AS(direct_sum(std::vector<Matrix>{}), DomainError);
  CHECK_THROWS_AS(direct_sum({m, Matrix::identity(Field::prime(3), 1)}), DomainError);
}

TEST_CASE("evaluating polynomials at matrices") {
  const Field F2 = Field::prime(2);
  const Matrix c = companion(P(F2, "X^4+X+1"));
  CHECK(evaluate_poly(P(F2, "X"), c) == c);
  CHECK(evaluate_poly(Poly(F2), c) == Matrix::square(F2, 4));
  const Matrix g = evaluate_poly(P(F2, "X^2+X"), c);
  CHECK(g.column(0) == Vector{F2.zero(), F2.one(), F2.one(), F2.zero()});
  oracle::Gen gen(11);
  const Field F4 = make_field(2, 2);
  for (int i = 0; i < 50; ++i) {
    const Matrix a = gen.matrix(F4, 4);
    const Poly p = gen.poly_below(F4, 6);
    CHECK(oracle::to_dense(evaluate_poly(p, a)) == oracle::evaluate(F4, oracle::from_poly(p), oracle::to_dense(a)));
  }
}

TEST_CASE("rank, determinant, inverse against naive elimination") {
  oracle::Gen gen(12);
  for (const Field& F : {Field::prime(2), Field::prime(5), make_field(3, 2)}) {
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = 1 + gen.below(6);
      Matrix a = gen.matrix(F, n);
      if (gen.below(3) == 0 && n > 1)  // force a dependent row
        for (std::size_t j = 0; j < n; ++j) a(n - 1, j) = F.add(a(0, j), a(1 % n, j));
      CHECK(rank(a) == oracle::rank(F, oracle::to_dense(a)));
      CHECK(determinant(a) == oracle::determinant(F, oracle::to_dense(a)));
      const auto inv = inverse(a);
      CHECK(inv.has_value() == !determinant(a).is_zero());
      if (inv) CHECK(a * *inv == Matrix::identity(F, n));
      for (const Vector& v : nullspace(a)) {
        for (FieldElem x : a.apply(v)) CHECK(x.is_zero());
      }
      CHECK(nullspace(a).size() == nullity(a));
    }
  }
}

TEST_CASE("solving linear systems") {
  oracle::Gen gen(13);
  const Field F = Field::prime(7);
  for (int i = 0; i < 100; ++i) {
    Matrix a(F, 5, 3);
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 3; ++c) a(r, c) = gen.elem(F);
    Vector x{gen.elem(F), gen.elem(F), gen.elem(F)};
    const Vector b = a.apply(x);
    const auto sol = solve(a, b);
    REQUIRE(sol.has_value());
    CHECK(a.apply(*sol) == b);
  }
  const Matrix z = Matrix::from_ints(F, {{1, 0}, {1, 0}});
  CHECK_FALSE(solve(z, Vector{F.one(), F.zero()}).has_value());
}

TEST_CASE("matrix arithmetic") {
  const Field F3 = Field::prime(3);
  const Matrix a = Matrix::from_ints(F3, {{1, 2}, {0, 1}});
  const Matrix b = Matrix::from_ints(F3, {{2, 2}, {1, 0}});
  CHECK(a * b == Matrix::from_ints(F3, {{1, 2}, {1, 0}}));
  CHECK(a + b == Matrix::from_ints(F3, {{0, 1}, {1, 1}}));
  CHECK(a - a == Matrix::square(F3, 2));
  CHECK(transpose(b) == Matrix::from_ints(F3, {{2, 1}, {2, 0}}));
  CHECK(trace(b) == F3.from_int(2));
  CHECK_THROWS_AS(a * Matrix(F3, 3, 1), DomainError);
  CHECK_THROWS_AS(a + Matrix::identity(Field::prime(2), 2), DomainError);
}
