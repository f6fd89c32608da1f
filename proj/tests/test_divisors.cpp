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
#include "gcf/divisors.hpp"
#include "gcf/error.hpp"
#include "gcf/factor.hpp"
#include "gcf/polytype.hpp"
#include "gcf/text.hpp"
#include "oracle.hpp"

using namespace gcf;

namespace {
Poly P(const Field& F, const char* s) { return parse_poly(F, s); }

Matrix random_invertible(oracle::Gen& gen, const Field& F, std::size_t n) {
  for (;;) {
    Matrix p = gen.matrix(F, n);
    if (!determinant(p).is_zero()) return p;
  }
}

// A random matrix with a chosen similarity type: random blocks conjugated.
Matrix random_structured(oracle::Gen& gen, const Field& F, std::size_t n) {
  std::vector<Matrix> blocks;
  std::size_t left = n;
  while (left > 0) {
    const std::size_t k = 1 + gen.below(left);
    blocks.push_back(companion(gen.monic(F, static_cast<int>(k))));
    left -= k;
  }
  const Matrix a = direct_sum(blocks);
  const Matrix p = random_invertible(gen, F, n);
  return p * a * *inverse(p);
}
}  // namespace

TEST_CASE("invariant factors of small matrices") {
  const Field F2 = Field::prime(2);
  const Poly f = P(F2, "X^3+X+1");
  CHECK(invariant_factors(companion(f)).factors == std::vector<Poly>{f});
  CHECK(invariant_factors(Matrix::identity(F2, 2)).factors == std::vector<Poly>{P(F2, "X+1"), P(F2, "X+1")});
  const InvariantFactors cex = invariant_factors(counterexample_matrix(F2));
  CHECK(cex.factors == std::vector<Poly>{P(F2, "X"), P(F2, "X^4+X^3")});
  CHECK(format_invariants(cex) == "X, X^4+X^3");
  const ElementaryDivisors eds = elementary_divisors(cex);
  CHECK(eds.exponents(P(F2, "X")) == std::vector<unsigned>{1, 3});
  CHECK(eds.exponents(P(F2, "X+1")) == std::vector<unsigned>{1});
  CHECK(format_divisors(eds) == "(X)^3, (X), (X+1)");
  CHECK(minimal_polynomial(counterexample_matrix(F2)) == P(F2, "X^4+X^3"));
  CHECK(characteristic_polynomial(counterexample_matrix(F2)) == P(F2, "X^5+X^4"));
}

TEST_CASE("invariant factors are a similarity invariant") {
  oracle::Gen gen(14);
  for (const Field& F : {Field::prime(2), Field::prime(3)}) {
    for (int i = 0; i < 250; ++i) {
      const std::size_t n = 1 + gen.below(5);
      const Matrix a = gen.matrix(F, n);
      const Matrix p = random_invertible(gen, F, n);
      const InvariantFactors invs = invariant_factors(a);
      invs.validate();
      CHECK(invs.degree() == n);
      CHECK(invariant_factors(p * a * *inverse(p)) == invs);
    }
  }
}

TEST_CASE("elementary divisors agree with the nullity oracle") {
  oracle::Gen gen(15);
  for (const Field& F : {Field::prime(2), Field::prime(3), make_field(2, 2)}) {
    for (int i = 0; i < 150; ++i) {
      const std::size_t n = 1 + gen.below(6);
      const Matrix a = gen.below(2) == 0 ? gen.matrix(F, n) : random_structured(gen, F, n);
      CHECK(elementary_divisors(a) == oracle::elementary_divisors(F, oracle::to_dense(a)));
    }
  }
}

TEST_CASE("recombine inverts elementary_divisors") {
  oracle::Gen gen(16);
  for (const Field& F : {Field::prime(2), Field::prime(5)}) {
    for (int i = 0; i < 250; ++i) {
      const Matrix a = random_structured(gen, F, 1 + gen.below(7));
      const InvariantFactors invs = invariant_factors(a);
      const ElementaryDivisors eds = elementary_divisors(invs);
      CHECK(recombine(F, eds) == invs);
      CHECK(elementary_divisors(recombine(F, eds)) == eds);
      CHECK(similar(primary_rational_form(F, eds), a));
    }
  }
}

TEST_CASE("similarity") {
  const Field F2 = Field::prime(2);
  const Matrix a = counterexample_matrix(F2);
  CHECK(similar(a, a));
  CHECK_FALSE(similar(companion(P(F2, "X^2")), Matrix::square(F2, 2)));
  CHECK_THROWS_AS(similar(a, Matrix::square(F2, 2)), DomainError);
  CHECK_THROWS_AS(similar(Matrix::square(Field::prime(3), 2), Matrix::square(F2, 2)), DomainError);
}

TEST_CASE("divisor bookkeeping") {
  const Field F3 = Field::prime(3);
  ElementaryDivisors eds;
  eds.add(P(F3, "X^2+1"), 2);
  eds.add(P(F3, "X^2+1"), 1, 2);
  eds.add(P(F3, "X+1"), 3);
  CHECK(eds.degree() == 2 * 4 + 3);
  CHECK(eds.count() == 4);
  CHECK(format_divisors(eds) == "(X+1)^3, (X^2+1)^2, (X^2+1), (X^2+1)");
  CHECK(format_invariants(recombine(F3, eds)) == "X^2+1, X^2+1, X^7+2*X^5+X^4+X^3+2*X^2+1");
  CHECK_THROWS_AS(eds.add(P(F3, "2*X+1"), 1), DomainError);
  InvariantFactors bad{{P(F3, "X^2"), P(F3, "X+1")}};
  CHECK_THROWS_AS(bad.validate(), DomainError);
}
