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
#include "gcf/divisors.hpp"
#include "gcf/error.hpp"
#include "gcf/factor.hpp"
#include "gcf/kernel.hpp"
#include "gcf/text.hpp"
#include "oracle.hpp"

using namespace gcf;

namespace {
Poly P(const Field& F, const char* s) { return parse_poly(F, s); }
}  // namespace

TEST_CASE("kernel descriptions") {
  const Field F2 = Field::prime(2);
  {
    const auto k = kernel_description(P(F2, "X"), P(F2, "X"), P(F2, "X^2"));
    CHECK(k.z == P(F2, "X"));
    CHECK(k.h == P(F2, "X"));
    CHECK(k.d == 1);
    CHECK(k.basis == std::vector<Vector>{{F2.zero(), F2.one()}});
  }
  {
    const auto k = kernel_description(P(F2, "X-1"), P(F2, "X"), P(F2, "X^2+X"));
    CHECK(k.h == P(F2, "X"));
    CHECK(k.basis == std::vector<Vector>{{F2.zero(), F2.one()}});
    const Matrix c = companion(P(F2, "X^2+X"));
    CHECK(c.apply(k.basis[0]) == k.basis[0]);
  }
  {
    const auto k = kernel_description(P(F2, "X"), P(F2, "X^2+X"), P(F2, "X^4+X+1"));
    CHECK(k.d == 0);
    CHECK(k.basis.empty());
  }
  CHECK_THROWS_AS(kernel_description(P(F2, "X"), P(F2, "X"), P(Field::prime(3), "2*X")), DomainError);
}

TEST_CASE("kernel dimension equals the nullity of y(g(C_f))") {
  oracle::Gen gen(17);
  for (const Field& F : {Field::prime(2), Field::prime(3)}) {
    for (int i = 0; i < 250; ++i) {
      const Poly f = gen.monic(F, 1 + static_cast<int>(gen.below(6)));
      const Poly g = gen.poly_below(F, 5);
      const Poly y = gen.poly_below(F, 4);
      const auto k = kernel_description(y, g, f);
      const oracle::Dense yg = oracle::evaluate(
          F, oracle::from_poly(y), oracle::evaluate(F, oracle::from_poly(g), oracle::companion(F, oracle::from_poly(f))));
      const std::size_t n = static_cast<std::size_t>(f.degree());
      CHECK(k.basis.size() == n - oracle::rank(F, yg));
      CHECK(k.z * k.h == f);
      const Matrix m = evaluate_poly(y, evaluate_poly(g, companion(f)));
      for (const Vector& v : k.basis)
        for (FieldElem x : m.apply(v)) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("nullity sequences") {
  const Field F2 = Field::prime(2);
  const Matrix a = direct_sum({jordan_block(F2, F2.zero(), 3), jordan_block(F2, F2.zero(), 1)});
  CHECK(nullity_sequence(a, P(F2, "X")) == std::vector<std::size_t>{2, 3, 4, 4});
  CHECK(nullity_sequence(companion(P(F2, "X^3+X+1")), P(F2, "X+1")) == std::vector<std::size_t>{0});
  CHECK_THROWS_AS(nullity_sequence(a, P(F2, "X^2")), DomainError);
}

TEST_CASE("multiplicities from nullity sequences match elementary divisors") {
  oracle::Gen gen(18);
  for (const Field& F : {Field::prime(2), Field::prime(3)}) {
    for (int i = 0; i < 250; ++i) {
      const std::size_t n = 1 + gen.below(6);
      std::vector<Matrix> blocks;
      std::size_t left = n;
      while (left > 0) {
        const std::size_t k = 1 + gen.below(left);
        blocks.push_back(companion(gen.monic(F, static_cast<int>(k))));
        left -= k;
      }
      const Matrix a = gen.below(2) ? direct_sum(blocks) : gen.matrix(F, n);
      const ElementaryDivisors eds = elementary_divisors(a);
      for (const auto& [p, exps] : eds.parts()) {
        std::vector<std::size_t> d = nullity_sequence(a, p);
        d.insert(d.begin(), 0);
        for (std::size_t j = 1; j + 1 < d.size(); ++j) {
          const std::size_t b = 2 * d[j] - d[j + 1] - d[j - 1];
          CHECK(b == static_cast<std::size_t>(std::count(exps.begin(), exps.end(), j)));
        }
      }
    }
  }
}

TEST_CASE("span of C^i D^j") {
  const Field F2 = Field::prime(2);
  CHECK(span_dimension_cd(P(F2, "X^2+X+1"), P(F2, "X^2+X+1")) == 2);
  CHECK(span_dimension_cd(P(F2, "X^2+X+1"), P(F2, "X^2+1")) == 4);
  CHECK(predicted_span_dimension(P(F2, "X^2+X+1"), P(F2, "X^2+1")) == 4);
  CHECK_THROWS_AS(span_dimension_cd(P(F2, "X^2"), P(F2, "X^3")), DomainError);
  oracle::Gen gen(19);
  const Field F3 = Field::prime(3);
  int coprime = 0;
  while (coprime < 20) {
    const Poly f = gen.monic(F3, 4), g = gen.monic(F3, 4);
    if (!gcd(f, g).is_one()) continue;
    ++coprime;
    CHECK(span_dimension_cd(f, g) == 16);
    CHECK(oracle::span_dimension(F3, oracle::from_poly(f), oracle::from_poly(g)) == 16);
  }
}
