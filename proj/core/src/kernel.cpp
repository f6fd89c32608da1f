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

#include "gcf/kernel.hpp"

#include "gcf/error.hpp"
#include "gcf/factor.hpp"

namespace gcf {

KernelDescription kernel_description(const Poly& y, const Poly& g, const Poly& f) {
  if (!f.is_monic() || f.degree() < 1) throw DomainError("kernel_description needs f monic of degree >= 1");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  const Poly yg = compose_mod(y, g, f);
  Poly z = gcd(yg, f);
  const std::size_t d = static_cast<std::size_t>(z.degree());
  Poly h = f / z;
  std::vector<Vector> basis;
  Poly cur = h;
  const Poly x = Poly::x(f.field());
  for (std::size_t j = 0; j < d; ++j) {
    basis.push_back(coordinates(cur, n));
    cur = cur * x;
  }
  return {std::move(z), d, std::move(h), std::move(basis)};
}

std::vector<std::size_t> nullity_sequence(const Matrix& a, const Poly& p) {
  if (!is_irreducible(p)) throw DomainError("nullity_sequence needs an irreducible polynomial");
  const std::size_t deg = static_cast<std::size_t>(p.degree());
  const Matrix pa = evaluate_poly(p, a);
  std::vector<std::size_t> out;
  std::size_t prev = 0;
  Matrix power = pa;
  for (std::size_t i = 1; i <= a.size() + 1; ++i) {
    const std::size_t dim = nullity(power);
    if (dim % deg != 0) throw InternalError("kernel dimension not a multiple of deg p");
    out.push_back(dim / deg);
    if (dim / deg == prev) break;
    prev = dim / deg;
    power = power * pa;
  }
  return out;
}

std::size_t span_dimension_cd(const Poly& f, const Poly& g) {
  if (!f.is_monic() || !g.is_monic()) throw DomainError("span_dimension_cd needs monic polynomials");
  if (f.degree() != g.degree()) throw DomainError("span_dimension_cd needs polynomials of equal degree");
  if (f.degree() < 1) throw DomainError("span_dimension_cd needs degree >= 1");
  const Field& F = f.field();
  const std::size_t n = static_cast<std::size_t>(f.degree());
  const Matrix c = companion(f);
  const Matrix d = companion(g);
  // One row per product C^i D^j, flattened.
  Matrix rows(F, n * n, n * n);
  Matrix ci = Matrix::identity(F, n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix prod = ci;
    for (std::size_t j = 0; j < n; ++j) {
      const auto flat = prod.data();
      for (std::size_t k = 0; k < n * n; ++k) rows(i * n + j, k) = flat[k];
      prod = prod * d;
    }
    ci = ci * c;
  }
  return rank(std::move(rows));
}

std::size_t predicted_span_dimension(const Poly& f, const Poly& g) {
  const std::size_t n = static_cast<std::size_t>(f.degree());
  const std::size_t m = static_cast<std::size_t>(gcd(f, g).degree());
  return n + (n - m) * (n - 1);
}

}  // namespace gcf
