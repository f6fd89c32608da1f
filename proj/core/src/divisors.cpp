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

#include "gcf/divisors.hpp"

#include <algorithm>

#include "gcf/error.hpp"
#include "gcf/text.hpp"

namespace gcf {

std::size_t InvariantFactors::degree() const {
  std::size_t d = 0;
  for (const auto& q : factors) d += static_cast<std::size_t>(q.degree());
  return d;
}

void InvariantFactors::validate() const {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Poly& q = factors[i];
    if (!q.is_monic() || q.degree() < 1) throw DomainError("invariant factors must be monic and nonconstant");
    if (i > 0 && !(q % factors[i - 1]).is_zero())
      throw DomainError("invariant factors do not form a divisibility chain");
  }
}

void ElementaryDivisors::add(const Poly& p, unsigned exponent, unsigned count) {
  if (exponent == 0 || count == 0) return;
  if (!p.is_monic() || p.degree() < 1) throw DomainError("elementary divisor base must be monic and nonconstant");
  auto& v = parts_[p];
  v.insert(v.end(), count, exponent);
  std::sort(v.begin(), v.end());
}

void ElementaryDivisors::merge(const ElementaryDivisors& other) {
  for (const auto& [p, exps] : other.parts_) {
    auto& v = parts_[p];
    v.insert(v.end(), exps.begin(), exps.end());
    std::sort(v.begin(), v.end());
  }
}

std::size_t ElementaryDivisors::degree() const {
  std::size_t d = 0;
  for (const auto& [p, exps] : parts_)
    for (unsigned e : exps) d += static_cast<std::size_t>(p.degree()) * e;
  return d;
}

std::size_t ElementaryDivisors::count() const {
  std::size_t c = 0;
  for (const auto& [p, exps] : parts_) c += exps.size();
  return c;
}

const std::vector<unsigned>& ElementaryDivisors::exponents(const Poly& p) const {
  static const std::vector<unsigned> kNone;
  auto it = parts_.find(p);
  return it == parts_.end() ? kNone : it->second;
}

InvariantFactors invariant_factors(const Matrix& a) {
  const Field& F = a.field();
  const std::size_t n = a.size();
  // M = XI - A, stored row-major.
  std::vector<Poly> m;
  m.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<FieldElem> c{F.neg(a(i, j))};
      if (i == j) c.push_back(F.one());
      m.emplace_back(F, std::move(c));
    }
  auto at = [&](std::size_t i, std::size_t j) -> Poly& { return m[i * n + j]; };

  std::vector<Poly> diag;
  for (std::size_t k = 0; k < n; ++k) {
    while (true) {
      // Pivot: a nonzero entry of least degree in the trailing block.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (!at(i, j).is_zero() && (pi == n || at(i, j).degree() < at(pi, pj).degree())) {
            pi = i;
            pj = j;
          }
      if (pi == n) throw InternalError("characteristic matrix is singular");
      if (pi != k)
        for (std::size_t j = k; j < n; ++j) std::swap(at(pi, j), at(k, j));
      if (pj != k)
        for (std::size_t i = k; i < n; ++i) std::swap(at(i, pj), at(i, k));

      bool clean = true;
      const Poly piv = at(k, k);
      for (std::size_t i = k + 1; i < n; ++i) {
        if (at(i, k).is_zero()) continue;
        auto [q, r] = divrem(at(i, k), piv);
        for (std::size_t j = k; j < n; ++j) at(i, j) -= q * at(k, j);
        clean = clean && r.is_zero();
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (at(k, j).is_zero()) continue;
        auto [q, r] = divrem(at(k, j), piv);
        for (std::size_t i = k; i < n; ++i) at(i, j) -= q * at(i, k);
        clean = clean && r.is_zero();
      }
      if (!clean) continue;

      // The pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = k + 1; i < n && divides; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (!(at(i, j) % piv).is_zero()) {
            for (std::size_t c = k; c < n; ++c) at(k, c) += at(i, c);
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(monic(at(k, k)));
  }

  InvariantFactors out;
  for (auto& d : diag)
    if (d.degree() >= 1) out.factors.push_back(std::move(d));
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Poly& x, const Poly& y) { return x.degree() < y.degree(); });
  return out;
}

Poly minimal_polynomial(const Matrix& a) {
  auto invs = invariant_factors(a);
  return invs.factors.empty() ? Poly::constant(a.field(), a.field().one()) : invs.factors.back();
}

Poly characteristic_polynomial(const Matrix& a) {
  Poly acc = Poly::constant(a.field(), a.field().one());
  for (const auto& q : invariant_factors(a).factors) acc = acc * q;
  return acc;
}

ElementaryDivisors elementary_divisors(const InvariantFactors& invs, const FactorOptions& options) {
  invs.validate();
  ElementaryDivisors out;
  for (const auto& q : invs.factors)
    for (const auto& [p, e] : factor(q, options).factors) out.add(p, e);
  return out;
}

InvariantFactors recombine(const Field& field, const ElementaryDivisors& eds) {
  std::size_t r = 0;
  for (const auto& [p, exps] : eds.parts()) r = std::max(r, exps.size());
  std::vector<Poly> chain(r, Poly::constant(field, field.one()));
  for (const auto& [p, exps] : eds.parts()) {
    // Largest exponent goes to the last invariant factor.
    for (std::size_t i = 0; i < exps.size(); ++i) {
      const std::size_t slot = r - 1 - i;
      chain[slot] = chain[slot] * pow(p, exps[exps.size() - 1 - i]);
    }
  }
  return InvariantFactors{std::move(chain)};
}

bool similar(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field()) || a.size() != b.size())
    throw DomainError("similarity test needs matrices of one size over one field");
  return invariant_factors(a) == invariant_factors(b);
}

Matrix primary_rational_form(const Field& field, const ElementaryDivisors& eds) {
  std::vector<Matrix> blocks;
  for (const auto& [p, exps] : eds.parts())
    for (auto it = exps.rbegin(); it != exps.rend(); ++it) blocks.push_back(companion(pow(p, *it)));
  if (blocks.empty()) return Matrix::square(field, 0);
  return direct_sum(blocks);
}

std::string format_divisors(const ElementaryDivisors& eds) {
  std::string out;
  for (const auto& [p, exps] : eds.parts())
    for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
      if (!out.empty()) out += ", ";
      out += '(' + format_poly(p) + ')';
      if (*it > 1) out += '^' + std::to_string(*it);
    }
  return out;
}

std::string format_invariants(const InvariantFactors& invs) {
  std::string out;
  for (const auto& q : invs.factors) {
    if (!out.empty()) out += ", ";
    out += format_poly(q);
  }
  return out;
}

}  // namespace gcf
