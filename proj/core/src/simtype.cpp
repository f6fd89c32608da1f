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

#include "gcf/simtype.hpp"

#include <algorithm>

#include "gcf/error.hpp"

namespace gcf {

namespace {

Poly min_poly_mod_unchecked(const Poly& g, const Poly& r) {
  const Field& F = r.field();
  const std::size_t s = static_cast<std::size_t>(r.degree());
  std::vector<Vector> powers;
  Poly cur = Poly::constant(F, F.one()) % r;
  const Poly gr = g % r;
  for (std::size_t t = 0; t <= s; ++t) {
    Vector v = coordinates(cur, s);
    if (t > 0) {
      Matrix m(F, s, t);
      for (std::size_t j = 0; j < t; ++j)
        for (std::size_t i = 0; i < s; ++i) m(i, j) = powers[j][i];
      if (auto c = solve(m, v)) {
        // g^t = sum c_j g^j  ->  p = X^t - sum c_j X^j
        std::vector<FieldElem> coeffs(t + 1);
        for (std::size_t j = 0; j < t; ++j) coeffs[j] = F.neg((*c)[j]);
        coeffs[t] = F.one();
        return Poly(F, std::move(coeffs));
      }
    }
    powers.push_back(std::move(v));
    cur = mulmod(cur, gr, r);
  }
  throw InternalError("no linear dependence among powers of g mod r");
}

PrimaryAnalysis d_sequence(const Poly& f, const Poly& g, const Poly& p, bool shortcut) {
  const std::size_t deg_p = static_cast<std::size_t>(p.degree());
  const std::size_t cap = static_cast<std::size_t>(f.degree()) + 1;
  const Poly y = compose_mod(p, g, f);
  const Poly base = shortcut ? gcd(y, f) : y;
  PrimaryAnalysis out{p, {}, {}};
  Poly cur = base;
  std::size_t prev = 0;
  for (std::size_t i = 1; i <= cap; ++i) {
    const std::size_t deg = static_cast<std::size_t>(gcd(cur, f).degree());
    if (deg % deg_p != 0) throw InternalError("gcd degree not a multiple of deg p");
    out.d.push_back(deg / deg_p);
    if (deg / deg_p == prev) break;
    prev = deg / deg_p;
    cur = mulmod(cur, base, f);
  }
  const std::size_t e = out.d.size() - 1;
  for (std::size_t i = 1; i <= e; ++i) {
    const long long di = static_cast<long long>(out.d[i - 1]);
    const long long next = static_cast<long long>(out.d[i]);
    const long long before = i >= 2 ? static_cast<long long>(out.d[i - 2]) : 0;
    const long long b = 2 * di - next - before;
    if (b < 0) throw InternalError("negative elementary divisor multiplicity");
    out.b.push_back(static_cast<std::size_t>(b));
  }
  return out;
}

void require_monic_f(const Poly& f) {
  if (!f.is_monic() || f.degree() < 1) throw DomainError("f must be monic of degree >= 1");
}

}  // namespace

Poly min_poly_mod(const Poly& g, const Poly& r) {
  if (!r.is_monic() || !is_irreducible(r)) throw DomainError("min_poly_mod needs a monic irreducible modulus");
  return min_poly_mod_unchecked(g, r);
}

GcfAnalysis simtype_of_gcf(const Poly& f, const Poly& g, const SimtypeOptions& options) {
  require_monic_f(f);
  return simtype_of_gcf(f, factor(f, options.factor), g, options);
}

GcfAnalysis simtype_of_gcf(const Poly& f, const Factorization& f_factors, const Poly& g,
                           const SimtypeOptions& options) {
  require_monic_f(f);
  const Poly gr = g % f;
  GcfAnalysis out;
  std::vector<Poly> ps;
  for (const auto& [r, mult] : f_factors.factors) {
    Poly p = min_poly_mod_unchecked(gr, r);
    out.factor_minpolys.emplace_back(r, p);
    ps.push_back(std::move(p));
  }
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  for (const auto& p : ps) {
    PrimaryAnalysis pa = d_sequence(f, gr, p, options.use_gcd_shortcut);
    for (std::size_t i = 0; i < pa.b.size(); ++i)
      out.divisors.add(p, static_cast<unsigned>(i + 1), static_cast<unsigned>(pa.b[i]));
    out.primaries.push_back(std::move(pa));
  }
  if (out.divisors.degree() != static_cast<std::size_t>(f.degree()))
    throw InternalError("similarity type does not account for deg f");
  return out;
}

ElementaryDivisors eldiv_of_ga(const InvariantFactors& invs, const Poly& g, const SimtypeOptions& options) {
  invs.validate();
  ElementaryDivisors out;
  for (const auto& f : invs.factors) out.merge(simtype_of_gcf(f, g, options).divisors);
  return out;
}

Poly inflate(const Poly& f, const Poly& g) {
  require_monic_f(f);
  if (g.degree() < 1) throw DomainError("inflate needs g of degree >= 1");
  const Field& F = f.field();
  const FieldElem a_inv_n = F.pow(F.inv(g.leading()), static_cast<std::uint64_t>(f.degree()));
  return scale(compose(f, g), a_inv_n);
}

CsdReport csd_report(const InvariantFactors& invs, const Poly& g, const SimtypeOptions& options) {
  invs.validate();
  if (invs.factors.empty()) throw DomainError("csd_report needs a nonempty invariant factor list");
  const Poly& f = invs.factors.back();
  const Field& F = f.field();
  const GcfAnalysis analysis = simtype_of_gcf(f, g, options);

  CsdReport out;
  out.semisimple = true;
  out.cyclic = invs.factors.size() == 1;
  bool all_linear = true;
  for (const auto& pa : analysis.primaries) {
    const Poly y = compose_mod(pa.p, g, f);
    const Poly z_one = gcd(y, f);
    const Poly z_sq = gcd(mulmod(y, y, f), f);
    if (!(z_one == z_sq)) out.semisimple = false;
    if (z_one.degree() != pa.p.degree()) out.cyclic = false;
    if (pa.p.degree() != 1) all_linear = false;
  }
  if (all_linear) {
    std::vector<FieldElem> eig;
    bool diag = true;
    for (const auto& pa : analysis.primaries) {
      const FieldElem a = F.neg(pa.p.coeff(0));
      eig.push_back(a);
      const Poly ga = g - Poly::constant(F, a);
      if (!(gcd(ga % f, f) == gcd(mulmod(ga, ga, f), f))) diag = false;
    }
    std::sort(eig.begin(), eig.end());
    out.eigenvalues = std::move(eig);
    out.diagonalizable = diag;
  }
  return out;
}

ElementData element_data(const Poly& f, const Poly& g) {
  if (!f.is_monic() || !is_irreducible(f)) throw DomainError("element_data needs f monic irreducible");
  if (g.degree() >= f.degree()) throw DomainError("element_data needs deg g < deg f");
  const Field& F = f.field();
  const std::size_t n = static_cast<std::size_t>(f.degree());
  const Matrix c = companion(f);
  Matrix rep = Matrix::square(F, n);
  Vector col = coordinates(g, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) rep(i, j) = col[i];
    col = c.apply(col);
  }
  ElementData out{f, g, rep, min_poly_mod_unchecked(g, f), trace(rep), determinant(rep), std::nullopt};
  if (!g.is_zero()) out.inverse = inverse_mod(g, f);
  return out;
}

}  // namespace gcf
