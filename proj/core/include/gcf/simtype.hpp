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

#ifndef GCF_SIMTYPE_HPP
#define GCF_SIMTYPE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "gcf/divisors.hpp"
#include "gcf/factor.hpp"
#include "gcf/matrix.hpp"
#include "gcf/poly.hpp"

namespace gcf {

struct SimtypeOptions {
  /// Compute gcd(p^i(g), f) as gcd(h^i, f) with h = gcd(p(g), f).
  bool use_gcd_shortcut = true;
  FactorOptions factor;
};

/// Data for one irreducible factor p of the minimal polynomial of g(C_f).
struct PrimaryAnalysis {
  Poly p;
  /// d_i = deg gcd(p^i(g), f) / deg p for i = 1 .. e+1; the last entry
  /// repeats the previous one.
  std::vector<std::size_t> d;
  /// b_i = 2 d_i - d_{i+1} - d_{i-1}, the number of elementary divisors p^i,
  /// for i = 1 .. e.
  std::vector<std::size_t> b;
};

struct GcfAnalysis {
  /// (r, p): each monic irreducible factor r of f with the minimal
  /// polynomial p of g modulo r.
  std::vector<std::pair<Poly, Poly>> factor_minpolys;
  /// One entry per distinct p, in canonical order.
  std::vector<PrimaryAnalysis> primaries;
  ElementaryDivisors divisors;
};

/// Minimal polynomial of g modulo the irreducible r: the monic p of least
/// degree with r | p(g(X)).  Found from the first linear dependence among
/// 1, g, g^2, ... reduced mod r.
Poly min_poly_mod(const Poly& g, const Poly& r);

/// Similarity type of g(C_f) from f and g alone; g(C_f) is never formed.
GcfAnalysis simtype_of_gcf(const Poly& f, const Poly& g, const SimtypeOptions& options = {});
/// Same, with the factorization of f supplied by the caller.
GcfAnalysis simtype_of_gcf(const Poly& f, const Factorization& f_factors, const Poly& g,
                           const SimtypeOptions& options = {});

/// Elementary divisors of g(A) from the invariant factors of A.
ElementaryDivisors eldiv_of_ga(const InvariantFactors& invs, const Poly& g,
                               const SimtypeOptions& options = {});

/// a^{-n} f(g(X)) for monic f of degree n and g of degree >= 1 with leading
/// coefficient a.  g(C_{inflate(f, g)}) is similar to deg(g) copies of C_f.
Poly inflate(const Poly& f, const Poly& g);

struct CsdReport {
  bool semisimple = false;
  bool cyclic = false;
  /// Present iff every eigenvalue of g(A) lies in F; canonical order.
  std::optional<std::vector<FieldElem>> eigenvalues;
  /// Present iff eigenvalues is.
  std::optional<bool> diagonalizable;
};

/// The CsdReport fields for g(A), decided by gcd
/// criteria on g and the minimal polynomial of A.
CsdReport csd_report(const InvariantFactors& invs, const Poly& g, const SimtypeOptions& options = {});

/// beta = g(alpha) in F[alpha] = F[X]/(f), f irreducible.
struct ElementData {
  Poly f;
  Poly g;
  /// Matrix of multiplication by beta in the basis 1, alpha, ..., alpha^{n-1}:
  /// columns [g], C_f[g], ..., C_f^{n-1}[g].
  Matrix rep;
  Poly minpoly;
  FieldElem trace;
  FieldElem norm;
  /// h with g h = 1 mod f, absent when beta = 0.
  std::optional<Poly> inverse;
};

ElementData element_data(const Poly& f, const Poly& g);

}  // namespace gcf

#endif  // GCF_SIMTYPE_HPP
