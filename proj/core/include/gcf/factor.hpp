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

#ifndef GCF_FACTOR_HPP
#define GCF_FACTOR_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gcf/poly.hpp"

namespace gcf {

/// Seed for the equal-degree splitting step.  The factor list is sorted
/// canonically, so the seed never changes results, only the work done.
inline constexpr std::uint64_t kDefaultFactorSeed = 0x9e3779b97f4a7c15ULL;

struct FactorOptions {
  std::uint64_t seed = kDefaultFactorSeed;
};

/// unit * prod factors[i].first ^ factors[i].second, factors monic irreducible,
/// pairwise distinct, sorted in canonical order.
struct Factorization {
  FieldElem unit;
  std::vector<std::pair<Poly, unsigned>> factors;

  /// Multiplies everything back out.
  Poly expand(const Field& field) const;
};

/// Complete factorization of a nonzero polynomial.
///
/// Squarefree decomposition, then distinct-degree factorization, then
/// Cantor-Zassenhaus equal-degree splitting (trace map in characteristic 2).
Factorization factor(const Poly& f, const FactorOptions& options = {});

/// Squarefree decomposition of a monic polynomial: pairs (s_i, i) with the s_i
/// squarefree, pairwise coprime and f = prod s_i^i.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f);

/// Ben-Or irreducibility test.  Constants are not irreducible.
bool is_irreducible(const Poly& f);

/// Number of monic irreducible polynomials of degree d over `field`, by the
/// Moebius sum (1/d) sum_{e | d} mu(e) q^{d/e}.
std::uint64_t count_irreducibles(const Field& field, int degree);

/// Monic irreducible polynomials of the given degree, in canonical order.
std::vector<Poly> monic_irreducibles(const Field& field, int degree);

/// Builds GF(p^k).  Without a modulus, the canonically least monic
/// irreducible of degree k over F_p is used.  A supplied modulus must be a
/// monic irreducible polynomial of degree k over GF(p).
Field make_field(std::uint32_t p, unsigned k, const std::optional<Poly>& modulus = std::nullopt);

/// The defining polynomial of `field` as a polynomial over GF(p).
Poly modulus_poly(const Field& field);

}  // namespace gcf

#endif  // GCF_FACTOR_HPP
