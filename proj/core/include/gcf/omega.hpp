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

#ifndef GCF_OMEGA_HPP
#define GCF_OMEGA_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "gcf/divisors.hpp"
#include "gcf/poly.hpp"

namespace gcf {

/// The affine substitution X -> aX + b (a != 0), i.e. the matrix
/// [[a, b], [0, 1]].
struct OmegaElement {
  FieldElem a;
  FieldElem b;

  friend bool operator==(const OmegaElement&, const OmegaElement&) = default;
};

OmegaElement omega_identity(const Field& field);
/// Matrix product [[a1, b1], [0, 1]] * [[a2, b2], [0, 1]].
OmegaElement omega_mul(const Field& field, const OmegaElement& m, const OmegaElement& n);

/// f^M(X) = a^{-deg f} f(aX + b); 0^M = 0.  This is a right action:
/// omega_act(M, omega_act(N, f)) == omega_act(omega_mul(N, M), f).
Poly omega_act(const OmegaElement& m, const Poly& f);

struct Stabilizers {
  std::vector<FieldElem> additive;        // S_f, subset of F^+
  std::vector<FieldElem> multiplicative;  // T_f, subset of F^*

  bool additive_trivial() const { return additive.size() == 1; }
  bool multiplicative_trivial() const { return multiplicative.size() == 1; }
};

/// Stabilizers of f in F^+ (X -> X + b) and F^* (X -> aX), by exhaustion.
Stabilizers stabilizers(const Poly& f);

/// All Omega-conjugates of f.
std::set<Poly> omega_orbit(const Poly& f);

struct Conjugate {
  Poly r;          // omega_act(m, p)
  OmegaElement m;
};

/// First conjugate of the irreducible p not in `used`, scanning F^+ in
/// canonical order when S_p is trivial, otherwise F^* (T_p is then trivial).
/// nullopt when that orbit is used up.
std::optional<Conjugate> pick_fresh_conjugate(const Poly& p, const std::set<Poly>& used);

/// l(p) for every irreducible p occurring in the divisors: the number of
/// elementary divisors (with multiplicity) that are powers of an
/// Omega-conjugate of p.
std::map<Poly, std::size_t> ell_table(const ElementaryDivisors& eds);

}  // namespace gcf

#endif  // GCF_OMEGA_HPP
