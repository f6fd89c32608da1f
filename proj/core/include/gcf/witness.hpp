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

#ifndef GCF_WITNESS_HPP
#define GCF_WITNESS_HPP

#include <optional>
#include <string>

#include "gcf/divisors.hpp"
#include "gcf/matrix.hpp"
#include "gcf/omega.hpp"
#include "gcf/poly.hpp"

namespace gcf {

/// A claim that A is similar to g(C_f).
struct Witness {
  Poly f;
  Poly g;
  std::string strategy;
};

/// Forms g(C_f) explicitly and compares invariant factors with A.
bool verify_witness(const Matrix& a, const Witness& w);

/// (f, g + c): g(C_f) + cI, a witness for A + cI.
Witness shift_witness(const Witness& w, FieldElem c);

/// The km x km block matrix with C_{p^i} on the diagonal and on the first
/// block superdiagonal.  It commutes with the direct sum of k copies of
/// C_{p^i}.  It is cyclic with minimal polynomial p^{ik} only when i = 1 or
/// k = 1: otherwise it lies in the commutative algebra
/// F[X]/(p^i) (x) F[N]/(N^k), which has no generator.
/// DomainError when p(0) = 0.
Matrix build_commuting_cyclic(const Poly& p, unsigned i, unsigned k);

/// The constructions below return nullopt when their hypothesis fails.  A
/// returned witness has not been verified yet.

/// Every elementary divisor is X - a.
std::optional<Witness> witness_diagonalizable(const Field& field, const ElementaryDivisors& eds);

/// Every elementary divisor is linear except for exactly one (X - a)^2.
std::optional<Witness> witness_square_plus_linear(const Field& field, const ElementaryDivisors& eds);

/// For every p the exponents of p are all equal.  Uses the block matrix
/// above when i = 1, and X^k at C_{p^i(X^k)} otherwise.
std::optional<Witness> witness_homogeneous(const Field& field, const ElementaryDivisors& eds);

/// All elementary divisors linear powers and at most q of them.
std::optional<Witness> witness_jordan(const Field& field, const ElementaryDivisors& eds);

/// Distinct Omega-conjugates for all elementary divisors, glued with the
/// CRT.  Needs q >= l(p) when S_p is trivial and q - 1 >= l(p) otherwise.
std::optional<Witness> witness_conjugates(const Field& field, const ElementaryDivisors& eds);

/// g with B' = g(B), for B cyclic and B' commuting with it.
std::optional<Poly> polynomial_in(const Matrix& b, const Matrix& target);

}  // namespace gcf

#endif  // GCF_WITNESS_HPP
