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

#ifndef GCF_DIVISORS_HPP
#define GCF_DIVISORS_HPP

#include <map>
#include <string>
#include <vector>

#include "gcf/factor.hpp"
#include "gcf/matrix.hpp"
#include "gcf/poly.hpp"

namespace gcf {

/// Invariant factors q_1 | q_2 | ... | q_r, monic and nonconstant.
/// The last one is the minimal polynomial.
struct InvariantFactors {
  std::vector<Poly> factors;

  /// Sum of the degrees, i.e. the size of the matrix.
  std::size_t degree() const;
  /// Throws DomainError unless the chain is valid.
  void validate() const;

  friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;
};

/// The similarity type: for each monic irreducible p, the multiset of
/// exponents a with p^a an elementary divisor, stored ascending.
class ElementaryDivisors {
 public:
  using Parts = std::map<Poly, std::vector<unsigned>>;

  void add(const Poly& p, unsigned exponent, unsigned count = 1);
  void merge(const ElementaryDivisors& other);

  const Parts& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  /// Sum over p of deg(p) times the sum of its exponents.
  std::size_t degree() const;
  /// Number of elementary divisors counted with multiplicity.
  std::size_t count() const;
  /// Exponents of p (empty if p does not occur).
  const std::vector<unsigned>& exponents(const Poly& p) const;

  friend bool operator==(const ElementaryDivisors&, const ElementaryDivisors&) = default;

 private:
  Parts parts_;
};

/// Invariant factors via the Smith normal form of XI - A over F[X].
InvariantFactors invariant_factors(const Matrix& a);
Poly minimal_polynomial(const Matrix& a);
Poly characteristic_polynomial(const Matrix& a);

/// Factor every invariant factor and collect the prime powers.
ElementaryDivisors elementary_divisors(const InvariantFactors& invs, const FactorOptions& options = {});
inline ElementaryDivisors elementary_divisors(const Matrix& a, const FactorOptions& options = {}) {
  return elementary_divisors(invariant_factors(a), options);
}
/// Inverse of elementary_divisors(): the unique divisibility chain.
InvariantFactors recombine(const Field& field, const ElementaryDivisors& eds);

/// Same field, same size and the same invariant factors.
bool similar(const Matrix& a, const Matrix& b);

/// A representative of the similarity class: the direct sum of the
/// companion matrices of the elementary divisors, in canonical order.
Matrix primary_rational_form(const Field& field, const ElementaryDivisors& eds);

/// "(X+1)^2, (X+1), (X+1)": canonical order of p, exponents descending.
std::string format_divisors(const ElementaryDivisors& eds);
/// "q_1, q_2, ..., q_r" in divisibility order.
std::string format_invariants(const InvariantFactors& invs);

}  // namespace gcf

#endif  // GCF_DIVISORS_HPP
