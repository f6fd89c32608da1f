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

#ifndef GCF_POLY_HPP
#define GCF_POLY_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gcf/field.hpp"

namespace gcf {

/// Dense univariate polynomial over a finite field.
///
/// Coefficients are stored constant term first with no trailing zeros, so the
/// zero polynomial has an empty coefficient vector and degree -1.
///
/// Polynomials are totally ordered by the canonical order: first by degree
/// (zero is smallest), then lexicographically on the coefficient tuple read
/// constant term first, comparing field elements by code.
class Poly {
 public:
  explicit Poly(Field field) : field_(field) {}
  Poly(Field field, std::vector<FieldElem> coeffs);

  static Poly constant(Field field, FieldElem c);
  static Poly monomial(Field field, FieldElem c, std::size_t exponent);
  static Poly x(Field field) { return monomial(field, field.one(), 1); }
  /// Coefficients given as integers (mapped into the prime subfield),
  /// constant term first.
  static Poly from_ints(Field field, std::initializer_list<long long> coeffs);

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  FieldElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : FieldElem(0); }
  FieldElem leading() const { return c_.empty() ? FieldElem(0) : c_.back(); }
  std::span<const FieldElem> coeffs() const { return c_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

 private:
  void trim();

  Field field_;
  std::vector<FieldElem> c_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division; throws DomainError when the divisor is zero.
DivRem divrem(const Poly& a, const Poly& b);
inline Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).quotient; }
Poly operator%(const Poly& a, const Poly& b);

Poly scale(const Poly& a, FieldElem c);
/// a divided by its leading coefficient; zero stays zero.
Poly monic(const Poly& a);
Poly derivative(const Poly& a);
FieldElem eval(const Poly& a, FieldElem x);
Poly pow(const Poly& a, unsigned e);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(Poly base, std::uint64_t e, const Poly& m);

/// Monic gcd.  gcd(f, 0) = monic(f); throws when both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

struct Xgcd {
  Poly gcd;  // monic
  Poly s;
  Poly t;    // s*a + t*b = gcd
};
Xgcd xgcd(const Poly& a, const Poly& b);

/// Inverse of a modulo m if gcd(a, m) = 1.
std::optional<Poly> inverse_mod(const Poly& a, const Poly& m);

/// outer(inner(X)).
Poly compose(const Poly& outer, const Poly& inner);
/// outer(inner(X)) mod m, without forming the full composition.
Poly compose_mod(const Poly& outer, const Poly& inner, const Poly& m);

/// The unique g with deg g < sum deg f_i and g = g_i mod f_i for all i.
/// Moduli: monic of positive degree, pairwise coprime.
Poly crt(std::span<const std::pair<Poly, Poly>> residues_and_moduli);

/// Resultant of two nonzero polynomials (Sylvester convention).
FieldElem resultant(const Poly& f, const Poly& g);

/// All monic polynomials of the given degree, in canonical order.
std::vector<Poly> monic_polys(const Field& field, int degree);
/// All polynomials of degree < n (zero included), in canonical order.
std::vector<Poly> polys_below_degree(const Field& field, int n);
/// Entry `rank` of that list; it does not depend on n.
Poly poly_below_from_rank(const Field& field, std::uint64_t rank);
/// Number of monic polynomials of degree d, q^d (throws on overflow).
std::uint64_t monic_count(const Field& field, int degree);
/// The monic polynomial of degree d at position `rank` of the canonical order.
Poly monic_from_rank(const Field& field, int degree, std::uint64_t rank);

}  // namespace gcf

#endif  // GCF_POLY_HPP
