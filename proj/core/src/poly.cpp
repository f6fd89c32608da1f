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

#include "gcf/poly.hpp"

#include <algorithm>

#include "gcf/error.hpp"

namespace gcf {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) throw DomainError("polynomials over different fields");
}

}  // namespace

Poly::Poly(Field field, std::vector<FieldElem> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (FieldElem e : c_)
    if (e.code() >= field_.order()) throw DomainError("coefficient outside field");
  trim();
}

Poly Poly::constant(Field field, FieldElem c) { return Poly(field, {c}); }

Poly Poly::monomial(Field field, FieldElem c, std::size_t exponent) {
  std::vector<FieldElem> v(exponent + 1, field.zero());
  v[exponent] = c;
  return Poly(field, std::move(v));
}

Poly Poly::from_ints(Field field, std::initializer_list<long long> coeffs) {
  std::vector<FieldElem> v;
  v.reserve(coeffs.size());
  for (long long c : coeffs) v.push_back(field.from_int(c));
  return Poly(field, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_field(*this, o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), FieldElem(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_field(*this, o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), FieldElem(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const Field& F = a.field_;
  if (a.is_zero() || b.is_zero()) return Poly(F);
  std::vector<FieldElem> out(a.c_.size() + b.c_.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out[i + j] = F.add(out[i + j], F.mul(a.c_[i], b.c_[j]));
  }
  return Poly(F, std::move(out));
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& c : r.c_) c = a.field_.neg(c);
  return r;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (auto cmp = a.c_.size() <=> b.c_.size(); cmp != 0) return cmp;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (auto cmp = a.c_[i] <=> b.c_[i]; cmp != 0) return cmp;
  return std::strong_ordering::equal;
}

DivRem divrem(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const Field& F = a.field();
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.degree() < b.degree()) return {Poly(F), a};
  std::vector<FieldElem> rem(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const FieldElem lead_inv = F.inv(bc.back());
  std::vector<FieldElem> quo(rem.size() - db, F.zero());
  for (std::size_t top = rem.size(); top-- > db;) {
    const FieldElem c = F.mul(rem[top], lead_inv);
    if (c.is_zero()) continue;
    quo[top - db] = c;
    for (std::size_t i = 0; i <= db; ++i) rem[top - db + i] = F.sub(rem[top - db + i], F.mul(c, bc[i]));
  }
  rem.resize(db);
  return {Poly(F, std::move(quo)), Poly(F, std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) {
  if (a.degree() < b.degree() && !b.is_zero()) {
    require_same_field(a, b);
    return a;
  }
  return divrem(a, b).remainder;
}

Poly scale(const Poly& a, FieldElem c) {
  const Field& F = a.field();
  std::vector<FieldElem> v(a.coeffs().begin(), a.coeffs().end());
  for (auto& e : v) e = F.mul(e, c);
  return Poly(F, std::move(v));
}

Poly monic(const Poly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return scale(a, a.field().inv(a.leading()));
}

Poly derivative(const Poly& a) {
  const Field& F = a.field();
  if (a.degree() < 1) return Poly(F);
  std::vector<FieldElem> v(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i)
    v[i - 1] = F.mul(F.from_int(static_cast<long long>(i)), a.coeffs()[i]);
  return Poly(F, std::move(v));
}

FieldElem eval(const Poly& a, FieldElem x) {
  const Field& F = a.field();
  FieldElem acc = F.zero();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = F.add(F.mul(acc, x), a.coeffs()[i]);
  return acc;
}

Poly pow(const Poly& a, unsigned e) {
  Poly result = Poly::constant(a.field(), a.field().one());
  Poly base = a;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(Poly base, std::uint64_t e, const Poly& m) {
  base = base % m;
  Poly result = Poly::constant(m.field(), m.field().one()) % m;
  while (e > 0) {
    if (e & 1u) result = mulmod(result, base, m);
    e >>= 1;
    if (e > 0) base = mulmod(base, base, m);
  }
  return result;
}

Poly gcd(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Xgcd xgcd(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const Field& F = a.field();
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(F, F.one()), s1(F);
  Poly t0(F), t1 = Poly::constant(F, F.one());
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const FieldElem li = F.inv(r0.leading());
  return {scale(r0, li), scale(s0, li), scale(t0, li)};
}

std::optional<Poly> inverse_mod(const Poly& a, const Poly& m) {
  if (m.degree() < 1) throw DomainError("inverse modulo a constant");
  Poly ar = a % m;
  if (ar.is_zero()) return std::nullopt;
  Xgcd x = xgcd(ar, m);
  if (!x.gcd.is_one()) return std::nullopt;
  return x.s % m;
}

Poly compose(const Poly& outer, const Poly& inner) {
  require_same_field(outer, inner);
  const Field& F = outer.field();
  Poly acc(F);
  for (std::size_t i = outer.coeffs().size(); i-- > 0;)
    acc = acc * inner + Poly::constant(F, outer.coeffs()[i]);
  return acc;
}

Poly compose_mod(const Poly& outer, const Poly& inner, const Poly& m) {
  require_same_field(outer, inner);
  const Field& F = outer.field();
  const Poly in = inner % m;
  Poly acc(F);
  for (std::size_t i = outer.coeffs().size(); i-- > 0;)
    acc = mulmod(acc, in, m) + Poly::constant(F, outer.coeffs()[i]) % m;
  return acc;
}

Poly crt(std::span<const std::pair<Poly, Poly>> residues_and_moduli) {
  if (residues_and_moduli.empty()) throw DomainError("crt needs at least one congruence");
  const Field& F = residues_and_moduli.front().second.field();
  Poly g(F);
  Poly modulus = Poly::constant(F, F.one());
  for (const auto& [residue, m] : residues_and_moduli) {
    if (!m.is_monic() || m.degree() < 1) throw DomainError("crt moduli must be monic and nonconstant");
    auto inv = inverse_mod(modulus, m);
    if (!inv) throw DomainError("crt moduli are not pairwise coprime");
    // g + M * ((r - g) * M^{-1} mod m)
    const Poly lift = mulmod(residue - g, *inv, m);
    g = g + modulus * lift;
    modulus = modulus * m;
  }
  return g % modulus;
}

FieldElem resultant(const Poly& f, const Poly& g) {
  require_same_field(f, g);
  const Field& F = f.field();
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant of a zero polynomial");
  Poly a = f, b = g;
  FieldElem acc = F.one();
  while (true) {
    const int m = a.degree(), n = b.degree();
    if (n == 0) return F.mul(acc, F.pow(b.leading(), static_cast<std::uint64_t>(m)));
    Poly r = a % b;
    if (r.is_zero()) return F.zero();
    // res(a, b) = (-1)^{mn} lc(b)^{m - deg r} res(b, r)
    if ((static_cast<long long>(m) * n) % 2 != 0) acc = F.neg(acc);
    acc = F.mul(acc, F.pow(b.leading(), static_cast<std::uint64_t>(m - r.degree())));
    a = std::move(b);
    b = std::move(r);
  }
}

std::uint64_t monic_count(const Field& field, int degree) {
  if (degree < 0) return 0;
  std::uint64_t n = 1;
  for (int i = 0; i < degree; ++i) {
    if (n > UINT64_MAX / field.order()) throw DomainError("polynomial count overflows 64 bits");
    n *= field.order();
  }
  return n;
}

Poly monic_from_rank(const Field& field, int degree, std::uint64_t rank) {
  const std::uint32_t q = field.order();
  std::vector<FieldElem> v(static_cast<std::size_t>(degree) + 1, field.zero());
  v[degree] = field.one();
  for (int i = degree - 1; i >= 0; --i) {
    v[i] = FieldElem(static_cast<std::uint32_t>(rank % q));
    rank /= q;
  }
  return Poly(field, std::move(v));
}

std::vector<Poly> monic_polys(const Field& field, int degree) {
  const std::uint64_t n = monic_count(field, degree);
  std::vector<Poly> out;
  out.reserve(n);
  for (std::uint64_t r = 0; r < n; ++r) out.push_back(monic_from_rank(field, degree, r));
  return out;
}

Poly poly_below_from_rank(const Field& field, std::uint64_t rank) {
  const std::uint32_t q = field.order();
  if (rank == 0) return Poly(field);
  --rank;
  int e = 0;
  for (;; ++e) {
    const std::uint64_t count = monic_count(field, e) * (q - 1);
    if (rank < count) break;
    rank -= count;
  }
  std::vector<FieldElem> v(static_cast<std::size_t>(e) + 1);
  v[e] = FieldElem(static_cast<std::uint32_t>(1 + rank % (q - 1)));
  rank /= (q - 1);
  for (int i = e - 1; i >= 0; --i) {
    v[i] = FieldElem(static_cast<std::uint32_t>(rank % q));
    rank /= q;
  }
  return Poly(field, std::move(v));
}

std::vector<Poly> polys_below_degree(const Field& field, int n) {
  const std::uint64_t count = monic_count(field, n);
  std::vector<Poly> out;
  out.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) out.push_back(poly_below_from_rank(field, r));
  return out;
}

}  // namespace gcf
