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

#include "gcf/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "gcf/error.hpp"

namespace gcf {

namespace {

// f(X) = h(X^p) -> h with every coefficient replaced by its p-th root.
Poly pth_root_poly(const Poly& f) {
  const Field& F = f.field();
  const std::uint32_t p = F.characteristic();
  std::vector<FieldElem> v(static_cast<std::size_t>(f.degree()) / p + 1, F.zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeffs()[i].is_zero()) continue;
    if (i % p != 0) throw InternalError("pth_root_poly: exponent not divisible by p");
    v[i / p] = F.pth_root(f.coeffs()[i]);
  }
  return Poly(F, std::move(v));
}

// Distinct-degree factorization of a squarefree monic polynomial: pairs
// (product of all irreducible factors of degree d, d).
std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
  const Field& F = f.field();
  const std::uint64_t q = F.order();
  std::vector<std::pair<Poly, int>> out;
  const Poly x = Poly::x(F);
  Poly h = x % f;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, q, f);
    Poly g = gcd(h - x, f);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() >= 1) out.emplace_back(f, f.degree());
  return out;
}

Poly random_poly(const Field& F, int below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, F.order() - 1);
  std::vector<FieldElem> v(static_cast<std::size_t>(below_degree));
  for (auto& c : v) c = FieldElem(dist(rng));
  return Poly(F, std::move(v));
}

// Splits f (monic, squarefree, all irreducible factors of degree d) into
// its irreducible factors.
void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const Field& F = f.field();
  const std::uint64_t q = F.order();
  const bool even = F.characteristic() == 2;
  while (true) {
    Poly a = random_poly(F, f.degree(), rng);
    if (a.degree() < 1) continue;
    Poly b(F);
    if (even) {
      // Absolute trace to F_2: a + a^2 + ... + a^{2^{kd-1}}.
      const unsigned steps = F.degree() * static_cast<unsigned>(d);
      Poly cur = a % f;
      b = cur;
      for (unsigned i = 1; i < steps; ++i) {
        cur = mulmod(cur, cur, f);
        b = b + cur;
      }
    } else {
      // a^{(q^d - 1)/2} = (a^{1 + q + ... + q^{d-1}})^{(q-1)/2}
      Poly cur = a % f;
      Poly norm = cur;
      for (int i = 1; i < d; ++i) {
        cur = powmod(cur, q, f);
        norm = mulmod(norm, cur, f);
      }
      b = powmod(norm, (q - 1) / 2, f) - Poly::constant(F, F.one());
    }
    if (b.is_zero()) continue;
    Poly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

Poly Factorization::expand(const Field& field) const {
  Poly acc = Poly::constant(field, unit);
  for (const auto& [p, e] : factors) acc = acc * pow(p, e);
  return acc;
}

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f) {
  if (!f.is_monic()) throw DomainError("squarefree_decomposition needs a monic polynomial");
  const Field& F = f.field();
  std::vector<std::pair<Poly, unsigned>> out;
  if (f.degree() == 0) return out;

  const Poly df = derivative(f);
  if (df.is_zero()) {
    for (auto& [s, m] : squarefree_decomposition(pth_root_poly(f)))
      out.emplace_back(std::move(s), m * F.characteristic());
    return out;
  }
  Poly c = gcd(f, df);
  Poly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (!z.is_one()) out.emplace_back(z, i);
    ++i;
    w = std::move(y);
    c = c / w;
  }
  if (!c.is_one()) {
    for (auto& [s, m] : squarefree_decomposition(pth_root_poly(c)))
      out.emplace_back(std::move(s), m * F.characteristic());
  }
  return out;
}

Factorization factor(const Poly& f, const FactorOptions& options) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  Factorization result{f.leading(), {}};
  const Poly m = monic(f);
  std::mt19937_64 rng(options.seed);
  std::map<Poly, unsigned> collected;
  for (const auto& [part, mult] : squarefree_decomposition(m)) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<Poly> irreducibles;
      equal_degree(block, d, rng, irreducibles);
      for (auto& r : irreducibles) collected[r] += mult;
    }
  }
  for (auto& [r, e] : collected) result.factors.emplace_back(r, e);
  return result;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const Poly m = monic(f);
  const Field& F = f.field();
  const Poly x = Poly::x(F);
  Poly h = x % m;
  for (int i = 1; 2 * i <= m.degree(); ++i) {
    h = powmod(h, F.order(), m);
    if (!gcd(h - x, m).is_one()) return false;
  }
  return true;
}

__extension__ typedef __int128 wide_int;

std::uint64_t count_irreducibles(const Field& field, int degree) {
  if (degree < 1) throw DomainError("count_irreducibles needs degree >= 1");
  wide_int total = 0;
  for (int e = 1; e <= degree; ++e) {
    if (degree % e != 0) continue;
    const int mu = moebius(e);
    if (mu == 0) continue;
    wide_int term = 1;
    for (int i = 0; i < degree / e; ++i) {
      term *= field.order();
      if (term > (wide_int{1} << 100)) throw DomainError("irreducible count overflows");
    }
    total += mu * term;
  }
  total /= degree;
  if (total > static_cast<wide_int>(UINT64_MAX)) throw DomainError("irreducible count overflows 64 bits");
  return static_cast<std::uint64_t>(total);
}

std::vector<Poly> monic_irreducibles(const Field& field, int degree) {
  std::vector<Poly> out;
  const std::uint64_t n = monic_count(field, degree);
  for (std::uint64_t r = 0; r < n; ++r) {
    Poly p = monic_from_rank(field, degree, r);
    if (is_irreducible(p)) out.push_back(std::move(p));
  }
  return out;
}

Field make_field(std::uint32_t p, unsigned k, const std::optional<Poly>& modulus) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (k < 1) throw DomainError("extension degree must be at least 1");
  const Field base = Field::prime(p);
  if (k == 1 && !modulus) return base;

  auto digits_of = [](const Poly& m) {
    std::vector<std::uint32_t> d;
    for (FieldElem c : m.coeffs()) d.push_back(c.code());
    return d;
  };

  std::optional<Poly> least;
  for (std::uint64_t r = 0; !least; ++r) {
    Poly cand = monic_from_rank(base, static_cast<int>(k), r);
    if (is_irreducible(cand)) least = std::move(cand);
  }
  if (!modulus) return intern_field(p, k, digits_of(*least), true);

  if (!(modulus->field() == base)) throw DomainError("modulus must have coefficients in GF(p)");
  if (modulus->degree() != static_cast<int>(k) || !modulus->is_monic())
    throw DomainError("modulus must be monic of degree " + std::to_string(k));
  if (!is_irreducible(*modulus)) throw DomainError("modulus is reducible over GF(p)");
  if (k == 1) return base;  // every monic linear modulus gives the same field
  return intern_field(p, k, digits_of(*modulus), *modulus == *least);
}

Poly modulus_poly(const Field& field) {
  const Field base = Field::prime(field.characteristic());
  std::vector<FieldElem> v;
  for (std::uint32_t d : field.modulus()) v.emplace_back(d);
  return Poly(base, std::move(v));
}

}  // namespace gcf
