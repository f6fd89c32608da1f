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

#include "gcf/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "gcf/error.hpp"

namespace gcf {

namespace {

using Digits = std::vector<std::uint32_t>;

// Multiplication of two residues modulo a monic modulus over F_p, on digit
// vectors.  Only used while building the tables of a new field.
Digits raw_mulmod(const Digits& a, const Digits& b, const Digits& modulus, std::uint32_t p) {
  const std::size_t k = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  for (std::size_t top = 2 * k - 1; top >= k; --top) {
    const std::uint64_t c = prod[top];
    if (c == 0) continue;
    prod[top] = 0;
    for (std::size_t i = 0; i < k; ++i)
      prod[top - k + i] = (prod[top - k + i] + (p - c) * modulus[i]) % p;
  }
  Digits out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

Digits to_digits(std::uint32_t code, std::uint32_t p, unsigned k) {
  Digits d(k);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

std::uint32_t from_digit_vector(const Digits& d, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
  return code;
}

void build_log_tables(detail::FieldData& d) {
  const std::uint32_t q = d.q;
  d.exp_table.assign(q - 1, 0);
  d.log_table.assign(q, 0);
  for (std::uint32_t cand = 2; cand < q; ++cand) {
    const Digits g = to_digits(cand, d.p, d.k);
    Digits cur = to_digits(1, d.p, d.k);
    bool primitive = true;
    for (std::uint32_t e = 0; e < q - 1; ++e) {
      const std::uint32_t code = from_digit_vector(cur, d.p);
      if (e > 0 && code == 1) {
        primitive = false;
        break;
      }
      d.exp_table[e] = code;
      cur = raw_mulmod(cur, g, d.modulus, d.p);
    }
    if (primitive && from_digit_vector(cur, d.p) == 1) {
      for (std::uint32_t e = 0; e < q - 1; ++e) d.log_table[d.exp_table[e]] = e;
      return;
    }
  }
  throw InternalError("no primitive element found; modulus is not irreducible");
}

std::uint32_t slow_mul(const detail::FieldData& d, std::uint32_t a, std::uint32_t b) {
  if (d.k == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % d.p);
  if (a == 0 || b == 0) return 0;
  std::uint32_t e = d.log_table[a] + d.log_table[b];
  if (e >= d.q - 1) e -= d.q - 1;
  return d.exp_table[e];
}

std::uint32_t slow_pow(const detail::FieldData& d, std::uint32_t a, std::uint64_t e) {
  std::uint32_t result = 1;
  while (e > 0) {
    if (e & 1) result = slow_mul(d, result, a);
    a = slow_mul(d, a, a);
    e >>= 1;
  }
  return result;
}

std::unique_ptr<detail::FieldData> build_field(std::uint32_t p, unsigned k, Digits modulus,
                                               bool is_default) {
  auto d = std::make_unique<detail::FieldData>();
  d->p = p;
  d->k = k;
  d->modulus = std::move(modulus);
  d->default_modulus = is_default;
  std::uint64_t q = 1;
  d->pow_p.resize(k);
  for (unsigned i = 0; i < k; ++i) {
    d->pow_p[i] = static_cast<std::uint32_t>(q);
    q *= p;
    if (k > 1 && q > kMaxExtensionOrder) throw DomainError("extension field too large (q > 2^20)");
  }
  d->q = static_cast<std::uint32_t>(q);
  if (k > 1) build_log_tables(*d);

  if (d->q <= detail::FieldData::kTableLimit) {
    const std::uint32_t n = d->q;
    d->add_table.resize(std::size_t{n} * n);
    d->mul_table.resize(std::size_t{n} * n);
    d->neg_table.resize(n);
    d->inv_table.assign(n, 0);
    for (std::uint32_t a = 0; a < n; ++a) {
      d->neg_table[a] = k == 1 ? (a == 0 ? 0 : p - a) : d->digitwise_neg(a);
      for (std::uint32_t b = 0; b < n; ++b) {
        d->add_table[a * n + b] = k == 1 ? (a + b) % p : d->digitwise_add(a, b);
        d->mul_table[a * n + b] = slow_mul(*d, a, b);
      }
      if (a != 0) d->inv_table[a] = slow_pow(*d, a, n - 2);
    }
    d->tabled = true;
  }
  return d;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field intern_field(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus,
                   bool is_default_modulus) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, unsigned, Digits>, std::unique_ptr<detail::FieldData>>
      registry;

  if (!is_prime(p) || p > kMaxPrime) throw DomainError("characteristic " + std::to_string(p) + " is not a supported prime");
  if (k < 1) throw DomainError("extension degree must be at least 1");
  if (modulus.size() != k + 1 || modulus.back() != 1)
    throw DomainError("modulus must be monic of degree " + std::to_string(k));

  std::lock_guard lock(mu);
  auto key = std::make_tuple(p, k, modulus);
  auto it = registry.find(key);
  if (it == registry.end())
    it = registry.emplace(std::move(key), build_field(p, k, std::move(modulus), is_default_modulus)).first;
  return Field(it->second.get());
}

Field Field::prime(std::uint32_t p) { return intern_field(p, 1, {0, 1}, true); }

std::uint32_t Field::characteristic() const { return d_->p; }
unsigned Field::degree() const { return d_->k; }
std::uint32_t Field::order() const { return d_->q; }
std::span<const std::uint32_t> Field::modulus() const { return d_->modulus; }
bool Field::has_default_modulus() const { return d_->default_modulus; }

FieldElem Field::element(std::uint32_t code) const {
  if (code >= d_->q) throw DomainError("element code out of range");
  return FieldElem(code);
}

FieldElem Field::from_int(long long v) const {
  const long long p = d_->p;
  long long r = v % p;
  if (r < 0) r += p;
  return FieldElem(static_cast<std::uint32_t>(r));
}

FieldElem Field::generator() const {
  if (d_->k == 1) throw DomainError("prime field has no generator t");
  return FieldElem(d_->p);
}

FieldElem Field::inv(FieldElem a) const {
  if (a.is_zero()) throw DomainError("division by zero in field");
  const auto& d = *d_;
  if (d.tabled) return FieldElem(d.inv_table[a.code()]);
  if (d.k == 1) return FieldElem(slow_pow(d, a.code(), d.p - 2));
  const std::uint32_t l = d.log_table[a.code()];
  return FieldElem(d.exp_table[l == 0 ? 0 : d.q - 1 - l]);
}

FieldElem Field::pow(FieldElem a, std::uint64_t e) const {
  FieldElem result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

FieldElem Field::pth_root(FieldElem a) const {
  if (d_->k == 1) return a;
  return pow(a, d_->q / d_->p);
}

std::vector<std::uint32_t> Field::digits(FieldElem a) const { return to_digits(a.code(), d_->p, d_->k); }

FieldElem Field::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() > d_->k) throw DomainError("too many digits for field element");
  std::uint32_t code = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= d_->p) throw DomainError("digit out of range");
    code = code * d_->p + digits[i];
  }
  return FieldElem(code);
}

std::vector<FieldElem> Field::elements() const {
  std::vector<FieldElem> out;
  out.reserve(d_->q);
  for (std::uint32_t c = 0; c < d_->q; ++c) out.emplace_back(c);
  return out;
}

}  // namespace gcf
