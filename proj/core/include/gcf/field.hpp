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

#ifndef GCF_FIELD_HPP
#define GCF_FIELD_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gcf {

/// An element of a finite field F_{p^k}.
///
/// The element is stored as its base-p code: if the element is the residue
/// e_0 + e_1 t + ... + e_{k-1} t^{k-1} modulo the field's defining
/// polynomial, its code is e_0 + e_1 p + ... + e_{k-1} p^{k-1}.  Codes give
/// the canonical element order used throughout the library; code 0 is the
/// additive identity and code 1 the multiplicative identity.
class FieldElem {
 public:
  constexpr FieldElem() = default;
  constexpr explicit FieldElem(std::uint32_t code) : code_(code) {}

  constexpr std::uint32_t code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }
  constexpr bool is_one() const { return code_ == 1; }

  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;

 private:
  std::uint32_t code_ = 0;
};

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  unsigned k = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;
  bool default_modulus = true;
  // Full operation tables, only for q <= kTableLimit.
  bool tabled = false;
  std::vector<std::uint32_t> add_table;
  std::vector<std::uint32_t> mul_table;
  std::vector<std::uint32_t> neg_table;
  std::vector<std::uint32_t> inv_table;
  // Discrete log tables for extension fields (k > 1).
  std::vector<std::uint32_t> exp_table;
  std::vector<std::uint32_t> log_table;
  std::vector<std::uint32_t> pow_p;  // p^0 .. p^{k-1}

  static constexpr std::uint32_t kTableLimit = 256;

  std::uint32_t digitwise_add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0;
    for (unsigned i = 0; i < k; ++i) {
      std::uint32_t da = a % p, db = b % p;
      a /= p;
      b /= p;
      std::uint32_t s = da + db;
      if (s >= p) s -= p;
      out += s * pow_p[i];
    }
    return out;
  }
  std::uint32_t digitwise_neg(std::uint32_t a) const {
    std::uint32_t out = 0;
    for (unsigned i = 0; i < k; ++i) {
      std::uint32_t da = a % p;
      a /= p;
      out += (da == 0 ? 0 : p - da) * pow_p[i];
    }
    return out;
  }
};

}  // namespace detail

/// Handle to an immutable finite field F_{p^k}.
///
/// Fields are interned: two handles compare equal iff they describe the same
/// (p, k, modulus).  Handles are cheap to copy and safe to share across
/// threads.  Use make_field() (poly.hpp) to construct one with validation.
class Field {
 public:
  /// The prime field GF(p).  Throws DomainError if p is not prime.
  static Field prime(std::uint32_t p);

  std::uint32_t characteristic() const;
  unsigned degree() const;
  /// Number of elements q = p^k.
  std::uint32_t order() const;
  /// Defining polynomial over F_p, constant term first, leading 1 included.
  /// For k = 1 this is {0, 1} (the polynomial t).
  std::span<const std::uint32_t> modulus() const;
  /// True when the modulus is the canonically least irreducible one.
  bool has_default_modulus() const;

  FieldElem zero() const { return FieldElem(0); }
  FieldElem one() const { return FieldElem(1); }
  /// The element with the given canonical code; throws if code >= q.
  FieldElem element(std::uint32_t code) const;
  /// Image of an integer under Z -> F_p -> F.
  FieldElem from_int(long long v) const;
  /// The generator t of the extension (X for k = 1 is just 0 + 1t, so this
  /// throws for prime fields).
  FieldElem generator() const;

  FieldElem add(FieldElem a, FieldElem b) const {
    const auto& d = *d_;
    if (d.tabled) return FieldElem(d.add_table[a.code() * d.q + b.code()]);
    if (d.k == 1) {
      std::uint32_t s = a.code() + b.code();
      return FieldElem(s >= d.p ? s - d.p : s);
    }
    return FieldElem(d.digitwise_add(a.code(), b.code()));
  }
  FieldElem neg(FieldElem a) const {
    const auto& d = *d_;
    if (d.tabled) return FieldElem(d.neg_table[a.code()]);
    if (d.k == 1) return FieldElem(a.code() == 0 ? 0 : d.p - a.code());
    return FieldElem(d.digitwise_neg(a.code()));
  }
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  FieldElem mul(FieldElem a, FieldElem b) const {
    const auto& d = *d_;
    if (d.tabled) return FieldElem(d.mul_table[a.code() * d.q + b.code()]);
    if (d.k == 1)
      return FieldElem(static_cast<std::uint32_t>(
          static_cast<std::uint64_t>(a.code()) * b.code() % d.p));
    if (a.is_zero() || b.is_zero()) return FieldElem(0);
    std::uint32_t e = d.log_table[a.code()] + d.log_table[b.code()];
    if (e >= d.q - 1) e -= d.q - 1;
    return FieldElem(d.exp_table[e]);
  }
  /// Throws DomainError on zero.
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, std::uint64_t e) const;
  /// Inverse of the Frobenius map x -> x^p.
  FieldElem pth_root(FieldElem a) const;

  /// Base-p digits of an element (length k, constant first).
  std::vector<std::uint32_t> digits(FieldElem a) const;
  FieldElem from_digits(std::span<const std::uint32_t> digits) const;
  bool in_prime_subfield(FieldElem a) const { return a.code() < characteristic(); }

  /// All elements in canonical order, starting at zero.
  std::vector<FieldElem> elements() const;

  friend bool operator==(const Field& a, const Field& b) { return a.d_ == b.d_; }

 private:
  explicit Field(const detail::FieldData* d) : d_(d) {}
  friend Field intern_field(std::uint32_t, unsigned, std::vector<std::uint32_t>, bool);

  const detail::FieldData* d_;
};

/// Registers (or looks up) the field F_p[t]/(modulus).  The modulus must
/// already be known to be monic irreducible of degree k over F_p; no check is
/// made here.  Prefer make_field().
Field intern_field(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus,
                   bool is_default_modulus);

bool is_prime(std::uint64_t n);

/// Hard limits on supported field sizes.
inline constexpr std::uint32_t kMaxPrime = (1u << 31) - 1;
inline constexpr std::uint32_t kMaxExtensionOrder = 1u << 20;

}  // namespace gcf

#endif  // GCF_FIELD_HPP
