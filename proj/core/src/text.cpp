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

#include "gcf/text.hpp"

#include <cctype>
#include <charconv>
#include <functional>
#include <optional>

#include "gcf/error.hpp"

namespace gcf {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at_end() {
    skip_ws();
    return i_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  // Next significant character after the current one.
  char peek_after() {
    skip_ws();
    std::size_t j = i_ + 1;
    while (j < s_.size() && std::isspace(static_cast<unsigned char>(s_[j]))) ++j;
    return j < s_.size() ? s_[j] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (s_.substr(i_, w.size()) != w) return false;
    i_ += w.size();
    return true;
  }
  unsigned long long number() {
    skip_ws();
    unsigned long long v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + i_, s_.data() + s_.size(), v);
    if (ec != std::errc() || ptr == s_.data() + i_) fail("expected a number");
    i_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(i_) + " in \"" + std::string(s_) + "\"");
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

struct Term {
  FieldElem coef;
  std::size_t exponent;
};

std::size_t parse_power(Cursor& cur) {
  if (!cur.accept('^')) return 1;
  const auto e = cur.number();
  if (e > 100000) cur.fail("exponent too large");
  return static_cast<std::size_t>(e);
}

// Sum of terms in variable `var`; `coef` parses one coefficient factor.
template <class CoefFn>
Poly parse_sum(const Field& F, Cursor& cur, char var, CoefFn&& coef) {
  Poly acc(F);
  bool negate = false;
  if (cur.accept('-')) negate = true;
  else cur.accept('+');
  while (true) {
    FieldElem c = F.one();
    std::size_t e = 0;
    if (cur.peek() == var) {
      cur.accept(var);
      e = parse_power(cur);
    } else {
      c = coef(cur);
      // further coefficient factors, or "*X^e"
      while (cur.peek() == '*') {
        if (cur.peek_after() == var) {
          cur.accept('*');
          cur.accept(var);
          e = parse_power(cur);
          break;
        }
        cur.accept('*');
        c = F.mul(c, coef(cur));
      }
      if (e == 0 && cur.peek() == var) {  // juxtaposition "2X"
        cur.accept(var);
        e = parse_power(cur);
      }
    }
    if (negate) c = F.neg(c);
    acc += Poly::monomial(F, c, e);
    if (cur.accept('+')) negate = false;
    else if (cur.accept('-')) negate = true;
    else break;
  }
  return acc;
}

Poly parse_tpoly(const Field& base, Cursor& cur) {
  return parse_sum(base, cur, 't', [&](Cursor& c) -> FieldElem {
    if (c.accept('(')) {
      Poly inner = parse_tpoly(base, c);
      c.expect(')');
      if (inner.degree() > 0) c.fail("nested t-polynomial must be constant");
      return inner.coeff(0);
    }
    if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected an integer coefficient");
    return base.from_int(static_cast<long long>(c.number() % base.characteristic()));
  });
}

FieldElem tpoly_to_elem(const Field& F, const Poly& t) {
  const Poly m = modulus_poly(F);
  const Poly r = t % m;
  std::vector<std::uint32_t> digits;
  for (FieldElem c : r.coeffs()) digits.push_back(c.code());
  return F.from_digits(digits);
}

FieldElem parse_coef(const Field& F, Cursor& cur) {
  const Field base = Field::prime(F.characteristic());
  if (cur.accept('(')) {
    FieldElem v;
    if (F.degree() == 1) {
      Poly inner = parse_sum(F, cur, 't', [&](Cursor& c) { return parse_coef(F, c); });
      if (inner.degree() > 0) cur.fail("'t' is not defined over a prime field");
      v = inner.coeff(0);
    } else {
      v = tpoly_to_elem(F, parse_tpoly(base, cur));
    }
    cur.expect(')');
    return v;
  }
  if (cur.peek() == 't') {
    if (F.degree() == 1) cur.fail("'t' is not defined over a prime field");
    cur.accept('t');
    const std::size_t e = parse_power(cur);
    return F.pow(F.generator(), e);
  }
  if (!std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.fail("expected a coefficient");
  return F.from_int(static_cast<long long>(cur.number() % F.characteristic()));
}

std::string format_sum(const Poly& p, char var, const std::function<std::string(FieldElem)>& coef) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const FieldElem c = p.coeffs()[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += '+';
    std::string mono;
    if (i >= 1) {
      mono = var;
      if (i > 1) mono += '^' + std::to_string(i);
    }
    if (i == 0) out += coef(c);
    else if (c.is_one()) out += mono;
    else out += coef(c) + '*' + mono;
  }
  return out;
}

}  // namespace

Field parse_field(std::string_view text) {
  Cursor cur(text);
  if (!cur.accept_word("GF")) cur.fail("field must start with GF");
  cur.expect('(');
  const auto p = cur.number();
  unsigned long long k = 1;
  if (cur.accept('^')) k = cur.number();
  if (p > kMaxPrime || k > 64) cur.fail("field too large");
  std::optional<Poly> modulus;
  if (cur.accept(';')) {
    if (!cur.accept_word("mod")) cur.fail("expected 'mod='");
    cur.expect('=');
    if (!is_prime(p)) cur.fail(std::to_string(p) + " is not prime");
    modulus = parse_tpoly(Field::prime(static_cast<std::uint32_t>(p)), cur);
  }
  cur.expect(')');
  if (!cur.at_end()) cur.fail("trailing characters after field");
  if (!is_prime(p)) throw ParseError(std::to_string(p) + " is not prime (write GF(p^k) for prime powers)");
  try {
    return make_field(static_cast<std::uint32_t>(p), static_cast<unsigned>(k), modulus);
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid field: ") + e.what());
  }
}

std::string format_field(const Field& field) {
  std::string out = "GF(" + std::to_string(field.characteristic());
  if (field.degree() > 1) {
    out += '^' + std::to_string(field.degree());
    if (!field.has_default_modulus()) {
      const Poly m = modulus_poly(field);
      out += ";mod=" + format_sum(m, 't', [](FieldElem c) { return std::to_string(c.code()); });
    }
  }
  return out + ')';
}

Poly parse_poly(const Field& field, std::string_view text) {
  Cursor cur(text);
  if (cur.at_end()) cur.fail("empty polynomial");
  Poly p = parse_sum(field, cur, 'X', [&](Cursor& c) { return parse_coef(field, c); });
  if (!cur.at_end()) cur.fail("unexpected character");
  return p;
}

std::string format_poly(const Poly& p) {
  const Field& F = p.field();
  return format_sum(p, 'X', [&](FieldElem c) { return format_elem(F, c); });
}

FieldElem parse_elem(const Field& field, std::string_view text) {
  Cursor cur(text);
  if (cur.at_end()) cur.fail("empty field element");
  bool negate = cur.accept('-');
  FieldElem v = parse_coef(field, cur);
  while (cur.accept('*')) v = field.mul(v, parse_coef(field, cur));
  if (!cur.at_end()) cur.fail("unexpected character in field element");
  return negate ? field.neg(v) : v;
}

std::string format_elem(const Field& field, FieldElem a) {
  if (field.in_prime_subfield(a)) return std::to_string(a.code());
  const Field base = Field::prime(field.characteristic());
  std::vector<FieldElem> coeffs;
  for (std::uint32_t d : field.digits(a)) coeffs.emplace_back(d);
  const Poly t(base, std::move(coeffs));
  const std::string body = format_sum(t, 't', [](FieldElem c) { return std::to_string(c.code()); });
  // A lone monic monomial needs no parentheses.
  std::size_t nonzero = 0;
  for (FieldElem c : t.coeffs()) nonzero += !c.is_zero();
  if (nonzero == 1 && t.leading().is_one()) return body;
  return '(' + body + ')';
}

std::vector<Poly> parse_poly_list(const Field& field, std::string_view text) {
  std::vector<Poly> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back(parse_poly(field, text.substr(start, i - start)));
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  return out;
}

std::string format_factorization(const Field& field, const Factorization& fac) {
  std::string out;
  if (!fac.unit.is_one() || fac.factors.empty()) out = format_elem(field, fac.unit);
  for (const auto& [p, e] : fac.factors) {
    if (!out.empty()) out += '*';
    out += '(' + format_poly(p) + ')';
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace gcf
