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

#ifndef GCF_TEXT_HPP
#define GCF_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "gcf/factor.hpp"
#include "gcf/poly.hpp"

namespace gcf {

// Text grammar shared by the CLI and the test fixtures.
//
//   field   := "GF(" p ")" | "GF(" p "^" k ")" | "GF(" p "^" k ";mod=" tpoly ")"
//   poly    := term (("+" | "-") term)*
//   term    := coef | coef "*" X ["^" e] | X ["^" e]
//   coef    := integer | "(" tpoly ")" | "t" ["^" e]    (products with "*" allowed)
//
// Integers are reduced into the prime subfield; t-polynomials are reduced
// modulo the field's defining polynomial.  Whitespace is ignored.

Field parse_field(std::string_view text);
std::string format_field(const Field& field);

Poly parse_poly(const Field& field, std::string_view text);
std::string format_poly(const Poly& p);

FieldElem parse_elem(const Field& field, std::string_view text);
std::string format_elem(const Field& field, FieldElem a);

/// Splits "f1,f2,..." at top-level commas and parses each polynomial.
std::vector<Poly> parse_poly_list(const Field& field, std::string_view text);

/// "unit*(p1)^e1*(p2)..." with the unit omitted when it is 1.
std::string format_factorization(const Field& field, const Factorization& fac);

}  // namespace gcf

#endif  // GCF_TEXT_HPP
