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

#include "gcf/omega.hpp"

#include "gcf/error.hpp"

namespace gcf {

OmegaElement omega_identity(const Field& field) { return {field.one(), field.zero()}; }

OmegaElement omega_mul(const Field& field, const OmegaElement& m, const OmegaElement& n) {
  return {field.mul(m.a, n.a), field.add(field.mul(m.a, n.b), m.b)};
}

Poly omega_act(const OmegaElement& m, const Poly& f) {
  const Field& F = f.field();
  if (m.a.is_zero()) throw DomainError("Omega element needs a != 0");
  if (f.is_zero()) return f;
  const Poly lin(F, {m.b, m.a});
  const FieldElem s = F.pow(F.inv(m.a), static_cast<std::uint64_t>(f.degree()));
  return scale(compose(f, lin), s);
}

Stabilizers stabilizers(const Poly& f) {
  const Field& F = f.field();
  if (f.is_zero()) throw DomainError("stabilizers of the zero polynomial");
  Stabilizers out;
  for (FieldElem b : F.elements())
    if (omega_act({F.one(), b}, f) == f) out.additive.push_back(b);
  for (FieldElem a : F.elements())
    if (!a.is_zero() && omega_act({a, F.zero()}, f) == f) out.multiplicative.push_back(a);
  return out;
}

std::set<Poly> omega_orbit(const Poly& f) {
  const Field& F = f.field();
  std::set<Poly> out;
  for (FieldElem a : F.elements()) {
    if (a.is_zero()) continue;
    for (FieldElem b : F.elements()) out.insert(omega_act({a, b}, f));
  }
  return out;
}

std::optional<Conjugate> pick_fresh_conjugate(const Poly& p, const std::set<Poly>& used) {
  const Field& F = p.field();
  const Stabilizers st = stabilizers(p);
  if (st.additive_trivial()) {
    for (FieldElem b : F.elements()) {
      const OmegaElement m{F.one(), b};
      Poly r = omega_act(m, p);
      if (!used.contains(r)) return Conjugate{std::move(r), m};
    }
    return std::nullopt;
  }
  if (st.multiplicative_trivial()) {
    for (FieldElem a : F.elements()) {
      if (a.is_zero()) continue;
      const OmegaElement m{a, F.zero()};
      Poly r = omega_act(m, p);
      if (!used.contains(r)) return Conjugate{std::move(r), m};
    }
    return std::nullopt;
  }
  throw InternalError("both stabilizers nontrivial for " + std::to_string(p.degree()) +
                      "-degree polynomial; is it irreducible?");
}

std::map<Poly, std::size_t> ell_table(const ElementaryDivisors& eds) {
  std::map<Poly, std::size_t> out;
  for (const auto& [p, exps] : eds.parts()) {
    const std::set<Poly> orbit = omega_orbit(p);
    std::size_t ell = 0;
    for (const auto& [other, other_exps] : eds.parts())
      if (orbit.contains(other)) ell += other_exps.size();
    out.emplace(p, ell);
  }
  return out;
}

}  // namespace gcf
