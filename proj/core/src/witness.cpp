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

#include "gcf/witness.hpp"

#include <set>
#include <utility>
#include <vector>

#include "gcf/error.hpp"
#include "gcf/simtype.hpp"

namespace gcf {

namespace {

Poly linear(const Field& F, FieldElem root) { return Poly(F, {F.neg(root), F.one()}); }

bool all_linear(const ElementaryDivisors& eds) {
  for (const auto& [p, exps] : eds.parts())
    if (p.degree() != 1) return false;
  return true;
}

FieldElem root_of(const Poly& linear_poly) {
  const Field& F = linear_poly.field();
  return F.neg(linear_poly.coeff(0));
}

}  // namespace

bool verify_witness(const Matrix& a, const Witness& w) {
  if (w.f.degree() < 1 || static_cast<std::size_t>(w.f.degree()) != a.size()) return false;
  return similar(a, evaluate_poly(w.g, companion(w.f)));
}

Witness shift_witness(const Witness& w, FieldElem c) {
  return {w.f, w.g + Poly::constant(w.f.field(), c), w.strategy};
}

Matrix build_commuting_cyclic(const Poly& p, unsigned i, unsigned k) {
  const Field& F = p.field();
  if (i == 0 || k == 0) throw DomainError("build_commuting_cyclic needs i, k >= 1");
  const Poly f = pow(p, i);
  if (f.coeff(0).is_zero()) throw DomainError("build_commuting_cyclic needs p(0) != 0");
  const Matrix c = companion(f);
  const std::size_t m = c.size();
  Matrix b = Matrix::square(F, m * k);
  for (unsigned blk = 0; blk < k; ++blk)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t s = 0; s < m; ++s) {
        b(blk * m + r, blk * m + s) = c(r, s);
        if (blk + 1 < k) b(blk * m + r, (blk + 1) * m + s) = c(r, s);
      }
  return b;
}

std::optional<Poly> polynomial_in(const Matrix& b, const Matrix& target) {
  const Field& F = b.field();
  const std::size_t n = b.size();
  if (target.size() != n) throw DomainError("polynomial_in: size mismatch");
  Matrix sys(F, n * n, n);
  Matrix power = Matrix::identity(F, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) sys(r * n + s, j) = power(r, s);
    power = power * b;
  }
  Vector rhs(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) rhs[r * n + s] = target(r, s);
  const auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  return Poly(F, *sol);
}

std::optional<Witness> witness_diagonalizable(const Field& field, const ElementaryDivisors& eds) {
  if (eds.empty() || !all_linear(eds)) return std::nullopt;
  std::vector<std::pair<Poly, Poly>> system;
  for (const auto& [p, exps] : eds.parts()) {
    for (unsigned e : exps)
      if (e != 1) return std::nullopt;
    system.emplace_back(Poly::constant(field, root_of(p)),
                        pow(p, static_cast<unsigned>(exps.size())));
  }
  Poly f = Poly::constant(field, field.one());
  for (const auto& [g, m] : system) f *= m;
  return Witness{f, crt(system), "diagonalizable"};
}

std::optional<Witness> witness_square_plus_linear(const Field& field, const ElementaryDivisors& eds) {
  if (eds.empty() || !all_linear(eds)) return std::nullopt;
  const Poly* special = nullptr;
  for (const auto& [p, exps] : eds.parts()) {
    for (unsigned e : exps) {
      if (e == 1) continue;
      if (e != 2 || special != nullptr) return std::nullopt;
      special = &p;
    }
  }
  if (special == nullptr) return std::nullopt;
  const FieldElem a1 = root_of(*special);
  const auto m = static_cast<unsigned>(eds.exponents(*special).size() - 1);

  std::vector<std::pair<Poly, Poly>> system;
  const Poly X = Poly::x(field);
  system.emplace_back(pow(X, m + 1) + Poly::constant(field, a1), pow(X, m + 2));
  // the remaining eigenvalues get moduli at the first nonzero elements
  std::vector<FieldElem> nonzero;
  for (FieldElem c : field.elements())
    if (!c.is_zero()) nonzero.push_back(c);
  std::size_t next = 0;
  for (const auto& [p, exps] : eds.parts()) {
    if (&p == special) continue;
    if (next >= nonzero.size()) return std::nullopt;
    system.emplace_back(Poly::constant(field, root_of(p)),
                        pow(linear(field, nonzero[next++]), static_cast<unsigned>(exps.size())));
  }
  Poly f = Poly::constant(field, field.one());
  for (const auto& [g, mod] : system) f *= mod;
  return Witness{f, crt(system), "square-plus-linear"};
}

std::optional<Witness> witness_homogeneous(const Field& field, const ElementaryDivisors& eds) {
  if (eds.empty()) return std::nullopt;
  const Poly X = Poly::x(field);
  for (const auto& [p, exps] : eds.parts())
    for (unsigned e : exps)
      if (e != exps.front()) return std::nullopt;

  std::vector<std::pair<Poly, Poly>> system;
  Poly f = Poly::constant(field, field.one());
  // Adds the local witness (fj, gj), moved by an affine substitution when
  // fj meets the moduli placed so far.  C_fj ~ a C_{fj^M} + b.
  auto place = [&](const Poly& fj, const Poly& gj) {
    for (FieldElem a : field.elements()) {
      if (a.is_zero()) continue;
      for (FieldElem b : field.elements()) {
        const Poly fm = omega_act({a, b}, fj);
        if (!gcd(fm, f).is_one()) continue;
        system.emplace_back(compose(gj, Poly(field, {b, a})) % fm, fm);
        f *= fm;
        return true;
      }
    }
    return false;
  };

  for (const auto& [p, exps] : eds.parts()) {
    const unsigned i = exps.front();
    const auto k = static_cast<unsigned>(exps.size());
    if (!p.coeff(0).is_zero() && (i == 1 || k == 1)) {
      // C_{p^i} + ... + C_{p^i} commutes with the cyclic block matrix B
      const Matrix b = build_commuting_cyclic(p, i, k);
      const Matrix target = direct_sum(std::vector<Matrix>(k, companion(pow(p, i))));
      auto g = polynomial_in(b, target);
      if (!g) throw InternalError("homogeneous construction: target not a polynomial in B");
      if (!place(pow(p, i * k), *g)) return std::nullopt;
    } else {
      // X^k at the companion matrix of p^i(X^k) gives k copies of C_{p^i}
      const Poly gk = pow(X, k);
      if (!place(inflate(pow(p, i), gk), gk)) return std::nullopt;
    }
  }
  return Witness{f, crt(system), "homogeneous"};
}

std::optional<Witness> witness_jordan(const Field& field, const ElementaryDivisors& eds) {
  if (eds.empty() || !all_linear(eds)) return std::nullopt;
  if (eds.count() > field.order()) return std::nullopt;
  std::vector<Matrix> d_blocks, a_blocks;
  Poly f = Poly::constant(field, field.one());
  std::uint32_t next = 0;
  for (const auto& [p, exps] : eds.parts()) {
    const FieldElem a = root_of(p);
    for (unsigned e : exps) {
      const FieldElem b = field.element(next++);
      d_blocks.push_back(jordan_block(field, b, e));
      a_blocks.push_back(jordan_block(field, a, e));
      f *= pow(linear(field, b), e);
    }
  }
  const Matrix d = direct_sum(d_blocks);
  const Matrix target = direct_sum(a_blocks);
  auto g = polynomial_in(d, target);
  if (!g) throw InternalError("jordan construction: target not a polynomial in D");
  return Witness{f, *g, "jordan"};
}

std::optional<Witness> witness_conjugates(const Field& field, const ElementaryDivisors& eds) {
  if (eds.empty()) return std::nullopt;
  const std::uint64_t q = field.order();
  const auto ell = ell_table(eds);
  for (const auto& [p, exps] : eds.parts()) {
    const Stabilizers st = stabilizers(p);
    const std::uint64_t room = st.additive_trivial() ? q : q - 1;
    if (ell.at(p) > room) return std::nullopt;
  }
  std::set<Poly> used;
  std::vector<std::pair<Poly, Poly>> system;
  Poly f = Poly::constant(field, field.one());
  for (const auto& [p, exps] : eds.parts()) {
    for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
      auto conj = pick_fresh_conjugate(p, used);
      if (!conj) throw InternalError("conjugate construction ran out of conjugates");
      used.insert(conj->r);
      const Poly mod = pow(conj->r, *it);
      system.emplace_back(Poly(field, {conj->m.b, conj->m.a}), mod);
      f *= mod;
    }
  }
  return Witness{f, crt(system), "conjugates"};
}

}  // namespace gcf
