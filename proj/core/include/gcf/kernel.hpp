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

#ifndef GCF_KERNEL_HPP
#define GCF_KERNEL_HPP

#include <cstddef>
#include <vector>

#include "gcf/matrix.hpp"
#include "gcf/poly.hpp"

namespace gcf {

/// The null space of y(g(C_f)) described through polynomials:
/// z = gcd(y(g(X)), f), h = f / z and the basis [h], [Xh], ..., [X^{d-1}h].
struct KernelDescription {
  Poly z;
  std::size_t d;
  Poly h;
  std::vector<Vector> basis;
};

/// Null space of y(g(C_f)) without building the matrix.  f must be monic of
/// degree >= 1.  With y = X this is the null space of g(C_f); with g = X and
/// y = (X - a)^i it is a generalized eigenspace of C_f.
KernelDescription kernel_description(const Poly& y, const Poly& g, const Poly& f);

/// d_i = dim V(p^i, A) / deg p for i = 1, 2, ..., stopping after the first
/// i with d_i = d_{i-1} (d_0 = 0).  p must be irreducible.
std::vector<std::size_t> nullity_sequence(const Matrix& a, const Poly& p);

/// Dimension of the span of {C^i D^j : 0 <= i, j < n} for the companion
/// matrices C = C_f and D = C_g of two monic polynomials of equal degree n,
/// computed by row reduction.
std::size_t span_dimension_cd(const Poly& f, const Poly& g);
/// n + (n - m)(n - 1) with m = deg gcd(f, g).
std::size_t predicted_span_dimension(const Poly& f, const Poly& g);

}  // namespace gcf

#endif  // GCF_KERNEL_HPP
