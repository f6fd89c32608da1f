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

#ifndef GCF_POLYTYPE_HPP
#define GCF_POLYTYPE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "gcf/divisors.hpp"
#include "gcf/matrix.hpp"
#include "gcf/witness.hpp"

namespace gcf {

enum class Verdict { Yes, No, Unknown };

std::string to_string(Verdict v);

inline constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t{1} << 24;

struct SearchStats {
  /// q^n * q^n candidate pairs (f monic of degree n, deg g < n); saturates
  /// at UINT64_MAX.
  std::uint64_t total = 0;
  /// Pairs accounted for, pruned ones included.
  std::uint64_t examined = 0;
  /// Pairs skipped because f cannot produce the target type.
  std::uint64_t pruned = 0;
  std::uint64_t budget = 0;
  double elapsed_ms = 0;
};

struct PolytypeResult {
  Verdict verdict = Verdict::Unknown;
  /// Set iff verdict is Yes; always verified.
  std::optional<Witness> witness;
  /// Set iff the brute-force search ran.
  std::optional<SearchStats> search;
};

struct SearchOptions {
  std::uint64_t budget = kDefaultSearchBudget;
  /// Worker threads for the search; the result does not depend on it.
  unsigned threads = 1;
};

/// Exhaustive search over (f, g) in canonical order.  Yes at the first hit,
/// No once every pair is covered, Unknown when the budget runs out first.
PolytypeResult brute_force(const Matrix& a, const SearchOptions& options = {});

/// Is A similar to g(C_f) for some f, g?  Constructions first, then search.
PolytypeResult polytype_decide(const Matrix& a, const SearchOptions& options = {});

/// J_3(0) + J_1(0) + J_1(a_2) + ... + J_1(a_q), the a_i the nonzero
/// elements in canonical order; size q + 3.
Matrix counterexample_matrix(const Field& field);

/// key=value lines describing a search, one per line.  elapsed_ms only when
/// with_timing is set.
std::string format_certificate(const Field& field, std::size_t n, Verdict verdict,
                               const SearchStats& stats, bool with_timing);

}  // namespace gcf

#endif  // GCF_POLYTYPE_HPP
