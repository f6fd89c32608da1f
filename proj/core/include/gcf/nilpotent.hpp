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

#ifndef GCF_NILPOTENT_HPP
#define GCF_NILPOTENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "gcf/matrix.hpp"
#include "gcf/polytype.hpp"
#include "gcf/witness.hpp"

namespace gcf {

/// Jordan type of a nilpotent matrix: c(i) blocks J_i(0) for each i >= 1.
class NilpotentProfile {
 public:
  static NilpotentProfile from_blocks(const std::vector<std::size_t>& sizes);
  static NilpotentProfile from_counts(const std::map<std::size_t, std::size_t>& counts);
  /// s_i = dim ker N^i for i = 1 .. t, t the largest block.
  static NilpotentProfile from_nullities(const std::vector<std::size_t>& s);
  /// "1,3,5": block sizes.
  static NilpotentProfile parse(std::string_view text);

  std::size_t size() const;
  std::size_t count(std::size_t i) const;
  const std::map<std::size_t, std::size_t>& counts() const { return c_; }
  /// Block sizes ascending.
  std::vector<std::size_t> blocks() const;
  std::size_t largest() const;
  /// Number of j with c(j) = c(i) (j over sizes that occur).
  std::size_t r(std::size_t i) const;
  std::vector<std::size_t> nullities() const;
  /// Direct sum of the Jordan blocks in ascending order.
  Matrix matrix(const Field& field) const;

  friend bool operator==(const NilpotentProfile&, const NilpotentProfile&) = default;

 private:
  std::map<std::size_t, std::size_t> c_;  // only nonzero counts
};

/// (d, a, b): an irreducible r of degree d with r^a | f exactly and r^b | g.
struct NilpotentTriple {
  std::size_t d;
  std::size_t a;
  std::size_t b;

  friend auto operator<=>(const NilpotentTriple&, const NilpotentTriple&) = default;
};

struct NilpotentResult {
  Verdict verdict = Verdict::No;
  std::optional<Witness> witness;
  /// Set when the triple system was searched; the solution if any.
  std::optional<std::vector<NilpotentTriple>> solution;
  /// Partial assignments visited by the search.
  std::uint64_t nodes = 0;
};

/// Is the nilpotent matrix of this type similar to some g(C_f)?  Tries
/// distinct irreducibles q_i with f = prod q_i^i, g = prod q_i first, then
/// the triple system.  The search is exhaustive, so No is a proof.
NilpotentResult nilpotent_decide(const Field& field, const NilpotentProfile& profile);

/// A multiset of triples with sum of a d equal to n, sum of min(i b, a) d
/// equal to s_i for every i, and at most N(d) triples of degree d (N(d)
/// the number of monic irreducibles of degree d).  Sorted descending.
std::optional<std::vector<NilpotentTriple>> solve_nilpotent_system(const Field& field,
                                                                   const NilpotentProfile& profile,
                                                                   std::uint64_t* nodes = nullptr);

}  // namespace gcf

#endif  // GCF_NILPOTENT_HPP
