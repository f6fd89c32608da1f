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

#include "gcf/nilpotent.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <string>

#include "gcf/error.hpp"
#include "gcf/factor.hpp"
#include "gcf/simtype.hpp"

namespace gcf {

NilpotentProfile NilpotentProfile::from_counts(const std::map<std::size_t, std::size_t>& counts) {
  NilpotentProfile p;
  for (const auto& [i, c] : counts) {
    if (i == 0) throw DomainError("nilpotent blocks have size >= 1");
    if (c != 0) p.c_[i] = c;
  }
  if (p.c_.empty()) throw DomainError("empty nilpotent profile");
  return p;
}

NilpotentProfile NilpotentProfile::from_blocks(const std::vector<std::size_t>& sizes) {
  std::map<std::size_t, std::size_t> counts;
  for (std::size_t s : sizes) {
    if (s == 0) throw DomainError("nilpotent blocks have size >= 1");
    ++counts[s];
  }
  return from_counts(counts);
}

NilpotentProfile NilpotentProfile::from_nullities(const std::vector<std::size_t>& s) {
  if (s.empty()) throw DomainError("empty nullity sequence");
  std::map<std::size_t, std::size_t> counts;
  const std::size_t t = s.size();
  for (std::size_t i = 1; i <= t; ++i) {
    const long long prev = i >= 2 ? static_cast<long long>(s[i - 2]) : 0;
    const long long cur = static_cast<long long>(s[i - 1]);
    const long long next = i < t ? static_cast<long long>(s[i]) : cur;
    const long long c = 2 * cur - prev - next;
    if (c < 0 || cur < prev) throw DomainError("not the nullity sequence of a nilpotent matrix");
    if (c > 0) counts[i] = static_cast<std::size_t>(c);
  }
  return from_counts(counts);
}

NilpotentProfile NilpotentProfile::parse(std::string_view text) {
  std::vector<std::size_t> sizes;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v == 0)
      throw ParseError("bad block size '" + std::string(tok) + "'");
    sizes.push_back(v);
    pos = end + 1;
  }
  return from_blocks(sizes);
}

std::size_t NilpotentProfile::size() const {
  std::size_t n = 0;
  for (const auto& [i, c] : c_) n += i * c;
  return n;
}

std::size_t NilpotentProfile::count(std::size_t i) const {
  auto it = c_.find(i);
  return it == c_.end() ? 0 : it->second;
}

std::vector<std::size_t> NilpotentProfile::blocks() const {
  std::vector<std::size_t> out;
  for (const auto& [i, c] : c_) out.insert(out.end(), c, i);
  return out;
}

std::size_t NilpotentProfile::largest() const { return c_.rbegin()->first; }

std::size_t NilpotentProfile::r(std::size_t i) const {
  const std::size_t ci = count(i);
  if (ci == 0) return 0;
  std::size_t n = 0;
  for (const auto& [j, c] : c_)
    if (c == ci) ++n;
  return n;
}

std::vector<std::size_t> NilpotentProfile::nullities() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 1; i <= largest(); ++i) {
    std::size_t v = 0;
    for (const auto& [j, c] : c_) v += std::min(i, j) * c;
    s.push_back(v);
  }
  return s;
}

Matrix NilpotentProfile::matrix(const Field& field) const {
  std::vector<Matrix> blocks;
  for (std::size_t i : this->blocks()) blocks.push_back(jordan_block(field, field.zero(), i));
  return direct_sum(blocks);
}

namespace {

std::vector<Poly> first_irreducibles(const Field& F, std::size_t d, std::size_t k) {
  std::vector<Poly> out;
  const std::uint64_t total = monic_count(F, static_cast<int>(d));
  for (std::uint64_t r = 0; r < total && out.size() < k; ++r) {
    Poly p = monic_from_rank(F, static_cast<int>(d), r);
    if (is_irreducible(p)) out.push_back(std::move(p));
  }
  if (out.size() < k) throw InternalError("not enough irreducibles of the requested degree");
  return out;
}

std::uint64_t irreducible_count_capped(const Field& F, std::size_t d) {
  try {
    return count_irreducibles(F, static_cast<int>(d));
  } catch (const DomainError&) {
    return std::numeric_limits<std::uint64_t>::max();
  }
}

ElementaryDivisors nilpotent_divisors(const Field& F, const NilpotentProfile& profile) {
  ElementaryDivisors eds;
  for (const auto& [i, c] : profile.counts())
    eds.add(Poly::x(F), static_cast<unsigned>(i), static_cast<unsigned>(c));
  return eds;
}

struct SystemSearch {
  const std::vector<std::size_t>& s;
  std::vector<NilpotentTriple> candidates;  // descending
  std::map<std::size_t, std::uint64_t> avail;
  std::vector<std::size_t> partial;
  std::vector<NilpotentTriple> chosen;
  std::map<std::size_t, std::uint64_t> used;
  std::size_t remaining;
  std::uint64_t nodes = 0;

  bool run(std::size_t from) {
    ++nodes;
    if (remaining == 0) return partial == s;
    for (std::size_t idx = from; idx < candidates.size(); ++idx) {
      const NilpotentTriple& t = candidates[idx];
      if (t.a * t.d > remaining) continue;
      if (used[t.d] >= avail[t.d]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < s.size(); ++i) {
        partial[i] += std::min((i + 1) * t.b, t.a) * t.d;
        if (partial[i] > s[i]) ok = false;
      }
      if (ok) {
        remaining -= t.a * t.d;
        ++used[t.d];
        chosen.push_back(t);
        if (run(idx)) return true;
        chosen.pop_back();
        --used[t.d];
        remaining += t.a * t.d;
      }
      for (std::size_t i = 0; i < s.size(); ++i) partial[i] -= std::min((i + 1) * t.b, t.a) * t.d;
    }
    return false;
  }
};

Witness instantiate(const Field& F, const std::vector<NilpotentTriple>& triples,
                    const std::string& strategy) {
  std::map<std::size_t, std::size_t> per_degree;
  for (const auto& t : triples) ++per_degree[t.d];
  std::map<std::size_t, std::vector<Poly>> pool;
  for (const auto& [d, k] : per_degree) pool[d] = first_irreducibles(F, d, k);
  std::map<std::size_t, std::size_t> next;
  Poly f = Poly::constant(F, F.one());
  Poly g = Poly::constant(F, F.one());
  for (const auto& t : triples) {
    const Poly& r = pool[t.d][next[t.d]++];
    f *= pow(r, static_cast<unsigned>(t.a));
    g *= pow(r, static_cast<unsigned>(t.b));
  }
  return {f, g % f, strategy};
}

}  // namespace

std::optional<std::vector<NilpotentTriple>> solve_nilpotent_system(const Field& field,
                                                                   const NilpotentProfile& profile,
                                                                   std::uint64_t* nodes) {
  const std::vector<std::size_t> s = profile.nullities();
  const std::size_t n = profile.size();
  SystemSearch search{s, {}, {}, std::vector<std::size_t>(s.size(), 0), {}, {}, n};
  for (std::size_t d = n; d >= 1; --d) {
    search.avail[d] = irreducible_count_capped(field, d);
    for (std::size_t a = n / d; a >= 1; --a)
      for (std::size_t b = a; b >= 1; --b) search.candidates.push_back({d, a, b});
  }
  const bool found = search.run(0);
  if (nodes) *nodes = search.nodes;
  if (!found) return std::nullopt;
  return search.chosen;
}

NilpotentResult nilpotent_decide(const Field& field, const NilpotentProfile& profile) {
  const ElementaryDivisors target = nilpotent_divisors(field, profile);
  NilpotentResult out;

  auto check = [&](Witness w) {
    if (simtype_of_gcf(w.f, w.g).divisors != target)
      throw InternalError("nilpotent construction '" + w.strategy + "' failed to verify");
    if (!verify_witness(profile.matrix(field), w))
      throw InternalError("nilpotent construction '" + w.strategy + "' failed matrix check");
    out.verdict = Verdict::Yes;
    out.witness = std::move(w);
  };

  bool enough = true;
  for (const auto& [i, c] : profile.counts())
    if (irreducible_count_capped(field, c) < profile.r(i)) enough = false;
  if (enough) {
    std::vector<NilpotentTriple> triples;
    for (const auto& [i, c] : profile.counts()) triples.push_back({c, i, 1});
    check(instantiate(field, triples, "distinct-irreducibles"));
    return out;
  }

  auto sol = solve_nilpotent_system(field, profile, &out.nodes);
  if (!sol) {
    out.verdict = Verdict::No;
    return out;
  }
  out.solution = sol;
  check(instantiate(field, *sol, "triple-system"));
  return out;
}

}  // namespace gcf
