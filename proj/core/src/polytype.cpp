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

#include "gcf/polytype.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "gcf/error.hpp"
#include "gcf/factor.hpp"
#include "gcf/simtype.hpp"
#include "gcf/text.hpp"

namespace gcf {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSat / a) return kSat;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t q, std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) r = sat_mul(r, q);
  return r;
}

// One p-primary part of the target: deg p, total size, largest exponent.
struct TargetPart {
  std::size_t deg;
  std::size_t size;
  unsigned max_exp;
};

// One primary component r^u of f.
struct Component {
  std::size_t deg;
  unsigned mult;
};

// Can the components of f be distributed over the target parts so that
// deg p | deg r, the sizes add up, and some r in each part has
// multiplicity at least the largest exponent there?  Necessary for
// g(C_f) to have the target type.
bool feasible_rec(const std::vector<Component>& comps, std::size_t idx,
                  const std::vector<TargetPart>& parts, std::vector<std::size_t>& room,
                  std::vector<unsigned>& best_mult) {
  if (idx == comps.size()) {
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (room[j] != 0 || best_mult[j] < parts[j].max_exp) return false;
    return true;
  }
  const Component& c = comps[idx];
  const std::size_t sz = c.deg * c.mult;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (c.deg % parts[j].deg != 0 || room[j] < sz) continue;
    room[j] -= sz;
    const unsigned saved = best_mult[j];
    best_mult[j] = std::max(saved, c.mult);
    const bool ok = feasible_rec(comps, idx + 1, parts, room, best_mult);
    best_mult[j] = saved;
    room[j] += sz;
    if (ok) return true;
  }
  return false;
}

bool feasible(const Factorization& fac, const std::vector<TargetPart>& parts) {
  std::vector<Component> comps;
  for (const auto& [r, u] : fac.factors) comps.push_back({static_cast<std::size_t>(r.degree()), u});
  // larger components first fail faster
  std::sort(comps.begin(), comps.end(),
            [](const Component& a, const Component& b) { return a.deg * a.mult > b.deg * b.mult; });
  std::vector<std::size_t> room;
  for (const auto& p : parts) room.push_back(p.size);
  std::vector<unsigned> best(parts.size(), 0);
  return feasible_rec(comps, 0, parts, room, best);
}

enum class Outcome : std::uint8_t { Pending, Pruned, Hit, Miss };

struct FResult {
  Outcome outcome = Outcome::Pending;
  std::uint64_t hit_g = 0;
};

}  // namespace

PolytypeResult brute_force(const Matrix& a, const SearchOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  const Field& F = a.field();
  const std::size_t n = a.size();
  if (n == 0) throw DomainError("brute_force needs a nonempty matrix");
  const ElementaryDivisors target = elementary_divisors(a);
  std::vector<TargetPart> parts;
  for (const auto& [p, exps] : target.parts()) {
    std::size_t s = 0;
    for (unsigned e : exps) s += e;
    parts.push_back({static_cast<std::size_t>(p.degree()), s * p.degree(), exps.back()});
  }

  const std::uint64_t qn = sat_pow(F.order(), n);
  const std::uint64_t budget = options.budget;
  SearchStats stats;
  stats.total = sat_mul(qn, qn);
  stats.budget = budget;

  // f ranks whose block starts below the budget
  const std::uint64_t f_limit = std::min(qn, budget / qn + (budget % qn != 0 ? 1 : 0));
  std::vector<FResult> results(f_limit);

  std::vector<Poly> g_cache;
  if (qn <= (std::uint64_t{1} << 16)) g_cache = polys_below_degree(F, static_cast<int>(n));
  auto g_at = [&](std::uint64_t r) {
    return g_cache.empty() ? poly_below_from_rank(F, r) : g_cache[r];
  };

  std::atomic<std::uint64_t> next_f{0};
  std::atomic<std::uint64_t> best_hit{kSat};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    try {
      for (;;) {
        const std::uint64_t fr = next_f.fetch_add(1);
        if (fr >= f_limit || fr > best_hit.load()) return;
        const Poly f = monic_from_rank(F, static_cast<int>(n), fr);
        const Factorization fac = factor(f);
        if (!feasible(fac, parts)) {
          results[fr].outcome = Outcome::Pruned;
          continue;
        }
        const std::uint64_t start = fr * qn;
        const std::uint64_t g_end = std::min(qn, budget - start);
        bool hit = false;
        for (std::uint64_t gr = 0; gr < g_end; ++gr) {
          if ((gr & 255) == 0 && fr > best_hit.load()) return;
          if (simtype_of_gcf(f, fac, g_at(gr)).divisors == target) {
            results[fr] = {Outcome::Hit, gr};
            std::uint64_t cur = best_hit.load();
            while (fr < cur && !best_hit.compare_exchange_weak(cur, fr)) {
            }
            hit = true;
            break;
          }
        }
        if (!hit) results[fr].outcome = Outcome::Miss;
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      best_hit.store(0);
    }
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  // replay in canonical order so the counts match a serial run
  PolytypeResult out;
  for (std::uint64_t fr = 0; fr < f_limit; ++fr) {
    const std::uint64_t span = std::min(qn, budget - stats.examined);
    const FResult& r = results[fr];
    if (r.outcome == Outcome::Pruned) {
      stats.examined += span;
      stats.pruned += span;
    } else if (r.outcome == Outcome::Hit) {
      stats.examined += r.hit_g + 1;
      const Poly f = monic_from_rank(F, static_cast<int>(n), fr);
      Witness w{f, g_at(r.hit_g), "search"};
      if (!verify_witness(a, w)) throw InternalError("search hit failed verification");
      out.verdict = Verdict::Yes;
      out.witness = std::move(w);
      break;
    } else if (r.outcome == Outcome::Miss) {
      stats.examined += span;
    } else {
      throw InternalError("search left an f unprocessed");
    }
  }
  if (out.verdict != Verdict::Yes)
    out.verdict = stats.examined == stats.total ? Verdict::No : Verdict::Unknown;
  stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  out.search = stats;
  return out;
}

PolytypeResult polytype_decide(const Matrix& a, const SearchOptions& options) {
  const Field& F = a.field();
  if (a.size() == 0) throw DomainError("polytype_decide needs a nonempty matrix");
  const InvariantFactors invs = invariant_factors(a);
  const ElementaryDivisors eds = elementary_divisors(invs);

  auto accept = [&](Witness w) {
    if (!verify_witness(a, w))
      throw InternalError("construction '" + w.strategy + "' produced a wrong witness");
    PolytypeResult r;
    r.verdict = Verdict::Yes;
    r.witness = std::move(w);
    return r;
  };

  if (invs.factors.size() == 1) return accept({invs.factors.back(), Poly::x(F), "cyclic"});
  if (auto w = witness_diagonalizable(F, eds)) return accept(std::move(*w));
  if (auto w = witness_square_plus_linear(F, eds)) return accept(std::move(*w));
  if (auto w = witness_homogeneous(F, eds)) return accept(std::move(*w));
  if (auto w = witness_jordan(F, eds)) return accept(std::move(*w));
  if (auto w = witness_conjugates(F, eds)) return accept(std::move(*w));
  return brute_force(a, options);
}

Matrix counterexample_matrix(const Field& field) {
  std::vector<Matrix> blocks;
  blocks.push_back(jordan_block(field, field.zero(), 3));
  blocks.push_back(jordan_block(field, field.zero(), 1));
  for (FieldElem c : field.elements())
    if (!c.is_zero()) blocks.push_back(jordan_block(field, c, 1));
  return direct_sum(blocks);
}

std::string format_certificate(const Field& field, std::size_t n, Verdict verdict,
                               const SearchStats& stats, bool with_timing) {
  std::ostringstream os;
  os << "verdict=" << to_string(verdict) << '\n'
     << "field=" << format_field(field) << '\n'
     << "n=" << n << '\n'
     << "total_pairs=" << stats.total << '\n'
     << "examined_pairs=" << stats.examined << '\n'
     << "pruned_pairs=" << stats.pruned << '\n'
     << "budget=" << stats.budget << '\n';
  if (with_timing) os << "elapsed_ms=" << stats.elapsed_ms << '\n';
  return os.str();
}

}  // namespace gcf
