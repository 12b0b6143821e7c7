// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tropflag/fan.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <set>

#include "tropflag/corpus.hpp"
#include "tropflag/errors.hpp"
#include "tropflag/lp.hpp"
#include "tropflag/quotient.hpp"

namespace tropflag {
namespace {

RationalVector difference(const LinearTerm& a, const LinearTerm& b, int n) {
  RationalVector v(n);
  v[a.u] += 1;
  v[a.v] += 1;
  v[b.u] -= 1;
  v[b.v] -= 1;
  return v;
}

Rational term_value(const LinearTerm& t, const RationalVector& x) {
  return x[t.u] + x[t.v];
}

// Tie set of relation k at x (may have a single bit).
std::uint32_t argmin_mask(const std::vector<LinearTerm>& rel,
                          const RationalVector& x) {
  std::uint32_t mask = 0;
  Rational best;
  for (std::size_t i = 0; i < rel.size(); ++i) {
    Rational v = term_value(rel[i], x);
    if (mask == 0 || v < best) {
      best = std::move(v);
      mask = 1u << i;
    } else if (v == best) {
      mask |= 1u << i;
    }
  }
  return mask;
}

class Enumerator {
 public:
  Enumerator(const PrevarietySystem& sys, const EnumerationOptions& opt,
             FanSummary& out)
      : sys_(sys), opt_(opt), out_(out), n_(sys.variables) {}

  void run() {
    RationalMatrix eq, strict;
    RationalVector x(n_);
    search(0, eq, strict, x);
  }

 private:
  void search(std::size_t k, RationalMatrix& eq, RationalMatrix& strict,
              const RationalVector& x) {
    ++out_.nodes_visited;
    if (out_.nodes_visited > opt_.node_budget) {
      throw ResourceError("prevariety enumeration exceeded the node budget",
                          out_.nodes_visited, out_.cells.size());
    }
    if (opt_.progress && out_.nodes_visited % opt_.progress_interval == 0) {
      opt_.progress(out_.nodes_visited, out_.cells.size());
    }
    if (k == sys_.relations.size()) {
      Cell cell;
      cell.pattern = pattern_;
      cell.dimension = n_ - rank(eq, n_);
      cell.interior_point = x;
      out_.cells.push_back(std::move(cell));
      return;
    }
    const auto& rel = sys_.relations[k];
    const std::uint32_t full = (1u << rel.size()) - 1;
    const std::uint32_t at_x = argmin_mask(rel, x);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      if (std::popcount(mask) < 2) continue;
      const std::size_t eq_size = eq.size(), strict_size = strict.size();
      const int first = std::countr_zero(mask);
      for (std::size_t i = 0; i < rel.size(); ++i) {
        if (static_cast<int>(i) == first) continue;
        if (mask >> i & 1u) {
          eq.push_back(difference(rel[first], rel[i], n_));
        } else {
          strict.push_back(difference(rel[i], rel[first], n_));
        }
      }
      pattern_.push_back(mask);
      if (mask == at_x) {
        search(k + 1, eq, strict, x);
      } else if (auto y = interior_point(eq, strict)) {
        search(k + 1, eq, strict, *y);
      }
      pattern_.pop_back();
      eq.resize(eq_size);
      strict.resize(strict_size);
    }
  }

  // A point with eq·x = 0 and strict·x > 0, if any.
  std::optional<RationalVector> interior_point(const RationalMatrix& eq,
                                               const RationalMatrix& strict) {
    ++out_.lp_calls;
    const RationalMatrix kernel = nullspace(eq, n_);
    const int d = static_cast<int>(kernel.size());
    RationalMatrix reduced;
    reduced.reserve(strict.size());
    for (const auto& row : strict) {
      RationalVector r(d);
      for (int j = 0; j < d; ++j) r[j] = dot(row, kernel[j]);
      reduced.push_back(std::move(r));
    }
    const StrictResult res = strictly_feasible(reduced, d);
    if (!res.feasible) return std::nullopt;
    RationalVector x(n_);
    for (int j = 0; j < d; ++j) {
      if (sgn(res.point[j]) == 0) continue;
      for (int i = 0; i < n_; ++i) x[i] += res.point[j] * kernel[j][i];
    }
    return x;
  }

  const PrevarietySystem& sys_;
  const EnumerationOptions& opt_;
  FanSummary& out_;
  int n_;
  std::vector<std::uint32_t> pattern_;
};

// Equalities and inequalities (as ≥ 0) of the closure of a cell.
void pattern_rows(const PrevarietySystem& sys,
                  const std::vector<std::uint32_t>& pattern,
                  RationalMatrix& eq, RationalMatrix& ineq) {
  const int n = sys.variables;
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    const auto& rel = sys.relations[k];
    const int first = std::countr_zero(pattern[k]);
    for (std::size_t i = 0; i < rel.size(); ++i) {
      if (static_cast<int>(i) == first) continue;
      if (pattern[k] >> i & 1u) {
        eq.push_back(difference(rel[first], rel[i], n));
      } else {
        ineq.push_back(difference(rel[i], rel[first], n));
      }
    }
  }
}

Cone canonical_cone(const PrevarietySystem& sys, const Cell& cell,
                    int lineality) {
  const int n = sys.variables;
  RationalMatrix eq, ineq;
  pattern_rows(sys, cell.pattern, eq, ineq);
  Cone cone;
  cone.pattern = cell.pattern;
  cone.dimension = cell.dimension;
  const Echelon e = rref(eq, n);
  for (const auto& row : e.rows) cone.equalities.push_back(primitive(row));
  std::set<RationalVector> seen;
  RationalMatrix candidates;
  for (const auto& row : ineq) {
    RationalVector r = primitive(reduce_modulo(row, e));
    if (std::all_of(r.begin(), r.end(), [](const Rational& q) { return sgn(q) == 0; })) {
      continue;
    }
    if (seen.insert(r).second) candidates.push_back(std::move(r));
  }
  std::sort(candidates.begin(), candidates.end());
  // Drop rows implied by the others on the subspace eq·x = 0.
  const RationalMatrix kernel = nullspace(eq, n);
  const int d = static_cast<int>(kernel.size());
  auto to_kernel = [&](const RationalVector& row) {
    RationalVector r(d);
    for (int j = 0; j < d; ++j) r[j] = dot(row, kernel[j]);
    return r;
  };
  std::vector<bool> keep(candidates.size(), true);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    RationalMatrix others;
    for (std::size_t j = 0; j < candidates.size(); ++j) {
      if (j != i && keep[j]) others.push_back(to_kernel(candidates[j]));
    }
    if (in_cone(others, to_kernel(candidates[i]), d)) keep[i] = false;
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (keep[i]) cone.inequalities.push_back(candidates[i]);
  }
  cone.simplicial = static_cast<int>(cone.inequalities.size()) ==
                    cell.dimension - lineality;
  return cone;
}

bool refines(const std::vector<std::uint32_t>& smaller,
             const std::vector<std::uint32_t>& larger) {
  for (std::size_t k = 0; k < smaller.size(); ++k) {
    if ((smaller[k] & ~larger[k]) != 0) return false;
  }
  return true;
}

}  // namespace

PrevarietySystem build_system(int n, const std::vector<int>& ranks,
                              const std::vector<SystemRelation>& relations) {
  PrevarietySystem sys;
  for (int r : ranks) {
    const int size = static_cast<int>(binomial(n, r));
    sys.blocks.emplace_back(sys.variables, size);
    sys.variables += size;
  }
  for (const auto& sr : relations) {
    if (sr.relation.is_vacuous()) continue;
    if (sr.relation.terms.size() > 31) throw UsageError("relation too long");
    std::vector<LinearTerm> terms;
    for (const auto& m : sr.relation.terms) {
      terms.push_back(
          {sys.blocks.at(sr.lower).first + static_cast<int>(lex_rank(m.a, n)),
           sys.blocks.at(sr.upper).first + static_cast<int>(lex_rank(m.b, n))});
    }
    sys.relations.push_back(std::move(terms));
    sys.sources.push_back(sr);
  }
  return sys;
}

PrevarietySystem build_system(const DegenerationType& dt, PairMode mode) {
  return build_system(dt.n(), dt.ranks(), flag_relation_system(dt, mode, true));
}

long double pattern_bound(const PrevarietySystem& sys) {
  long double bound = 1;
  for (const auto& rel : sys.relations) {
    const long double t = static_cast<long double>(rel.size());
    bound *= std::pow(2.0L, t) - t;
  }
  return bound;
}

std::optional<std::vector<std::uint32_t>> pattern_at(
    const PrevarietySystem& sys, const RationalVector& x) {
  std::vector<std::uint32_t> out;
  for (const auto& rel : sys.relations) {
    const std::uint32_t mask = argmin_mask(rel, x);
    if (std::popcount(mask) < 2) return std::nullopt;
    out.push_back(mask);
  }
  return out;
}

bool cone_contains(const Cone& cone, const RationalVector& x) {
  for (const auto& row : cone.equalities) {
    if (sgn(dot(row, x)) != 0) return false;
  }
  for (const auto& row : cone.inequalities) {
    if (sgn(dot(row, x)) < 0) return false;
  }
  return true;
}

FanSummary enumerate_prevariety(const PrevarietySystem& sys,
                                const EnumerationOptions& options) {
  FanSummary out;
  out.ambient_dimension = sys.variables;
  out.factors = static_cast<int>(sys.blocks.size());
  out.pattern_bound = pattern_bound(sys);
  Enumerator(sys, options, out).run();
  if (out.cells.empty()) return out;
  const int n = sys.variables;

  std::vector<std::size_t> maximal;
  for (std::size_t i = 0; i < out.cells.size(); ++i) {
    bool is_max = true;
    for (std::size_t j = 0; j < out.cells.size() && is_max; ++j) {
      if (j != i && refines(out.cells[j].pattern, out.cells[i].pattern)) {
        is_max = false;
      }
    }
    if (is_max) maximal.push_back(i);
  }

  RationalMatrix all_rows;
  for (std::size_t i : maximal) {
    RationalMatrix eq, ineq;
    pattern_rows(sys, out.cells[i].pattern, eq, ineq);
    all_rows.insert(all_rows.end(), eq.begin(), eq.end());
    all_rows.insert(all_rows.end(), ineq.begin(), ineq.end());
  }
  out.lineality_basis = nullspace(all_rows, n);
  const int lin = static_cast<int>(out.lineality_basis.size());
  out.affine_lineality_dimension = lin;
  out.lineality_dimension = lin - out.factors;

  int top = lin;
  for (const auto& c : out.cells) {
    if (c.dimension < lin) {
      throw InternalError("cell of dimension below the lineality space");
    }
    top = std::max(top, c.dimension);
  }
  out.f_vector.assign(top - lin + 1, 0);
  for (const auto& c : out.cells) ++out.f_vector[c.dimension - lin];

  for (const auto& c : out.cells) {
    if (c.dimension != lin + 1) continue;
    out.rays.push_back(
        primitive(orthogonal_residual(c.interior_point, out.lineality_basis)));
  }
  std::sort(out.rays.begin(), out.rays.end());
  for (std::size_t i : maximal) {
    out.maximal_cones.push_back(canonical_cone(sys, out.cells[i], lin));
  }
  std::sort(out.maximal_cones.begin(), out.maximal_cones.end(),
            [](const Cone& a, const Cone& b) {
              return std::tie(a.equalities, a.inequalities) <
                     std::tie(b.equalities, b.inequalities);
            });
  return out;
}

HomogeneitySpace homogeneity_space(const PrevarietySystem& sys) {
  const int n = sys.variables;
  RationalMatrix rows;
  for (const auto& rel : sys.relations) {
    for (std::size_t i = 1; i < rel.size(); ++i) {
      rows.push_back(difference(rel[0], rel[i], n));
    }
  }
  HomogeneitySpace h;
  h.basis = nullspace(rows, n);
  h.dimension = static_cast<int>(h.basis.size());
  h.projective = h.dimension - static_cast<int>(sys.blocks.size());
  return h;
}

LinealityComparison compare_homogeneity(const HomogeneitySpace& h,
                                        const FanSummary& fan) {
  LinealityComparison out;
  if (!fan.lineality_dimension) return out;
  out.contained =
      row_space_contains(fan.lineality_basis, h.basis, fan.ambient_dimension);
  out.equal = out.contained && h.dimension == fan.affine_lineality_dimension;
  return out;
}

std::vector<Subset> Cover::upper() const {
  std::vector<Subset> out = lower;
  out.at(index) = out.at(index).with(added);
  return out;
}

bool PosetReport::ok() const {
  for (const auto& c : covers) {
    if (!c.homogeneity_contained || c.transferred != c.samples) return false;
  }
  if (counterexample_separates && !*counterexample_separates) return false;
  return extreme_agreements == extreme_samples;
}

std::vector<Cover> all_covers(const std::vector<int>& ranks, int n) {
  if (ranks.size() < 2) return {};
  const int slots = static_cast<int>(ranks.size()) - 1;
  const std::uint64_t per = std::uint64_t{1} << n;
  std::uint64_t total = 1;
  for (int i = 0; i < slots; ++i) total *= per;
  std::vector<Cover> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Subset> S;
    std::uint64_t c = code;
    for (int i = 0; i < slots; ++i) {
      S.emplace_back(static_cast<std::uint32_t>(c % per));
      c /= per;
    }
    for (int i = 0; i < slots; ++i) {
      for (int s = 1; s <= n; ++s) {
        if (!S[i].contains(s)) out.push_back({S, i, s});
      }
    }
  }
  return out;
}

Cover make_cover(const std::vector<Subset>& lower,
                 const std::vector<Subset>& upper) {
  if (lower.size() != upper.size()) throw UsageError("cover: length mismatch");
  std::optional<Cover> found;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (lower[i] == upper[i]) continue;
    const Subset extra = upper[i] - lower[i];
    if (found || !lower[i].is_subset_of(upper[i]) || extra.size() != 1) {
      throw UsageError("not a cover: exactly one element must be added");
    }
    found = Cover{lower, static_cast<int>(i), extra.max_element()};
  }
  if (!found) throw UsageError("not a cover: tuples are equal");
  return *found;
}

namespace {

// A random valuated matroid of rank r on [n] with the elements of `loops` as
// loops, or nullopt if none exists.
std::optional<ValuatedMatroid> random_member(int n, int r, Subset loops,
                                             std::mt19937_64& rng) {
  std::vector<Matroid> pool;
  for (auto& m : all_matroids(n, r)) {
    if (loops.is_subset_of(m.loops())) pool.push_back(std::move(m));
  }
  if (pool.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int attempt = 0; attempt < 50; ++attempt) {
    if (auto v = random_valuation(pool[pick(rng)], rng)) return v;
  }
  return trivial_valuation(pool[pick(rng)]);
}

PlueckerVector random_candidate(int n, int r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> value(0, 4);
  while (true) {
    std::vector<TropicalValue> vals;
    for (std::size_t i = 0; i < binomial(n, r); ++i) {
      const int v = value(rng);
      vals.push_back(v == 4 ? TropicalValue() : TropicalValue(v));
    }
    if (auto p = try_normalize(vals)) return PlueckerVector(n, r, std::move(vals));
  }
}

}  // namespace

PosetReport poset_scan(const std::vector<int>& ranks, int n,
                       const std::vector<Cover>& covers,
                       int samples_per_cover, std::uint64_t seed) {
  if (n > 5) throw UsageError("poset scans sample matroids on at most 5 elements");
  std::mt19937_64 rng(seed);
  const int k = static_cast<int>(ranks.size());
  PosetReport report;
  for (const auto& cover : covers) {
    if (static_cast<int>(cover.lower.size()) != k - 1 || cover.index < 0 ||
        cover.index >= k - 1 || cover.lower[cover.index].contains(cover.added)) {
      throw UsageError("malformed cover");
    }
    const DegenerationType lower(ranks, cover.lower, n);
    const DegenerationType upper(ranks, cover.upper(), n);
    CoverReport cr{cover};
    const auto sys_lower = build_system(lower, PairMode::kAllPairs);
    const auto h_lower = homogeneity_space(sys_lower);
    const auto h_upper = homogeneity_space(build_system(upper, PairMode::kAllPairs));
    cr.homogeneity_contained =
        row_space_contains(h_upper.basis, h_lower.basis, sys_lower.variables);
    const Subset s_set = Subset().with(cover.added);
    for (int attempt = 0; cr.samples < samples_per_cover && attempt < 200000;
         ++attempt) {
      std::vector<PlueckerVector> point;
      bool possible = true;
      for (int a = 0; a < k && possible; ++a) {
        const auto m = random_member(n, ranks[a], a <= cover.index ? s_set : Subset(), rng);
        if (!m) possible = false;
        else point.push_back(m->pluecker());
      }
      if (!possible) break;
      if (!ld_flag_dressian_member(point, lower, PairMode::kAllPairs).member) continue;
      ++cr.samples;
      if (ld_flag_dressian_member(point, upper, PairMode::kAllPairs).member) {
        ++cr.transferred;
      }
    }
    report.covers.push_back(std::move(cr));
  }

  if (ranks == std::vector<int>{1, 2} && n == 4) {
    const std::vector<PlueckerVector> pair = {
        PlueckerVector(4, 1, {0, 0, 0, 0}),
        PlueckerVector(4, 2, {1, 1, 0, 2, 0, 0})};
    report.counterexample_separates =
        ld_flag_dressian_member(pair, DegenerationType(ranks, {Subset()}, n),
                                PairMode::kAllPairs).member &&
        !ld_flag_dressian_member(pair, DegenerationType(ranks, {Subset::of({1})}, n),
                                 PairMode::kAllPairs).member;
  }

  // Extremes: S = (∅,…) against pairwise quotients, S = ([n],…) against
  // per-factor exchange checks.
  const DegenerationType none = DegenerationType::flag(ranks, n);
  const DegenerationType full(ranks, std::vector<Subset>(k - 1, Subset::range(n)), n);
  std::bernoulli_distribution structured(0.5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<PlueckerVector> point;
    for (int a = 0; a < k; ++a) {
      if (structured(rng)) {
        point.push_back(random_member(n, ranks[a], Subset(), rng)->pluecker());
      } else {
        point.push_back(random_candidate(n, ranks[a], rng));
      }
    }
    bool all_valuated = true;
    std::vector<ValuatedMatroid> ms;
    for (const auto& p : point) {
      if (!check_exchange_axiom(p).ok) {
        all_valuated = false;
        break;
      }
      ms.push_back(ValuatedMatroid::trusted(p));
    }
    bool flag = all_valuated;
    for (int i = 0; i < k && flag; ++i) {
      for (int j = i + 1; j < k && flag; ++j) {
        flag = quotient_check(ms[i], ms[j]).ok;
      }
    }
    report.extreme_samples += 2;
    report.extreme_agreements +=
        ld_flag_dressian_member(point, none, PairMode::kAllPairs).member == flag;
    report.extreme_agreements +=
        ld_flag_dressian_member(point, full, PairMode::kAllPairs).member ==
        all_valuated;
  }
  return report;
}

}  // namespace tropflag
