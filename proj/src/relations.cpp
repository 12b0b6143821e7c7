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

#include "tropflag/relations.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tropflag/errors.hpp"

namespace tropflag {
namespace {

std::pair<std::uint32_t, std::uint32_t> monomial_key(const Monomial& m,
                                                     bool single_factor) {
  std::uint32_t a = m.a.mask(), b = m.b.mask();
  if (single_factor && b < a) std::swap(a, b);
  return {a, b};
}

std::string monomial_text(const Monomial& m) {
  return "p_{" + m.a.to_string() + "}*p_{" + m.b.to_string() + "}";
}

void check_ranks(int r, int s, int n) {
  if (n < 0 || n > kMaxGroundSet || r < 0 || r > s || s > n) {
    throw UsageError("relation ranks must satisfy 0 <= r <= s <= n, got r=" +
                     std::to_string(r) + " s=" + std::to_string(s) +
                     " n=" + std::to_string(n));
  }
}

// Visits every (I, J) pair with its admissible indices j.
template <typename F>
void for_each_pair(int r, int s, Subset S, int n, F&& visit) {
  check_ranks(r, s, n);
  if (!S.is_subset_of(Subset::range(n))) {
    throw UsageError("degeneration set {" + S.to_string() +
                     "} not contained in [" + std::to_string(n) + "]");
  }
  if (r == 0 || s == n) return;
  for (Subset I : k_subsets(n, r - 1)) {
    for (Subset J : k_subsets(n, s + 1)) {
      visit(I, J, (J - (I | S)).elements());
    }
  }
}

}  // namespace

bool TropicalRelation::is_vacuous() const {
  if (terms.empty()) return true;
  const auto first = monomial_key(terms.front(), single_factor);
  return std::all_of(terms.begin(), terms.end(), [&](const Monomial& m) {
    return monomial_key(m, single_factor) == first;
  });
}

std::string TropicalRelation::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " (+) ";
    out += monomial_text(terms[i]);
  }
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> canonical_key(
    const TropicalRelation& rel) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> key;
  for (const auto& m : rel.terms) key.push_back(monomial_key(m, rel.single_factor));
  std::sort(key.begin(), key.end());
  return key;
}

std::string SignedRelation::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const int c = terms[i].coefficient;
    if (i) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    if (std::abs(c) != 1) out += std::to_string(std::abs(c)) + "*";
    out += monomial_text(terms[i].monomial);
  }
  return out;
}

int relation_sign(int j, Subset I, Subset J) {
  int count = 0;
  for (int x : J.elements()) count += x > j;
  for (int x : I.elements()) count += x > j;
  return count % 2 ? -1 : 1;
}

std::vector<TropicalRelation> generate_ld_relations(int r, int s, Subset S,
                                                    int n) {
  return generate_ld_relations(r, s, S, n, r == s && S.empty());
}

std::vector<TropicalRelation> generate_ld_relations(int r, int s, Subset S,
                                                    int n,
                                                    bool single_factor) {
  if (single_factor && r != s) {
    throw UsageError("single-factor relations need r == s");
  }
  std::vector<TropicalRelation> out;
  for_each_pair(r, s, S, n, [&](Subset I, Subset J, const std::vector<int>& js) {
    TropicalRelation rel;
    rel.origin = {r, s, n, S, I, J};
    rel.single_factor = single_factor;
    for (int j : js) rel.terms.push_back({I.with(j), J.without(j)});
    out.push_back(std::move(rel));
  });
  return out;
}

std::vector<SignedRelation> generate_signed_relations(int r, int s, Subset S,
                                                      int n) {
  return generate_signed_relations(r, s, S, n, r == s && S.empty());
}

std::vector<SignedRelation> generate_signed_relations(int r, int s, Subset S,
                                                      int n,
                                                      bool single_factor) {
  if (single_factor && r != s) {
    throw UsageError("single-factor relations need r == s");
  }
  std::vector<SignedRelation> out;
  for_each_pair(r, s, S, n, [&](Subset I, Subset J, const std::vector<int>& js) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> coeff;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> order;
    for (int j : js) {
      const auto key = monomial_key({I.with(j), J.without(j)}, single_factor);
      if (!coeff.count(key)) order.push_back(key);
      coeff[key] += relation_sign(j, I, J);
    }
    SignedRelation rel;
    rel.origin = {r, s, n, S, I, J};
    rel.single_factor = single_factor;
    for (const auto& key : order) {
      if (coeff[key] == 0) continue;
      rel.terms.push_back(
          {coeff[key], Monomial{Subset(key.first), Subset(key.second)}});
    }
    if (!rel.terms.empty()) out.push_back(std::move(rel));
  });
  return out;
}

std::vector<TropicalRelation> nontrivial_relations(
    std::span<const TropicalRelation> rels) {
  std::vector<TropicalRelation> out;
  std::set<std::vector<std::pair<std::uint32_t, std::uint32_t>>> seen;
  for (const auto& rel : rels) {
    if (rel.is_vacuous()) continue;
    if (seen.insert(canonical_key(rel)).second) out.push_back(rel);
  }
  return out;
}

std::vector<TropicalValue> term_values(const TropicalRelation& rel,
                                       const PlueckerVector& upper,
                                       const PlueckerVector& lower) {
  const auto& o = rel.origin;
  if (lower.n() != o.n || upper.n() != o.n || lower.rank() != o.r ||
      upper.rank() != o.s) {
    throw UsageError("relation for (r,s,n)=(" + std::to_string(o.r) + "," +
                     std::to_string(o.s) + "," + std::to_string(o.n) +
                     ") evaluated on vectors of ranks " +
                     std::to_string(lower.rank()) + "," +
                     std::to_string(upper.rank()));
  }
  std::vector<TropicalValue> values;
  values.reserve(rel.terms.size());
  for (const auto& m : rel.terms) {
    values.push_back(odot(lower.at(m.a), upper.at(m.b)));
  }
  return values;
}

bool relation_satisfied(const TropicalRelation& rel,
                        const PlueckerVector& upper,
                        const PlueckerVector& lower) {
  return min_achieved_twice_or_empty(term_values(rel, upper, lower));
}

bool relation_satisfied(const TropicalRelation& rel, const PlueckerVector& p) {
  return relation_satisfied(rel, p, p);
}

DegenerationType::DegenerationType(std::vector<int> ranks,
                                   std::vector<Subset> S, int n)
    : ranks_(std::move(ranks)), S_(std::move(S)), n_(n) {
  if (n < 0 || n > kMaxGroundSet) throw UsageError("ground set out of range");
  if (ranks_.empty()) throw UsageError("empty rank vector");
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (ranks_[i] < 0 || ranks_[i] > n) {
      throw UsageError("rank " + std::to_string(ranks_[i]) + " outside [0," +
                       std::to_string(n) + "]");
    }
    if (i && ranks_[i] < ranks_[i - 1]) {
      throw UsageError("ranks must be nondecreasing");
    }
  }
  if (S_.size() + 1 != ranks_.size()) {
    throw UsageError("expected " + std::to_string(ranks_.size() - 1) +
                     " degeneration sets, got " + std::to_string(S_.size()));
  }
  for (Subset s : S_) {
    if (!s.is_subset_of(Subset::range(n))) {
      throw UsageError("degeneration set {" + s.to_string() +
                       "} not contained in [" + std::to_string(n) + "]");
    }
  }
}

DegenerationType DegenerationType::flag(std::vector<int> ranks, int n) {
  const std::size_t k = ranks.size();
  return DegenerationType(std::move(ranks),
                          std::vector<Subset>(k ? k - 1 : 0), n);
}

Subset DegenerationType::S_between(int i, int j) const {
  Subset out;
  for (int a = i; a < j; ++a) out = out | S_.at(a);
  return out;
}

std::string DegenerationType::to_string() const {
  std::string out = "r=(";
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    out += (i ? "," : "") + std::to_string(ranks_[i]);
  }
  out += ") S=(";
  for (std::size_t i = 0; i < S_.size(); ++i) {
    out += (i ? ";" : "") + std::string("{") + S_[i].to_string() + "}";
  }
  return out + ") n=" + std::to_string(n_);
}

std::vector<SystemRelation> flag_relation_system(const DegenerationType& dt,
                                                 PairMode mode,
                                                 bool nontrivial_only) {
  std::vector<SystemRelation> out;
  auto append = [&](int lo, int hi, std::vector<TropicalRelation> rels) {
    if (nontrivial_only) rels = nontrivial_relations(rels);
    for (auto& rel : rels) out.push_back({lo, hi, std::move(rel)});
  };
  const auto& r = dt.ranks();
  for (int i = 0; i < dt.length(); ++i) {
    append(i, i, generate_ld_relations(r[i], r[i], Subset(), dt.n(), true));
  }
  for (int i = 0; i < dt.length(); ++i) {
    for (int j = i + 1; j < dt.length(); ++j) {
      if (mode == PairMode::kConsecutive && j != i + 1) continue;
      append(i, j,
             generate_ld_relations(r[i], r[j], dt.S_between(i, j), dt.n(),
                                   false));
    }
  }
  return out;
}

std::string RelationFailure::to_string() const {
  std::string out = relation.relation.to_string() + " on factors (" +
                    std::to_string(relation.lower + 1) + "," +
                    std::to_string(relation.upper + 1) + ") with terms {";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i ? "," : "") + values[i].to_string();
  }
  return out + "}";
}

MembershipReport ld_flag_dressian_member(
    std::span<const PlueckerVector> candidates, const DegenerationType& dt,
    PairMode mode) {
  if (static_cast<int>(candidates.size()) != dt.length()) {
    throw UsageError("expected " + std::to_string(dt.length()) +
                     " Pluecker vectors, got " +
                     std::to_string(candidates.size()));
  }
  for (int i = 0; i < dt.length(); ++i) {
    if (candidates[i].rank() != dt.ranks()[i] || candidates[i].n() != dt.n()) {
      throw UsageError("candidate " + std::to_string(i + 1) +
                       " does not match rank " +
                       std::to_string(dt.ranks()[i]) + " on [" +
                       std::to_string(dt.n()) + "]");
    }
  }
  for (auto& sr : flag_relation_system(dt, mode, false)) {
    auto values = term_values(sr.relation, candidates[sr.upper],
                              candidates[sr.lower]);
    if (!min_achieved_twice_or_empty(values)) {
      return {false, RelationFailure{std::move(sr), std::move(values)}};
    }
  }
  return {};
}

}  // namespace tropflag
