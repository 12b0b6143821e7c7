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

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropflag/subset.hpp"
#include "tropflag/tropical.hpp"
#include "tropflag/valuated_matroid.hpp"

namespace tropflag {

// p_A ⊙ p_B, where A indexes the rank-r (lower) factor and B the rank-s
// (upper) factor.
struct Monomial {
  Subset a;
  Subset b;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Where a relation comes from: the pair (I, J) with I ∈ C(n, r-1),
// J ∈ C(n, s+1), and the degeneration set S.
struct RelationOrigin {
  int r = 0;
  int s = 0;
  int n = 0;
  Subset S;
  Subset I;
  Subset J;
};

// Σ⊕ p_{I∪j} ⊙ p_{J∖j} over j ∈ J∖(I∪S). Duplicate monomials are kept.
//
// In single-factor mode both variables come from one Pluecker vector (the
// Grassmann case), so p_A p_B and p_B p_A are the same monomial.
struct TropicalRelation {
  std::vector<Monomial> terms;
  RelationOrigin origin;
  bool single_factor = false;

  // True for zero terms, or when every term is one and the same monomial;
  // such relations hold at every point.
  bool is_vacuous() const;
  // "p_{4}*p_{1,2} (+) p_{2}*p_{1,4}"; "0" for zero terms.
  std::string to_string() const;
};

// Sorted canonical monomials; two relations with equal keys cut out the same
// hypersurface.
std::vector<std::pair<std::uint32_t, std::uint32_t>> canonical_key(
    const TropicalRelation& rel);

struct SignedTerm {
  int coefficient = 0;
  Monomial monomial;
};

// Classical counterpart with coefficients sgn(j; I, J), identical monomials
// merged and zero coefficients dropped.
struct SignedRelation {
  std::vector<SignedTerm> terms;
  RelationOrigin origin;
  bool single_factor = false;
  std::string to_string() const;
};

// (-1)^{#{j' ∈ J : j < j'} + #{i ∈ I : i > j}}.
int relation_sign(int j, Subset I, Subset J);

// One relation per (I, J) pair, lexicographic, terms by ascending j. The
// 4-argument form uses single-factor mode exactly when r == s and S = ∅.
// Throws UsageError unless 0 ≤ r ≤ s ≤ n ≤ kMaxGroundSet.
std::vector<TropicalRelation> generate_ld_relations(int r, int s, Subset S,
                                                    int n);
std::vector<TropicalRelation> generate_ld_relations(int r, int s, Subset S,
                                                    int n, bool single_factor);
// Relations canceling to zero are dropped.
std::vector<SignedRelation> generate_signed_relations(int r, int s, Subset S,
                                                      int n);
std::vector<SignedRelation> generate_signed_relations(int r, int s, Subset S,
                                                      int n,
                                                      bool single_factor);

// Drops vacuous relations and repeats, keeping first occurrences.
std::vector<TropicalRelation> nontrivial_relations(
    std::span<const TropicalRelation> rels);

// Term values q(A) ⊙ p(B). `upper` has rank s, `lower` rank r. Throws
// UsageError on incompatible dimensions.
std::vector<TropicalValue> term_values(const TropicalRelation& rel,
                                       const PlueckerVector& upper,
                                       const PlueckerVector& lower);
bool relation_satisfied(const TropicalRelation& rel,
                        const PlueckerVector& upper,
                        const PlueckerVector& lower);
// Single-factor evaluation.
bool relation_satisfied(const TropicalRelation& rel, const PlueckerVector& p);

// Ranks r₁ ≤ … ≤ r_k and S₁, …, S_{k-1} ⊆ [n].
class DegenerationType {
 public:
  // Throws UsageError on unsorted/out-of-range ranks or wrong S count.
  DegenerationType(std::vector<int> ranks, std::vector<Subset> S, int n);
  // All S_i empty.
  static DegenerationType flag(std::vector<int> ranks, int n);

  int n() const { return n_; }
  int length() const { return static_cast<int>(ranks_.size()); }
  const std::vector<int>& ranks() const { return ranks_; }
  const std::vector<Subset>& S() const { return S_; }
  // S_i ∪ … ∪ S_{j-1}, 0-based, i < j.
  Subset S_between(int i, int j) const;
  std::string to_string() const;

 private:
  std::vector<int> ranks_;
  std::vector<Subset> S_;
  int n_;
};

enum class PairMode { kConsecutive, kAllPairs };

// A relation tied to the factors it reads: A from `lower`, B from `upper`.
struct SystemRelation {
  int lower = 0;
  int upper = 0;
  TropicalRelation relation;
};

// The Grassmann relations of every factor plus LD relations between
// consecutive factors (with S_i) or all pairs (with S_ij). With
// `nontrivial_only`, vacuous and repeated relations are dropped.
std::vector<SystemRelation> flag_relation_system(const DegenerationType& dt,
                                                 PairMode mode,
                                                 bool nontrivial_only);

struct RelationFailure {
  SystemRelation relation;
  std::vector<TropicalValue> values;
  std::string to_string() const;
};

struct MembershipReport {
  bool member = true;
  std::optional<RelationFailure> failure;
};

// Membership in the LD flag Dressian; reports the first failing relation.
// Throws UsageError when the candidates do not match the ranks.
MembershipReport ld_flag_dressian_member(
    std::span<const PlueckerVector> candidates, const DegenerationType& dt,
    PairMode mode);

}  // namespace tropflag
