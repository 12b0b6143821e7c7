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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tropflag/relations.hpp"
#include "tropflag/valuated_matroid.hpp"

namespace tropflag {

struct QuotientCheck {
  bool ok = true;
  // First (I, J, i), lexicographically, with no admissible j.
  std::optional<ExchangeWitness> witness;
};

// μ ↞ ν: for all I ∈ C(n,r), J ∈ C(n,s), i ∈ I∖J there is j ∈ J∖I with
// μ(I) + ν(J) ≥ μ(I - i + j) + ν(J - j + i). Throws UsageError if r > s or
// the ground sets differ.
QuotientCheck quotient_check(const ValuatedMatroid& mu,
                             const ValuatedMatroid& nu);

// Valuated matroids on a common [n] with ranks matching a degeneration type.
class FlagInstance {
 public:
  // Throws UsageError on rank or ground-set mismatch.
  FlagInstance(std::vector<ValuatedMatroid> matroids, DegenerationType dt);

  const std::vector<ValuatedMatroid>& matroids() const { return matroids_; }
  const DegenerationType& type() const { return dt_; }
  std::vector<PlueckerVector> pluecker_vectors() const;

 private:
  std::vector<ValuatedMatroid> matroids_;
  DegenerationType dt_;
};

struct StepCheck {
  bool ok = true;
  int failing_step = -1;  // 0-based index i of the pair (i, i+1)
  std::string detail;
};

// Every step has deletion_rank(μ_i, S_i) > 0, so μ_{S_i} and the induced
// matroids of the projections exist. Conditions (b)–(d) need this.
bool steps_well_defined(const FlagInstance& fi);

// (μ_i)_{S_i} ↞ μ_{i+1} for every consecutive i. Rank-zero deletions raise
// DomainError.
StepCheck is_ld_flag_matroid(const FlagInstance& fi);

// f: [m] ∪ {o} → [n] ∪ {o} with f(o) = o. Image 0 stands for o.
class SetMapWithZero {
 public:
  // images[x-1] = f(x) ∈ {0, 1, .., n}.
  SetMapWithZero(int m, int n, std::vector<int> images);
  static SetMapWithZero identity(int n);
  // pr_S: x ↦ x for x ∉ S, o for x ∈ S.
  static SetMapWithZero projection(int n, Subset S);

  int source_size() const { return m_; }
  int target_size() const { return n_; }
  int operator()(int x) const { return images_.at(x - 1); }
  // The total map [m+1] → [n+1] with o placed at index m+1 resp. n+1.
  std::vector<int> with_zero_appended() const;

 private:
  int m_;
  int n_;
  std::vector<int> images_;
};

// f⁻¹(ν) for a total map f: [m] → [n] given as images[x-1] ∈ 1..n: restrict
// ν to the image T, then I ↦ ν|_T(f(I)) when f is injective on I, ∞
// otherwise. Throws DomainError when T has rank zero.
ValuatedMatroid induced_valuated_matroid(const std::vector<int>& images,
                                         const ValuatedMatroid& nu);
// Same on the ground sets with o appended; the target gets o as a loop.
ValuatedMatroid induced_valuated_matroid(const SetMapWithZero& f,
                                         const ValuatedMatroid& nu);

// f: source → target is a morphism iff f⁻¹(target_o) ↞ source_o.
QuotientCheck morphism_check(const SetMapWithZero& f,
                             const ValuatedMatroid& source,
                             const ValuatedMatroid& target);

// One predicate of the four-way equivalence; appends a human-readable
// witness when it returns false.
using FlagPredicate =
    std::function<bool(const FlagInstance&, std::vector<std::string>&)>;

struct TheoremAPredicates {
  FlagPredicate dressian;                // (a)
  FlagPredicate ld_flag_matroid;         // (b)
  FlagPredicate projection_containment;  // (c)
  FlagPredicate morphisms;               // (d)
};

TheoremAPredicates default_theorem_a_predicates();

struct TheoremAReport {
  bool a = false;
  bool b = false;
  bool c = false;
  bool d = false;
  std::vector<std::string> witnesses;
  bool agree() const { return a == b && b == c && c == d; }
};

TheoremAReport theorem_a_report(
    const FlagInstance& fi,
    const TheoremAPredicates& predicates = default_theorem_a_predicates());

}  // namespace tropflag
