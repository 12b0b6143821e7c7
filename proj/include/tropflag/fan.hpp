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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropflag/linalg.hpp"
#include "tropflag/relations.hpp"

namespace tropflag {

// Tropical quadrics over the coordinates of a product of projective spaces.
// Each term is a sum of two coordinates x_u + x_v.
struct LinearTerm {
  int u = 0;
  int v = 0;
};

struct PrevarietySystem {
  int variables = 0;
  // Coordinate blocks (offset, size), one per projective factor.
  std::vector<std::pair<int, int>> blocks;
  std::vector<std::vector<LinearTerm>> relations;
  // Source relation of each entry, when built from a relation system.
  std::vector<SystemRelation> sources;
};

// Coordinates of factor i are ordered lexicographically by subset. Vacuous and
// repeated relations are dropped.
PrevarietySystem build_system(const DegenerationType& dt, PairMode mode);
PrevarietySystem build_system(int n, const std::vector<int>& ranks,
                              const std::vector<SystemRelation>& relations);

// A tie pattern: for each relation, the bitmask of terms attaining the
// minimum (at least two bits), with the open cell it cuts out.
struct Cell {
  std::vector<std::uint32_t> pattern;
  int dimension = 0;
  RationalVector interior_point;  // satisfies the pattern exactly
};

struct Cone {
  std::vector<std::uint32_t> pattern;
  int dimension = 0;  // affine, before quotienting by lineality
  RationalMatrix equalities;    // RREF basis, primitive rows
  RationalMatrix inequalities;  // a·x ≥ 0, non-redundant, canonical
  bool simplicial = false;
};

struct FanSummary {
  int ambient_dimension = 0;
  int factors = 0;
  std::vector<Cell> cells;
  // All empty/absent when the finite part of the prevariety is empty.
  std::optional<int> lineality_dimension;  // projective
  int affine_lineality_dimension = 0;
  RationalMatrix lineality_basis;
  std::vector<std::uint64_t> f_vector;  // by dimension modulo lineality
  std::vector<RationalVector> rays;     // primitive, orthogonal to lineality
  std::vector<Cone> maximal_cones;
  std::uint64_t nodes_visited = 0;
  std::uint64_t lp_calls = 0;
  long double pattern_bound = 0;
};

struct EnumerationOptions {
  std::uint64_t node_budget = 50'000'000;
  // Called every `progress_interval` nodes with (nodes, cells so far).
  std::function<void(std::uint64_t, std::uint64_t)> progress;
  std::uint64_t progress_interval = 100'000;
};

// Π_k (number of term subsets of size ≥ 2, plus one).
long double pattern_bound(const PrevarietySystem& sys);

// Depth-first search over tie patterns, pruning partial patterns whose open
// cell is empty (decided by exact LP). Throws ResourceError when the node
// budget runs out.
FanSummary enumerate_prevariety(const PrevarietySystem& sys,
                                const EnumerationOptions& options = {});

// Tie set of each relation at x; nullopt if some minimum is unique.
std::optional<std::vector<std::uint32_t>> pattern_at(
    const PrevarietySystem& sys, const RationalVector& x);
// x lies in the closed cone.
bool cone_contains(const Cone& cone, const RationalVector& x);

struct HomogeneitySpace {
  RationalMatrix basis;
  int dimension = 0;   // affine
  int projective = 0;  // minus one per factor
};

// Gradings under which every relation is homogeneous.
HomogeneitySpace homogeneity_space(const PrevarietySystem& sys);

struct LinealityComparison {
  bool contained = false;  // homogeneity ⊆ lineality, exactly
  bool equal = false;
};
LinealityComparison compare_homogeneity(const HomogeneitySpace& h,
                                        const FanSummary& fan);

// Cover in the poset of degenerations: S' = S plus element `added` in
// component `index`.
struct Cover {
  std::vector<Subset> lower;  // S
  int index = 0;
  int added = 0;
  std::vector<Subset> upper() const;
};

struct CoverReport {
  Cover cover;
  bool homogeneity_contained = false;
  int samples = 0;
  int transferred = 0;
};

struct PosetReport {
  std::vector<CoverReport> covers;
  // The final-example pair: in LFlDr(∅) but not in LFlDr({1}); only
  // meaningful for r = (1,2), n = 4.
  std::optional<bool> counterexample_separates;
  int extreme_samples = 0;
  int extreme_agreements = 0;
  bool ok() const;
};

// All covers of all degeneration tuples for the given ranks.
std::vector<Cover> all_covers(const std::vector<int>& ranks, int n);
// Throws UsageError unless `upper` adds exactly one element to `lower`.
Cover make_cover(const std::vector<Subset>& lower,
                 const std::vector<Subset>& upper);

// Checks homogeneity containment and boundary-point transfer for each
// cover, and the two extreme degenerations against independent checks.
PosetReport poset_scan(const std::vector<int>& ranks, int n,
                       const std::vector<Cover>& covers,
                       int samples_per_cover, std::uint64_t seed);

}  // namespace tropflag
