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

#include "tropflag/linalg.hpp"

namespace tropflag {

struct PhaseOneResult {
  bool feasible = false;
  RationalVector x;       // x ≥ 0 with A x = b, when feasible
  RationalVector farkas;  // y with yᵀA ≥ 0 and yᵀb < 0, when infeasible
  int pivots = 0;
};

// Phase-one simplex over the rationals with Bland's rule. Both outcomes are
// re-verified exactly; a failed verification throws InternalError.
PhaseOneResult find_nonnegative_solution(const RationalMatrix& a,
                                         const RationalVector& b, int cols);

struct StrictResult {
  bool feasible = false;
  RationalVector point;        // G y > 0, when feasible
  RationalVector certificate;  // λ ≥ 0, Σλ = 1, Gᵀλ = 0, when not
};

// Decides whether { y : G y > 0 } is nonempty (Gordan's alternative). The
// point comes from the Farkas vector of λ ≥ 0, Gᵀλ = 0, Σλ = 1, so it is a
// solution of G y ≥ c·𝟏 for some c > 0, i.e. a point of maximal scaled slack
// direction rather than an arbitrary one.
StrictResult strictly_feasible(const RationalMatrix& g, int cols);

// v is a nonnegative combination of the rows of `generators`.
bool in_cone(const RationalMatrix& generators, const RationalVector& v,
             int cols);

}  // namespace tropflag
