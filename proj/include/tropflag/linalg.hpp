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

#include <vector>

#include "tropflag/tropical.hpp"

namespace tropflag {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;  // row-major

struct Echelon {
  RationalMatrix rows;      // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column of each row
};

// Exact reduced row echelon form of a matrix with `cols` columns.
Echelon rref(const RationalMatrix& m, int cols);
int rank(const RationalMatrix& m, int cols);
// Basis of { x : m x = 0 }, one vector per free column.
RationalMatrix nullspace(const RationalMatrix& m, int cols);
// Every row of `sub` lies in the row space of `space`.
bool row_space_contains(const RationalMatrix& space,
                        const RationalMatrix& sub, int cols);
// v minus its component in the row space of `basis` w.r.t. the RREF pivots:
// a canonical representative of v modulo that space.
RationalVector reduce_modulo(const RationalVector& v, const Echelon& space);
// Orthogonal projection onto the complement of the row space of `basis`.
RationalVector orthogonal_residual(const RationalVector& v,
                                   const RationalMatrix& basis);
// Positive multiple with coprime integer entries; zero stays zero.
RationalVector primitive(const RationalVector& v);

Rational dot(const RationalVector& a, const RationalVector& b);
RationalVector multiply(const RationalMatrix& m, const RationalVector& x);
RationalMatrix transpose(const RationalMatrix& m, int cols);

}  // namespace tropflag
