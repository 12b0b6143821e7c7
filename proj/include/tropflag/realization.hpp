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

#include <random>
#include <string>
#include <vector>

#include "tropflag/laurent.hpp"
#include "tropflag/relations.hpp"
#include "tropflag/valuated_matroid.hpp"

namespace tropflag {

// An r × n matrix over finite Laurent sums; its row span realizes a
// subspace of K^n.
class ValuedMatrix {
 public:
  ValuedMatrix(int rows, int cols);
  ValuedMatrix(int rows, int cols, std::vector<LaurentElement> entries);
  // Rows of Laurent strings, e.g. {{"1","1"},{"t","0"}}. Throws UsageError on
  // ragged input.
  static ValuedMatrix parse(const std::vector<std::vector<std::string>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const LaurentElement& operator()(int i, int j) const {
    return entries_[i * cols_ + j];
  }
  LaurentElement& operator()(int i, int j) { return entries_[i * cols_ + j]; }
  ValuedMatrix stacked(const ValuedMatrix& below) const;
  // Columns listed (0-based), in order.
  ValuedMatrix columns(const std::vector<int>& cols) const;
  std::string to_string() const;

  friend bool operator==(const ValuedMatrix&, const ValuedMatrix&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<LaurentElement> entries_;
};

// Fraction-free Bareiss elimination. Throws UsageError for non-square input.
LaurentElement determinant(const ValuedMatrix& a);
int matrix_rank(const ValuedMatrix& a);

struct PlueckerData {
  std::vector<LaurentElement> minors;  // lexicographic over C(n, r)
  PlueckerVector tropical;
};

// Maximal minors and their valuations. Throws DomainError if the rows are
// dependent.
PlueckerData pluecker_vector(const ValuedMatrix& a);

// Columns in S (1-based) replaced by zeros.
ValuedMatrix project_matrix(const ValuedMatrix& a, Subset S);

// Every row of `a` lies in the row space of `b`.
bool rowspace_contains(const ValuedMatrix& b, const ValuedMatrix& a);

// Evaluates every relation of P_{r,s;S;n} on the minors of A (rank r) and B
// (rank s) and reports whether all vanish. Also decides
// rowspace_contains(B, project_matrix(A, S)) and throws InternalError if the
// two answers differ.
bool verify_classical_ld_relations(const ValuedMatrix& a, const ValuedMatrix& b,
                                   Subset S);

struct ExponentRange {
  int low = -2;
  int high = 2;
  int denominator = 2;  // exponents are k/denominator
};

// Random matrices L_1, …, L_k with rank r_i and pr_{S_i}(L_i) ⊆ L_{i+1}.
// Throws DomainError if no full-rank sample is found.
std::vector<ValuedMatrix> random_ld_realization(const DegenerationType& dt,
                                                std::mt19937_64& rng,
                                                ExponentRange range = {});

// A random full-rank r × n matrix.
ValuedMatrix random_full_rank_matrix(int r, int n, std::mt19937_64& rng,
                                     ExponentRange range = {});

// The two-step flag with A₁ = (1 1 1 1) and A₂ = ((1,1,1,1),(t^a,0,t^b,1)).
std::pair<ValuedMatrix, ValuedMatrix> counterexample_matrices(
    const Rational& a, const Rational& b);

}  // namespace tropflag
