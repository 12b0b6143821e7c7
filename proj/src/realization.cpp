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

#include "tropflag/realization.hpp"

#include <algorithm>

#include "tropflag/errors.hpp"

namespace tropflag {
namespace {

// Row-echelon form by fraction-free elimination, skipping columns without a
// pivot. Returns the rank; `m` is overwritten.
int bareiss_echelon(ValuedMatrix& m, int* sign = nullptr) {
  const int rows = m.rows(), cols = m.cols();
  LaurentElement prev(1);
  int rank = 0;
  if (sign) *sign = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i) {
      if (!m(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int j = 0; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
      if (sign) *sign = -*sign;
    }
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        m(i, j) = exact_divide(m(rank, col) * m(i, j) - m(i, col) * m(rank, j),
                               prev);
      }
      m(i, col) = LaurentElement();
    }
    prev = m(rank, col);
    ++rank;
  }
  return rank;
}

LaurentElement random_entry(std::mt19937_64& rng, const ExponentRange& range) {
  std::uniform_int_distribution<int> kind(0, 5);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> expo(range.low * range.denominator,
                                          range.high * range.denominator);
  const int k = kind(rng);
  if (k == 0) return {};
  LaurentElement out;
  const int terms = k == 5 ? 2 : 1;
  for (int i = 0; i < terms; ++i) {
    int c = 0;
    while (c == 0) c = coeff(rng);
    out += LaurentElement(Rational(c), Rational(expo(rng), range.denominator));
  }
  return out;
}

}  // namespace

ValuedMatrix::ValuedMatrix(int rows, int cols)
    : ValuedMatrix(rows, cols, std::vector<LaurentElement>(
                                   static_cast<std::size_t>(rows) * cols)) {}

ValuedMatrix::ValuedMatrix(int rows, int cols,
                           std::vector<LaurentElement> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0 || cols > kMaxGroundSet) {
    throw UsageError("matrix dimensions out of range");
  }
  if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
    throw UsageError("matrix entry count mismatch");
  }
}

ValuedMatrix ValuedMatrix::parse(
    const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) throw UsageError("matrix with no rows");
  const int cols = static_cast<int>(rows.front().size());
  std::vector<LaurentElement> entries;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols) throw UsageError("ragged matrix");
    for (const auto& e : row) entries.push_back(LaurentElement::parse(e));
  }
  return ValuedMatrix(static_cast<int>(rows.size()), cols, std::move(entries));
}

ValuedMatrix ValuedMatrix::stacked(const ValuedMatrix& below) const {
  if (below.cols_ != cols_) throw UsageError("column count mismatch");
  std::vector<LaurentElement> entries = entries_;
  entries.insert(entries.end(), below.entries_.begin(), below.entries_.end());
  return ValuedMatrix(rows_ + below.rows_, cols_, std::move(entries));
}

ValuedMatrix ValuedMatrix::columns(const std::vector<int>& cols) const {
  ValuedMatrix out(rows_, static_cast<int>(cols.size()));
  for (int i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out(i, static_cast<int>(j)) = (*this)(i, cols[j]);
    }
  }
  return out;
}

std::string ValuedMatrix::to_string() const {
  std::string out;
  for (int i = 0; i < rows_; ++i) {
    out += "[";
    for (int j = 0; j < cols_; ++j) {
      out += (j ? ", " : "") + (*this)(i, j).to_string();
    }
    out += "]\n";
  }
  return out;
}

LaurentElement determinant(const ValuedMatrix& a) {
  if (a.rows() != a.cols()) throw UsageError("determinant of non-square matrix");
  if (a.rows() == 0) return LaurentElement(1);
  ValuedMatrix m = a;
  int sign = 1;
  if (bareiss_echelon(m, &sign) < a.rows()) return {};
  LaurentElement det = m(a.rows() - 1, a.cols() - 1);
  return sign < 0 ? -det : det;
}

int matrix_rank(const ValuedMatrix& a) {
  ValuedMatrix m = a;
  return bareiss_echelon(m);
}

PlueckerData pluecker_vector(const ValuedMatrix& a) {
  const int r = a.rows(), n = a.cols();
  if (r > n) throw DomainError("more rows than columns");
  PlueckerData out{{}, PlueckerVector(0, 0, {TropicalValue(0)})};
  std::vector<TropicalValue> vals;
  for (Subset s : k_subsets(n, r)) {
    std::vector<int> cols;
    for (int e : s.elements()) cols.push_back(e - 1);
    out.minors.push_back(determinant(a.columns(cols)));
    vals.push_back(out.minors.back().valuation());
  }
  if (std::all_of(vals.begin(), vals.end(),
                  [](const TropicalValue& v) { return v.is_infinite(); })) {
    throw DomainError("matrix does not have full row rank");
  }
  out.tropical = PlueckerVector(n, r, std::move(vals));
  return out;
}

ValuedMatrix project_matrix(const ValuedMatrix& a, Subset S) {
  ValuedMatrix out = a;
  for (int s : S.elements()) {
    if (s > a.cols()) throw UsageError("projection index out of range");
    for (int i = 0; i < a.rows(); ++i) out(i, s - 1) = LaurentElement();
  }
  return out;
}

bool rowspace_contains(const ValuedMatrix& b, const ValuedMatrix& a) {
  return matrix_rank(b.stacked(a)) == matrix_rank(b);
}

bool verify_classical_ld_relations(const ValuedMatrix& a, const ValuedMatrix& b,
                                   Subset S) {
  if (a.cols() != b.cols()) throw UsageError("column count mismatch");
  const int n = a.cols();
  const auto pa = pluecker_vector(a);
  const auto pb = pluecker_vector(b);
  bool all_vanish = true;
  for (const auto& rel :
       generate_signed_relations(a.rows(), b.rows(), S, n, false)) {
    LaurentElement sum;
    for (const auto& term : rel.terms) {
      sum += LaurentElement(term.coefficient) *
             pa.minors[lex_rank(term.monomial.a, n)] *
             pb.minors[lex_rank(term.monomial.b, n)];
    }
    if (!sum.is_zero()) {
      all_vanish = false;
      break;
    }
  }
  const bool contained = rowspace_contains(b, project_matrix(a, S));
  if (contained != all_vanish) {
    throw InternalError("linear degenerate relations disagree with "
                        "projected row-space containment");
  }
  return all_vanish;
}

ValuedMatrix random_full_rank_matrix(int r, int n, std::mt19937_64& rng,
                                     ExponentRange range) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    ValuedMatrix m(r, n);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = random_entry(rng, range);
    }
    if (matrix_rank(m) == r) return m;
  }
  throw DomainError("no full-rank sample found");
}

std::vector<ValuedMatrix> random_ld_realization(const DegenerationType& dt,
                                                std::mt19937_64& rng,
                                                ExponentRange range) {
  const int n = dt.n();
  std::vector<ValuedMatrix> out;
  out.push_back(random_full_rank_matrix(dt.ranks()[0], n, rng, range));
  for (int i = 0; i + 1 < dt.length(); ++i) {
    const ValuedMatrix projected = project_matrix(out.back(), dt.S()[i]);
    // Keep a basis of the projected rows.
    ValuedMatrix basis(0, n);
    for (int row = 0; row < projected.rows(); ++row) {
      const ValuedMatrix candidate =
          basis.stacked(ValuedMatrix(1, n, [&] {
            std::vector<LaurentElement> e;
            for (int j = 0; j < n; ++j) e.push_back(projected(row, j));
            return e;
          }()));
      if (matrix_rank(candidate) == candidate.rows()) basis = candidate;
    }
    const int target = dt.ranks()[i + 1];
    if (basis.rows() > target) {
      throw DomainError("projected span exceeds the next rank");
    }
    ValuedMatrix next = basis;
    for (int attempt = 0; next.rows() < target; ++attempt) {
      if (attempt > 200) throw DomainError("no full-rank extension found");
      ValuedMatrix row(1, n);
      for (int j = 0; j < n; ++j) row(0, j) = random_entry(rng, range);
      const ValuedMatrix candidate = next.stacked(row);
      if (matrix_rank(candidate) == candidate.rows()) next = candidate;
    }
    out.push_back(std::move(next));
  }
  return out;
}

std::pair<ValuedMatrix, ValuedMatrix> counterexample_matrices(
    const Rational& a, const Rational& b) {
  const LaurentElement one(1);
  ValuedMatrix a1(1, 4, {one, one, one, one});
  ValuedMatrix a2(2, 4,
                  {one, one, one, one, LaurentElement(1, a), LaurentElement(),
                   LaurentElement(1, b), one});
  return {a1, a2};
}

}  // namespace tropflag
