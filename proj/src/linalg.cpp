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

#include "tropflag/linalg.hpp"

#include "tropflag/errors.hpp"

namespace tropflag {

Echelon rref(const RationalMatrix& m, int cols) {
  RationalMatrix a = m;
  Echelon out;
  int row = 0;
  const int rows = static_cast<int>(a.size());
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int i = row; i < rows; ++i) {
      if (sgn(a[i][col]) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[row]);
    const Rational inv = 1 / a[row][col];
    for (int j = col; j < cols; ++j) a[row][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || sgn(a[i][col]) == 0) continue;
      const Rational f = a[i][col];
      for (int j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
    }
    out.pivots.push_back(col);
    ++row;
  }
  a.resize(row);
  out.rows = std::move(a);
  return out;
}

int rank(const RationalMatrix& m, int cols) {
  return static_cast<int>(rref(m, cols).pivots.size());
}

RationalMatrix nullspace(const RationalMatrix& m, int cols) {
  const Echelon e = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int p : e.pivots) is_pivot[p] = true;
  RationalMatrix basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      v[e.pivots[r]] = -e.rows[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool row_space_contains(const RationalMatrix& space, const RationalMatrix& sub,
                        int cols) {
  RationalMatrix both = space;
  both.insert(both.end(), sub.begin(), sub.end());
  return rank(both, cols) == rank(space, cols);
}

RationalVector reduce_modulo(const RationalVector& v, const Echelon& space) {
  RationalVector out = v;
  for (std::size_t r = 0; r < space.rows.size(); ++r) {
    const Rational f = out[space.pivots[r]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] -= f * space.rows[r][j];
  }
  return out;
}

RationalVector orthogonal_residual(const RationalVector& v,
                                   const RationalMatrix& basis) {
  if (basis.empty()) return v;
  const int k = static_cast<int>(basis.size());
  // Solve (B Bᵀ) c = B v, then return v - Bᵀ c.
  RationalMatrix system(k, RationalVector(k + 1));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) system[i][j] = dot(basis[i], basis[j]);
    system[i][k] = dot(basis[i], v);
  }
  const Echelon e = rref(system, k + 1);
  if (static_cast<int>(e.pivots.size()) != k || e.pivots.back() >= k) {
    throw InternalError("orthogonal_residual: dependent basis");
  }
  RationalVector out = v;
  for (int i = 0; i < k; ++i) {
    const Rational& c = e.rows[i][k];
    for (std::size_t j = 0; j < out.size(); ++j) out[j] -= c * basis[i][j];
  }
  return out;
}

RationalVector primitive(const RationalVector& v) {
  mpz_class den = 1, num = 0;
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  RationalVector out;
  for (const auto& x : v) out.push_back(x * den);
  for (const auto& x : out) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
  }
  if (num == 0) return out;
  for (auto& x : out) x /= num;
  return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

RationalVector multiply(const RationalMatrix& m, const RationalVector& x) {
  RationalVector out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(dot(row, x));
  return out;
}

RationalMatrix transpose(const RationalMatrix& m, int cols) {
  RationalMatrix out(cols, RationalVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (int j = 0; j < cols; ++j) out[j][i] = m[i][j];
  }
  return out;
}

}  // namespace tropflag
