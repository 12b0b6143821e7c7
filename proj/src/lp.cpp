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

#include "tropflag/lp.hpp"

#include "tropflag/errors.hpp"

namespace tropflag {

PhaseOneResult find_nonnegative_solution(const RationalMatrix& a,
                                         const RationalVector& b, int cols) {
  const int m = static_cast<int>(a.size());
  const int n = cols;
  if (static_cast<int>(b.size()) != m) throw UsageError("lp: rhs size mismatch");
  const int width = n + m;
  // Tableau rows: [A' | I | b'] with rows flipped so b' ≥ 0.
  std::vector<int> flip(m, 1);
  RationalMatrix t(m, RationalVector(width + 1));
  for (int i = 0; i < m; ++i) {
    if (sgn(b[i]) < 0) flip[i] = -1;
    for (int j = 0; j < n; ++j) t[i][j] = flip[i] < 0 ? Rational(-a[i][j]) : a[i][j];
    t[i][n + i] = 1;
    t[i][width] = flip[i] < 0 ? Rational(-b[i]) : b[i];
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;
  // Reduced costs of the phase-one objective Σ artificials; last entry holds
  // minus the objective value.
  RationalVector d(width + 1);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) d[j] -= t[i][j];
  }
  for (int i = 0; i < m; ++i) d[width] -= t[i][width];

  PhaseOneResult out;
  while (true) {
    int enter = -1;
    for (int j = 0; j < width; ++j) {
      if (sgn(d[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = t[i][width] / t[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    if (leave < 0) throw InternalError("lp: unbounded phase-one problem");
    const Rational inv = 1 / t[leave][enter];
    for (int j = 0; j <= width; ++j) {
      if (sgn(t[leave][j]) != 0) t[leave][j] *= inv;
    }
    for (int i = 0; i < m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      const Rational f = t[i][enter];
      for (int j = 0; j <= width; ++j) {
        if (sgn(t[leave][j]) != 0) t[i][j] -= f * t[leave][j];
      }
    }
    if (sgn(d[enter]) != 0) {
      const Rational f = d[enter];
      for (int j = 0; j <= width; ++j) {
        if (sgn(t[leave][j]) != 0) d[j] -= f * t[leave][j];
      }
    }
    basis[leave] = enter;
    ++out.pivots;
  }

  if (sgn(d[width]) == 0) {
    out.feasible = true;
    out.x.assign(n, Rational(0));
    for (int i = 0; i < m; ++i) {
      if (basis[i] < n) out.x[basis[i]] = t[i][width];
    }
    for (int i = 0; i < m; ++i) {
      if (dot(a[i], out.x) != b[i]) throw InternalError("lp: bad primal solution");
    }
    return out;
  }
  // Dual multipliers y_i = 1 - d_{n+i}; the Farkas vector is -y, unflipped.
  out.farkas.resize(m);
  for (int i = 0; i < m; ++i) {
    out.farkas[i] = (d[n + i] - 1) * flip[i];
  }
  for (int j = 0; j < n; ++j) {
    Rational s = 0;
    for (int i = 0; i < m; ++i) s += out.farkas[i] * a[i][j];
    if (sgn(s) < 0) throw InternalError("lp: bad Farkas certificate");
  }
  if (sgn(dot(out.farkas, b)) >= 0) throw InternalError("lp: bad Farkas certificate");
  return out;
}

StrictResult strictly_feasible(const RationalMatrix& g, int cols) {
  StrictResult out;
  const int p = static_cast<int>(g.size());
  if (p == 0) {
    out.feasible = true;
    out.point.assign(cols, Rational(0));
    return out;
  }
  // λ ≥ 0 with Gᵀλ = 0 and Σλ = 1.
  RationalMatrix a = transpose(g, cols);
  a.push_back(RationalVector(p, Rational(1)));
  RationalVector b(cols + 1);
  b[cols] = 1;
  const auto res = find_nonnegative_solution(a, b, p);
  if (res.feasible) {
    out.certificate = res.x;
    return out;
  }
  // Farkas (z, w): G z + w𝟏 ≥ 0 with w < 0, hence G z > 0.
  out.feasible = true;
  out.point.assign(res.farkas.begin(), res.farkas.begin() + cols);
  for (const auto& row : g) {
    if (sgn(dot(row, out.point)) <= 0) {
      throw InternalError("lp: strict point check failed");
    }
  }
  return out;
}

bool in_cone(const RationalMatrix& generators, const RationalVector& v,
             int cols) {
  if (generators.empty()) {
    for (const auto& x : v) {
      if (sgn(x) != 0) return false;
    }
    return true;
  }
  return find_nonnegative_solution(
             transpose(generators, cols), v,
             static_cast<int>(generators.size()))
      .feasible;
}

}  // namespace tropflag
