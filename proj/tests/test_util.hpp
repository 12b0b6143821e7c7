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
#include <initializer_list>
#include <string>
#include <vector>

#include "tropflag/tropical.hpp"
#include "tropflag/valuated_matroid.hpp"

namespace tropflag::testing {

// Parses "inf" and rational literals; convenient in brace lists.
inline std::vector<TropicalValue> vals(
    std::initializer_list<const char*> items) {
  std::vector<TropicalValue> out;
  for (const char* s : items) out.push_back(TropicalValue::parse(s));
  return out;
}

inline TropicalPoint pt(std::initializer_list<const char*> items) {
  return normalize(vals(items));
}

inline PlueckerVector pv(int n, int r,
                         std::initializer_list<const char*> items) {
  return PlueckerVector(n, r, vals(items));
}

inline ValuatedMatroid vm(int n, int r,
                          std::initializer_list<const char*> items) {
  return ValuatedMatroid(pv(n, r, items));
}

inline Subset set(std::initializer_list<int> items) {
  return Subset::of(std::vector<int>(items));
}

// Brute-force oracles: plain loops over bitmasks, independent of the library's
// subset enumeration and witness search.

inline TropicalValue value_at(const PlueckerVector& p, std::uint32_t mask) {
  return p.at(Subset(mask));
}

// μ(I) + ν(J) ≥ μ(I - i + j) + ν(J - j + i) for some j, for all I, J, i.
inline bool oracle_exchange_pair(const PlueckerVector& mu,
                                 const PlueckerVector& nu) {
  const int n = mu.n();
  for (std::uint32_t I = 0; I < (1u << n); ++I) {
    if (__builtin_popcount(I) != mu.rank()) continue;
    for (std::uint32_t J = 0; J < (1u << n); ++J) {
      if (__builtin_popcount(J) != nu.rank()) continue;
      const TropicalValue lhs = odot(value_at(mu, I), value_at(nu, J));
      if (lhs.is_infinite()) continue;
      for (int i = 0; i < n; ++i) {
        const std::uint32_t bi = 1u << i;
        if (!(I & bi) || (J & bi)) continue;
        bool found = false;
        for (int j = 0; j < n && !found; ++j) {
          const std::uint32_t bj = 1u << j;
          if (!(J & bj) || (I & bj)) continue;
          const TropicalValue rhs = odot(value_at(mu, (I & ~bi) | bj),
                                         value_at(nu, (J & ~bj) | bi));
          found = lhs >= rhs;
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

inline bool oracle_exchange(const PlueckerVector& p) {
  return oracle_exchange_pair(p, p);
}

// Coordinates of x at the positions of `keep` (1-based, ascending).
inline std::vector<TropicalValue> restrict_coords(const TropicalPoint& x,
                                                  Subset keep) {
  std::vector<TropicalValue> out;
  for (int e : keep.elements()) out.push_back(x[e - 1]);
  return out;
}

}  // namespace tropflag::testing
