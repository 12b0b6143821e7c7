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
#include <string>
#include <vector>

namespace tropflag {

// Largest ground set supported by the bitmask representation.
inline constexpr int kMaxGroundSet = 30;

// A subset of the ground set [n] = {1, ..., n}, stored as a bitmask where
// element i occupies bit i - 1.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t mask) : mask_(mask) {}
  // Throws UsageError on elements outside 1..kMaxGroundSet or repeats.
  static Subset of(const std::vector<int>& elements);
  static Subset range(int n);  // [n]

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }
  int size() const { return __builtin_popcount(mask_); }
  int max_element() const { return mask_ ? 32 - __builtin_clz(mask_) : 0; }
  std::vector<int> elements() const;

  constexpr Subset with(int i) const { return Subset(mask_ | (1u << (i - 1))); }
  constexpr Subset without(int i) const {
    return Subset(mask_ & ~(1u << (i - 1)));
  }
  constexpr bool is_subset_of(Subset other) const {
    return (mask_ & ~other.mask_) == 0;
  }

  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset(a.mask_ | b.mask_);
  }
  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset(a.mask_ & b.mask_);
  }
  friend constexpr Subset operator-(Subset a, Subset b) {
    return Subset(a.mask_ & ~b.mask_);
  }
  friend constexpr bool operator==(Subset a, Subset b) = default;

  // "1,2,4" (empty string for the empty set).
  std::string to_string() const;

 private:
  std::uint32_t mask_ = 0;
};

// Lexicographic comparison of the sorted element lists.
bool lex_less(Subset a, Subset b);

std::uint64_t binomial(int n, int k);

// All k-subsets of [n] in lexicographic order.
std::vector<Subset> k_subsets(int n, int k);

// All k-subsets of `ground` in lexicographic order.
std::vector<Subset> k_subsets_of(Subset ground, int k);

// Position of a k-subset of [n] in the lexicographic order of k_subsets(n, k).
std::size_t lex_rank(Subset s, int n);

// Parses "1,2,4", "{1,2}", "" or "all"/"[n]" (the latter needs n).
Subset parse_subset(const std::string& text, int n);

}  // namespace tropflag
