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

#include "tropflag/subset.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include "tropflag/errors.hpp"

namespace tropflag {
namespace {

using BinomialTable = std::array<std::array<std::uint64_t, 33>, 33>;

constexpr BinomialTable make_binomials() {
  BinomialTable t{};
  for (int n = 0; n <= 32; ++n) {
    t[n][0] = 1;
    for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

constexpr BinomialTable kBinomials = make_binomials();

void collect(std::vector<int>& ground, std::size_t start, int k,
             std::uint32_t acc, std::vector<Subset>& out) {
  if (k == 0) {
    out.emplace_back(acc);
    return;
  }
  for (std::size_t i = start; i + k <= ground.size(); ++i) {
    collect(ground, i + 1, k - 1, acc | (1u << (ground[i] - 1)), out);
  }
}

}  // namespace

Subset Subset::of(const std::vector<int>& elements) {
  std::uint32_t mask = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxGroundSet) {
      throw UsageError("subset element " + std::to_string(e) +
                       " out of range");
    }
    if (mask & (1u << (e - 1))) {
      throw UsageError("repeated subset element " + std::to_string(e));
    }
    mask |= 1u << (e - 1);
  }
  return Subset(mask);
}

Subset Subset::range(int n) {
  if (n < 0 || n > kMaxGroundSet) throw UsageError("ground set size out of range");
  return Subset(n == 32 ? ~0u : ((1u << n) - 1));
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  for (std::uint32_t m = mask_; m; m &= m - 1) out.push_back(__builtin_ctz(m) + 1);
  return out;
}

std::string Subset::to_string() const {
  std::string out;
  for (int e : elements()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

bool lex_less(Subset a, Subset b) {
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return kBinomials[n][k];
}

std::vector<Subset> k_subsets(int n, int k) {
  return k_subsets_of(Subset::range(n), k);
}

std::vector<Subset> k_subsets_of(Subset ground, int k) {
  std::vector<Subset> out;
  if (k < 0) return out;
  auto elems = ground.elements();
  if (k > static_cast<int>(elems.size())) return out;
  out.reserve(binomial(static_cast<int>(elems.size()), k));
  collect(elems, 0, k, 0, out);
  return out;
}

std::size_t lex_rank(Subset s, int n) {
  const int k = s.size();
  std::size_t rank = 0;
  int prev = 0;
  int i = 1;
  for (int c : s.elements()) {
    for (int v = prev + 1; v < c; ++v) rank += binomial(n - v, k - i);
    prev = c;
    ++i;
  }
  return rank;
}

Subset parse_subset(const std::string& text, int n) {
  std::string cleaned;
  for (char ch : text) {
    if (ch != '{' && ch != '}' && ch != '[' && ch != ']' &&
        !std::isspace(static_cast<unsigned char>(ch))) {
      cleaned += ch;
    }
  }
  if (cleaned == "all" || (n > 0 && cleaned == std::to_string(n) &&
                           text.find('[') != std::string::npos)) {
    return Subset::range(n);
  }
  if (cleaned.empty() || cleaned == "-") return Subset();
  std::vector<int> elems;
  std::stringstream ss(cleaned);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw UsageError("bad subset element '" + tok + "'");
    }
    if (used != tok.size()) throw UsageError("bad subset element '" + tok + "'");
    if (n > 0 && (v < 1 || v > n)) {
      throw UsageError("subset element " + tok + " outside [" +
                       std::to_string(n) + "]");
    }
    elems.push_back(v);
  }
  return Subset::of(elems);
}

}  // namespace tropflag
