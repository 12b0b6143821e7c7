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

#include "tropflag/corpus.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "tropflag/errors.hpp"
#include "tropflag/realization.hpp"

namespace tropflag {

std::vector<Matroid> all_matroids(int n, int r) {
  if (n < 0 || n > 5 || r < 0 || r > n) {
    throw UsageError("matroid enumeration supports 0 <= r <= n <= 5");
  }
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Matroid>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find({n, r}); it != cache.end()) return it->second;
  const auto subsets = k_subsets(n, r);
  std::vector<Matroid> out;
  const std::uint64_t families = std::uint64_t{1} << subsets.size();
  for (std::uint64_t code = 1; code < families; ++code) {
    std::vector<Subset> bases;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      if (code >> i & 1u) bases.push_back(subsets[i]);
    }
    if (is_matroid(n, r, bases)) out.emplace_back(n, r, std::move(bases));
  }
  cache.emplace(std::make_pair(n, r), out);
  return out;
}

std::vector<Matroid> all_matroids(int n) {
  std::vector<Matroid> out;
  for (int r = 0; r <= n; ++r) {
    auto part = all_matroids(n, r);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::optional<ValuatedMatroid> random_valuation(const Matroid& m,
                                                std::mt19937_64& rng,
                                                int max_value, int attempts) {
  std::uniform_int_distribution<int> value(0, max_value);
  for (int a = 0; a < attempts; ++a) {
    std::vector<TropicalValue> vals;
    for (Subset s : k_subsets(m.n(), m.rank())) {
      vals.push_back(m.is_basis(s) ? TropicalValue(value(rng)) : TropicalValue());
    }
    PlueckerVector p(m.n(), m.rank(), std::move(vals));
    if (check_exchange_axiom(p).ok) return ValuatedMatroid::trusted(std::move(p));
  }
  return std::nullopt;
}

ValuatedMatroid random_valuated_matroid(int n, int r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> family(0, 2);
  const auto pool = all_matroids(n, r);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  switch (family(rng)) {
    case 0:
      return trivial_valuation(pool[pick(rng)]);
    case 1:
      for (int attempt = 0; attempt < 20; ++attempt) {
        if (auto v = random_valuation(pool[pick(rng)], rng)) return *v;
      }
      return trivial_valuation(pool[pick(rng)]);
    default:
      return ValuatedMatroid(
          pluecker_vector(random_full_rank_matrix(r, n, rng)).tropical);
  }
}

std::vector<ValuatedMatroid> matroid_corpus(int max_n, int extra_per_rank,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ValuatedMatroid> out;
  for (int n = 1; n <= max_n; ++n) {
    for (int r = 0; r <= n; ++r) {
      const auto pool = all_matroids(n, r);
      for (const auto& m : pool) out.push_back(trivial_valuation(m));
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      for (int i = 0; i < extra_per_rank; ++i) {
        if (auto v = random_valuation(pool[pick(rng)], rng)) out.push_back(*v);
        out.push_back(ValuatedMatroid(
            pluecker_vector(random_full_rank_matrix(r, n, rng)).tropical));
      }
    }
  }
  return out;
}

namespace {

std::vector<int> random_ranks(int n, int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> rank(1, n);
  std::vector<int> ranks(k);
  for (auto& r : ranks) r = rank(rng);
  std::sort(ranks.begin(), ranks.end());
  return ranks;
}

Subset random_subset(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.3);
  Subset s;
  for (int e = 1; e <= n; ++e) {
    if (coin(rng)) s = s.with(e);
  }
  return s;
}

// Resamples S_i until every step has positive deletion rank.
std::vector<Subset> admissible_sets(const std::vector<ValuatedMatroid>& ms,
                                    std::mt19937_64& rng) {
  std::vector<Subset> S;
  for (std::size_t i = 0; i + 1 < ms.size(); ++i) {
    Subset s = random_subset(ms[i].n(), rng);
    for (int attempt = 0; attempt < 20 && !s.empty() &&
                          deletion_rank(ms[i], s) == 0;
         ++attempt) {
      s = random_subset(ms[i].n(), rng);
    }
    if (!s.empty() && deletion_rank(ms[i], s) == 0) s = Subset();
    S.push_back(s);
  }
  return S;
}

}  // namespace

FlagInstance random_flag_instance(int n, int k, std::mt19937_64& rng) {
  if (n < 1 || n > 5 || k < 1) throw UsageError("flag corpus needs 1 <= n <= 5");
  const auto ranks = random_ranks(n, k, rng);
  std::uniform_int_distribution<int> family(0, 2);
  const int kind = family(rng);
  if (kind == 2) {
    std::vector<ValuatedMatroid> ms;
    for (int r : ranks) ms.push_back(random_valuated_matroid(n, r, rng));
    auto S = admissible_sets(ms, rng);
    return FlagInstance(std::move(ms), DegenerationType(ranks, std::move(S), n));
  }
  // Realizable: draw S first, then a realization; the columns outside S_i
  // of L_i have full rank with high probability, otherwise resample.
  for (int attempt = 0;; ++attempt) {
    std::vector<Subset> S(k - 1);
    for (auto& s : S) s = attempt < 10 ? random_subset(n, rng) : Subset();
    const DegenerationType dt(ranks, S, n);
    const auto mats = random_ld_realization(dt, rng);
    std::vector<ValuatedMatroid> ms;
    for (const auto& m : mats) ms.emplace_back(pluecker_vector(m).tropical);
    bool ok = true;
    for (int i = 0; i + 1 < k; ++i) {
      if (!S[i].empty() && deletion_rank(ms[i], S[i]) == 0) ok = false;
    }
    if (!ok) continue;
    if (kind == 1) {
      std::uniform_int_distribution<int> which(0, k - 1);
      const int i = which(rng);
      ms[i] = random_valuated_matroid(n, ranks[i], rng);
      if (i + 1 < k && !S[i].empty() && deletion_rank(ms[i], S[i]) == 0) {
        S[i] = Subset();
      }
    }
    return FlagInstance(std::move(ms), DegenerationType(ranks, std::move(S), n));
  }
}

}  // namespace tropflag
