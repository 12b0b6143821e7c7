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

#include <optional>
#include <random>
#include <vector>

#include "tropflag/quotient.hpp"
#include "tropflag/valuated_matroid.hpp"

namespace tropflag {

// Test-corpus generators. All randomness flows through the caller's engine.

// Every matroid of rank r on [n], by filtering basis families through the
// exchange axiom. Feasible for n ≤ 5 (at most 2^10 families per rank).
std::vector<Matroid> all_matroids(int n, int r);
// All ranks 0..n.
std::vector<Matroid> all_matroids(int n);

// Draws values in {0,..,max_value} on the bases of m until the exchange axiom
// holds; nullopt after `attempts` failures.
std::optional<ValuatedMatroid> random_valuation(const Matroid& m,
                                                std::mt19937_64& rng,
                                                int max_value = 3,
                                                int attempts = 200);

// A random valuated matroid of rank r on [n]: a trivially valued, sampled,
// or realizable one, chosen at random.
ValuatedMatroid random_valuated_matroid(int n, int r, std::mt19937_64& rng);

// The three corpus families for ground sets up to max_n: every matroid with
// its trivial valuation, plus `extra_per_rank` sampled and realizable
// valuations for each (n, r).
std::vector<ValuatedMatroid> matroid_corpus(int max_n, int extra_per_rank,
                                            std::uint64_t seed);

// A random FlagInstance on [n] with k factors. Degeneration sets are drawn so
// that no step needs a rank-zero deletion. The factors come from one of:
// a tropicalized random LD realization (always a member), the same with one
// factor replaced at random, or independently drawn valuated matroids.
FlagInstance random_flag_instance(int n, int k, std::mt19937_64& rng);

}  // namespace tropflag
