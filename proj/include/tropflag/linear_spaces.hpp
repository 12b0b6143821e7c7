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
#include <span>
#include <vector>

#include "tropflag/subset.hpp"
#include "tropflag/tropical.hpp"
#include "tropflag/valuated_matroid.hpp"

namespace tropflag {

enum class VectorKind { kCircuit, kCocircuit, kVector };

struct CircuitVector {
  TropicalPoint point;
  VectorKind kind = VectorKind::kCircuit;
  // The index set I it was read from: I ∈ C(n, r+1) for circuits,
  // I ∈ C(n, r-1) for cocircuits.
  Subset origin;
  Subset support() const;
};

// C_μ(I)_i = μ(I∖i) for i ∈ I, ∞ otherwise; all-∞ vectors dropped, repeats
// (after normalization) dropped, first occurrence in lexicographic I order
// kept.
std::vector<CircuitVector> circuits(const ValuatedMatroid& m);
// C*_μ(I)_i = μ(I∪i) for i ∉ I, ∞ on I.
std::vector<CircuitVector> cocircuits(const ValuatedMatroid& m);

// Every circuit form achieves its minimum at least twice at x. Throws
// UsageError on a size mismatch.
bool in_tropical_linear_space(const TropicalPoint& x, const ValuatedMatroid& m);

// ⊕ λ_g ⊙ g with finite λ. Throws UsageError on empty or mismatched input
// and DomainError on an infinite coefficient.
TropicalPoint tropical_span(std::span<const TropicalPoint> generators,
                            std::span<const TropicalValue> lambdas);
TropicalPoint cocircuit_span_sample(const ValuatedMatroid& m,
                                    std::span<const TropicalValue> lambdas);
TropicalPoint vectors_sample(const ValuatedMatroid& m,
                             std::span<const TropicalValue> lambdas);

// Residuation test: with λ*_g = max over finite g_j of (x_j - g_j), x lies in
// the span iff ⊕ λ*_g ⊙ g = x. Generators that are finite where x is ∞ are
// unusable and skipped.
bool span_membership(const TropicalPoint& x,
                     std::span<const TropicalPoint> generators);
std::vector<TropicalPoint> points_of(std::span<const CircuitVector> vectors);

// Coordinates in S set to ∞; nullopt if nothing finite remains.
std::optional<TropicalPoint> trop_project(const TropicalPoint& x, Subset S);

struct ContainmentReport {
  bool contained = true;
  // A cocircuit of μ whose projection leaves trop(ν).
  std::optional<TropicalPoint> witness;
};

// pr_S(trop(μ)) ⊆ trop(ν), decided on the cocircuits of μ.
ContainmentReport projection_containment(const ValuatedMatroid& mu,
                                         const ValuatedMatroid& nu, Subset S);

// Extends v ∈ trop(μ∖s) × {∞} to a point of trop(μ) by choosing coordinate s
// from a circuit whose minimum away from s is unique (∞ if there is none).
// Throws DomainError if v is not of that form, and InternalError if two
// witness circuits disagree or the result leaves trop(μ).
TropicalPoint lift_point(const TropicalPoint& v, const ValuatedMatroid& m,
                         int s);

// Iterates lift_point over the elements of S: maps a point of trop(μ_S) to a
// point of trop(μ) that projects back to it.
TropicalPoint lift_through(const TropicalPoint& w, const ValuatedMatroid& m,
                           Subset S);

}  // namespace tropflag
