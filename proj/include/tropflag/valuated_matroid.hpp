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
#include <string>
#include <vector>

#include "tropflag/subset.hpp"
#include "tropflag/tropical.hpp"

namespace tropflag {

// A point of P(T^C(n,r)): one tropical value per r-subset of [n], stored in
// lexicographic subset order and normalized so the minimum finite value is 0.
// No exchange axiom is implied.
class PlueckerVector {
 public:
  // `values` is indexed by lexicographic position. Throws UsageError on a size
  // mismatch and DomainError when every value is ∞.
  PlueckerVector(int n, int r, std::vector<TropicalValue> values);
  // Entries not listed are ∞.
  static PlueckerVector from_entries(
      int n, int r, const std::vector<std::pair<Subset, TropicalValue>>& entries);

  int n() const { return n_; }
  int rank() const { return r_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<TropicalValue>& values() const { return values_; }
  // ∞ for subsets of the wrong size or outside [n].
  const TropicalValue& at(Subset s) const;
  std::vector<Subset> subsets() const { return k_subsets(n_, r_); }
  std::string to_string() const;

  friend bool operator==(const PlueckerVector&, const PlueckerVector&) = default;

 private:
  int n_ = 0;
  int r_ = 0;
  std::vector<TropicalValue> values_;
};

// An (I, J, i) triple for which no exchange partner j exists.
struct ExchangeWitness {
  Subset first;
  Subset second;
  int element = 0;
  std::string to_string() const;
};

struct ExchangeCheck {
  bool ok = true;
  std::optional<ExchangeWitness> witness;
};

// For all r-subsets I, J and i ∈ I∖J, looks for j ∈ J∖I with
// ν(I) + ν(J) ≥ ν(I - i + j) + ν(J - j + i). Triples are scanned in
// lexicographic order; the first failure is reported.
ExchangeCheck check_exchange_axiom(const PlueckerVector& p);

// A classical matroid given by its bases.
class Matroid {
 public:
  // Bases must be nonempty, of common size r. The basis-exchange axiom is not
  // checked here; see is_matroid.
  Matroid(int n, int r, std::vector<Subset> bases);

  int n() const { return n_; }
  int rank() const { return r_; }
  const std::vector<Subset>& bases() const { return bases_; }
  bool is_basis(Subset s) const;
  int rank_of(Subset a) const;
  Subset closure(Subset a) const;
  bool is_flat(Subset a) const { return closure(a) == a; }
  std::vector<Subset> flats() const;
  Matroid dual() const;
  Subset loops() const;

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  int n_;
  int r_;
  std::vector<Subset> bases_;  // lexicographic
  std::vector<bool> is_basis_;  // indexed by mask
};

// Brute-force classical basis exchange.
bool is_matroid(int n, int r, std::span<const Subset> bases);

// A Pluecker vector satisfying the exchange axiom.
class ValuatedMatroid {
 public:
  // Validates; throws DomainError carrying the witness on failure.
  explicit ValuatedMatroid(PlueckerVector p);
  // For constructions that are valuated matroids by theorem (dual, deletion,
  // minors of realizations). Tests re-check these.
  static ValuatedMatroid trusted(PlueckerVector p);

  int n() const { return p_.n(); }
  int rank() const { return p_.rank(); }
  const PlueckerVector& pluecker() const { return p_; }
  const TropicalValue& operator()(Subset s) const { return p_.at(s); }

  friend bool operator==(const ValuatedMatroid&, const ValuatedMatroid&) = default;

 private:
  struct TrustedTag {};
  ValuatedMatroid(PlueckerVector p, TrustedTag) : p_(std::move(p)) {}
  PlueckerVector p_;
};

// The trivial valuation (0 on bases, ∞ elsewhere).
ValuatedMatroid trivial_valuation(const Matroid& m);
ValuatedMatroid uniform_matroid(int r, int n);

// Bases = subsets with finite value.
Matroid underlying_matroid(const ValuatedMatroid& m);

// μ*(I) = μ([n] ∖ I).
ValuatedMatroid dual(const ValuatedMatroid& m);

// Deletion of S, on ground set [n]∖S relabeled order-preservingly to
// 1..n-|S|. S = ∅ returns m unchanged. Throws DomainError when [n]∖S has rank
// zero.
ValuatedMatroid deletion(const ValuatedMatroid& m, Subset s);

// μ∖S with the elements of S put back as loops, on the original ground set.
ValuatedMatroid mu_s(const ValuatedMatroid& m, Subset s);

// Rank of [n]∖S in the underlying matroid.
int deletion_rank(const ValuatedMatroid& m, Subset s);

// Appends new loop elements. Labels must be distinct and greater than n;
// they are placed, in increasing order, at positions n+1, n+2, ...
ValuatedMatroid direct_sum_with_loops(const ValuatedMatroid& m,
                                      std::span<const int> labels);
ValuatedMatroid add_loops(const ValuatedMatroid& m, int count);

// Maps positions of [n]∖S (ascending) to 1, 2, ...
Subset compress(Subset s, Subset keep);
// Inverse of compress.
Subset expand(Subset s, Subset keep);

}  // namespace tropflag
