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

#include "tropflag/valuated_matroid.hpp"

#include <algorithm>
#include <sstream>

#include "tropflag/errors.hpp"

namespace tropflag {
namespace {

const TropicalValue& infinity_ref() {
  static const TropicalValue inf;
  return inf;
}

bool exchange_holds(const PlueckerVector& p, Subset a, Subset b, int i) {
  const TropicalValue lhs = odot(p.at(a), p.at(b));
  if (lhs.is_infinite()) return true;
  for (int j : (b - a).elements()) {
    const TropicalValue rhs = odot(p.at(a.without(i).with(j)),
                                   p.at(b.without(j).with(i)));
    if (!(lhs < rhs)) return true;
  }
  return false;
}

}  // namespace

PlueckerVector::PlueckerVector(int n, int r, std::vector<TropicalValue> values)
    : n_(n), r_(r) {
  if (n < 0 || n > kMaxGroundSet || r < 0 || r > n) {
    throw UsageError("Pluecker vector with invalid (n, r) = (" +
                     std::to_string(n) + ", " + std::to_string(r) + ")");
  }
  if (values.size() != binomial(n, r)) {
    throw UsageError("Pluecker vector expects " +
                     std::to_string(binomial(n, r)) + " values, got " +
                     std::to_string(values.size()));
  }
  values_ = normalize(std::move(values)).coords();
}

PlueckerVector PlueckerVector::from_entries(
    int n, int r,
    const std::vector<std::pair<Subset, TropicalValue>>& entries) {
  if (n < 0 || n > kMaxGroundSet || r < 0 || r > n) {
    throw UsageError("invalid (n, r)");
  }
  std::vector<TropicalValue> values(binomial(n, r));
  std::vector<bool> seen(values.size(), false);
  for (const auto& [s, v] : entries) {
    if (s.size() != r || !s.is_subset_of(Subset::range(n))) {
      throw UsageError("entry {" + s.to_string() + "} is not a " +
                       std::to_string(r) + "-subset of [" + std::to_string(n) +
                       "]");
    }
    const auto idx = lex_rank(s, n);
    if (seen[idx]) throw UsageError("duplicate entry {" + s.to_string() + "}");
    seen[idx] = true;
    values[idx] = v;
  }
  return PlueckerVector(n, r, std::move(values));
}

const TropicalValue& PlueckerVector::at(Subset s) const {
  if (s.size() != r_ || !s.is_subset_of(Subset::range(n_))) {
    return infinity_ref();
  }
  return values_[lex_rank(s, n_)];
}

std::string PlueckerVector::to_string() const {
  std::ostringstream os;
  const auto subs = subsets();
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (i) os << ' ';
    os << '{' << subs[i].to_string() << "}=" << values_[i].to_string();
  }
  return os.str();
}

std::string ExchangeWitness::to_string() const {
  return "I={" + first.to_string() + "} J={" + second.to_string() +
         "} i=" + std::to_string(element);
}

ExchangeCheck check_exchange_axiom(const PlueckerVector& p) {
  const auto subs = p.subsets();
  for (Subset a : subs) {
    if (p.at(a).is_infinite()) continue;
    for (Subset b : subs) {
      if (p.at(b).is_infinite()) continue;
      for (int i : (a - b).elements()) {
        if (!exchange_holds(p, a, b, i)) {
          return {false, ExchangeWitness{a, b, i}};
        }
      }
    }
  }
  return {};
}

Matroid::Matroid(int n, int r, std::vector<Subset> bases)
    : n_(n), r_(r), bases_(std::move(bases)) {
  if (n < 0 || n > 20) throw UsageError("matroid ground set out of range");
  if (bases_.empty()) throw DomainError("matroid with no bases");
  std::sort(bases_.begin(), bases_.end(), lex_less);
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  is_basis_.assign(std::size_t{1} << n, false);
  for (Subset b : bases_) {
    if (b.size() != r || !b.is_subset_of(Subset::range(n))) {
      throw UsageError("basis {" + b.to_string() + "} has wrong size");
    }
    is_basis_[b.mask()] = true;
  }
}

bool Matroid::is_basis(Subset s) const {
  return s.is_subset_of(Subset::range(n_)) && is_basis_[s.mask()];
}

int Matroid::rank_of(Subset a) const {
  int best = 0;
  for (Subset b : bases_) best = std::max(best, (a & b).size());
  return best;
}

Subset Matroid::closure(Subset a) const {
  const int rk = rank_of(a);
  Subset out = a;
  for (int e = 1; e <= n_; ++e) {
    if (!a.contains(e) && rank_of(a.with(e)) == rk) out = out.with(e);
  }
  return out;
}

std::vector<Subset> Matroid::flats() const {
  std::vector<Subset> out;
  for (std::uint32_t mask = 0; mask < (1u << n_); ++mask) {
    if (is_flat(Subset(mask))) out.emplace_back(mask);
  }
  return out;
}

Matroid Matroid::dual() const {
  std::vector<Subset> out;
  for (Subset b : bases_) out.push_back(Subset::range(n_) - b);
  return Matroid(n_, n_ - r_, std::move(out));
}

Subset Matroid::loops() const {
  Subset covered;
  for (Subset b : bases_) covered = covered | b;
  return Subset::range(n_) - covered;
}

bool is_matroid(int n, int r, std::span<const Subset> bases) {
  if (bases.empty()) return false;
  std::vector<bool> member(std::size_t{1} << n, false);
  for (Subset b : bases) {
    if (b.size() != r) return false;
    member[b.mask()] = true;
  }
  for (Subset a : bases) {
    for (Subset b : bases) {
      for (int i : (a - b).elements()) {
        bool found = false;
        for (int j : (b - a).elements()) {
          if (member[a.without(i).with(j).mask()]) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

ValuatedMatroid::ValuatedMatroid(PlueckerVector p) : p_(std::move(p)) {
  const auto check = check_exchange_axiom(p_);
  if (!check.ok) {
    throw DomainError("exchange axiom fails at " + check.witness->to_string());
  }
}

ValuatedMatroid ValuatedMatroid::trusted(PlueckerVector p) {
  return ValuatedMatroid(std::move(p), TrustedTag{});
}

ValuatedMatroid trivial_valuation(const Matroid& m) {
  std::vector<TropicalValue> values;
  for (Subset s : k_subsets(m.n(), m.rank())) {
    values.push_back(m.is_basis(s) ? TropicalValue(0) : TropicalValue());
  }
  return ValuatedMatroid::trusted(
      PlueckerVector(m.n(), m.rank(), std::move(values)));
}

ValuatedMatroid uniform_matroid(int r, int n) {
  return ValuatedMatroid::trusted(PlueckerVector(
      n, r, std::vector<TropicalValue>(binomial(n, r), TropicalValue(0))));
}

Matroid underlying_matroid(const ValuatedMatroid& m) {
  std::vector<Subset> bases;
  for (Subset s : k_subsets(m.n(), m.rank())) {
    if (m(s).is_finite()) bases.push_back(s);
  }
  return Matroid(m.n(), m.rank(), std::move(bases));
}

ValuatedMatroid dual(const ValuatedMatroid& m) {
  const int n = m.n();
  std::vector<TropicalValue> values;
  for (Subset s : k_subsets(n, n - m.rank())) {
    values.push_back(m(Subset::range(n) - s));
  }
  return ValuatedMatroid::trusted(
      PlueckerVector(n, n - m.rank(), std::move(values)));
}

Subset compress(Subset s, Subset keep) {
  std::uint32_t out = 0;
  int pos = 0;
  for (int e : keep.elements()) {
    if (s.contains(e)) out |= 1u << pos;
    ++pos;
  }
  return Subset(out);
}

Subset expand(Subset s, Subset keep) {
  const auto elems = keep.elements();
  std::uint32_t out = 0;
  for (int i : s.elements()) out |= 1u << (elems.at(i - 1) - 1);
  return Subset(out);
}

int deletion_rank(const ValuatedMatroid& m, Subset s) {
  const Subset keep = Subset::range(m.n()) - s;
  int best = 0;
  for (Subset b : k_subsets(m.n(), m.rank())) {
    if (m(b).is_finite()) best = std::max(best, (b & keep).size());
  }
  return best;
}

namespace {

// The augmenting set I ⊆ S used by deletion: the lexicographically first
// (r-k)-subset with rk(([n]∖S) ∪ I) = r.
Subset deletion_augment(const ValuatedMatroid& m, Subset s, int k) {
  const Subset keep = Subset::range(m.n()) - s;
  const Matroid mat = underlying_matroid(m);
  for (Subset aug : k_subsets_of(s, m.rank() - k)) {
    if (mat.rank_of(keep | aug) == m.rank()) return aug;
  }
  throw InternalError("deletion: no augmenting set found");
}

}  // namespace

ValuatedMatroid deletion(const ValuatedMatroid& m, Subset s) {
  if (!s.is_subset_of(Subset::range(m.n()))) {
    throw UsageError("deletion set not contained in the ground set");
  }
  if (s.empty()) return m;
  const int k = deletion_rank(m, s);
  if (k == 0) throw DomainError("deletion has rank zero");
  const Subset keep = Subset::range(m.n()) - s;
  const Subset aug = deletion_augment(m, s, k);
  const int n2 = keep.size();
  std::vector<TropicalValue> values;
  for (Subset b : k_subsets(n2, k)) values.push_back(m(expand(b, keep) | aug));
  return ValuatedMatroid::trusted(PlueckerVector(n2, k, std::move(values)));
}

ValuatedMatroid mu_s(const ValuatedMatroid& m, Subset s) {
  if (s.empty()) return m;
  const ValuatedMatroid del = deletion(m, s);
  const Subset keep = Subset::range(m.n()) - s;
  std::vector<TropicalValue> values;
  for (Subset b : k_subsets(m.n(), del.rank())) {
    values.push_back((b & s).empty() ? del(compress(b, keep))
                                     : TropicalValue::infinity());
  }
  return ValuatedMatroid::trusted(
      PlueckerVector(m.n(), del.rank(), std::move(values)));
}

ValuatedMatroid direct_sum_with_loops(const ValuatedMatroid& m,
                                      std::span<const int> labels) {
  std::vector<int> sorted(labels.begin(), labels.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] <= m.n()) {
      throw UsageError("loop label " + std::to_string(sorted[i]) +
                       " collides with the ground set");
    }
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      throw UsageError("repeated loop label " + std::to_string(sorted[i]));
    }
  }
  return add_loops(m, static_cast<int>(sorted.size()));
}

ValuatedMatroid add_loops(const ValuatedMatroid& m, int count) {
  if (count < 0 || m.n() + count > kMaxGroundSet) {
    throw UsageError("bad loop count");
  }
  if (count == 0) return m;
  const int n2 = m.n() + count;
  std::vector<TropicalValue> values;
  for (Subset b : k_subsets(n2, m.rank())) values.push_back(m(b));
  return ValuatedMatroid::trusted(
      PlueckerVector(n2, m.rank(), std::move(values)));
}

}  // namespace tropflag
