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

#include "tropflag/linear_spaces.hpp"

#include <set>

#include "tropflag/errors.hpp"

namespace tropflag {
namespace {

std::vector<CircuitVector> dedupe(std::vector<CircuitVector> in) {
  std::set<TropicalPoint> seen;
  std::vector<CircuitVector> out;
  for (auto& c : in) {
    if (seen.insert(c.point).second) out.push_back(std::move(c));
  }
  return out;
}

void check_size(const TropicalPoint& x, int n) {
  if (static_cast<int>(x.size()) != n) {
    throw UsageError("point of length " + std::to_string(x.size()) +
                     " against ground set of size " + std::to_string(n));
  }
}

}  // namespace

Subset CircuitVector::support() const {
  Subset out;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (point[i].is_finite()) out = out.with(static_cast<int>(i) + 1);
  }
  return out;
}

std::vector<CircuitVector> circuits(const ValuatedMatroid& m) {
  std::vector<CircuitVector> out;
  if (m.rank() >= m.n()) return out;
  for (Subset I : k_subsets(m.n(), m.rank() + 1)) {
    std::vector<TropicalValue> raw(m.n());
    for (int i : I.elements()) raw[i - 1] = m(I.without(i));
    if (auto p = try_normalize(std::move(raw))) {
      out.push_back({*std::move(p), VectorKind::kCircuit, I});
    }
  }
  return dedupe(std::move(out));
}

std::vector<CircuitVector> cocircuits(const ValuatedMatroid& m) {
  std::vector<CircuitVector> out;
  if (m.rank() == 0) return out;
  for (Subset I : k_subsets(m.n(), m.rank() - 1)) {
    std::vector<TropicalValue> raw(m.n());
    for (int i = 1; i <= m.n(); ++i) {
      if (!I.contains(i)) raw[i - 1] = m(I.with(i));
    }
    if (auto p = try_normalize(std::move(raw))) {
      out.push_back({*std::move(p), VectorKind::kCocircuit, I});
    }
  }
  return dedupe(std::move(out));
}

bool in_tropical_linear_space(const TropicalPoint& x,
                              const ValuatedMatroid& m) {
  check_size(x, m.n());
  for (const auto& c : circuits(m)) {
    if (!form_evaluate_twice(c.point.coords(), x.coords())) return false;
  }
  return true;
}

TropicalPoint tropical_span(std::span<const TropicalPoint> generators,
                            std::span<const TropicalValue> lambdas) {
  if (generators.empty()) throw UsageError("empty generator list");
  if (generators.size() != lambdas.size()) {
    throw UsageError("expected " + std::to_string(generators.size()) +
                     " coefficients, got " + std::to_string(lambdas.size()));
  }
  const std::size_t n = generators.front().size();
  std::vector<TropicalValue> acc(n);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].size() != n) throw UsageError("generator size mismatch");
    if (lambdas[g].is_infinite()) {
      throw DomainError("span coefficients must be finite");
    }
    for (std::size_t j = 0; j < n; ++j) {
      acc[j] = oplus(acc[j], odot(lambdas[g], generators[g][j]));
    }
  }
  return normalize(std::move(acc));
}

std::vector<TropicalPoint> points_of(std::span<const CircuitVector> vectors) {
  std::vector<TropicalPoint> out;
  for (const auto& v : vectors) out.push_back(v.point);
  return out;
}

TropicalPoint cocircuit_span_sample(const ValuatedMatroid& m,
                                    std::span<const TropicalValue> lambdas) {
  return tropical_span(points_of(cocircuits(m)), lambdas);
}

TropicalPoint vectors_sample(const ValuatedMatroid& m,
                             std::span<const TropicalValue> lambdas) {
  return tropical_span(points_of(circuits(m)), lambdas);
}

bool span_membership(const TropicalPoint& x,
                     std::span<const TropicalPoint> generators) {
  const std::size_t n = x.size();
  std::vector<TropicalValue> acc(n);
  for (const auto& g : generators) {
    if (g.size() != n) throw UsageError("generator size mismatch");
    std::optional<Rational> lambda;
    bool usable = true;
    for (std::size_t j = 0; j < n && usable; ++j) {
      if (g[j].is_infinite()) continue;
      if (x[j].is_infinite()) {
        usable = false;
        break;
      }
      Rational d = x[j].value() - g[j].value();
      if (!lambda || d > *lambda) lambda = std::move(d);
    }
    if (!usable || !lambda) continue;
    const TropicalValue l(*lambda);
    for (std::size_t j = 0; j < n; ++j) acc[j] = oplus(acc[j], odot(l, g[j]));
  }
  return acc == x.coords();
}

std::optional<TropicalPoint> trop_project(const TropicalPoint& x, Subset S) {
  std::vector<TropicalValue> raw = x.coords();
  for (int s : S.elements()) {
    if (s <= static_cast<int>(raw.size())) raw[s - 1] = TropicalValue();
  }
  return try_normalize(std::move(raw));
}

ContainmentReport projection_containment(const ValuatedMatroid& mu,
                                         const ValuatedMatroid& nu, Subset S) {
  if (mu.n() != nu.n()) throw UsageError("ground sets differ");
  for (const auto& c : cocircuits(mu)) {
    const auto p = trop_project(c.point, S);
    if (p && !in_tropical_linear_space(*p, nu)) return {false, c.point};
  }
  return {};
}

TropicalPoint lift_point(const TropicalPoint& v, const ValuatedMatroid& m,
                         int s) {
  check_size(v, m.n());
  if (s < 1 || s > m.n()) throw UsageError("lift element out of range");
  if (v[s - 1].is_finite()) {
    throw DomainError("lift_point needs coordinate " + std::to_string(s) +
                      " to be inf");
  }
  const Subset removed = Subset().with(s);
  const Subset keep = Subset::range(m.n()) - removed;
  {
    std::vector<TropicalValue> rest;
    for (int i : keep.elements()) rest.push_back(v[i - 1]);
    const auto restricted = try_normalize(std::move(rest));
    if (!restricted ||
        !in_tropical_linear_space(*restricted, deletion(m, removed))) {
      throw DomainError("point is not in the tropical linear space of the "
                        "deletion");
    }
  }
  std::optional<Rational> t;
  for (const auto& c : circuits(m)) {
    const auto& C = c.point;
    if (C[s - 1].is_infinite()) continue;
    TropicalValue best;
    int count = 0;
    for (int i : keep.elements()) {
      const TropicalValue term = odot(C[i - 1], v[i - 1]);
      if (term < best) {
        best = term;
        count = 1;
      } else if (term == best) {
        ++count;
      }
    }
    if (best.is_infinite() || count >= 2) continue;
    Rational candidate = best.value() - C[s - 1].value();
    if (t && *t != candidate) {
      throw InternalError("lift witnesses disagree at element " +
                          std::to_string(s));
    }
    t = std::move(candidate);
  }
  std::vector<TropicalValue> raw = v.coords();
  if (t) raw[s - 1] = TropicalValue(*t);
  TropicalPoint lifted = normalize(std::move(raw));
  if (!in_tropical_linear_space(lifted, m)) {
    throw InternalError("lifted point " + lifted.to_string() +
                        " is not in the tropical linear space");
  }
  return lifted;
}

TropicalPoint lift_through(const TropicalPoint& w, const ValuatedMatroid& m,
                           Subset S) {
  check_size(w, m.n());
  const auto order = S.elements();
  TropicalPoint x = w;
  for (std::size_t j = 0; j < order.size(); ++j) {
    Subset still_deleted;
    for (std::size_t k = j + 1; k < order.size(); ++k) {
      still_deleted = still_deleted.with(order[k]);
    }
    const Subset ground = Subset::range(m.n()) - still_deleted;
    const ValuatedMatroid mj = deletion(m, still_deleted);
    std::vector<TropicalValue> local;
    for (int i : ground.elements()) local.push_back(x[i - 1]);
    const TropicalPoint lifted =
        lift_point(normalize(std::move(local)), mj,
                   compress(Subset().with(order[j]), ground).max_element());
    std::vector<TropicalValue> full(m.n());
    const auto elems = ground.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      full[elems[i] - 1] = lifted[i];
    }
    x = normalize(std::move(full));
  }
  return x;
}

}  // namespace tropflag
