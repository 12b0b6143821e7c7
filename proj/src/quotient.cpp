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

#include "tropflag/quotient.hpp"

#include <set>

#include "tropflag/errors.hpp"
#include "tropflag/linear_spaces.hpp"

namespace tropflag {

QuotientCheck quotient_check(const ValuatedMatroid& mu,
                             const ValuatedMatroid& nu) {
  if (mu.n() != nu.n()) throw UsageError("quotient check on different ground sets");
  if (mu.rank() > nu.rank()) {
    throw UsageError("quotient check needs rank(mu) <= rank(nu)");
  }
  const auto lower = k_subsets(mu.n(), mu.rank());
  const auto upper = k_subsets(nu.n(), nu.rank());
  for (Subset I : lower) {
    if (mu(I).is_infinite()) continue;
    for (Subset J : upper) {
      const TropicalValue lhs = odot(mu(I), nu(J));
      if (lhs.is_infinite()) continue;
      for (int i : (I - J).elements()) {
        bool found = false;
        for (int j : (J - I).elements()) {
          if (!(lhs < odot(mu(I.without(i).with(j)), nu(J.without(j).with(i))))) {
            found = true;
            break;
          }
        }
        if (!found) return {false, ExchangeWitness{I, J, i}};
      }
    }
  }
  return {};
}

FlagInstance::FlagInstance(std::vector<ValuatedMatroid> matroids,
                           DegenerationType dt)
    : matroids_(std::move(matroids)), dt_(std::move(dt)) {
  if (static_cast<int>(matroids_.size()) != dt_.length()) {
    throw UsageError("flag has " + std::to_string(matroids_.size()) +
                     " matroids but " + std::to_string(dt_.length()) +
                     " ranks");
  }
  for (int i = 0; i < dt_.length(); ++i) {
    if (matroids_[i].n() != dt_.n() || matroids_[i].rank() != dt_.ranks()[i]) {
      throw UsageError("matroid " + std::to_string(i + 1) +
                       " does not have rank " + std::to_string(dt_.ranks()[i]) +
                       " on [" + std::to_string(dt_.n()) + "]");
    }
  }
}

std::vector<PlueckerVector> FlagInstance::pluecker_vectors() const {
  std::vector<PlueckerVector> out;
  for (const auto& m : matroids_) out.push_back(m.pluecker());
  return out;
}

bool steps_well_defined(const FlagInstance& fi) {
  const auto& ms = fi.matroids();
  for (int i = 0; i + 1 < fi.type().length(); ++i) {
    if (deletion_rank(ms[i], fi.type().S()[i]) == 0) return false;
  }
  return true;
}

StepCheck is_ld_flag_matroid(const FlagInstance& fi) {
  const auto& ms = fi.matroids();
  for (int i = 0; i + 1 < fi.type().length(); ++i) {
    const auto q = quotient_check(mu_s(ms[i], fi.type().S()[i]), ms[i + 1]);
    if (!q.ok) return {false, i, q.witness->to_string()};
  }
  return {};
}

SetMapWithZero::SetMapWithZero(int m, int n, std::vector<int> images)
    : m_(m), n_(n), images_(std::move(images)) {
  if (m < 0 || n < 0 || m + 1 > kMaxGroundSet || n + 1 > kMaxGroundSet) {
    throw UsageError("set map sizes out of range");
  }
  if (static_cast<int>(images_.size()) != m) {
    throw UsageError("set map needs one image per source element");
  }
  for (int y : images_) {
    if (y < 0 || y > n) throw UsageError("set map image out of range");
  }
}

SetMapWithZero SetMapWithZero::identity(int n) {
  return projection(n, Subset());
}

SetMapWithZero SetMapWithZero::projection(int n, Subset S) {
  std::vector<int> images;
  for (int x = 1; x <= n; ++x) images.push_back(S.contains(x) ? 0 : x);
  return SetMapWithZero(n, n, std::move(images));
}

std::vector<int> SetMapWithZero::with_zero_appended() const {
  std::vector<int> out;
  for (int y : images_) out.push_back(y == 0 ? n_ + 1 : y);
  out.push_back(n_ + 1);
  return out;
}

ValuatedMatroid induced_valuated_matroid(const std::vector<int>& images,
                                         const ValuatedMatroid& nu) {
  const int m = static_cast<int>(images.size());
  if (m > kMaxGroundSet) throw UsageError("source too large");
  Subset image;
  for (int y : images) {
    if (y < 1 || y > nu.n()) throw UsageError("map image out of range");
    image = image.with(y);
  }
  const Subset outside = Subset::range(nu.n()) - image;
  if (deletion_rank(nu, outside) == 0) {
    throw DomainError("image of the set map has rank zero");
  }
  const ValuatedMatroid restricted = deletion(nu, outside);
  std::vector<TropicalValue> values;
  for (Subset I : k_subsets(m, restricted.rank())) {
    Subset fI;
    for (int x : I.elements()) fI = fI.with(images[x - 1]);
    values.push_back(fI.size() == I.size() ? restricted(compress(fI, image))
                                           : TropicalValue());
  }
  return ValuatedMatroid::trusted(
      PlueckerVector(m, restricted.rank(), std::move(values)));
}

ValuatedMatroid induced_valuated_matroid(const SetMapWithZero& f,
                                         const ValuatedMatroid& nu) {
  if (nu.n() != f.target_size()) throw UsageError("map target size mismatch");
  return induced_valuated_matroid(f.with_zero_appended(), add_loops(nu, 1));
}

QuotientCheck morphism_check(const SetMapWithZero& f,
                             const ValuatedMatroid& source,
                             const ValuatedMatroid& target) {
  if (source.n() != f.source_size()) throw UsageError("map source size mismatch");
  return quotient_check(induced_valuated_matroid(f, target),
                        add_loops(source, 1));
}

TheoremAPredicates default_theorem_a_predicates() {
  TheoremAPredicates p;
  p.dressian = [](const FlagInstance& fi, std::vector<std::string>& w) {
    const auto vectors = fi.pluecker_vectors();
    const auto rep =
        ld_flag_dressian_member(vectors, fi.type(), PairMode::kAllPairs);
    if (!rep.member) w.push_back("(a) " + rep.failure->to_string());
    return rep.member;
  };
  p.ld_flag_matroid = [](const FlagInstance& fi, std::vector<std::string>& w) {
    const auto rep = is_ld_flag_matroid(fi);
    if (!rep.ok) {
      w.push_back("(b) step " + std::to_string(rep.failing_step + 1) + ": " +
                  rep.detail);
    }
    return rep.ok;
  };
  p.projection_containment = [](const FlagInstance& fi,
                                std::vector<std::string>& w) {
    const auto& ms = fi.matroids();
    for (int i = 0; i + 1 < fi.type().length(); ++i) {
      const auto rep =
          projection_containment(ms[i], ms[i + 1], fi.type().S()[i]);
      if (!rep.contained) {
        w.push_back("(c) step " + std::to_string(i + 1) + ": cocircuit " +
                    rep.witness->to_string());
        return false;
      }
    }
    return true;
  };
  p.morphisms = [](const FlagInstance& fi, std::vector<std::string>& w) {
    const auto& ms = fi.matroids();
    for (int i = 0; i + 1 < fi.type().length(); ++i) {
      const auto f = SetMapWithZero::projection(fi.type().n(), fi.type().S()[i]);
      const auto rep = morphism_check(f, ms[i + 1], ms[i]);
      if (!rep.ok) {
        w.push_back("(d) step " + std::to_string(i + 1) + ": " +
                    rep.witness->to_string());
        return false;
      }
    }
    return true;
  };
  return p;
}

TheoremAReport theorem_a_report(const FlagInstance& fi,
                                const TheoremAPredicates& predicates) {
  TheoremAReport rep;
  rep.a = predicates.dressian(fi, rep.witnesses);
  rep.b = predicates.ld_flag_matroid(fi, rep.witnesses);
  rep.c = predicates.projection_containment(fi, rep.witnesses);
  rep.d = predicates.morphisms(fi, rep.witnesses);
  return rep;
}

}  // namespace tropflag
