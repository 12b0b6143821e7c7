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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_util.hpp"
#include "tropflag/corpus.hpp"
#include "tropflag/errors.hpp"
#include "tropflag/linear_spaces.hpp"
#include "tropflag/quotient.hpp"

namespace tropflag {
namespace {

using testing::pt;
using testing::set;
using testing::vals;
using testing::vm;

const std::vector<ValuatedMatroid>& corpus() {
  static const auto c = matroid_corpus(5, 2, 29);
  return c;
}

std::set<TropicalPoint> point_set(const std::vector<CircuitVector>& cs) {
  std::set<TropicalPoint> out;
  for (const auto& c : cs) out.insert(c.point);
  return out;
}

// Circuit-form test written out directly: for every (r+1)-subset I the
// values μ(I∖i) + x_i must attain their minimum twice.
bool oracle_in_trop(const TropicalPoint& x, const ValuatedMatroid& m) {
  for (Subset I : k_subsets(m.n(), m.rank() + 1)) {
    std::vector<TropicalValue> terms;
    for (int i : I.elements()) terms.push_back(odot(m(I.without(i)), x[i - 1]));
    if (!min_achieved_twice(terms)) return false;
  }
  return true;
}

TEST(Circuits, UniformRankTwo) {
  const auto cs = circuits(uniform_matroid(2, 4));
  ASSERT_EQ(cs.size(), 4u);
  std::set<std::uint32_t> supports;
  for (const auto& c : cs) {
    supports.insert(c.support().mask());
    for (const auto& v : c.point.coords()) {
      EXPECT_TRUE(v.is_infinite() || v == TropicalValue(0));
    }
  }
  std::set<std::uint32_t> expected;
  for (Subset s : k_subsets(4, 3)) expected.insert(s.mask());
  EXPECT_EQ(supports, expected);
}

TEST(Circuits, LoopGivesSingletonCircuit) {
  const auto m = vm(4, 1, {"inf", "0", "0", "0"});
  EXPECT_EQ(point_set(circuits(m)),
            (std::set<TropicalPoint>{pt({"0", "inf", "inf", "inf"}),
                                     pt({"inf", "0", "0", "inf"}),
                                     pt({"inf", "0", "inf", "0"}),
                                     pt({"inf", "inf", "0", "0"})}));
}

TEST(Circuits, ReadFromValues) {
  const auto cs = point_set(circuits(vm(4, 2, {"1", "1", "0", "2", "0", "0"})));
  EXPECT_TRUE(cs.count(pt({"1", "0", "0", "inf"})));
  EXPECT_TRUE(circuits(uniform_matroid(4, 4)).empty());
}

TEST(Cocircuits, Examples) {
  EXPECT_EQ(point_set(cocircuits(uniform_matroid(2, 4))),
            (std::set<TropicalPoint>{pt({"inf", "0", "0", "0"}),
                                     pt({"0", "inf", "0", "0"}),
                                     pt({"0", "0", "inf", "0"}),
                                     pt({"0", "0", "0", "inf"})}));
  EXPECT_EQ(point_set(cocircuits(uniform_matroid(1, 4))),
            (std::set<TropicalPoint>{pt({"0", "0", "0", "0"})}));
  EXPECT_TRUE(point_set(cocircuits(vm(4, 2, {"1", "1", "0", "2", "0", "0"})))
                  .count(pt({"inf", "1", "1", "0"})));
}

TEST(Cocircuits, AreCircuitsOfDualOnCorpus) {
  for (const auto& m : corpus()) {
    EXPECT_EQ(point_set(cocircuits(m)), point_set(circuits(dual(m))));
    for (const auto& c : cocircuits(m)) EXPECT_TRUE(in_tropical_linear_space(c.point, m));
  }
}

TEST(TropicalLinearSpace, Examples) {
  const auto u = uniform_matroid(2, 4);
  EXPECT_TRUE(in_tropical_linear_space(pt({"0", "0", "0", "0"}), u));
  EXPECT_TRUE(in_tropical_linear_space(pt({"5", "0", "0", "0"}), u));
  // The circuit on {1,2,3} sees 0, 5, 5: a unique minimum.
  EXPECT_FALSE(in_tropical_linear_space(pt({"0", "5", "5", "5"}), u));
  EXPECT_FALSE(in_tropical_linear_space(pt({"0", "1", "2", "3"}), u));
  EXPECT_THROW(in_tropical_linear_space(pt({"0", "1", "2"}), u), UsageError);
}

TEST(TropicalLinearSpace, LoopsForceInfinity) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> d(0, 4);
  for (const auto& m : corpus()) {
    const Subset loops = underlying_matroid(m).loops();
    if (loops.empty() || m.rank() == 0) continue;
    const auto cocs = cocircuits(m);
    std::vector<TropicalValue> lambdas(cocs.size());
    for (auto& l : lambdas) l = d(rng);
    const auto x = cocircuit_span_sample(m, lambdas);
    for (int s : loops.elements()) EXPECT_TRUE(x[s - 1].is_infinite());
  }
}

TEST(Span, CocircuitSamples) {
  const auto u = uniform_matroid(2, 4);
  EXPECT_EQ(cocircuit_span_sample(u, vals({"0", "0", "0", "0"})), pt({"0", "0", "0", "0"}));
  EXPECT_EQ(cocircuit_span_sample(u, vals({"0", "5", "5", "5"})), pt({"5", "0", "0", "0"}));
  const std::vector<TropicalPoint> one{pt({"inf", "1", "1", "0"})};
  EXPECT_EQ(tropical_span(one, vals({"0"})), one[0]);
  EXPECT_THROW(tropical_span(std::vector<TropicalPoint>{}, vals({})), UsageError);
  EXPECT_THROW(tropical_span(one, vals({"inf"})), DomainError);
}

TEST(Span, VectorSamples) {
  const auto u = uniform_matroid(2, 4);
  EXPECT_EQ(vectors_sample(u, vals({"0", "0", "0", "0"})), pt({"0", "0", "0", "0"}));
  // Circuits are listed by I = 123, 124, 134, 234.
  EXPECT_EQ(vectors_sample(u, vals({"5", "5", "5", "0"})), pt({"5", "0", "0", "0"}));
  EXPECT_EQ(vectors_sample(u, vals({"0", "9", "9", "9"})), pt({"0", "0", "0", "9"}));
}

TEST(Span, Membership) {
  const auto u = uniform_matroid(2, 4);
  const auto gens = points_of(cocircuits(u));
  EXPECT_TRUE(span_membership(gens[2], gens));
  EXPECT_TRUE(span_membership(cocircuit_span_sample(u, vals({"3", "1", "0", "2"})), gens));
  EXPECT_FALSE(span_membership(pt({"0", "1", "2", "3"}), gens));
}

// Both descriptions of trop(μ) agree on the grid {0,1,2,3,∞}^n.
TEST(Span, CircuitAndCocircuitDescriptionsAgreeOnGrid) {
  const std::vector<TropicalValue> alphabet{0, 1, 2, 3, TropicalValue::infinity()};
  int checked_n5 = 0;
  for (const auto& m : corpus()) {
    const int n = m.n();
    if (n == 5 && ++checked_n5 > 25) continue;
    const auto gens = points_of(cocircuits(m));
    const auto dual_gens = points_of(circuits(m));
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 5;
    for (int code = 0; code < total; ++code) {
      std::vector<TropicalValue> raw;
      for (int i = 0, c = code; i < n; ++i, c /= 5) raw.push_back(alphabet[c % 5]);
      const auto x = try_normalize(raw);
      if (!x) continue;
      const bool by_circuits = in_tropical_linear_space(*x, m);
      ASSERT_EQ(by_circuits, oracle_in_trop(*x, m));
      ASSERT_EQ(by_circuits, span_membership(*x, gens))
          << m.pluecker().to_string() << " x=" << x->to_string();
      // Vectors span the tropical linear space of the dual.
      if (!dual_gens.empty()) {
        ASSERT_EQ(span_membership(*x, dual_gens), in_tropical_linear_space(*x, dual(m)));
      }
    }
  }
}

TEST(TropProject, Examples) {
  EXPECT_EQ(trop_project(pt({"0", "0", "0", "0"}), set({1})), pt({"inf", "0", "0", "0"}));
  EXPECT_FALSE(trop_project(pt({"0", "inf", "inf", "inf"}), set({1})).has_value());
  EXPECT_EQ(trop_project(pt({"3", "5", "inf", "3"}), set({2, 3})),
            pt({"0", "inf", "inf", "0"}));
}

TEST(ProjectionContainment, Examples) {
  EXPECT_TRUE(projection_containment(uniform_matroid(1, 4), uniform_matroid(2, 4), set({1}))
                  .contained);
  const auto mu = uniform_matroid(1, 4);
  const auto nu = vm(4, 2, {"1", "1", "0", "2", "0", "0"});
  const auto rep = projection_containment(mu, nu, set({1}));
  EXPECT_FALSE(rep.contained);
  ASSERT_TRUE(rep.witness.has_value());
  EXPECT_TRUE(point_set(cocircuits(mu)).count(*rep.witness));
  EXPECT_FALSE(in_tropical_linear_space(*trop_project(*rep.witness, set({1})), nu));
  EXPECT_TRUE(projection_containment(mu, nu, set({})).contained);
  for (const auto& m : corpus()) EXPECT_TRUE(projection_containment(m, m, set({})).contained);
}

TEST(ProjectionContainment, AgreesWithQuotientOfMuS) {
  std::mt19937_64 rng(37);
  int positives = 0, total = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = 2 + trial % 4;
    std::uniform_int_distribution<int> rd(1, n);
    const int r = rd(rng);
    const auto mu = random_valuated_matroid(n, r, rng);
    const Subset S(std::uniform_int_distribution<std::uint32_t>(0, (1u << n) - 1)(rng));
    if (!S.empty() && deletion_rank(mu, S) == 0) continue;
    const auto ms = mu_s(mu, S);
    const int s = std::uniform_int_distribution<int>(ms.rank(), n)(rng);
    const auto nu = random_valuated_matroid(n, s, rng);
    const bool contained = projection_containment(mu, nu, S).contained;
    EXPECT_EQ(contained, quotient_check(ms, nu).ok);
    positives += contained;
    ++total;
  }
  EXPECT_GT(positives, total / 20);
  EXPECT_LT(positives, total);
}

TEST(LiftPoint, Examples) {
  const auto u = uniform_matroid(2, 4);
  EXPECT_EQ(lift_point(pt({"inf", "0", "0", "5"}), u, 1), pt({"0", "0", "0", "5"}));
  EXPECT_EQ(lift_point(pt({"inf", "0", "0", "0"}), u, 1), pt({"inf", "0", "0", "0"}));
  // Coordinate s must be ∞ and the rest must lie in the deletion.
  EXPECT_THROW(lift_point(pt({"0", "0", "0", "5"}), u, 1), DomainError);
  EXPECT_THROW(lift_point(pt({"inf", "0", "1", "2"}), u, 1), DomainError);
}

// Projection followed by lifting, on a reduced sample; the full-size run is
// an acceptance criterion.
TEST(LiftPoint, ProjectionPropositionOnCorpus) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> d(0, 5);
  for (const auto& m : corpus()) {
    const int n = m.n();
    const auto cocs = cocircuits(m);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      const Subset S(mask);
      if (deletion_rank(m, S) == 0) continue;
      const auto ms = mu_s(m, S);
      for (int k = 0; k < 5; ++k) {
        std::vector<TropicalValue> lambdas(cocs.size());
        for (auto& l : lambdas) l = d(rng);
        const auto x = cocircuit_span_sample(m, lambdas);
        const auto y = trop_project(x, S);
        if (y) EXPECT_TRUE(oracle_in_trop(*y, ms));
      }
      for (const auto& c : cocircuits(ms)) {
        const auto lifted = lift_through(c.point, m, S);
        EXPECT_TRUE(oracle_in_trop(lifted, m));
        EXPECT_EQ(trop_project(lifted, S), c.point);
      }
    }
  }
}

}  // namespace
}  // namespace tropflag
