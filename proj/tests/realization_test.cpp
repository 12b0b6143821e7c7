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

#include <algorithm>
#include <numeric>
#include <random>

#include "test_util.hpp"
#include "tropflag/errors.hpp"
#include "tropflag/laurent.hpp"
#include "tropflag/quotient.hpp"
#include "tropflag/corpus.hpp"
#include "tropflag/realization.hpp"

namespace tropflag {
namespace {

using testing::pv;
using testing::set;

LaurentElement L(const std::string& s) { return LaurentElement::parse(s); }

LaurentElement random_laurent(std::mt19937_64& rng, int max_terms = 3) {
  std::uniform_int_distribution<int> coeff(-3, 3), exp(-4, 4), count(0, max_terms);
  LaurentElement f;
  for (int k = count(rng); k > 0; --k) {
    f += LaurentElement(coeff(rng), Rational(exp(rng), 2));
  }
  return f;
}

// Leibniz expansion: Σ_σ sgn(σ) Π a_{i,σ(i)}.
LaurentElement leibniz(const ValuedMatrix& a) {
  std::vector<int> perm(a.rows());
  std::iota(perm.begin(), perm.end(), 0);
  LaurentElement total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    }
    LaurentElement term(inversions % 2 ? -1 : 1);
    for (int i = 0; i < a.rows(); ++i) term = term * a(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

ValuedMatrix random_matrix(int r, int n, std::mt19937_64& rng) {
  ValuedMatrix m(r, n);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = random_laurent(rng, 2);
  }
  return m;
}

TEST(Laurent, ParseAndPrint) {
  EXPECT_EQ(L("t^1 + 3*t^-1/2"), LaurentElement(1, 1) + LaurentElement(3, Rational(-1, 2)));
  EXPECT_EQ(L("t"), LaurentElement(1, 1));
  EXPECT_EQ(L("1/2*t^3"), LaurentElement(Rational(1, 2), 3));
  EXPECT_EQ(L("-2"), LaurentElement(-2));
  EXPECT_EQ(L("0"), LaurentElement());
  EXPECT_EQ(L("t - t"), LaurentElement());
  EXPECT_EQ(L(L("2*t^-3/2 - t + 5").to_string()), L("2*t^-3/2 - t + 5"));
  EXPECT_THROW(L("t^"), UsageError);
  EXPECT_THROW(L("x^2"), UsageError);
}

TEST(Laurent, Valuation) {
  EXPECT_EQ(L("t^2 + 3*t^-1/2").valuation(), TropicalValue(Rational(-1, 2)));
  EXPECT_TRUE(LaurentElement().valuation().is_infinite());
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 500; ++trial) {
    const auto f = random_laurent(rng), g = random_laurent(rng);
    EXPECT_EQ((f * g).valuation(), odot(f.valuation(), g.valuation()));
    const auto sum = (f + g).valuation();
    EXPECT_GE(sum, oplus(f.valuation(), g.valuation()));
    if (f.valuation() != g.valuation()) {
      EXPECT_EQ(sum, oplus(f.valuation(), g.valuation()));
    }
  }
}

TEST(Laurent, RingLaws) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_laurent(rng), g = random_laurent(rng), h = random_laurent(rng);
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f - f, LaurentElement());
  }
}

TEST(Laurent, ExactDivision) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_laurent(rng), g = random_laurent(rng);
    if (g.is_zero()) continue;
    EXPECT_EQ(exact_divide(f * g, g), f);
  }
  EXPECT_THROW(exact_divide(L("1"), L("1 + t")), DomainError);
  EXPECT_THROW(exact_divide(L("1"), LaurentElement()), DomainError);
}

TEST(Determinant, MatchesLeibniz) {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 150; ++trial) {
    const int r = 1 + trial % 3;
    const auto a = random_matrix(r, r, rng);
    EXPECT_EQ(determinant(a), leibniz(a)) << a.to_string();
  }
  EXPECT_THROW(determinant(ValuedMatrix(2, 3)), UsageError);
}

TEST(Determinant, RankDeficientIsZero) {
  const auto a = ValuedMatrix::parse({{"1", "t"}, {"t^-1", "1"}});
  EXPECT_TRUE(determinant(a).is_zero());
  EXPECT_EQ(matrix_rank(a), 1);
}

TEST(Pluecker, Examples) {
  const auto [a1, a2] = counterexample_matrices(1, 2);
  const auto p1 = pluecker_vector(a1);
  EXPECT_EQ(p1.minors, std::vector<LaurentElement>(4, LaurentElement(1)));
  EXPECT_EQ(p1.tropical, pv(4, 1, {"0", "0", "0", "0"}));
  EXPECT_EQ(pluecker_vector(a2).tropical, pv(4, 2, {"1", "1", "0", "2", "0", "0"}));
  const auto id = ValuedMatrix::parse({{"1", "0", "0", "0"}, {"0", "1", "0", "0"}});
  EXPECT_EQ(pluecker_vector(id).tropical,
            pv(4, 2, {"0", "inf", "inf", "inf", "inf", "inf"}));
  EXPECT_THROW(pluecker_vector(ValuedMatrix::parse({{"1", "t"}, {"2", "2*t"}})), DomainError);
}

TEST(Pluecker, RationalExponents) {
  const auto [a1, a2] = counterexample_matrices(Rational(1, 3), Rational(5, 2));
  EXPECT_EQ(pluecker_vector(a2).tropical,
            pv(4, 2, {"1/3", "1/3", "0", "5/2", "0", "0"}));
}

TEST(Pluecker, TropicalizationIsValuatedMatroid) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4;
    const int r = 1 + trial % n;
    const auto a = random_full_rank_matrix(r, n, rng);
    EXPECT_TRUE(testing::oracle_exchange(pluecker_vector(a).tropical));
  }
}

// Σ sgn · p_{I∪j}(A) · p_{J∖j}(B) evaluated directly on the minors.
TEST(Pluecker, ClassicalRelationsVanishOnMinors) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 2;
    const auto b = random_full_rank_matrix(2 + trial % 2, n, rng);
    const auto pb = pluecker_vector(b);
    const int s = b.rows();
    for (const auto& rel : generate_signed_relations(s, s, set({}), n)) {
      LaurentElement total;
      for (const auto& t : rel.terms) {
        total += LaurentElement(t.coefficient) * pb.minors[lex_rank(t.monomial.a, n)] *
                 pb.minors[lex_rank(t.monomial.b, n)];
      }
      EXPECT_TRUE(total.is_zero());
    }
  }
}

TEST(ProjectMatrix, Examples) {
  const auto [a1, a2] = counterexample_matrices(1, 2);
  EXPECT_EQ(project_matrix(a1, set({1})), ValuedMatrix::parse({{"0", "1", "1", "1"}}));
  EXPECT_EQ(project_matrix(a2, set({})), a2);
  const auto id = ValuedMatrix::parse({{"1", "0", "0", "0"}, {"0", "1", "0", "0"}});
  EXPECT_EQ(matrix_rank(project_matrix(id, set({1}))), 1);
}

TEST(ProjectMatrix, TropicalizesToMuS) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 3;
    const auto a = random_full_rank_matrix(1 + trial % 2, n, rng);
    const Subset S(std::uniform_int_distribution<std::uint32_t>(0, (1u << n) - 1)(rng));
    const auto projected = project_matrix(a, S);
    if (matrix_rank(projected) < a.rows()) continue;
    const ValuatedMatroid mu(pluecker_vector(a).tropical);
    EXPECT_EQ(pluecker_vector(projected).tropical, mu_s(mu, S).pluecker());
  }
}

TEST(RowspaceContains, Examples) {
  const auto [a1, a2] = counterexample_matrices(1, 2);
  EXPECT_TRUE(rowspace_contains(a2, a1));
  EXPECT_FALSE(rowspace_contains(a2, project_matrix(a1, set({1}))));
  EXPECT_TRUE(rowspace_contains(a2, a2));
}

TEST(ClassicalLdRelations, Examples) {
  const auto [a1, a2] = counterexample_matrices(1, 2);
  EXPECT_TRUE(verify_classical_ld_relations(a1, a2, set({})));
  EXPECT_FALSE(verify_classical_ld_relations(a1, a2, set({1})));
  EXPECT_TRUE(verify_classical_ld_relations(a2, a2, set({})));
}

TEST(ClassicalLdRelations, AgreeWithContainmentOnRandomPairs) {
  // verify_classical_ld_relations throws if the two answers differ.
  std::mt19937_64 rng(109);
  int contained = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 3 + trial % 3;
    const int r = 1 + trial % 2;
    const int s = std::min(n, r + 1 + trial % 2);
    const auto a = random_full_rank_matrix(r, n, rng);
    const Subset S(std::uniform_int_distribution<std::uint32_t>(0, (1u << n) - 1)(rng));
    // Half the time B contains pr_S(A) by construction.
    ValuedMatrix b = random_full_rank_matrix(s, n, rng);
    if (trial % 2 == 0) {
      const auto mats = random_ld_realization(DegenerationType({r, s}, {S}, n), rng);
      EXPECT_TRUE(verify_classical_ld_relations(mats[0], mats[1], S));
      ++contained;
      continue;
    }
    contained += verify_classical_ld_relations(a, b, S);
  }
  EXPECT_GE(contained, 40);
}

TEST(RandomRealization, Examples) {
  std::mt19937_64 rng(113);
  const DegenerationType dt({1, 2}, {set({1})}, 4);
  const auto mats = random_ld_realization(dt, rng);
  ASSERT_EQ(mats.size(), 2u);
  EXPECT_TRUE(verify_classical_ld_relations(mats[0], mats[1], set({1})));

  const auto flag = random_ld_realization(DegenerationType::flag({1, 2, 3}, 4), rng);
  std::vector<PlueckerVector> vectors;
  for (const auto& m : flag) vectors.push_back(pluecker_vector(m).tropical);
  EXPECT_TRUE(ld_flag_dressian_member(vectors, DegenerationType::flag({1, 2, 3}, 4),
                                      PairMode::kAllPairs)
                  .member);
  EXPECT_THROW(random_ld_realization(DegenerationType({2, 1}, {set({})}, 4), rng), UsageError);
}

TEST(RandomRealization, TheoremBPipeline) {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 4;
    const auto drawn = random_flag_instance(n, 1 + trial % 3, rng);
    const auto& dt = drawn.type();
    const auto mats = random_ld_realization(dt, rng);
    std::vector<ValuatedMatroid> ms;
    for (std::size_t i = 0; i < mats.size(); ++i) {
      ms.emplace_back(pluecker_vector(mats[i]).tropical);
      if (i + 1 < mats.size()) {
        EXPECT_TRUE(rowspace_contains(mats[i + 1], project_matrix(mats[i], dt.S()[i])));
      }
    }
    std::vector<PlueckerVector> vectors;
    for (const auto& m : ms) vectors.push_back(m.pluecker());
    EXPECT_TRUE(ld_flag_dressian_member(vectors, dt, PairMode::kAllPairs).member);
    const FlagInstance fi(ms, dt);
    if (!steps_well_defined(fi)) continue;
    const auto rep = theorem_a_report(fi);
    EXPECT_TRUE(rep.a && rep.b && rep.c && rep.d) << dt.to_string();
  }
}

}  // namespace
}  // namespace tropflag
