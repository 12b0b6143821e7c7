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

// Acceptance run: one PASS/FAIL line per criterion, with timings. Exits
// nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "tropflag/corpus.hpp"
#include "tropflag/errors.hpp"
#include "tropflag/fan.hpp"
#include "tropflag/linear_spaces.hpp"
#include "tropflag/quotient.hpp"
#include "tropflag/realization.hpp"
#include "tropflag/relations.hpp"

namespace {

using namespace tropflag;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---- relation text ---------------------------------------------------------

using MonomialSet = std::set<std::string>;

// "p_{4}*p_{1,2} (+) p_{2}*p_{1,4}" → {"4|1,2", "2|1,4"}; the two factors of
// a Grassmann monomial are unordered.
MonomialSet parse_relation(const std::string& line) {
  MonomialSet out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const auto a0 = line.find("p_{", pos);
    if (a0 == std::string::npos) break;
    const auto a1 = line.find('}', a0);
    const auto b0 = line.find("p_{", a1);
    const auto b1 = line.find('}', b0);
    std::string a = line.substr(a0 + 3, a1 - a0 - 3);
    std::string b = line.substr(b0 + 3, b1 - b0 - 3);
    if (std::count(a.begin(), a.end(), ',') == std::count(b.begin(), b.end(), ',') && b < a) {
      std::swap(a, b);
    }
    out.insert(a + "|" + b);
    pos = b1 + 1;
  }
  return out;
}

std::set<MonomialSet> cli_relations(const std::vector<std::string>& args) {
  std::vector<std::string> argv{"tropflag", "relations"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  if (cli::run(argv, out, err) != cli::kPositive) throw InternalError(err.str());
  std::set<MonomialSet> rels;
  std::istringstream in(out.str());
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.front() != '#') rels.insert(parse_relation(line));
  }
  return rels;
}

Outcome relation_golden_files() {
  const std::set<MonomialSet> degenerate{{"3|1,2", "2|1,3"},
                                         {"4|1,2", "2|1,4"},
                                         {"4|1,3", "3|1,4"},
                                         {"4|2,3", "3|2,4", "2|3,4"}};
  const std::set<MonomialSet> flag{{"1,4|2,3", "1,3|2,4", "1,2|3,4"},
                                   {"1|2,3", "2|1,3", "3|1,2"},
                                   {"4|1,2", "2|1,4", "1|2,4"},
                                   {"4|1,3", "1|3,4", "3|1,4"},
                                   {"4|2,3", "2|3,4", "3|2,4"}};
  const auto got_degenerate = cli_relations({"--r", "1", "--s", "2", "--S", "1", "--n", "4"});
  auto got_flag = cli_relations({"--r", "1", "--s", "2", "--S", "", "--n", "4"});
  const auto grassmann = cli_relations({"--r", "2", "--s", "2", "--n", "4"});
  got_flag.insert(grassmann.begin(), grassmann.end());
  const bool ok = got_degenerate == degenerate && got_flag == flag;
  return {ok, std::to_string(got_degenerate.size()) + " degenerate, " +
                  std::to_string(got_flag.size()) + " flag relations"};
}

// ---- counterexample ---------------------------------------------------------

Outcome counterexample() {
  const auto [a1, a2] = counterexample_matrices(1, 2);
  const auto p1 = pluecker_vector(a1).tropical;
  const auto p2 = pluecker_vector(a2).tropical;
  const std::vector<TropicalValue> expect1{0, 0, 0, 0}, expect2{1, 1, 0, 2, 0, 0};
  const std::vector<PlueckerVector> pair{p1, p2};
  const auto flag = ld_flag_dressian_member(pair, DegenerationType({1, 2}, {Subset()}, 4),
                                            PairMode::kAllPairs);
  const auto deg = ld_flag_dressian_member(
      pair, DegenerationType({1, 2}, {Subset::of({1})}, 4), PairMode::kAllPairs);
  const bool values_ok = p1.values() == expect1 && p2.values() == expect2;
  const bool failure_ok =
      !deg.member &&
      parse_relation(deg.failure->relation.relation.to_string()) == MonomialSet{"4|1,2", "2|1,4"};
  return {values_ok && flag.member && failure_ok,
          std::string("FlDr member ") + (flag.member ? "yes" : "no") + ", fails " +
              (deg.failure ? deg.failure->relation.relation.to_string() : "nothing")};
}

// ---- fans ------------------------------------------------------------------

struct FanCase {
  std::string name;
  DegenerationType dt;
  std::vector<std::uint64_t> f_vector;
  int lineality;
  double limit_seconds;
};

std::vector<FanCase> fan_cases() {
  const Subset one = Subset::of({1});
  return {{"FlDr(1,2;4)", DegenerationType::flag({1, 2}, 4), {1, 10, 15}, 3, 30},
          {"LFlDr((1,2),{1};4)", DegenerationType({1, 2}, {one}, 4), {1, 3}, 4, 30},
          {"LFlDr((1,2,3),({1},{1});4)", DegenerationType({1, 2, 3}, {one, one}, 4), {1, 3}, 5, 30},
          {"FlDr((1,2,3);4)", DegenerationType::flag({1, 2, 3}, 4), {1, 20, 79, 78}, 3, 600}};
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

struct FanRuns {
  Outcome fans;
  Outcome homogeneity;
};

FanRuns fan_runs() {
  FanRuns r{{true, ""}, {true, "projective homogeneity / lineality: "}};
  auto run = [&](const std::string& name, const PrevarietySystem& sys, bool contractual,
                 const FanCase* expect) {
    const auto start = Clock::now();
    const auto fan = enumerate_prevariety(sys);
    const double t = seconds_since(start);
    const auto h = homogeneity_space(sys);
    const auto cmp = compare_homogeneity(h, fan);
    const int lin = fan.lineality_dimension.value_or(-1);
    if (expect) {
      const bool ok = fan.f_vector == expect->f_vector && lin == expect->lineality &&
                      t < expect->limit_seconds;
      r.fans.pass = r.fans.pass && ok;
      std::ostringstream d;
      d << name << " " << join(fan.f_vector) << " lin " << lin << " in " << std::fixed
        << std::setprecision(3) << t << " s; ";
      r.fans.detail += d.str();
    }
    r.homogeneity.pass = r.homogeneity.pass && cmp.contained && (!contractual || cmp.equal);
    r.homogeneity.detail += name + " " + std::to_string(h.projective) + "/" +
                            std::to_string(lin) + "; ";
  };
  for (const auto& c : fan_cases()) run(c.name, build_system(c.dt, PairMode::kAllPairs), true, &c);
  run("Gr(2,4)", build_system(DegenerationType::flag({2}, 4), PairMode::kAllPairs), false, nullptr);
  run("LFlDr((1,2),{1,2};4)",
      build_system(DegenerationType({1, 2}, {Subset::of({1, 2})}, 4), PairMode::kAllPairs), false,
      nullptr);
  return r;
}

// ---- Theorem A -----------------------------------------------------------

Outcome theorem_a_suite() {
  std::mt19937_64 rng(20240601);
  int members = 0, disagreements = 0, exceptions = 0;
  const int count = 1000;
  for (int i = 0; i < count; ++i) {
    try {
      const int n = 1 + static_cast<int>(rng() % 5);
      const int k = 1 + static_cast<int>(rng() % 3);
      const auto rep = theorem_a_report(random_flag_instance(n, k, rng));
      disagreements += !rep.agree();
      members += rep.agree() && rep.a;
    } catch (const std::exception&) {
      ++exceptions;
    }
  }
  return {disagreements == 0 && exceptions == 0,
          std::to_string(count) + " instances, " + std::to_string(members) + " members, " +
              std::to_string(disagreements) + " disagreements, " + std::to_string(exceptions) +
              " exceptions"};
}

// ---- projection proposition ------------------------------------------------

bool in_trop(const TropicalPoint& x, const std::vector<CircuitVector>& circuit_list) {
  for (const auto& c : circuit_list) {
    if (!form_evaluate_twice(c.point.coords(), x.coords())) return false;
  }
  return true;
}

Outcome projection_suite() {
  const auto corpus = matroid_corpus(5, 2, 20240601);
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> lambda(0, 6);
  long long samples = 0, lifts = 0, failures = 0, exceptions = 0;
  for (const auto& m : corpus) {
    if (m.rank() == 0) continue;
    const auto cocs = cocircuits(m);
    const auto m_circuits = circuits(m);
    for (std::uint32_t mask = 0; mask < (1u << m.n()); ++mask) {
      const Subset S(mask);
      try {
        if (deletion_rank(m, S) == 0) continue;
        const auto ms = mu_s(m, S);
        const auto ms_circuits = circuits(ms);
        std::vector<TropicalValue> lambdas(cocs.size());
        for (int k = 0; k < 200; ++k) {
          for (auto& l : lambdas) l = lambda(rng);
          const auto y = trop_project(cocircuit_span_sample(m, lambdas), S);
          failures += y && !in_trop(*y, ms_circuits);
          ++samples;
        }
        for (const auto& c : cocircuits(ms)) {
          const auto lifted = lift_through(c.point, m, S);
          failures += !in_trop(lifted, m_circuits) || trop_project(lifted, S) != c.point;
          ++lifts;
        }
      } catch (const std::exception&) {
        ++exceptions;
      }
    }
  }
  return {failures == 0 && exceptions == 0,
          std::to_string(corpus.size()) + " corpus matroids (rank 0 skipped), " + std::to_string(samples) +
              " projected samples, " + std::to_string(lifts) + " lifts, " +
              std::to_string(failures) + " failures, " + std::to_string(exceptions) +
              " exceptions"};
}

// ---- Theorem B -------------------------------------------------------------

Outcome realization_suite() {
  std::mt19937_64 rng(20240601);
  int failures = 0, exceptions = 0;
  const int count = 200;
  for (int i = 0; i < count; ++i) {
    try {
      const int n = 1 + static_cast<int>(rng() % 5);
      const int k = 1 + static_cast<int>(rng() % 3);
      std::vector<int> ranks(k);
      for (auto& r : ranks) r = 1 + static_cast<int>(rng() % n);
      std::sort(ranks.begin(), ranks.end());
      std::vector<Subset> S(k - 1);
      for (auto& s : S) s = Subset(static_cast<std::uint32_t>(rng() % (1u << n)));
      const DegenerationType dt(ranks, S, n);
      const auto mats = random_ld_realization(dt, rng);
      std::vector<PlueckerVector> vectors;
      for (const auto& m : mats) vectors.push_back(pluecker_vector(m).tropical);
      bool ok = ld_flag_dressian_member(vectors, dt, PairMode::kAllPairs).member;
      for (int j = 0; j + 1 < k; ++j) {
        ok = ok && verify_classical_ld_relations(mats[j], mats[j + 1], S[j]) &&
             rowspace_contains(mats[j + 1], project_matrix(mats[j], S[j]));
      }
      failures += !ok;
    } catch (const std::exception&) {
      ++exceptions;
    }
  }
  return {failures == 0 && exceptions == 0,
          std::to_string(count) + " realizations, " + std::to_string(failures) + " failures, " +
              std::to_string(exceptions) + " exceptions"};
}

// ---- Dressian/exchange --------------------------------------------------------

Outcome dressian_exchange() {
  const std::vector<TropicalValue> alphabet{0, 1, TropicalValue::infinity()};
  const auto rels = generate_ld_relations(2, 2, Subset(), 4);
  int candidates = 0, valuated = 0, disagreements = 0;
  for (int code = 0; code < 729; ++code) {
    std::vector<TropicalValue> v;
    for (int k = 0, c = code; k < 6; ++k, c /= 3) v.push_back(alphabet[c % 3]);
    if (code == 728) continue;  // all ∞
    const PlueckerVector p(4, 2, v);
    bool relations = true;
    for (const auto& rel : rels) relations = relations && relation_satisfied(rel, p);
    const bool exchange = check_exchange_axiom(p).ok;
    disagreements += relations != exchange;
    valuated += exchange;
    ++candidates;
  }
  return {disagreements == 0 && candidates == 728,
          std::to_string(candidates) + " candidates, " + std::to_string(valuated) +
              " valuated matroids, " + std::to_string(disagreements) + " disagreements"};
}

// ---- poset -----------------------------------------------------------------

Outcome poset_suite() {
  const auto covers = all_covers({1, 2}, 4);
  const auto rep = poset_scan({1, 2}, 4, covers, 100, 20240601);
  int contained = 0, full = 0;
  for (const auto& c : rep.covers) {
    contained += c.homogeneity_contained;
    full += c.samples == 100 && c.transferred == 100;
  }
  const bool ok = covers.size() == 32 && contained == 32 && full == 32 && rep.ok();
  return {ok, std::to_string(covers.size()) + " covers, containment " + std::to_string(contained) +
                  "/32, full transfer " + std::to_string(full) + "/32"};
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, const std::string& name, double limit,
                    const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double t = seconds_since(start);
    const bool pass = o.pass && (limit <= 0 || t < limit);
    failed += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << " [" << id << "] " << name << " (" << std::fixed
              << std::setprecision(3) << t << " s";
    if (limit > 0) std::cout << ", limit " << std::setprecision(0) << limit << " s";
    std::cout << "): " << o.detail << std::endl;
  };
  report(1, "relation golden files", 1, relation_golden_files);
  report(2, "counterexample reproduction", 1, counterexample);
  FanRuns fans;
  // Per-instance limits (30 s, and 600 s for the complete flag) are checked
  // inside; the outer limit is their sum.
  report(3, "fan f-vectors and lineality", 30 * 3 + 600, [&] {
    fans = fan_runs();
    return fans.fans;
  });
  report(4, "Theorem A property suite", 300, theorem_a_suite);
  report(5, "projection proposition suite", 300, projection_suite);
  report(6, "Theorem B constructive suite", 300, realization_suite);
  report(7, "homogeneity lemma", 0, [&] { return fans.homogeneity; });
  report(8, "Dressian/exchange equivalence", 10, dressian_exchange);
  report(9, "poset corollaries", 120, poset_suite);
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed")
            << std::endl;
  return failed ? 1 : 0;
}
