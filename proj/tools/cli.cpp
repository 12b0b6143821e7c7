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

#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "tropflag/corpus.hpp"
#include "tropflag/errors.hpp"
#include "tropflag/fan.hpp"
#include "tropflag/json_io.hpp"
#include "tropflag/linear_spaces.hpp"
#include "tropflag/realization.hpp"

namespace tropflag::cli {
namespace {

// Pattern bound above which `fan` insists on --deep.
constexpr long double kDeepThreshold = 1e6L;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError("malformed JSON in '" + path + "': " + e.what());
  }
}

std::vector<int> parse_ranks(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    item.erase(std::remove(item.begin(), item.end(), '('), item.end());
    item.erase(std::remove(item.begin(), item.end(), ')'), item.end());
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad rank list '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty rank list");
  return out;
}

// "1;1" → ({1},{1}); components may be empty, "-", "{}", or "all".
std::vector<Subset> parse_sets(const std::string& text, std::size_t count,
                               int n) {
  std::vector<Subset> out;
  if (count == 0) {
    if (!text.empty() && text != "-" && text != "()") {
      throw UsageError("a single factor takes no degeneration sets");
    }
    return out;
  }
  std::string body = text;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  std::size_t start = 0;
  while (true) {
    const auto end = body.find(';', start);
    out.push_back(parse_subset(body.substr(start, end - start), n));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  if (out.size() == 1 && count > 1 && text.empty()) out.resize(count);
  if (out.size() != count) {
    throw UsageError("expected " + std::to_string(count) +
                     " degeneration sets separated by ';', got '" + text + "'");
  }
  return out;
}

PairMode parse_mode(const std::string& mode) {
  if (mode == "consecutive") return PairMode::kConsecutive;
  if (mode == "all-pairs" || mode == "all_pairs") return PairMode::kAllPairs;
  throw UsageError("mode must be consecutive or all-pairs");
}

std::string join_vector(const std::vector<std::uint64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += (i ? "," : "") + std::to_string(v[i]);
  }
  return out + ")";
}

struct Common {
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
};

void add_format(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
}

int cmd_check_matroid(const std::string& path, const Common& c,
                      std::ostream& out) {
  const PlueckerVector p = pluecker_from_json(read_json_file(path));
  const auto check = check_exchange_axiom(p);
  if (c.format == "json") {
    Json j = {{"valid", check.ok}};
    if (check.witness) {
      j["witness"] = {{"I", to_json(check.witness->first)},
                      {"J", to_json(check.witness->second)},
                      {"i", check.witness->element}};
    }
    out << j.dump(2) << "\n";
  } else if (check.ok) {
    out << "valid valuated matroid (n=" << p.n() << ", r=" << p.rank() << ")\n";
  } else {
    out << "exchange axiom fails: " << check.witness->to_string() << "\n";
  }
  return check.ok ? kPositive : kNegative;
}

struct RelationArgs {
  int r = -1, s = -1, n = -1;
  std::string S, ranks, mode = "all-pairs";
  bool classical = false;
  bool all = false;
};

int cmd_relations(const RelationArgs& a, const Common& c, std::ostream& out) {
  if (a.n < 0) throw UsageError("--n is required");
  Json listing = Json::array();
  std::vector<std::string> lines;
  if (!a.ranks.empty()) {
    const auto ranks = parse_ranks(a.ranks);
    const DegenerationType dt(ranks, parse_sets(a.S, ranks.size() - 1, a.n), a.n);
    if (a.classical) throw UsageError("--classical lists a single (r, s) pair");
    const auto system = flag_relation_system(dt, parse_mode(a.mode), !a.all);
    std::pair<int, int> section{-1, -1};
    for (const auto& sr : system) {
      if (std::make_pair(sr.lower, sr.upper) != section) {
        section = {sr.lower, sr.upper};
        lines.push_back(
            sr.lower == sr.upper
                ? "# Grassmann relations of factor " + std::to_string(sr.lower + 1)
                : "# factors " + std::to_string(sr.lower + 1) + "," +
                      std::to_string(sr.upper + 1) + " with S={" +
                      dt.S_between(sr.lower, sr.upper).to_string() + "}");
      }
      lines.push_back(sr.relation.to_string());
      listing.push_back(to_json(sr));
    }
  } else {
    if (a.r < 0 || a.s < 0) throw UsageError("give --r, --s, --n or --ranks, --n");
    const Subset S = parse_subset(a.S, a.n);
    if (a.classical) {
      for (const auto& rel : generate_signed_relations(a.r, a.s, S, a.n)) {
        lines.push_back(rel.to_string());
        listing.push_back(to_json(rel));
      }
    } else {
      auto rels = generate_ld_relations(a.r, a.s, S, a.n);
      if (!a.all) rels = nontrivial_relations(rels);
      for (const auto& rel : rels) {
        lines.push_back(rel.to_string());
        listing.push_back(to_json(rel));
      }
    }
  }
  if (c.format == "json") {
    out << listing.dump(2) << "\n";
    return kPositive;
  }
  bool any = false;
  for (const auto& l : lines) {
    out << l << "\n";
    any = any || l.front() != '#';
  }
  if (!any) {
    out << "# no nontrivial relations: every term index is excluded by S or "
           "all terms coincide\n";
  }
  return kPositive;
}

int cmd_dressian(const std::string& path, const std::string& mode,
                 const Common& c, std::ostream& out) {
  const Json j = read_json_file(path);
  const int n = j.at("n").get<int>();
  std::vector<PlueckerVector> vectors;
  std::vector<int> ranks;
  for (const auto& m : j.at(j.contains("vectors") ? "vectors" : "matroids")) {
    vectors.push_back(pluecker_from_json(m));
    ranks.push_back(vectors.back().rank());
  }
  if (vectors.empty()) throw UsageError("no Pluecker vectors given");
  std::vector<Subset> S;
  if (j.contains("S")) {
    for (const auto& s : j.at("S")) S.push_back(subset_from_json(s, n));
  } else {
    S.resize(ranks.size() - 1);
  }
  const DegenerationType dt(ranks, S, n);
  const auto rep = ld_flag_dressian_member(vectors, dt, parse_mode(mode));
  if (c.format == "json") {
    Json r = {{"member", rep.member}};
    if (rep.failure) {
      r["failing_relation"] = to_json(rep.failure->relation);
      Json vals = Json::array();
      for (const auto& v : rep.failure->values) vals.push_back(to_json(v));
      r["term_values"] = vals;
    }
    out << r.dump(2) << "\n";
  } else if (rep.member) {
    out << "member of LFlDr " << dt.to_string() << "\n";
  } else {
    out << "not a member: " << rep.failure->to_string() << "\n";
  }
  return rep.member ? kPositive : kNegative;
}

int cmd_theorem_a(const std::string& path, const Hooks& hooks,
                  std::ostream& out, std::ostream& err) {
  const FlagInstance fi = flag_instance_from_json(read_json_file(path));
  const auto rep = hooks.theorem_a ? theorem_a_report(fi, *hooks.theorem_a)
                                   : theorem_a_report(fi);
  out << to_json(rep).dump(2) << "\n";
  if (!rep.agree()) {
    err << "internal error: the four equivalent conditions disagree\n";
    return kInternal;
  }
  return rep.a ? kPositive : kNegative;
}

struct FanArgs {
  std::string ranks, S, mode = "all-pairs", system_file;
  int n = -1;
  bool deep = false;
  std::uint64_t budget = 50'000'000;
};

PrevarietySystem fan_system(const FanArgs& a, std::string& label) {
  if (!a.system_file.empty()) {
    label = a.system_file;
    return system_from_json(read_json_file(a.system_file));
  }
  if (a.ranks.empty() || a.n < 0) {
    throw UsageError("give --ranks and --n, or --system");
  }
  const auto ranks = parse_ranks(a.ranks);
  const DegenerationType dt(ranks, parse_sets(a.S, ranks.size() - 1, a.n), a.n);
  label = dt.to_string();
  return build_system(dt, parse_mode(a.mode));
}

int cmd_fan(const FanArgs& a, const Common& c, std::ostream& out,
            std::ostream& err) {
  std::string label;
  const PrevarietySystem sys = fan_system(a, label);
  const long double bound = pattern_bound(sys);
  if (bound > kDeepThreshold && !a.deep) {
    err << "pattern bound " << static_cast<double>(bound)
        << " exceeds the default limit; rerun with --deep (expect up to a "
           "few minutes)\n";
    return kUsage;
  }
  EnumerationOptions opt;
  opt.node_budget = a.budget;
  const auto start = std::chrono::steady_clock::now();
  if (a.deep) {
    opt.progress_interval = 200;
    opt.progress = [&err](std::uint64_t nodes, std::uint64_t cells) {
      err << "\r[fan] nodes " << nodes << ", cells " << cells << std::flush;
    };
  }
  FanSummary fan;
  try {
    fan = enumerate_prevariety(sys, opt);
  } catch (const ResourceError& e) {
    err << (a.deep ? "\n" : "") << e.what() << " after " << e.nodes_visited()
        << " nodes (" << e.cells_found() << " cells found); raise --budget\n";
    return kUsage;
  }
  if (a.deep) err << "\n";
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto h = homogeneity_space(sys);
  const auto cmp = compare_homogeneity(h, fan);
  if (fan.lineality_dimension && !cmp.contained) {
    err << "internal error: homogeneity space not contained in the lineality "
           "space\n";
    return kInternal;
  }
  if (c.format == "json") {
    Json j = to_json(fan);
    j["homogeneity_dim"] = h.projective;
    j["homogeneity_equals_lineality"] = cmp.equal;
    j["relations"] = sys.relations.size();
    j["nodes_visited"] = fan.nodes_visited;
    out << j.dump(2) << "\n";
  } else {
    out << "system: " << label << "\n"
        << "relations: " << sys.relations.size() << "\n"
        << "ambient_dim: " << fan.ambient_dimension << "\n";
    if (!fan.lineality_dimension) {
      out << "finite part is empty\n";
    } else {
      out << "lineality_dim: " << *fan.lineality_dimension << "\n"
          << "f_vector: " << join_vector(fan.f_vector) << "\n"
          << "maximal_cones: " << fan.maximal_cones.size() << "\n"
          << "rays: " << fan.rays.size() << "\n"
          << "homogeneity_dim: " << h.projective
          << (cmp.equal ? " (equals lineality)" : " (strictly smaller)") << "\n";
    }
    out << "nodes_visited: " << fan.nodes_visited << "\n";
    if (a.deep) out << "seconds: " << seconds << "\n";
  }
  return kPositive;
}

int cmd_homogeneity(const FanArgs& a, const Common& c, std::ostream& out) {
  std::string label;
  const auto sys = fan_system(a, label);
  const auto h = homogeneity_space(sys);
  if (c.format == "json") {
    Json basis = Json::array();
    for (const auto& v : h.basis) basis.push_back(to_json(v));
    out << Json{{"dimension", h.dimension}, {"projective_dimension", h.projective},
                {"basis", basis}}.dump(2)
        << "\n";
  } else {
    out << "system: " << label << "\n"
        << "homogeneity_dim: " << h.dimension << " (projective " << h.projective
        << ")\n";
  }
  return kPositive;
}

struct RealizeArgs {
  std::string ranks, S, a = "1", b = "2";
  int n = -1;
  bool counterexample = false;
};

int cmd_realize(const RealizeArgs& a, const Common& c, std::ostream& out) {
  Json j;
  bool ok = true;
  if (a.counterexample) {
    const Rational av = parse_rational(a.a), bv = parse_rational(a.b);
    if (!(bv > av && av > 0)) throw UsageError("need b > a > 0");
    const auto [a1, a2] = counterexample_matrices(av, bv);
    const auto p1 = pluecker_vector(a1).tropical;
    const auto p2 = pluecker_vector(a2).tropical;
    const std::vector<PlueckerVector> pair{p1, p2};
    const auto flag = ld_flag_dressian_member(
        pair, DegenerationType({1, 2}, {Subset()}, 4), PairMode::kAllPairs);
    const auto degenerate = ld_flag_dressian_member(
        pair, DegenerationType({1, 2}, {Subset::of({1})}, 4), PairMode::kAllPairs);
    j["a"] = to_json(av);
    j["b"] = to_json(bv);
    j["matrices"] = {to_json(a1), to_json(a2)};
    j["tropical"] = {to_json(p1), to_json(p2)};
    j["flag_dressian_member"] = flag.member;
    j["ld_flag_dressian_member_S1"] = degenerate.member;
    if (degenerate.failure) {
      j["failing_relation"] = degenerate.failure->relation.relation.to_string();
    }
    j["L1_in_L2"] = rowspace_contains(a2, a1);
    j["pr1_L1_in_L2"] = rowspace_contains(a2, project_matrix(a1, Subset::of({1})));
    j["classical_relations_S_empty"] = verify_classical_ld_relations(a1, a2, Subset());
    j["classical_relations_S1"] = verify_classical_ld_relations(a1, a2, Subset::of({1}));
    ok = flag.member && !degenerate.member;
  } else {
    if (a.ranks.empty() || a.n < 0) throw UsageError("give --ranks and --n");
    const auto ranks = parse_ranks(a.ranks);
    const DegenerationType dt(ranks, parse_sets(a.S, ranks.size() - 1, a.n), a.n);
    std::mt19937_64 rng(c.seed);
    const auto mats = random_ld_realization(dt, rng);
    std::vector<PlueckerVector> vectors;
    std::vector<ValuatedMatroid> ms;
    Json steps = Json::array();
    for (const auto& m : mats) {
      vectors.push_back(pluecker_vector(m).tropical);
      ms.emplace_back(vectors.back());
    }
    for (int i = 0; i + 1 < dt.length(); ++i) {
      const bool classical = verify_classical_ld_relations(mats[i], mats[i + 1], dt.S()[i]);
      const bool contained = rowspace_contains(mats[i + 1], project_matrix(mats[i], dt.S()[i]));
      steps.push_back({{"step", i + 1}, {"classical_relations", classical},
                       {"projected_containment", contained}});
      ok = ok && classical && contained;
    }
    const bool member = ld_flag_dressian_member(vectors, dt, PairMode::kAllPairs).member;
    const FlagInstance fi(ms, dt);
    std::optional<TheoremAReport> report;
    if (steps_well_defined(fi)) report = theorem_a_report(fi);
    ok = ok && member && (!report || (report->agree() && report->a));
    j["seed"] = c.seed;
    j["type"] = dt.to_string();
    Json mj = Json::array(), tj = Json::array();
    for (const auto& m : mats) mj.push_back(to_json(m));
    for (const auto& v : vectors) tj.push_back(to_json(v));
    j["matrices"] = mj;
    j["tropical"] = tj;
    j["steps"] = steps;
    j["ld_flag_dressian_member"] = member;
    // μ_{S_i} is undefined when a deletion has rank zero; (b)–(d) are skipped.
    j["theorem_a"] = report ? to_json(*report) : Json(nullptr);
    if (report && !report->agree()) {
      out << j.dump(2) << "\n";
      return kInternal;
    }
  }
  j["verified"] = ok;
  if (c.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    if (j.contains("seed")) out << "seed: " << c.seed << "\n";
    for (std::size_t i = 0; i < j["matrices"].size(); ++i) {
      const auto m = matrix_from_json(j["matrices"][i]);
      out << "L" << i + 1 << ":\n" << m.to_string();
      out << "  tropical: " << pluecker_from_json(j["tropical"][i]).to_string() << "\n";
    }
    if (a.counterexample) {
      out << "member of FlDr(1,2;4): " << j["flag_dressian_member"] << "\n"
          << "member of LFlDr((1,2),{1};4): " << j["ld_flag_dressian_member_S1"] << "\n";
      if (j.contains("failing_relation")) {
        out << "failing relation: " << j["failing_relation"].get<std::string>() << "\n";
      }
    }
    out << "verified: " << (ok ? "yes" : "no") << "\n";
  }
  return ok ? kPositive : kNegative;
}

struct PosetArgs {
  std::string ranks, covers = "all";
  std::vector<std::string> cover_list;
  int n = -1;
  int samples = 100;
};

int cmd_poset(const PosetArgs& a, const Common& c, std::ostream& out) {
  if (a.ranks.empty() || a.n < 0) throw UsageError("give --ranks and --n");
  const auto ranks = parse_ranks(a.ranks);
  DegenerationType::flag(ranks, a.n);  // validates
  std::vector<Cover> covers;
  if (a.cover_list.empty()) {
    if (a.covers != "all") throw UsageError("--covers takes 'all'; use --cover for a list");
    covers = all_covers(ranks, a.n);
  }
  for (const auto& text : a.cover_list) {
    const auto arrow = text.find("->");
    if (arrow == std::string::npos) throw UsageError("cover must look like 'S->S2'");
    covers.push_back(make_cover(parse_sets(text.substr(0, arrow), ranks.size() - 1, a.n),
                                parse_sets(text.substr(arrow + 2), ranks.size() - 1, a.n)));
  }
  const auto rep = poset_scan(ranks, a.n, covers, a.samples, c.seed);
  if (c.format == "json") {
    Json cj = Json::array();
    for (const auto& cr : rep.covers) {
      Json lower = Json::array();
      for (Subset s : cr.cover.lower) lower.push_back(to_json(s));
      cj.push_back({{"S", lower}, {"index", cr.cover.index + 1},
                    {"added", cr.cover.added},
                    {"homogeneity_contained", cr.homogeneity_contained},
                    {"samples", cr.samples}, {"transferred", cr.transferred}});
    }
    Json j = {{"seed", c.seed}, {"covers", cj},
              {"extreme_samples", rep.extreme_samples},
              {"extreme_agreements", rep.extreme_agreements}, {"ok", rep.ok()}};
    if (rep.counterexample_separates) {
      j["counterexample_separates"] = *rep.counterexample_separates;
    }
    out << j.dump(2) << "\n";
  } else {
    out << "seed: " << c.seed << "\n";
    int contained = 0, transferred = 0, samples = 0;
    for (const auto& cr : rep.covers) {
      contained += cr.homogeneity_contained;
      transferred += cr.transferred;
      samples += cr.samples;
    }
    out << "covers: " << rep.covers.size() << "\n"
        << "homogeneity containment: " << contained << "/" << rep.covers.size() << "\n"
        << "boundary points transferred: " << transferred << "/" << samples << "\n"
        << "extreme degenerations agree: " << rep.extreme_agreements << "/"
        << rep.extreme_samples << "\n";
    if (rep.counterexample_separates) {
      out << "counterexample separates LFlDr(∅) from LFlDr({1}): "
          << (*rep.counterexample_separates ? "yes" : "no") << "\n";
    }
  }
  return rep.ok() ? kPositive : kNegative;
}

int cmd_corpus_test(int count, int max_n, int max_k, const Common& c,
                    std::ostream& out) {
  if (count < 1 || max_n < 1 || max_n > 5 || max_k < 1) {
    throw UsageError("need count >= 1, 1 <= max-n <= 5, max-k >= 1");
  }
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<int> nd(1, max_n), kd(1, max_k);
  int members = 0, disagreements = 0;
  std::optional<Json> first_bad;
  for (int i = 0; i < count; ++i) {
    const FlagInstance fi = random_flag_instance(nd(rng), kd(rng), rng);
    const auto rep = theorem_a_report(fi);
    members += rep.a && rep.agree();
    if (!rep.agree()) {
      ++disagreements;
      if (!first_bad) first_bad = Json{{"instance", to_json(fi)}, {"report", to_json(rep)}};
    }
  }
  Json j = {{"seed", c.seed}, {"instances", count}, {"members", members},
            {"non_members", count - members - disagreements},
            {"disagreements", disagreements}};
  if (first_bad) j["first_disagreement"] = *first_bad;
  out << (c.format == "json" ? j.dump(2) : j.dump()) << "\n";
  return disagreements ? kInternal : kPositive;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const Hooks& hooks) {
  CLI::App app{"Valuated matroids, tropical linear spaces and linear "
               "degenerate flag Dressians"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--seed", common.seed, "Random seed")->capture_default_str();

  std::string path, mode = "all-pairs";
  auto* check = app.add_subcommand("check-matroid", "Validate a Pluecker vector");
  check->add_option("file", path, "JSON Pluecker vector")->required();
  add_format(check, common);

  RelationArgs rel;
  auto* rels = app.add_subcommand("relations", "List tropical Pluecker relations");
  rels->add_option("--r", rel.r, "Lower rank");
  rels->add_option("--s", rel.s, "Upper rank");
  rels->add_option("--n", rel.n, "Ground set size");
  rels->add_option("--S", rel.S, "Degeneration set(s), e.g. 1,2 or '1;1'");
  rels->add_option("--ranks", rel.ranks, "Rank vector for a whole system");
  rels->add_option("--mode", rel.mode, "consecutive|all-pairs");
  rels->add_flag("--classical", rel.classical, "Signed classical relations");
  rels->add_flag("--all", rel.all, "Keep vacuous relations");
  add_format(rels, common);

  auto* dressian = app.add_subcommand("dressian", "LD flag Dressian membership");
  dressian->add_option("file", path, "JSON with n, S and Pluecker vectors")->required();
  dressian->add_option("--mode", mode, "consecutive|all-pairs");
  add_format(dressian, common);

  auto* theorem = app.add_subcommand("theorem-a", "Evaluate the four equivalent conditions");
  theorem->add_option("file", path, "JSON flag instance")->required();

  FanArgs fan;
  auto* fan_cmd = app.add_subcommand("fan", "Enumerate a tropical prevariety");
  auto* hom_cmd = app.add_subcommand("homogeneity", "Homogeneity space of a system");
  for (auto* sub : {fan_cmd, hom_cmd}) {
    sub->add_option("--ranks", fan.ranks, "Rank vector, e.g. 1,2,3");
    sub->add_option("--S", fan.S, "Degeneration sets, e.g. '1;1'");
    sub->add_option("--n", fan.n, "Ground set size");
    sub->add_option("--mode", fan.mode, "consecutive|all-pairs");
    sub->add_option("--system", fan.system_file, "JSON relation system");
    add_format(sub, common);
  }
  fan_cmd->add_flag("--deep", fan.deep, "Allow large enumerations");
  fan_cmd->add_option("--budget", fan.budget, "Node budget")->capture_default_str();

  RealizeArgs real;
  auto* realize = app.add_subcommand("realize", "Random LD realizations");
  realize->add_option("--ranks", real.ranks, "Rank vector");
  realize->add_option("--S", real.S, "Degeneration sets");
  realize->add_option("--n", real.n, "Ground set size");
  realize->add_flag("--counterexample", real.counterexample,
                    "The two-step flag that separates LFlDr(∅) from LFlDr({1})");
  realize->add_option("--a", real.a, "Exponent a of the counterexample");
  realize->add_option("--b", real.b, "Exponent b of the counterexample");
  add_format(realize, common);

  PosetArgs poset;
  auto* poset_cmd = app.add_subcommand("poset", "Checks along covers of degenerations");
  poset_cmd->add_option("--ranks", poset.ranks, "Rank vector")->required();
  poset_cmd->add_option("--n", poset.n, "Ground set size")->required();
  poset_cmd->add_option("--covers", poset.covers, "all");
  poset_cmd->add_option("--cover", poset.cover_list, "Cover 'S->S2' (repeatable)");
  poset_cmd->add_option("--samples", poset.samples, "Boundary samples per cover");
  add_format(poset_cmd, common);

  int count = 1000, max_n = 5, max_k = 3;
  auto* corpus = app.add_subcommand("corpus-test", "Theorem A agreement on random flags");
  corpus->add_option("--count", count, "Number of instances");
  corpus->add_option("--max-n", max_n, "Largest ground set");
  corpus->add_option("--max-k", max_k, "Longest flag");
  add_format(corpus, common);

  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--seed", common.seed, "Random seed");
  }

  std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
  try {
    app.parse(std::move(rev));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPositive : kUsage;
  }
  try {
    if (*check) return cmd_check_matroid(path, common, out);
    if (*rels) return cmd_relations(rel, common, out);
    if (*dressian) return cmd_dressian(path, mode, common, out);
    if (*theorem) return cmd_theorem_a(path, hooks, out, err);
    if (*fan_cmd) return cmd_fan(fan, common, out, err);
    if (*hom_cmd) return cmd_homogeneity(fan, common, out);
    if (*realize) return cmd_realize(real, common, out);
    if (*poset_cmd) return cmd_poset(poset, common, out);
    if (*corpus) return cmd_corpus_test(count, max_n, max_k, common, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Json::exception& e) {
    err << "malformed input: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace tropflag::cli
