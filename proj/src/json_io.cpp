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

#include "tropflag/json_io.hpp"

#include "tropflag/errors.hpp"

namespace tropflag {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw UsageError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) {
    throw UsageError(std::string("field '") + key + "' must be an integer");
  }
  return v.get<int>();
}

}  // namespace

Json to_json(const TropicalValue& v) { return v.to_string(); }

TropicalValue tropical_from_json(const Json& j) {
  if (j.is_number_integer()) return TropicalValue(j.get<long>());
  if (j.is_string()) return TropicalValue::parse(j.get<std::string>());
  throw UsageError("expected a rational string, an integer or \"inf\"");
}

Json to_json(const Rational& q) { return q.get_str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw UsageError("expected a rational");
}

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

Json to_json(Subset s) { return s.elements(); }

Subset subset_from_json(const Json& j, int n) {
  if (!j.is_array()) throw UsageError("subset must be an array of integers");
  std::vector<int> elems;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw UsageError("subset entries must be integers");
    const int x = e.get<int>();
    if (x < 1 || x > n) {
      throw UsageError("subset element " + std::to_string(x) + " outside [" +
                       std::to_string(n) + "]");
    }
    elems.push_back(x);
  }
  return Subset::of(elems);
}

Json to_json(const TropicalPoint& p) {
  Json out = Json::array();
  for (const auto& v : p.coords()) out.push_back(to_json(v));
  return out;
}

Json to_json(const std::optional<TropicalPoint>& p) {
  return p ? to_json(*p) : Json(nullptr);
}

TropicalPoint point_from_json(const Json& j) {
  if (!j.is_array()) throw UsageError("point must be an array");
  std::vector<TropicalValue> raw;
  for (const auto& v : j) raw.push_back(tropical_from_json(v));
  auto p = try_normalize(std::move(raw));
  if (!p) throw UsageError("not a point of tropical projective space");
  return *p;
}

Json to_json(const PlueckerVector& p) {
  Json values = Json::array();
  const auto subs = p.subsets();
  for (std::size_t i = 0; i < subs.size(); ++i) {
    values.push_back({{"set", to_json(subs[i])}, {"val", to_json(p.values()[i])}});
  }
  return {{"n", p.n()}, {"r", p.rank()}, {"values", values}};
}

PlueckerVector pluecker_from_json(const Json& j) {
  const int n = int_field(j, "n");
  const int r = int_field(j, "r");
  if (n < 0 || n > kMaxGroundSet || r < 0 || r > n) {
    throw UsageError("invalid (n, r)");
  }
  const Json& values = field(j, "values");
  if (!values.is_array()) throw UsageError("'values' must be an array");
  std::vector<std::pair<Subset, TropicalValue>> entries;
  for (const auto& e : values) {
    entries.emplace_back(subset_from_json(field(e, "set"), n),
                         tropical_from_json(field(e, "val")));
  }
  try {
    return PlueckerVector::from_entries(n, r, entries);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

Json to_json(const TropicalRelation& rel) {
  Json terms = Json::array();
  for (const auto& m : rel.terms) {
    terms.push_back({{"A", to_json(m.a)}, {"B", to_json(m.b)}});
  }
  const auto& o = rel.origin;
  return {{"r", o.r},        {"s", o.s},          {"n", o.n},
          {"S", to_json(o.S)}, {"I", to_json(o.I)}, {"J", to_json(o.J)},
          {"single_factor", rel.single_factor},
          {"text", rel.to_string()}, {"terms", terms}};
}

Json to_json(const SystemRelation& rel) {
  Json out = to_json(rel.relation);
  out["lower"] = rel.lower + 1;
  out["upper"] = rel.upper + 1;
  return out;
}

Json to_json(const SignedRelation& rel) {
  Json terms = Json::array();
  for (const auto& t : rel.terms) {
    terms.push_back({{"coefficient", t.coefficient},
                     {"A", to_json(t.monomial.a)},
                     {"B", to_json(t.monomial.b)}});
  }
  const auto& o = rel.origin;
  return {{"r", o.r},        {"s", o.s},          {"n", o.n},
          {"S", to_json(o.S)}, {"I", to_json(o.I)}, {"J", to_json(o.J)},
          {"text", rel.to_string()}, {"terms", terms}};
}

DegenerationType degeneration_from_json(const Json& j) {
  const int n = int_field(j, "n");
  std::vector<int> ranks;
  for (const auto& r : field(j, "ranks")) {
    if (!r.is_number_integer()) throw UsageError("ranks must be integers");
    ranks.push_back(r.get<int>());
  }
  std::vector<Subset> S;
  if (j.contains("S")) {
    for (const auto& s : j.at("S")) S.push_back(subset_from_json(s, n));
  } else if (!ranks.empty()) {
    S.resize(ranks.size() - 1);
  }
  return DegenerationType(std::move(ranks), std::move(S), n);
}

FlagInstance flag_instance_from_json(const Json& j) {
  const int n = int_field(j, "n");
  const Json& ms = field(j, "matroids");
  if (!ms.is_array() || ms.empty()) throw UsageError("'matroids' must be a nonempty array");
  std::vector<ValuatedMatroid> matroids;
  std::vector<int> ranks;
  for (const auto& m : ms) {
    PlueckerVector p = pluecker_from_json(m);
    if (p.n() != n) throw UsageError("matroid ground set differs from n");
    ranks.push_back(p.rank());
    try {
      matroids.emplace_back(std::move(p));
    } catch (const DomainError& e) {
      throw UsageError(std::string("flag entry is not a valuated matroid: ") +
                       e.what());
    }
  }
  if (j.contains("ranks")) {
    std::vector<int> declared;
    for (const auto& r : j.at("ranks")) declared.push_back(r.get<int>());
    if (declared != ranks) throw UsageError("declared ranks do not match");
  }
  std::vector<Subset> S;
  if (j.contains("S")) {
    for (const auto& s : j.at("S")) S.push_back(subset_from_json(s, n));
  } else {
    S.resize(ranks.size() - 1);
  }
  return FlagInstance(std::move(matroids),
                      DegenerationType(ranks, std::move(S), n));
}

Json to_json(const FlagInstance& fi) {
  Json S = Json::array();
  for (Subset s : fi.type().S()) S.push_back(to_json(s));
  Json ms = Json::array();
  for (const auto& m : fi.matroids()) ms.push_back(to_json(m.pluecker()));
  return {{"n", fi.type().n()}, {"ranks", fi.type().ranks()}, {"S", S},
          {"matroids", ms}};
}

Json to_json(const TheoremAReport& rep) {
  return {{"a", rep.a},         {"b", rep.b},
          {"c", rep.c},         {"d", rep.d},
          {"agree", rep.agree()}, {"witnesses", rep.witnesses}};
}

Json to_json(const FanSummary& fan) {
  Json out;
  out["ambient_dim"] = fan.ambient_dimension;
  out["lineality_dim"] =
      fan.lineality_dimension ? Json(*fan.lineality_dimension) : Json(nullptr);
  out["f_vector"] = fan.f_vector;
  Json rays = Json::array();
  for (const auto& r : fan.rays) rays.push_back(to_json(r));
  out["rays"] = rays;
  Json cones = Json::array();
  for (const auto& c : fan.maximal_cones) {
    Json eq = Json::array(), ineq = Json::array();
    for (const auto& row : c.equalities) eq.push_back(to_json(row));
    for (const auto& row : c.inequalities) ineq.push_back(to_json(row));
    cones.push_back({{"dimension", c.dimension},
                     {"simplicial", c.simplicial},
                     {"equalities", eq},
                     {"inequalities", ineq}});
  }
  out["maximal_cones"] = cones;
  return out;
}

Json to_json(const LaurentElement& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f.terms()) {
    out.push_back({{"c", to_json(c)}, {"e", to_json(e)}});
  }
  return out;
}

LaurentElement laurent_from_json(const Json& j) {
  if (j.is_string()) return LaurentElement::parse(j.get<std::string>());
  if (!j.is_array()) throw UsageError("Laurent entry must be a term list");
  LaurentElement out;
  for (const auto& t : j) {
    out += LaurentElement(rational_from_json(field(t, "c")),
                          rational_from_json(field(t, "e")));
  }
  return out;
}

Json to_json(const ValuedMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

ValuedMatrix matrix_from_json(const Json& j) {
  const Json& rows = j.is_array() ? j : field(j, "entries");
  if (!rows.is_array() || rows.empty()) throw UsageError("matrix needs rows");
  const int cols = static_cast<int>(rows.front().size());
  std::vector<LaurentElement> entries;
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw UsageError("ragged matrix");
    }
    for (const auto& e : row) entries.push_back(laurent_from_json(e));
  }
  return ValuedMatrix(static_cast<int>(rows.size()), cols, std::move(entries));
}

PrevarietySystem system_from_json(const Json& j) {
  const int n = int_field(j, "n");
  std::vector<int> ranks;
  for (const auto& r : field(j, "ranks")) ranks.push_back(r.get<int>());
  const int k = static_cast<int>(ranks.size());
  std::vector<SystemRelation> rels;
  for (const auto& rj : field(j, "relations")) {
    SystemRelation sr;
    sr.lower = int_field(rj, "lower") - 1;
    sr.upper = int_field(rj, "upper") - 1;
    if (sr.lower < 0 || sr.lower >= k || sr.upper < 0 || sr.upper >= k) {
      throw UsageError("relation factor index out of range");
    }
    sr.relation.single_factor = sr.lower == sr.upper;
    sr.relation.origin.n = n;
    sr.relation.origin.r = ranks[sr.lower];
    sr.relation.origin.s = ranks[sr.upper];
    for (const auto& t : field(rj, "terms")) {
      if (!t.is_array() || t.size() != 2) throw UsageError("term must be [A, B]");
      const Subset a = subset_from_json(t[0], n), b = subset_from_json(t[1], n);
      if (a.size() != ranks[sr.lower] || b.size() != ranks[sr.upper]) {
        throw UsageError("term subset sizes do not match the factor ranks");
      }
      sr.relation.terms.push_back({a, b});
    }
    rels.push_back(std::move(sr));
  }
  return build_system(n, ranks, rels);
}

}  // namespace tropflag
