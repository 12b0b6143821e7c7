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

#include <json.hpp>

#include "tropflag/fan.hpp"
#include "tropflag/quotient.hpp"
#include "tropflag/realization.hpp"
#include "tropflag/relations.hpp"
#include "tropflag/valuated_matroid.hpp"

namespace tropflag {

using Json = nlohmann::ordered_json;

// Rationals are "p/q" or integer strings, ∞ is "inf". Readers also accept
// JSON integers. All readers throw UsageError on malformed input.

Json to_json(const TropicalValue& v);
TropicalValue tropical_from_json(const Json& j);
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json to_json(const RationalVector& v);
Json to_json(Subset s);
Subset subset_from_json(const Json& j, int n);

// [coords] with "inf"; nullopt as null.
Json to_json(const TropicalPoint& p);
Json to_json(const std::optional<TropicalPoint>& p);
TropicalPoint point_from_json(const Json& j);

// { "n", "r", "values": [ { "set": [...], "val": ... } ] }; absent sets are ∞.
Json to_json(const PlueckerVector& p);
PlueckerVector pluecker_from_json(const Json& j);

Json to_json(const TropicalRelation& rel);
Json to_json(const SystemRelation& rel);
Json to_json(const SignedRelation& rel);

// { "n", "S": [[...], ...], "matroids": [pluecker, ...] }, ranks taken from
// the matroids (an optional "ranks" entry is cross-checked).
FlagInstance flag_instance_from_json(const Json& j);
Json to_json(const FlagInstance& fi);
DegenerationType degeneration_from_json(const Json& j);

Json to_json(const TheoremAReport& rep);
Json to_json(const FanSummary& fan);

// Entries as lists of { "c": coefficient, "e": exponent } terms.
Json to_json(const LaurentElement& f);
LaurentElement laurent_from_json(const Json& j);
Json to_json(const ValuedMatrix& m);
ValuedMatrix matrix_from_json(const Json& j);

// { "n", "ranks": [...], "relations": [ { "lower", "upper",
// "terms": [ [[A...],[B...]], ... ] } ] } with 1-based factor indices.
PrevarietySystem system_from_json(const Json& j);

}  // namespace tropflag
