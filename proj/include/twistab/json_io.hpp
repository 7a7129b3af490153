#pragma once

#include <json.hpp>

#include "twistab/chambers.hpp"
#include "twistab/monoid.hpp"
#include "twistab/stabilize.hpp"

namespace twistab {

using Json = nlohmann::json;

// Group specifications: {"kind":"symmetric","degree":n} | {"kind":"cyclic",
// "n":n} | {"kind":"dihedral","n":n} | {"kind":"product","factors":[...]} |
// {"kind":"table","order":n,"mul":[[...]]}. The string form accepts the
// shorthands "S3", "C4" / "Z4", "D4", "trivial" and products like "C2xC2",
// or inline JSON.
GroupPtr parse_group_spec(const Json& j);
GroupPtr parse_group_string(const std::string& s);

std::string element_to_string(const FiniteGroup& g, int index);
int element_from_string(const FiniteGroup& g, const std::string& s);

CurveGraph curve_from_json(const Json& j);
Json curve_to_json(const CurveGraph& g);

// "1/2,1/2,1" or a JSON array of fraction strings.
WeightVector weights_from_string(const std::string& s);
WeightVector weights_from_json(const Json& j);
Json weights_to_json(const WeightVector& w);

MonodromyAssignment monodromy_from_json(const Json& j, const CurveGraph& g,
                                        GroupPtr group);
Json monodromy_to_json(const MonodromyAssignment& mono, const CurveGraph& g);

Json violations_to_json(const std::vector<Violation>& v);
Json report_to_json(const StabilityReport& r);
Json record_to_json(const StableMapRecord& rec);
Json chamber_to_json(const Chamber& c);

// Monoid generators as arrays of fraction strings: [["1/2","1/2"],...].
AdmissibleMonoid monoid_from_json(const Json& j);

}  // namespace twistab
