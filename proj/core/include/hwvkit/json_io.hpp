#pragma once

// JSON encodings of the library types and reports.  Tableaux are written
// row by row: "rows": [[1, 1], [2]] lists the entries of the boxes of each
// row from left to right (rows of the skew diagram without boxes are []).

#include <nlohmann/json.hpp>

#include "hwvkit/conj.hpp"
#include "hwvkit/highest_weight.hpp"

namespace hwvkit {

using json = nlohmann::ordered_json;

json to_json(const Partition& p);
json to_json(const SkewDiagram& e);
json to_json(const Tableau& t);
json to_json(const DiagramMapping& a);
json to_json(const Triple& t);
json to_json(const Polynomial& f);
json to_json(const WeightPair& w);
json to_json(const BasisReport& r);
json to_json(const FiltrationReport& r);
json to_json(const PullbackReport& r);
json to_json(const SpanReport& r);
json to_json(const CharIndependenceReport& r);

// Parsers raise ParseError on malformed input (and the library errors on
// inconsistent data).
Partition partition_from_json(const json& j);
// A bare array is a straight shape; otherwise {"outer": [...], "inner": [...]}.
SkewDiagram skew_from_json(const json& j);
// {"shape": ..., "rows": [[...], ...]}; the shape may be omitted when the
// caller supplies it.
Tableau tableau_from_json(const json& j, const SkewDiagram* shape = nullptr);
// {"P": tableau, "Q": tableau, "alpha": [[[row, col], [row, col]], ...]}
// with alpha listing (source box, target box) pairs.
Triple triple_from_json(const json& j);
Polynomial polynomial_from_json(const json& j);

}  // namespace hwvkit
