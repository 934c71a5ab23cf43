#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "interdec/arrangement.hpp"
#include "interdec/interactions.hpp"

// Document formats shared by the CLI and the tests. Parsing failures raise
// Error(ParseError) with a dotted path to the offending value.
namespace interdec::io {

using json = nlohmann::ordered_json;

/// "rational" or {"mod": p}; the CLI spelling "mod:p" is accepted too.
Field parse_field(const json& doc, const std::string& path = "field");
/// "rational" or "mod:p".
Field parse_field_spec(std::string_view spec);
json field_to_json(const Field& field);

/// Integer, or a string "p/q" / "p".
Scalar parse_scalar(const json& doc, const Field& field, const std::string& path);
/// Integers that fit a long stay numbers; everything else is a "p/q" string.
json scalar_to_json(const Scalar& x);
json vector_to_json(std::span<const Scalar> v);
json rows_to_json(const Matrix& m);
Matrix parse_rows(const json& doc, const Field& field, std::size_t cols, const std::string& path);

/// {"elements": [...], "relations": [[lo, hi], ...]}
Poset parse_poset(const json& doc, const std::string& path = "poset");
/// Relations are written as covering pairs.
json poset_to_json(const Poset& poset);

/// {"field", "ambient_dim", "poset", "spaces": {label: [rows]}}.
/// `field_override` replaces the declared field.
Arrangement parse_arrangement(const json& doc, const std::optional<Field>& field_override = std::nullopt);
json arrangement_to_json(const Arrangement& f);

json report_to_json(const CheckReport& report, const Poset& poset);
/// {"certified": bool, "components": {label: [rows]}}
json decomposition_to_json(const Decomposition& d, const Poset& poset);

/// {"variables": [{"label", "cardinality"}, ...]}
ProductSpace parse_model(const json& doc, std::size_t limit = kDefaultProductLimit);
json interactions_to_json(const InteractionReport& report, const FactorArrangement& fa, bool emit_bases);

/// Reads and parses a JSON file; ParseError on I/O or syntax failure.
json read_json_file(const std::string& path);

}  // namespace interdec::io
