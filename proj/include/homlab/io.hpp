#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "homlab/complex.hpp"
#include "homlab/fpn.hpp"

namespace homlab::io {

using json = nlohmann::json;

// Raised for malformed input; the message names the file, the line for syntax
// errors, and the JSON path of the offending field.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reads a JSON document; syntax errors report line and column.
json read_json(const std::filesystem::path& file);

// Ring documents:
//   monomial: {"field_p", "variables" | "variable_count", "relations", "degree_cap"}
//   raw:      {"field_p", "basis_labels", "structure_constants", "unit_index"}
//   named:    {"field_p", "named": "truncated_polynomial" | "square_zero" | "upper_triangular", "n"}
AlgebraPtr parse_ring(const json& doc, const std::string& where = "ring");
AlgebraPtr load_ring(const std::filesystem::path& file);

// Module documents: {"ring", "side", "dim", "actions": {label: rows}} or
// {"ring", "side", "recipe": "free:2"}.  A plain string is a file reference when such
// a file exists, otherwise a recipe.  "ring" (alias "ring_ref") may be a path relative
// to base or an inline ring document; a default ring can be supplied.
Module parse_module(const json& doc, const std::filesystem::path& base, const AlgebraPtr& default_ring = nullptr,
                    std::optional<Side> default_side = std::nullopt, const std::string& where = "module");
Module load_module(const std::filesystem::path& file, const AlgebraPtr& default_ring = nullptr);

// Complex documents: explicit {"ring", "side", "lo", "hi", "terms", "differentials"} where
// differentials[i] leaves degree lo+i+1; or one shorthand key among "recipe", "disk",
// "sphere", "shift", "cone", "sum".
ChainComplex parse_complex(const json& doc, const std::filesystem::path& base, const AlgebraPtr& default_ring = nullptr,
                           std::optional<Side> default_side = std::nullopt, const std::string& where = "complex");
ChainComplex load_complex(const std::filesystem::path& file, const AlgebraPtr& default_ring = nullptr);

// Family documents: {"template": {"field_p", "relations", "degree_cap", "variables"?,
// "variable_prefix"?}, "D_range": [...], "recipes": [...], "side"?}.
TruncationFamily parse_family(const json& doc, const std::string& where = "family");
TruncationFamily load_family(const std::filesystem::path& file);

json matrix_to_json(const Matrix& m);
json module_to_json(const Module& m);
json complex_to_json(const ChainComplex& x);
json ring_to_json(const AlgebraPtr& r);

}  // namespace homlab::io
