#pragma once

#include <string>
#include <string_view>

#include "ufx/model.hpp"

namespace ufx {

/// Line-oriented model text (grammar in docs/model_format.md):
///
///     vocab
///       pred R 2
///       func F 2
///     universe 3
///     rel R: 0,1 1,2
///     fun F: (0,0)->0
///
/// Throws ParseError for malformed lines and SemanticError for unknown
/// symbols, arity mismatches, out-of-range indices, duplicate rows and
/// missing function rows.
Model parse_model(std::string_view text);

/// Canonical text: symbols in declaration order, tuples and rows sorted.
std::string serialize_model(const Model& m);

/// Structured mirror of the same content (schema "ufx.model", version 1).
std::string serialize_model_json(const Model& m);
Model parse_model_json(std::string_view text);

/// Dispatches on the first non-blank character: '{' selects the
/// structured mirror, anything else the line format.
Model parse_model_any(std::string_view text);

} // namespace ufx
