#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "cychom/rewriting.hpp"

namespace cychom {

/// Reads a presentation:
///   {"generators": [{"name": "a", "weight": 1, "parity": 1}, ...],
///    "relations": [[{"coef": "1", "word": ["a", "b"]}, ...], ...],
///    "order": ["a", "b", ...],   (optional, declaration order by default; first is largest)
///    "trunc": 6}                 (optional, default 10)
/// Throws SchemaError with the JSON path of the offending field.
Presentation presentation_from_json(const nlohmann::json& j);
Presentation load_presentation(const std::string& path);

nlohmann::json to_json(const Presentation& p);

/// Stable FNV-1a hash of the canonical JSON form, as 16 hex digits.
std::string presentation_hash(const Presentation& p);

}  // namespace cychom
