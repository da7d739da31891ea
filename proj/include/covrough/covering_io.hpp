#pragma once

// Covering file format (JSON, UTF-8):
//   {"universe": ["1","2","3"], "blocks": [["1"],["1","2"],["3"]]}
// "universe" order fixes element indices.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "covrough/setsys.hpp"

namespace covrough {

/// Throws Error(MalformedInput) on bad JSON or schema, and the make_covering
/// errors otherwise.
Covering parse_covering(std::string_view text);
Covering covering_from_json(const nlohmann::json& j);
/// Throws Error(MalformedInput) when the file cannot be read.
Covering load_covering(const std::filesystem::path& path);

nlohmann::ordered_json covering_to_json(const Covering& c);
/// Canonical block order, members in universe order, trailing newline.
std::string render_covering(const Covering& c);

}  // namespace covrough
