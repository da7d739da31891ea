#include "covrough/covering_io.hpp"

#include <fstream>
#include <sstream>

namespace covrough {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::MalformedInput, what);
}

}  // namespace

Covering covering_from_json(const nlohmann::json& j) {
  if (!j.is_object()) malformed("covering must be a JSON object");
  auto u = j.find("universe");
  if (u == j.end() || !u->is_array()) malformed("missing \"universe\" array");
  auto bl = j.find("blocks");
  if (bl == j.end() || !bl->is_array()) malformed("missing \"blocks\" array");

  std::vector<std::string> names;
  for (std::size_t i = 0; i < u->size(); ++i) {
    if (!(*u)[i].is_string()) malformed("universe entry " + std::to_string(i) + " is not a string");
    names.push_back((*u)[i].get<std::string>());
  }
  Universe universe(std::move(names));

  std::vector<std::vector<std::string>> subsets;
  for (std::size_t i = 0; i < bl->size(); ++i) {
    const auto& b = (*bl)[i];
    if (!b.is_array()) malformed("block " + std::to_string(i) + " is not an array");
    auto& labels = subsets.emplace_back();
    for (const auto& e : b) {
      if (!e.is_string()) malformed("block " + std::to_string(i) + " has a non-string element");
      labels.push_back(e.get<std::string>());
    }
  }
  return make_covering(universe, subsets);
}

Covering parse_covering(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed("malformed JSON at byte " + std::to_string(e.byte));
  }
  return covering_from_json(j);
}

Covering load_covering(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed("cannot open file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_covering(ss.str());
}

nlohmann::ordered_json covering_to_json(const Covering& c) {
  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  for (const auto& b : c.blocks()) blocks.push_back(block_labels(c.universe(), b));
  nlohmann::ordered_json j;
  j["universe"] = c.universe().names();
  j["blocks"] = std::move(blocks);
  return j;
}

std::string render_covering(const Covering& c) { return covering_to_json(c).dump() + "\n"; }

}  // namespace covrough
