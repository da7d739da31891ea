#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "covrough/oracle.hpp"
#include "covrough/reduction.hpp"
#include "covrough/setsys.hpp"

namespace covrough {

struct ElementRow {
  Element element;
  std::size_t membership_degree = 0;
  Block neighborhood;
  std::optional<Block> core_block;
};

struct BlockRow {
  Block block;
  std::vector<Element> core_block_of;
  std::optional<Witness> witness;
};

struct Classification {
  bool partition = false;
  bool irreducible = false;
  bool invariable = false;
  bool cov_fixed_point = false;
};

struct AnalysisReport {
  Covering covering;
  std::vector<ElementRow> elements;
  std::optional<std::vector<std::vector<std::size_t>>> common_degrees;
  std::vector<BlockRow> blocks;
  Classification classification;
  InvariabilityResult invariability;
  Covering cov;
  bool cov_equals_input = false;
};

AnalysisReport analyze(const Covering& c, bool with_common_degrees = false);

std::string render_text(const AnalysisReport& r);
nlohmann::ordered_json to_json(const AnalysisReport& r);

std::string render_text(const VerificationSummary& s);
nlohmann::ordered_json to_json(const VerificationSummary& s);

}  // namespace covrough
