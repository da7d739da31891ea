#include "covrough/neighborhoods.hpp"

#include <algorithm>

#include "covrough/reduction.hpp"

namespace covrough {

namespace {

Block neighborhood_unchecked(const Covering& c, Element x) {
  Block n = c.universe().full();
  for (const auto& b : c.blocks()) {
    if (b.contains(x)) n &= b;
  }
  return n;
}

}  // namespace

Block neighborhood(const Covering& c, Element x) {
  c.universe().check(x);
  return neighborhood_unchecked(c, x);
}

NeighborhoodMap neighborhood_map(const Covering& c) {
  const std::size_t n = c.universe().size();
  std::vector<Block> per_element;
  per_element.reserve(n);
  for (std::size_t i = 0; i < n; ++i) per_element.push_back(neighborhood_unchecked(c, Element{i}));

  std::vector<Block> family = per_element;
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return NeighborhoodMap{c, std::move(per_element), make_covering(c.universe(), std::move(family))};
}

Covering cov(const Covering& c) { return neighborhood_map(c).family; }

bool is_cov_fixed_point(const Covering& c) {
  const std::size_t n = c.universe().size();
  if (c.size() > n) return false;
  std::vector<Block> family;
  family.reserve(n);
  for (std::size_t i = 0; i < n; ++i) family.push_back(neighborhood_unchecked(c, Element{i}));
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return std::equal(family.begin(), family.end(), c.blocks().begin(), c.blocks().end());
}

std::string to_string(RejectionReason r) {
  switch (r) {
    case RejectionReason::TooManyBlocks: return "TooManyBlocks";
    case RejectionReason::ReducibleBlock: return "ReducibleBlock";
  }
  return "Unknown";
}

std::optional<RejectionReason> quick_reject_neighborhoods(const Covering& c) {
  if (c.size() > c.universe().size()) return RejectionReason::TooManyBlocks;
  for (const auto& b : c.blocks()) {
    if (is_reducible_element(c, b)) return RejectionReason::ReducibleBlock;
  }
  return std::nullopt;
}

}  // namespace covrough
