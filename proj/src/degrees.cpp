#include "covrough/degrees.hpp"

#include <algorithm>

#include "covrough/neighborhoods.hpp"

namespace covrough {

std::size_t membership_repeat_degree(const Covering& c, Element x) {
  c.universe().check(x);
  return static_cast<std::size_t>(
      std::count_if(c.blocks().begin(), c.blocks().end(), [x](Block b) { return b.contains(x); }));
}

std::size_t common_block_repeat_degree(const Covering& c, Element x, Element y) {
  c.universe().check(x);
  c.universe().check(y);
  const Block pair = Block::singleton(x) | Block::singleton(y);
  return static_cast<std::size_t>(
      std::count_if(c.blocks().begin(), c.blocks().end(), [pair](Block b) { return pair.subset_of(b); }));
}

std::optional<Block> core_block(const Covering& c, Element x) {
  const Block n = neighborhood(c, x);
  if (c.contains(n)) return n;
  return std::nullopt;
}

bool CoreBlockAssignment::every_element_has_core() const {
  return std::all_of(per_element.begin(), per_element.end(),
                     [](const std::optional<Block>& b) { return b.has_value(); });
}

CoreBlockAssignment core_blocks(const Covering& c) {
  CoreBlockAssignment out;
  const std::size_t n = c.universe().size();
  out.per_element.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto k = core_block(c, Element{i});
    out.per_element.push_back(k);
    if (k) out.core_blocks.push_back(*k);
  }
  std::sort(out.core_blocks.begin(), out.core_blocks.end());
  out.core_blocks.erase(std::unique(out.core_blocks.begin(), out.core_blocks.end()), out.core_blocks.end());
  return out;
}

std::vector<Block> non_core_blocks(const Covering& c) {
  const auto assignment = core_blocks(c);
  std::vector<Block> out;
  std::set_difference(c.blocks().begin(), c.blocks().end(), assignment.core_blocks.begin(),
                      assignment.core_blocks.end(), std::back_inserter(out));
  return out;
}

DegreeProfile degree_profile(const Covering& c) {
  const std::size_t n = c.universe().size();
  DegreeProfile p;
  p.membership.assign(n, 0);
  p.common.assign(n, std::vector<std::size_t>(n, 0));
  for (const auto& b : c.blocks()) {
    const auto members = b.elements();
    for (auto x : members) {
      ++p.membership[x.index];
      for (auto y : members) ++p.common[x.index][y.index];
    }
  }
  return p;
}

}  // namespace covrough
