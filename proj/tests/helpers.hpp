#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "covrough/setsys.hpp"

namespace testing {

// Element labelled i in a universe "1".."n".
inline covrough::Element el(int i) { return covrough::Element{static_cast<std::size_t>(i - 1)}; }

inline covrough::Block blk(std::initializer_list<int> members) {
  covrough::Block b;
  for (int i : members) b |= covrough::Block::singleton(el(i));
  return b;
}

inline covrough::Covering cover(int n, std::initializer_list<std::initializer_list<int>> blocks) {
  std::vector<std::vector<std::string>> subsets;
  for (const auto& b : blocks) {
    auto& s = subsets.emplace_back();
    for (int i : b) s.push_back(std::to_string(i));
  }
  return covrough::make_covering(covrough::Universe::of_size(static_cast<std::size_t>(n)), subsets);
}

inline std::vector<covrough::Block> blocks_of(const covrough::Covering& c) {
  return {c.blocks().begin(), c.blocks().end()};
}

inline const covrough::Covering& example3() { static const auto c = cover(3, {{1}, {1, 2}, {3}}); return c; }
inline const covrough::Covering& example4() { static const auto c = cover(3, {{1, 2}, {2, 3}}); return c; }
inline const covrough::Covering& example5() { static const auto c = cover(4, {{1, 2}, {2, 3, 4}, {3, 4}}); return c; }
inline const covrough::Covering& example12() { static const auto c = cover(4, {{1, 2}, {1, 2, 3}, {3, 4}}); return c; }
inline const covrough::Covering& example14() { static const auto c = cover(3, {{1, 2}, {2, 3}, {1, 3}}); return c; }
inline const covrough::Covering& example19() { static const auto c = cover(3, {{1}, {2}, {3}, {1, 2}}); return c; }
inline const covrough::Covering& example20() { static const auto c = cover(3, {{1, 2}, {2, 3}}); return c; }

}  // namespace testing
