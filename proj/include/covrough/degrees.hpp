#pragma once

// Repeat degrees and core blocks.
//
// membership degree  d(x)   = |{K in C : x in K}|
// common degree      l(x,y) = |{K in C : {x,y} subset of K}|
// core block of x: the block K with x in K and l(x,y) = d(x) for every y in K.
// It exists iff the intersection of all blocks containing x is itself a block.

#include <cstddef>
#include <optional>
#include <vector>

#include "covrough/setsys.hpp"

namespace covrough {

/// Throws UnknownElement.
std::size_t membership_repeat_degree(const Covering& c, Element x);
/// x == y is allowed and yields membership_repeat_degree(c, x).
std::size_t common_block_repeat_degree(const Covering& c, Element x, Element y);

/// Empty when x has no core block. Throws UnknownElement.
std::optional<Block> core_block(const Covering& c, Element x);

struct CoreBlockAssignment {
  std::vector<std::optional<Block>> per_element;  // indexed by element
  std::vector<Block> core_blocks;                 // canonical order, deduplicated

  bool every_element_has_core() const;
};

CoreBlockAssignment core_blocks(const Covering& c);

/// Blocks that are the core block of no element, canonical order.
std::vector<Block> non_core_blocks(const Covering& c);

/// Full degree tables; the common-degree matrix is n x n.
struct DegreeProfile {
  std::vector<std::size_t> membership;
  std::vector<std::vector<std::size_t>> common;
};

DegreeProfile degree_profile(const Covering& c);

}  // namespace covrough
