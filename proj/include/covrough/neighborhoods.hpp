#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covrough/setsys.hpp"

namespace covrough {

/// Intersection of all blocks of c that contain x. Throws UnknownElement.
Block neighborhood(const Covering& c, Element x);

/// x -> N(x) together with the deduplicated family of neighborhoods.
struct NeighborhoodMap {
  Covering covering;
  std::vector<Block> per_element;  // indexed by element
  Covering family;                 // Cov(C)

  const Block& operator[](Element x) const { return per_element.at(x.index); }
};

NeighborhoodMap neighborhood_map(const Covering& c);

/// The neighborhoods induced by c, as a covering of the same universe.
Covering cov(const Covering& c);

/// True iff cov(c) == c, i.e. c is the neighborhoods of some covering.
bool is_cov_fixed_point(const Covering& c);

enum class RejectionReason {
  TooManyBlocks,   // more blocks than elements
  ReducibleBlock,  // some block is a union of other blocks
};

std::string to_string(RejectionReason r);

/// Cheap necessary conditions for being a neighborhoods. A returned reason
/// implies is_cov_fixed_point(c) is false; no reason decides nothing.
/// TooManyBlocks is checked first.
std::optional<RejectionReason> quick_reject_neighborhoods(const Covering& c);

}  // namespace covrough
