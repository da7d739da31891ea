#pragma once

#include <optional>
#include <vector>

#include "covrough/setsys.hpp"

namespace covrough {

/// Blocks of c - {k} whose union is k.
using Witness = std::vector<Block>;

/// A witness when k is a union of other blocks of c, empty otherwise.
/// Only proper subsets of k can take part in such a union, so the witness
/// returned is all of them. Throws BlockNotInCovering.
std::optional<Witness> is_reducible_element(const Covering& c, Block k);

struct ReducibilityReport {
  std::vector<std::optional<Witness>> per_block;  // parallel to c.blocks()
  bool is_irreducible_covering = true;
};

ReducibilityReport reducibility(const Covering& c);
bool is_irreducible(const Covering& c);

/// Removes reducible elements, lowest canonical index first, until none remain.
/// cov(reduct(c)) == cov(c).
Covering reduct(const Covering& c);

struct InvariabilityResult {
  bool invariable = false;
  bool irreducible = false;
  std::vector<Block> reducible_blocks;
  std::vector<Element> elements_without_core;

  explicit operator bool() const { return invariable; }
};

/// Irreducible and every element has a core block.
InvariabilityResult is_invariable(const Covering& c);

}  // namespace covrough
