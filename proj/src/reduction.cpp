#include "covrough/reduction.hpp"

#include "covrough/degrees.hpp"

namespace covrough {

namespace {

std::optional<Witness> witness_for(std::span<const Block> blocks, Block k) {
  Witness w;
  Block joined;
  for (const auto& b : blocks) {
    if (b.proper_subset_of(k)) {
      w.push_back(b);
      joined |= b;
    }
  }
  if (joined == k) return w;
  return std::nullopt;
}

}  // namespace

std::optional<Witness> is_reducible_element(const Covering& c, Block k) {
  if (!c.contains(k)) {
    throw Error(ErrorKind::BlockNotInCovering,
                "block " + format_block(c.universe(), k) + " is not in the covering");
  }
  return witness_for(c.blocks(), k);
}

ReducibilityReport reducibility(const Covering& c) {
  ReducibilityReport r;
  r.per_block.reserve(c.size());
  for (const auto& b : c.blocks()) {
    auto w = witness_for(c.blocks(), b);
    if (w) r.is_irreducible_covering = false;
    r.per_block.push_back(std::move(w));
  }
  return r;
}

bool is_irreducible(const Covering& c) {
  for (const auto& b : c.blocks()) {
    if (witness_for(c.blocks(), b)) return false;
  }
  return true;
}

Covering reduct(const Covering& c) {
  std::vector<Block> blocks(c.blocks().begin(), c.blocks().end());
  for (;;) {
    bool removed = false;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (witness_for(blocks, blocks[i])) {
        blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(i));
        removed = true;
        break;
      }
    }
    if (!removed) break;
  }
  return make_covering(c.universe(), std::move(blocks));
}

InvariabilityResult is_invariable(const Covering& c) {
  InvariabilityResult r;
  for (const auto& b : c.blocks()) {
    if (witness_for(c.blocks(), b)) r.reducible_blocks.push_back(b);
  }
  r.irreducible = r.reducible_blocks.empty();
  const auto cores = core_blocks(c);
  for (std::size_t i = 0; i < cores.per_element.size(); ++i) {
    if (!cores.per_element[i]) r.elements_without_core.push_back(Element{i});
  }
  r.invariable = r.irreducible && r.elements_without_core.empty();
  return r;
}

}  // namespace covrough
