#include "covrough/setsys.hpp"

#include <algorithm>
#include <unordered_set>

namespace covrough {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyUniverse: return "EmptyUniverse";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorKind::EmptyBlock: return "EmptyBlock";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::NotACover: return "NotACover";
    case ErrorKind::DuplicateBlock: return "DuplicateBlock";
    case ErrorKind::BlockNotInCovering: return "BlockNotInCovering";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

std::vector<Element> Block::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for (Word w = bits_; w != 0; w &= w - 1) {
    out.push_back(Element{static_cast<std::size_t>(std::countr_zero(w))});
  }
  return out;
}

Universe::Universe(std::vector<std::string> names) {
  if (names.empty()) {
    throw Error(ErrorKind::EmptyUniverse, "universe must contain at least one element");
  }
  if (names.size() > kMaxUniverseSize) {
    throw Error(ErrorKind::UniverseTooLarge,
                "universe has " + std::to_string(names.size()) + " elements; at most " +
                    std::to_string(kMaxUniverseSize) + " are supported");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) {
      throw Error(ErrorKind::DuplicateElement, "universe lists element '" + n + "' twice");
    }
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

Universe Universe::of_size(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return Universe(std::move(names));
}

const std::string& Universe::label(Element x) const {
  check(x);
  return (*names_)[x.index];
}

std::optional<Element> Universe::find(std::string_view label) const {
  const auto& n = *names_;
  auto it = std::find(n.begin(), n.end(), label);
  if (it == n.end()) return std::nullopt;
  return Element{static_cast<std::size_t>(it - n.begin())};
}

Element Universe::element(std::string_view label) const {
  if (auto x = find(label)) return *x;
  throw Error(ErrorKind::UnknownElement, "unknown element '" + std::string(label) + "'");
}

void Universe::check(Element x) const {
  if (x.index >= size()) {
    throw Error(ErrorKind::UnknownElement,
                "element index " + std::to_string(x.index) + " is outside a universe of size " +
                    std::to_string(size()));
  }
}

Covering make_covering(const Universe& universe,
                       const std::vector<std::vector<std::string>>& subsets) {
  std::vector<Block> blocks;
  blocks.reserve(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    Block b;
    for (const auto& label : subsets[i]) {
      auto x = universe.find(label);
      if (!x) {
        throw Error(ErrorKind::UnknownElement,
                    "block " + std::to_string(i) + ": unknown element '" + label + "'", i);
      }
      b |= Block::singleton(*x);
    }
    blocks.push_back(b);
  }
  return make_covering(universe, std::move(blocks));
}

Covering make_covering(const Universe& universe, std::vector<Block> blocks) {
  const Block full = universe.full();
  Block covered;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].empty()) {
      throw Error(ErrorKind::EmptyBlock, "block " + std::to_string(i) + " is empty", i);
    }
    if (!blocks[i].subset_of(full)) {
      throw Error(ErrorKind::UnknownElement,
                  "block " + std::to_string(i) + " has members outside the universe", i);
    }
    covered |= blocks[i];
  }

  std::vector<std::size_t> order(blocks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return blocks[a] < blocks[b]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (blocks[order[k]] == blocks[order[k - 1]]) {
      const std::size_t first = std::min(order[k], order[k - 1]);
      const std::size_t second = std::max(order[k], order[k - 1]);
      throw Error(ErrorKind::DuplicateBlock,
                  "block " + std::to_string(second) + " duplicates block " + std::to_string(first) +
                      " " + format_block(universe, blocks[second]),
                  second);
    }
  }

  if (covered != full) {
    const Block missing(full.bits() & ~covered.bits());
    throw Error(ErrorKind::NotACover,
                "blocks do not cover the universe; missing " + format_block(universe, missing));
  }

  std::vector<Block> sorted;
  sorted.reserve(blocks.size());
  for (auto i : order) sorted.push_back(blocks[i]);
  return Covering(universe, std::move(sorted));
}

bool Covering::contains(Block b) const { return std::binary_search(blocks_.begin(), blocks_.end(), b); }

std::optional<std::size_t> Covering::index_of(Block b) const {
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), b);
  if (it == blocks_.end() || *it != b) return std::nullopt;
  return static_cast<std::size_t>(it - blocks_.begin());
}

bool is_partition(const Covering& c) {
  // Blocks are disjoint iff their sizes add up to the universe size.
  std::size_t total = 0;
  for (const auto& b : c.blocks()) total += b.size();
  return total == c.universe().size();
}

std::vector<Block> blocks_containing(const Covering& c, Element x) {
  c.universe().check(x);
  std::vector<Block> out;
  for (const auto& b : c.blocks()) {
    if (b.contains(x)) out.push_back(b);
  }
  return out;
}

std::vector<std::string> block_labels(const Universe& u, Block b) {
  std::vector<std::string> out;
  for (auto x : b.elements()) {
    if (x.index < u.size()) out.push_back(u.names()[x.index]);
  }
  return out;
}

std::string format_block(const Universe& u, Block b) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : block_labels(u, b)) {
    if (!first) out += ',';
    out += l;
    first = false;
  }
  return out + "}";
}

std::string format_family(const Universe& u, std::span<const Block> blocks) {
  std::string out = "{";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += ',';
    out += format_block(u, blocks[i]);
  }
  return out + "}";
}

}  // namespace covrough
