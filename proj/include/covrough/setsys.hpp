#pragma once

// Universes, blocks and coverings over a finite universe of at most 64
// elements. A block is a bit vector whose bit i is element i of the universe.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "covrough/error.hpp"

namespace covrough {

inline constexpr std::size_t kMaxUniverseSize = 64;

/// Position of an element inside its universe.
struct Element {
  std::size_t index = 0;
  friend constexpr auto operator<=>(Element, Element) = default;
};

class Block {
 public:
  using Word = std::uint64_t;

  constexpr Block() = default;
  constexpr explicit Block(Word bits) : bits_(bits) {}

  static constexpr Block singleton(Element x) { return Block(Word{1} << x.index); }
  /// The block {0, 1, ..., n-1}.
  static constexpr Block full(std::size_t n) {
    return Block(n >= 64 ? ~Word{0} : (Word{1} << n) - 1);
  }

  constexpr Word bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(Element x) const { return (bits_ >> x.index) & 1U; }
  constexpr bool subset_of(Block other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(Block other) const { return subset_of(other) && bits_ != other.bits_; }
  constexpr bool intersects(Block other) const { return (bits_ & other.bits_) != 0; }

  constexpr Block& operator&=(Block o) { bits_ &= o.bits_; return *this; }
  constexpr Block& operator|=(Block o) { bits_ |= o.bits_; return *this; }
  friend constexpr Block operator&(Block a, Block b) { return a &= b; }
  friend constexpr Block operator|(Block a, Block b) { return a |= b; }

  /// Canonical order: the bit vector read as an unsigned integer.
  friend constexpr auto operator<=>(Block, Block) = default;

  /// Members in ascending index order.
  std::vector<Element> elements() const;

 private:
  Word bits_ = 0;
};

/// Ordered, nonempty list of distinct labels. Copies share storage.
class Universe {
 public:
  /// Throws EmptyUniverse, DuplicateElement or UniverseTooLarge.
  explicit Universe(std::vector<std::string> names);

  /// Labels "1".."n".
  static Universe of_size(std::size_t n);

  std::size_t size() const { return names_->size(); }
  const std::vector<std::string>& names() const { return *names_; }
  const std::string& label(Element x) const;
  Element element(std::string_view label) const;  // throws UnknownElement
  std::optional<Element> find(std::string_view label) const;
  Block full() const { return Block::full(size()); }
  /// Throws UnknownElement when x is outside the universe.
  void check(Element x) const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

class Covering;

/// Validates and canonicalizes. Throws EmptyBlock, UnknownElement,
/// NotACover or DuplicateBlock; the error carries the input block index.
Covering make_covering(const Universe& universe,
                       const std::vector<std::vector<std::string>>& subsets);
Covering make_covering(const Universe& universe, std::vector<Block> blocks);

/// Duplicate-free family of nonempty blocks whose union is the universe,
/// held in ascending canonical order. Immutable.
class Covering {
 public:
  const Universe& universe() const { return universe_; }
  std::span<const Block> blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  const Block& operator[](std::size_t i) const { return blocks_[i]; }

  bool contains(Block b) const;
  std::optional<std::size_t> index_of(Block b) const;

  friend bool operator==(const Covering& a, const Covering& b) {
    return a.blocks_ == b.blocks_ && a.universe_ == b.universe_;
  }

 private:
  Covering(Universe universe, std::vector<Block> blocks)
      : universe_(std::move(universe)), blocks_(std::move(blocks)) {}
  friend Covering make_covering(const Universe&, std::vector<Block>);

  Universe universe_;
  std::vector<Block> blocks_;
};

bool is_partition(const Covering& c);

/// Blocks whose bit for x is set, in canonical order. Throws UnknownElement.
std::vector<Block> blocks_containing(const Covering& c, Element x);

/// "{a,b,c}" with labels in universe order.
std::string format_block(const Universe& u, Block b);
/// "{{..},{..}}" in canonical block order.
std::string format_family(const Universe& u, std::span<const Block> blocks);
std::vector<std::string> block_labels(const Universe& u, Block b);

}  // namespace covrough
