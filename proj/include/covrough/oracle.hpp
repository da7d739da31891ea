#pragma once

// Exhaustive enumeration of the coverings of small universes, machine
// checking of the neighborhood / core block / reduction laws over all of
// them, and the inverse search for coverings inducing given neighborhoods.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "covrough/setsys.hpp"

namespace covrough {

inline constexpr std::size_t kMaxEnumerationSize = 5;
inline constexpr std::size_t kMaxLawSize = 4;
inline constexpr std::size_t kMaxPreimageSize = 4;

/// A family of nonempty subsets of an n-element universe: bit (s - 1) is set
/// iff the subset with bit vector s belongs to the family.
using FamilyMask = std::uint32_t;

FamilyMask family_mask(const Covering& c);
/// Throws NotACover when the family does not cover u.
Covering covering_from_family(const Universe& u, FamilyMask family);

/// Every covering of a universe, each exactly once, in ascending family-mask
/// order. Optionally restricted to family masks in [first, last).
class CoveringStream {
 public:
  /// Throws UniverseTooLarge when u.size() > kMaxEnumerationSize.
  explicit CoveringStream(Universe u);
  CoveringStream(Universe u, std::uint64_t first, std::uint64_t last);

  std::optional<Covering> next();
  /// Family mask of the covering most recently returned by next().
  FamilyMask mask() const { return static_cast<FamilyMask>(current_); }
  /// One past the largest family mask.
  std::uint64_t end() const { return end_; }

 private:
  Universe universe_;
  std::uint64_t next_ = 0;
  std::uint64_t end_ = 0;
  std::uint64_t current_ = 0;
};

CoveringStream enumerate_coverings(std::size_t n);

/// Number of coverings of an n-element universe without materializing them.
std::uint64_t count_coverings(std::size_t n);

/// Definitional core block search: all blocks K with x in K and
/// l(x, y) == d(x) for every y in K. At most one block qualifies.
std::vector<Block> core_block_candidates(const Covering& c, Element x);

/// Every element has a core block and every block is some element's core block.
bool every_element_and_block_core(const Covering& c);

/// Irreducible coverings reachable by removing reducible elements in every
/// possible order, as sorted block lists. Exactly one for every covering.
std::vector<std::vector<Block>> reduct_outcomes(const Covering& c);

struct CensusRow {
  Covering covering;
  bool is_partition = false;
  bool is_irreducible = false;
  bool is_invariable = false;
  bool is_cov_fixed_point = false;
  Covering cov_image;
};

CensusRow census_row(const Covering& c);
/// All rows for an n-element universe, n <= kMaxLawSize.
std::vector<CensusRow> census(std::size_t n);

enum class Law {
  NeighborhoodReflexive,
  NeighborhoodNesting,
  NeighborhoodNoUnion,
  CovIdempotent,
  QuickRejectSound,
  CommonDegreeSymmetricBounded,
  CommonDegreeDiagonal,
  DegreeEquivalence,
  CoreBlockUnique,
  CoreBlockDualRoute,
  CoreBlockMinimal,
  NonCoreStructure,
  CoreEqualsNeighborhood,
  ReducibleNotCore,
  NonCoreReducible,
  WitnessValid,
  InvariableIffFixedPoint,
  InvariableIffAllCore,
  PartitionIsFixedPoint,
  ReductPreservesCov,
  ReductOrderIndependent,
  PreimageIffFixedPoint,
  FixedPointOwnPreimage,
};

std::string_view to_string(Law law);
std::vector<Law> all_laws();

struct Violation {
  Covering covering;
  Law law;
};

struct VerificationSummary {
  std::size_t universe_size = 0;
  std::uint64_t total_coverings = 0;
  std::uint64_t partitions = 0;
  std::uint64_t irreducible = 0;
  std::uint64_t invariable = 0;
  std::uint64_t fixed_points = 0;
  /// False for census-only runs, which check only the per-row laws.
  bool full_laws = true;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

struct VerifyOptions {
  unsigned threads = 1;
  /// Permit n = kMaxEnumerationSize as a census-only run.
  bool allow_census_only = false;
};

/// Checks every law over every covering of an n-element universe.
/// Throws UniverseTooLarge for n > kMaxLawSize unless census-only runs are
/// allowed and n <= kMaxEnumerationSize.
VerificationSummary verify_laws(std::size_t n, const VerifyOptions& options = {});

/// Laws violated by one covering, excluding the cross-covering preimage laws.
std::vector<Law> check_covering_laws(const Covering& c);

/// All coverings C of d's universe with cov(C) == d, ascending family-mask
/// order, truncated at limit. Throws UniverseTooLarge for |U| > kMaxPreimageSize.
std::vector<Covering> preimages(const Covering& d, std::optional<std::size_t> limit = std::nullopt);

}  // namespace covrough
