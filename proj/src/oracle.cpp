#include "covrough/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <thread>
#include <unordered_set>

#include "covrough/degrees.hpp"
#include "covrough/neighborhoods.hpp"
#include "covrough/reduction.hpp"

namespace covrough {

namespace {

void check_enumerable(std::size_t n, std::size_t cap) {
  if (n == 0) throw Error(ErrorKind::EmptyUniverse, "universe size must be at least 1");
  if (n > cap) {
    throw Error(ErrorKind::UniverseTooLarge,
                "universe size " + std::to_string(n) + " exceeds the exhaustive limit of " +
                    std::to_string(cap));
  }
}

std::uint64_t family_end(std::size_t n) { return std::uint64_t{1} << ((std::size_t{1} << n) - 1); }

Block family_union(FamilyMask family) {
  Block u;
  for (FamilyMask f = family; f != 0; f &= f - 1) {
    u |= Block(static_cast<Block::Word>(std::countr_zero(f)) + 1);
  }
  return u;
}

std::vector<Block> family_blocks(FamilyMask family) {
  std::vector<Block> blocks;
  blocks.reserve(static_cast<std::size_t>(std::popcount(family)));
  for (FamilyMask f = family; f != 0; f &= f - 1) {
    blocks.emplace_back(static_cast<Block::Word>(std::countr_zero(f)) + 1);
  }
  return blocks;
}

// Union of the blocks in `live` (an index mask over blocks) that are proper
// subsets of blocks[i].
bool reducible_within(std::span<const Block> blocks, std::uint64_t live, std::size_t i) {
  Block joined;
  for (std::uint64_t m = live; m != 0; m &= m - 1) {
    const auto j = static_cast<std::size_t>(std::countr_zero(m));
    if (blocks[j].proper_subset_of(blocks[i])) joined |= blocks[j];
  }
  return joined == blocks[i];
}

// Route-independent union check: does some nonempty subfamily of `others`
// have union exactly `target`?
bool some_union_equals(std::span<const Block> others, Block target) {
  const std::size_t k = others.size();
  if (k > 12) {
    Block joined;
    for (auto b : others) {
      if (b.subset_of(target)) joined |= b;
    }
    return joined == target;
  }
  for (std::uint32_t s = 1; s < (1U << k); ++s) {
    Block joined;
    for (std::size_t j = 0; j < k; ++j) {
      if ((s >> j) & 1U) joined |= others[j];
    }
    if (joined == target) return true;
  }
  return false;
}

std::vector<Block> blocks_with(const Covering& c, Block required) {
  std::vector<Block> out;
  for (auto b : c.blocks()) {
    if (required.subset_of(b)) out.push_back(b);
  }
  return out;
}

}  // namespace

FamilyMask family_mask(const Covering& c) {
  check_enumerable(c.universe().size(), kMaxEnumerationSize);
  FamilyMask m = 0;
  for (auto b : c.blocks()) m |= FamilyMask{1} << (b.bits() - 1);
  return m;
}

Covering covering_from_family(const Universe& u, FamilyMask family) {
  check_enumerable(u.size(), kMaxEnumerationSize);
  return make_covering(u, family_blocks(family));
}

CoveringStream::CoveringStream(Universe u) : CoveringStream(u, 0, std::numeric_limits<std::uint64_t>::max()) {}

CoveringStream::CoveringStream(Universe u, std::uint64_t first, std::uint64_t last)
    : universe_(std::move(u)) {
  check_enumerable(universe_.size(), kMaxEnumerationSize);
  end_ = family_end(universe_.size());
  next_ = std::min(first, end_);
  end_ = std::min(last, end_);
}

std::optional<Covering> CoveringStream::next() {
  const Block full = universe_.full();
  while (next_ < end_) {
    const auto family = static_cast<FamilyMask>(next_++);
    if (family_union(family) == full) {
      current_ = family;
      return make_covering(universe_, family_blocks(family));
    }
  }
  return std::nullopt;
}

CoveringStream enumerate_coverings(std::size_t n) {
  check_enumerable(n, kMaxEnumerationSize);
  return CoveringStream(Universe::of_size(n));
}

std::uint64_t count_coverings(std::size_t n) {
  check_enumerable(n, kMaxEnumerationSize);
  const Block full = Block::full(n);
  const std::uint64_t end = family_end(n);
  std::uint64_t total = 0;
  for (std::uint64_t f = 0; f < end; ++f) {
    if (family_union(static_cast<FamilyMask>(f)) == full) ++total;
  }
  return total;
}

std::vector<Block> core_block_candidates(const Covering& c, Element x) {
  const std::size_t degree = membership_repeat_degree(c, x);
  std::vector<Block> out;
  for (auto k : c.blocks()) {
    if (!k.contains(x)) continue;
    const auto members = k.elements();
    if (std::all_of(members.begin(), members.end(),
                    [&](Element y) { return common_block_repeat_degree(c, x, y) == degree; })) {
      out.push_back(k);
    }
  }
  return out;
}

bool every_element_and_block_core(const Covering& c) {
  std::set<Block> cores;
  for (std::size_t i = 0; i < c.universe().size(); ++i) {
    const auto found = core_block_candidates(c, Element{i});
    if (found.empty()) return false;
    cores.insert(found.begin(), found.end());
  }
  return cores.size() == c.size();
}

std::vector<std::vector<Block>> reduct_outcomes(const Covering& c) {
  if (c.size() >= 64) {
    throw Error(ErrorKind::UniverseTooLarge, "removal-order search supports at most 63 blocks");
  }
  const auto blocks = c.blocks();
  std::unordered_set<std::uint64_t> seen;
  std::set<std::uint64_t> terminals;
  std::vector<std::uint64_t> stack{(std::uint64_t{1} << c.size()) - 1};
  while (!stack.empty()) {
    const auto live = stack.back();
    stack.pop_back();
    if (!seen.insert(live).second) continue;
    bool terminal = true;
    for (std::uint64_t m = live; m != 0; m &= m - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(m));
      if (reducible_within(blocks, live, i)) {
        terminal = false;
        stack.push_back(live & ~(std::uint64_t{1} << i));
      }
    }
    if (terminal) terminals.insert(live);
  }
  std::vector<std::vector<Block>> out;
  for (auto live : terminals) {
    auto& bs = out.emplace_back();
    for (std::uint64_t m = live; m != 0; m &= m - 1) bs.push_back(blocks[std::countr_zero(m)]);
  }
  return out;
}

CensusRow census_row(const Covering& c) {
  auto image = cov(c);
  const bool fixed = image == c;
  return CensusRow{c, is_partition(c), is_irreducible(c), is_invariable(c).invariable, fixed, std::move(image)};
}

std::vector<CensusRow> census(std::size_t n) {
  check_enumerable(n, kMaxLawSize);
  std::vector<CensusRow> rows;
  auto stream = enumerate_coverings(n);
  while (auto c = stream.next()) rows.push_back(census_row(*c));
  return rows;
}

std::string_view to_string(Law law) {
  switch (law) {
    case Law::NeighborhoodReflexive: return "neighborhood-reflexive";
    case Law::NeighborhoodNesting: return "neighborhood-nesting";
    case Law::NeighborhoodNoUnion: return "neighborhood-no-union";
    case Law::CovIdempotent: return "cov-idempotent";
    case Law::QuickRejectSound: return "quick-reject-sound";
    case Law::CommonDegreeSymmetricBounded: return "common-degree-symmetric-bounded";
    case Law::CommonDegreeDiagonal: return "common-degree-diagonal";
    case Law::DegreeEquivalence: return "degree-equivalence";
    case Law::CoreBlockUnique: return "core-block-unique";
    case Law::CoreBlockDualRoute: return "core-block-dual-route";
    case Law::CoreBlockMinimal: return "core-block-minimal";
    case Law::NonCoreStructure: return "non-core-structure";
    case Law::CoreEqualsNeighborhood: return "core-equals-neighborhood";
    case Law::ReducibleNotCore: return "reducible-not-core";
    case Law::NonCoreReducible: return "non-core-reducible";
    case Law::WitnessValid: return "witness-valid";
    case Law::InvariableIffFixedPoint: return "invariable-iff-fixed-point";
    case Law::InvariableIffAllCore: return "invariable-iff-all-core";
    case Law::PartitionIsFixedPoint: return "partition-is-fixed-point";
    case Law::ReductPreservesCov: return "reduct-preserves-cov";
    case Law::ReductOrderIndependent: return "reduct-order-independent";
    case Law::PreimageIffFixedPoint: return "preimage-iff-fixed-point";
    case Law::FixedPointOwnPreimage: return "fixed-point-own-preimage";
  }
  return "unknown";
}

std::vector<Law> all_laws() {
  std::vector<Law> out;
  for (int i = 0; i <= static_cast<int>(Law::FixedPointOwnPreimage); ++i) out.push_back(static_cast<Law>(i));
  return out;
}

std::vector<Law> check_covering_laws(const Covering& c) {
  std::vector<Law> failed;
  auto expect = [&failed](bool ok, Law law) {
    if (!ok && std::find(failed.begin(), failed.end(), law) == failed.end()) failed.push_back(law);
  };

  const std::size_t n = c.universe().size();
  const auto nm = neighborhood_map(c);
  const auto& family = nm.family;
  const bool fixed = is_cov_fixed_point(c);

  for (std::size_t i = 0; i < n; ++i) {
    const Element x{i};
    expect(nm[x].contains(x), Law::NeighborhoodReflexive);
    for (std::size_t j = 0; j < n; ++j) {
      const Element y{j};
      if (nm[x].contains(y)) {
        expect(nm[y].subset_of(nm[x]), Law::NeighborhoodNesting);
        if (nm[y].contains(x)) expect(nm[x] == nm[y], Law::NeighborhoodNesting);
      }
    }
  }

  for (std::size_t i = 0; i < family.size(); ++i) {
    std::vector<Block> others;
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (j != i) others.push_back(family[j]);
    }
    expect(!some_union_equals(others, family[i]), Law::NeighborhoodNoUnion);
  }

  expect(cov(family) == family, Law::CovIdempotent);
  expect(fixed == (family == c), Law::CovIdempotent);
  expect(!(quick_reject_neighborhoods(c) && fixed), Law::QuickRejectSound);

  const auto profile = degree_profile(c);
  for (std::size_t i = 0; i < n; ++i) {
    const Element x{i};
    expect(profile.membership[i] == membership_repeat_degree(c, x), Law::CommonDegreeDiagonal);
    expect(profile.common[i][i] == profile.membership[i], Law::CommonDegreeDiagonal);
    expect(common_block_repeat_degree(c, x, x) == membership_repeat_degree(c, x), Law::CommonDegreeDiagonal);
    for (std::size_t j = 0; j < n; ++j) {
      const Element y{j};
      const auto l = common_block_repeat_degree(c, x, y);
      expect(l == profile.common[i][j], Law::CommonDegreeSymmetricBounded);
      expect(l == common_block_repeat_degree(c, y, x), Law::CommonDegreeSymmetricBounded);
      expect(l <= std::min(profile.membership[i], profile.membership[j]), Law::CommonDegreeSymmetricBounded);
      const bool same_blocks =
          blocks_containing(c, x) == blocks_with(c, Block::singleton(x) | Block::singleton(y));
      expect((profile.membership[i] == l) == same_blocks, Law::DegreeEquivalence);
    }
  }

  const auto cores = core_blocks(c);
  for (std::size_t i = 0; i < n; ++i) {
    const Element x{i};
    const auto candidates = core_block_candidates(c, x);
    const auto& core = cores.per_element[i];
    expect(candidates.size() <= 1, Law::CoreBlockUnique);
    expect(candidates.empty() ? !core : (core && *core == candidates.front()), Law::CoreBlockDualRoute);
    if (core) {
      expect(core->contains(x), Law::CoreBlockMinimal);
      for (auto k : blocks_containing(c, x)) expect(core->subset_of(k), Law::CoreBlockMinimal);
      expect(*core == nm[x], Law::CoreEqualsNeighborhood);
    }
  }

  const auto non_core = non_core_blocks(c);
  for (auto k : non_core) {
    expect(k.size() > 1, Law::NonCoreStructure);
    for (auto y : k.elements()) expect(profile.membership[y.index] > 1, Law::NonCoreStructure);
  }

  const auto red = reducibility(c);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Block k = c[i];
    const bool is_core = std::binary_search(cores.core_blocks.begin(), cores.core_blocks.end(), k);
    if (const auto& w = red.per_block[i]) {
      expect(!is_core, Law::ReducibleNotCore);
      Block joined;
      for (auto b : *w) {
        expect(b != k && c.contains(b), Law::WitnessValid);
        joined |= b;
      }
      expect(joined == k, Law::WitnessValid);
    } else {
      std::vector<Block> others;
      for (auto b : c.blocks()) {
        if (b != k && b.subset_of(k)) others.push_back(b);
      }
      expect(!some_union_equals(others, k), Law::WitnessValid);
    }
    if (cores.every_element_has_core() && !is_core) expect(red.per_block[i].has_value(), Law::NonCoreReducible);
  }

  const bool invariable = is_invariable(c).invariable;
  expect(invariable == fixed, Law::InvariableIffFixedPoint);
  expect(invariable == every_element_and_block_core(c), Law::InvariableIffAllCore);
  if (is_partition(c)) expect(fixed, Law::PartitionIsFixedPoint);

  const auto reduced = reduct(c);
  expect(is_irreducible(reduced) && cov(reduced) == family, Law::ReductPreservesCov);
  const auto outcomes = reduct_outcomes(c);
  expect(outcomes.size() == 1 &&
             std::equal(outcomes.front().begin(), outcomes.front().end(), reduced.blocks().begin(),
                        reduced.blocks().end()),
         Law::ReductOrderIndependent);

  return failed;
}

namespace {

struct Partial {
  VerificationSummary summary;
  std::vector<FamilyMask> images;
};

Partial verify_range(const Universe& u, std::uint64_t first, std::uint64_t last, bool full_laws) {
  Partial p;
  CoveringStream stream(u, first, last);
  while (auto c = stream.next()) {
    auto& s = p.summary;
    ++s.total_coverings;
    const auto row = census_row(*c);
    s.partitions += row.is_partition;
    s.irreducible += row.is_irreducible;
    s.invariable += row.is_invariable;
    s.fixed_points += row.is_cov_fixed_point;
    if (full_laws) {
      for (auto law : check_covering_laws(*c)) s.violations.push_back({*c, law});
      p.images.push_back(family_mask(row.cov_image));
    } else {
      if (row.is_invariable != row.is_cov_fixed_point) s.violations.push_back({*c, Law::InvariableIffFixedPoint});
      if (row.is_partition && !row.is_cov_fixed_point) s.violations.push_back({*c, Law::PartitionIsFixedPoint});
    }
  }
  return p;
}

}  // namespace

VerificationSummary verify_laws(std::size_t n, const VerifyOptions& options) {
  check_enumerable(n, options.allow_census_only ? kMaxEnumerationSize : kMaxLawSize);
  const bool full_laws = n <= kMaxLawSize;
  const Universe u = Universe::of_size(n);
  const std::uint64_t end = family_end(n);
  const std::uint64_t workers = std::clamp<std::uint64_t>(options.threads, 1, end);

  std::vector<Partial> parts(workers);
  auto bound = [&](std::uint64_t w) { return end * w / workers; };
  if (workers == 1) {
    parts[0] = verify_range(u, 0, end, full_laws);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] { parts[w] = verify_range(u, bound(w), bound(w + 1), full_laws); });
    }
  }

  VerificationSummary out;
  out.universe_size = n;
  out.full_laws = full_laws;
  std::vector<bool> hit(full_laws ? end : 0, false);
  for (auto& p : parts) {
    out.total_coverings += p.summary.total_coverings;
    out.partitions += p.summary.partitions;
    out.irreducible += p.summary.irreducible;
    out.invariable += p.summary.invariable;
    out.fixed_points += p.summary.fixed_points;
    std::move(p.summary.violations.begin(), p.summary.violations.end(), std::back_inserter(out.violations));
    for (auto m : p.images) hit[m] = true;
  }

  if (full_laws) {
    CoveringStream stream(u);
    while (auto d = stream.next()) {
      const bool has_preimage = hit[stream.mask()];
      const bool fixed = is_cov_fixed_point(*d);
      if (has_preimage != fixed) out.violations.push_back({*d, Law::PreimageIffFixedPoint});
      if (has_preimage && !(cov(*d) == *d)) out.violations.push_back({*d, Law::FixedPointOwnPreimage});
    }
  }
  return out;
}

std::vector<Covering> preimages(const Covering& d, std::optional<std::size_t> limit) {
  check_enumerable(d.universe().size(), kMaxPreimageSize);
  std::vector<Covering> out;
  if (limit && *limit == 0) return out;
  CoveringStream stream(d.universe());
  while (auto c = stream.next()) {
    if (cov(*c) == d) {
      out.push_back(std::move(*c));
      if (limit && out.size() >= *limit) break;
    }
  }
  return out;
}

}  // namespace covrough
