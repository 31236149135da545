#ifndef RFIB_ORACLES_HPP
#define RFIB_ORACLES_HPP

// Brute-force enumerators over set partitions. They touch no generating
// function, recurrence or Bell polynomial, so they can check all of those.
// Every routine here is exponential in n; keep n at desk scale (n <= 10).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "rfib/exactnum.hpp"

namespace rfib::oracle {

using BlockSizes = std::span<const unsigned>;

/// Visits every unordered set partition of {0..n-1} (restricted growth
/// strings); the visitor receives the block sizes in first-element order.
inline void for_each_set_partition(unsigned n, const std::function<void(BlockSizes)>& visit) {
  std::vector<unsigned> sizes;
  std::function<void(unsigned)> rec = [&](unsigned element) {
    if (element == n) {
      visit(sizes);
      return;
    }
    for (std::size_t b = 0; b < sizes.size(); ++b) {
      ++sizes[b];
      rec(element + 1);
      --sizes[b];
    }
    sizes.push_back(1);
    rec(element + 1);
    sizes.pop_back();
  };
  rec(0);
}

/// Visits every ordered set partition (preference ordering) of an n-set
/// whose blocks all have size <= max_block. The visitor receives block sizes
/// in rank order. Blocks are chosen as explicit subsets of the remaining elements.
inline void for_each_ordered_set_partition(unsigned n, unsigned max_block,
                                           const std::function<void(BlockSizes)>& visit) {
  if (n >= 32) throw std::invalid_argument("for_each_ordered_set_partition: n too large");
  std::vector<unsigned> sizes;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t remaining) {
    if (remaining == 0) {
      visit(sizes);
      return;
    }
    // Enumerate nonempty submasks of the remaining elements.
    for (std::uint32_t sub = remaining; sub != 0; sub = (sub - 1) & remaining) {
      auto size = static_cast<unsigned>(std::popcount(sub));
      if (size > max_block) continue;
      sizes.push_back(size);
      rec(remaining & ~sub);
      sizes.pop_back();
    }
  };
  rec(n == 0 ? 0u : ((std::uint32_t{1} << n) - 1));
}

inline BigInt set_partition_count(unsigned n, unsigned blocks) {
  BigInt count = 0;
  for_each_set_partition(n, [&](BlockSizes s) {
    if (s.size() == blocks) ++count;
  });
  return count;
}

/// a_n^r by exhaustive enumeration of ordered set partitions with blocks <= r.
inline BigInt fubini_restricted_bruteforce(unsigned n, unsigned max_block) {
  if (max_block == 0) throw std::invalid_argument("fubini_restricted_bruteforce: r must be >= 1");
  BigInt count = 0;
  for_each_ordered_set_partition(n, max_block, [&](BlockSizes) { ++count; });
  return count;
}

/// Number of preference orderings of an n-set with exactly alpha_i blocks of size i.
inline BigInt preference_ordering_count(unsigned n, const PartitionProfile& profile) {
  if (profile.weight() != n)
    throw std::invalid_argument("preference_ordering_count: profile weight != n");
  const auto max_block = static_cast<unsigned>(profile.arity());
  BigInt count = 0;
  for_each_ordered_set_partition(n, std::max(max_block, 1u), [&](BlockSizes s) {
    std::vector<unsigned> seen(profile.arity(), 0);
    for (unsigned b : s) ++seen[b - 1];
    if (seen == profile.multiplicities) ++count;
  });
  return count;
}

/// Tally of preference orderings of an n-set (blocks <= max_block) by block-size profile.
/// Profiles have arity max_block.
inline std::map<PartitionProfile, BigInt> preference_ordering_table(unsigned n, unsigned max_block) {
  std::map<PartitionProfile, BigInt> table;
  for_each_ordered_set_partition(n, max_block, [&](BlockSizes s) {
    PartitionProfile p(std::vector<unsigned>(max_block, 0));
    for (unsigned b : s) ++p.multiplicities[b - 1];
    ++table[p];
  });
  return table;
}

}  // namespace rfib::oracle

#endif  // RFIB_ORACLES_HPP
