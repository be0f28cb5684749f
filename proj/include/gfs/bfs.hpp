#pragma once

#include <cstddef>
#include <cstdint>

#include "gfs/bigint.hpp"
#include "gfs/peg_graph.hpp"

namespace gfs::hanoi {

inline constexpr std::uint64_t kDefaultStateBudget = 5'000'000;

/// Exact minimum number of moves from all-on-src to all-on-dst, by
/// breadth-first search over the peg_count^disks configurations.
///
/// Throws BudgetExceeded when peg_count^disks > state_budget; the search is
/// never truncated.
BigInt bfs_optimal(const PegGraph& graph, std::size_t disks, Peg src, Peg dst,
                   std::uint64_t state_budget = kDefaultStateBudget);

}  // namespace gfs::hanoi
