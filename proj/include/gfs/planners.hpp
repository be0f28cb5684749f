#pragma once

#include <cstddef>

#include "gfs/hanoi.hpp"

namespace gfs::hanoi {

/// Stewart's three-step recursion on K_pegs. Uses the optimal split at every
/// level with four or more pegs and the classic recursion on three; the
/// temporary peg is the lowest-numbered peg not in use. Length S_pegs(disks).
MovePlan plan_complete(int pegs, std::size_t disks, Peg src, Peg dst);

/// Transfer on the path 1-2-3. End to end costs 3^n - 1 moves, transfers
/// touching the middle peg cost (3^n - 1) / 2.
MovePlan plan_path3(std::size_t disks, Peg src, Peg dst);

/// Leaf-to-leaf transfer on the star S_leaves (center 1, leaves
/// 2..leaves+1). The smallest disks park on the highest-numbered free leaf.
/// Length G_{leaves+1}(disks) with (p_3, q_3) = (3, 2) and (2, 1) above.
MovePlan plan_star(int leaves, std::size_t disks, Peg src, Peg dst);

/// Dispatches on graph.kind(); ParamError for graphs with no planner.
MovePlan plan_for(const PegGraph& graph, std::size_t disks, Peg src, Peg dst);

}  // namespace gfs::hanoi
