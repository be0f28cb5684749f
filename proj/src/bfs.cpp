#include "gfs/bfs.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "gfs/errors.hpp"

namespace gfs::hanoi {

BigInt bfs_optimal(const PegGraph& graph, std::size_t disks, Peg src, Peg dst,
                   std::uint64_t state_budget) {
  if (!graph.valid_peg(src) || !graph.valid_peg(dst)) {
    throw ParamError("src/dst must be pegs of " + graph.name());
  }
  if (disks == 0 || src == dst) return 0;

  const auto k = static_cast<std::uint64_t>(graph.peg_count());
  BigInt space = pow_big(k, disks);
  if (space > state_budget) {
    throw BudgetExceeded("state space " + to_decimal(space) + " exceeds budget " +
                         std::to_string(state_budget));
  }
  const auto states = static_cast<std::uint64_t>(space);

  // State code: sum over disks d of (peg(d) - 1) * k^d.
  std::vector<std::uint64_t> place(disks);
  place[0] = 1;
  for (std::size_t d = 1; d < disks; ++d) place[d] = place[d - 1] * k;

  std::vector<std::pair<int, int>> arcs;
  for (auto [u, v] : graph.edges()) {
    arcs.emplace_back(u - 1, v - 1);
    arcs.emplace_back(v - 1, u - 1);
  }

  auto uniform = [&](Peg p) {
    std::uint64_t code = 0;
    for (std::size_t d = 0; d < disks; ++d) code += static_cast<std::uint64_t>(p - 1) * place[d];
    return code;
  };
  const std::uint64_t start = uniform(src);
  const std::uint64_t goal = uniform(dst);

  constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(states, kUnseen);
  std::vector<std::uint64_t> frontier{start};
  std::vector<std::uint64_t> next;
  dist[start] = 0;

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> top(k);
  std::uint32_t depth = 0;
  while (!frontier.empty()) {
    ++depth;
    next.clear();
    for (std::uint64_t code : frontier) {
      std::fill(top.begin(), top.end(), kNone);
      std::uint64_t rest = code;
      for (std::size_t d = 0; d < disks; ++d) {
        auto peg = static_cast<std::size_t>(rest % k);
        rest /= k;
        if (top[peg] == kNone) top[peg] = d;
      }
      for (auto [u, v] : arcs) {
        const std::size_t moving = top[static_cast<std::size_t>(u)];
        if (moving == kNone) continue;
        const std::size_t blocking = top[static_cast<std::size_t>(v)];
        if (blocking != kNone && blocking < moving) continue;
        const std::uint64_t succ = v > u
                                       ? code + static_cast<std::uint64_t>(v - u) * place[moving]
                                       : code - static_cast<std::uint64_t>(u - v) * place[moving];
        if (dist[succ] != kUnseen) continue;
        dist[succ] = depth;
        if (succ == goal) return depth;
        next.push_back(succ);
      }
    }
    frontier.swap(next);
  }
  throw std::logic_error("goal unreachable on a connected peg graph");
}

}  // namespace gfs::hanoi
