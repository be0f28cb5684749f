#include "gfs/planners.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <stdexcept>

#include "gfs/errors.hpp"
#include "gfs/numbers.hpp"
#include "gfs/params.hpp"

namespace gfs::hanoi {

namespace {

void check_endpoints(const PegGraph& g, Peg src, Peg dst) {
  if (!g.valid_peg(src) || !g.valid_peg(dst)) {
    throw ParamError("src/dst must be pegs of " + g.name());
  }
  if (src == dst) throw ParamError("src and dst must differ");
}

void classic(std::vector<Move>& out, std::size_t m, Peg from, Peg to, Peg via) {
  if (m == 0) return;
  classic(out, m - 1, from, via, to);
  out.push_back({from, to});
  classic(out, m - 1, via, to, from);
}

// Transfer on a path left - mid - right; mid is adjacent to both ends.
struct Path3 {
  Peg left, mid, right;

  Peg other_end(Peg end) const { return end == left ? right : left; }

  void transfer(std::vector<Move>& out, std::size_t m, Peg from, Peg to) const {
    if (m == 0) return;
    if (from != mid && to != mid) {
      transfer(out, m - 1, from, to);
      out.push_back({from, mid});
      transfer(out, m - 1, to, from);
      out.push_back({mid, to});
      transfer(out, m - 1, from, to);
    } else if (to == mid) {
      Peg park = other_end(from);
      transfer(out, m - 1, from, park);
      out.push_back({from, mid});
      transfer(out, m - 1, park, mid);
    } else {
      Peg park = other_end(to);
      transfer(out, m - 1, mid, park);
      out.push_back({mid, to});
      transfer(out, m - 1, park, to);
    }
  }
};

class CompletePlanner {
 public:
  CompletePlanner(int pegs, std::size_t disks) {
    for (int k = 4; k <= pegs; ++k) splits_[k] = optimal_splits(Params::frame_stewart(k), disks);
  }

  void transfer(std::vector<Move>& out, std::size_t m, Peg from, Peg to,
                const std::vector<Peg>& avail) const {
    if (m == 0) return;
    if (avail.size() == 3) {
      Peg via = *std::ranges::find_if(avail, [&](Peg p) { return p != from && p != to; });
      classic(out, m, from, to, via);
      return;
    }
    const std::size_t t = splits_.at(static_cast<int>(avail.size()))[m];
    const Peg temp = *std::ranges::find_if(avail, [&](Peg p) { return p != from && p != to; });
    std::vector<Peg> rest;
    std::ranges::copy_if(avail, std::back_inserter(rest), [&](Peg p) { return p != temp; });
    transfer(out, m - t, from, temp, avail);
    transfer(out, t, from, to, rest);
    transfer(out, m - t, temp, to, avail);
  }

 private:
  std::map<int, std::vector<std::size_t>> splits_;
};

class StarPlanner {
 public:
  StarPlanner(int leaves, std::size_t disks) {
    for (int l = 3; l <= leaves; ++l) splits_[l] = optimal_splits(Params::star(l), disks);
  }

  void transfer(std::vector<Move>& out, std::size_t m, Peg from, Peg to,
                const std::vector<Peg>& leaves) const {
    if (m == 0) return;
    if (leaves.size() == 2) {
      Path3{from, 1, to}.transfer(out, m, from, to);
      return;
    }
    const std::size_t t = splits_.at(static_cast<int>(leaves.size()))[m];
    Peg park = 0;
    for (Peg p : leaves) {
      if (p != from && p != to) park = std::max(park, p);
    }
    std::vector<Peg> rest;
    std::ranges::copy_if(leaves, std::back_inserter(rest), [&](Peg p) { return p != park; });
    transfer(out, m - t, from, park, leaves);
    transfer(out, t, from, to, rest);
    transfer(out, m - t, park, to, leaves);
  }

 private:
  std::map<int, std::vector<std::size_t>> splits_;
};

}  // namespace

MovePlan plan_complete(int pegs, std::size_t disks, Peg src, Peg dst) {
  if (pegs < 3) throw ParamError("complete-graph planner needs at least 3 pegs");
  MovePlan plan{PegGraph::complete(pegs), disks, src, dst, {}, 0};
  check_endpoints(plan.graph, src, dst);
  plan.predicted = gfs_fast(Params::frame_stewart(pegs), disks);
  if (disks == 0) return plan;
  std::vector<Peg> avail;
  for (Peg p = 1; p <= pegs; ++p) avail.push_back(p);
  CompletePlanner(pegs, disks).transfer(plan.moves, disks, src, dst, avail);
  return plan;
}

MovePlan plan_path3(std::size_t disks, Peg src, Peg dst) {
  MovePlan plan{PegGraph::path3(), disks, src, dst, {}, 0};
  check_endpoints(plan.graph, src, dst);
  const bool end_to_end = src != 2 && dst != 2;
  plan.predicted = gfs_fast(Params({3}, {end_to_end ? 2u : 1u}), disks);
  Path3{1, 2, 3}.transfer(plan.moves, disks, src, dst);
  return plan;
}

MovePlan plan_star(int leaves, std::size_t disks, Peg src, Peg dst) {
  if (leaves < 2) throw ParamError("star planner needs at least 2 leaves");
  MovePlan plan{PegGraph::star(leaves), disks, src, dst, {}, 0};
  check_endpoints(plan.graph, src, dst);
  if (src == 1 || dst == 1) throw ParamError("star transfers run leaf to leaf; peg 1 is the center");
  plan.predicted = gfs_fast(Params::star(leaves), disks);
  std::vector<Peg> all_leaves;
  for (Peg p = 2; p <= leaves + 1; ++p) all_leaves.push_back(p);
  StarPlanner(leaves, disks).transfer(plan.moves, disks, src, dst, all_leaves);
  return plan;
}

MovePlan plan_for(const PegGraph& graph, std::size_t disks, Peg src, Peg dst) {
  switch (graph.kind()) {
    case GraphKind::Complete: return plan_complete(graph.peg_count(), disks, src, dst);
    case GraphKind::Path3: return plan_path3(disks, src, dst);
    case GraphKind::Star: return plan_star(graph.peg_count() - 1, disks, src, dst);
    case GraphKind::Custom: break;
  }
  throw ParamError("no planner for graph '" + graph.name() + "' (supported: K<k>, P3, S<k>)");
}

}  // namespace gfs::hanoi
