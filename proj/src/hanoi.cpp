#include "gfs/hanoi.hpp"

#include <algorithm>

namespace gfs::hanoi {

std::optional<std::size_t> HanoiState::top(Peg peg) const {
  for (std::size_t d = 0; d < positions_.size(); ++d) {
    if (positions_[d] == peg) return d;
  }
  return std::nullopt;
}

bool HanoiState::all_on(Peg peg) const {
  return std::ranges::all_of(positions_, [peg](Peg p) { return p == peg; });
}

const char* to_string(MoveError e) {
  switch (e) {
    case MoveError::InvalidPeg: return "invalid-peg";
    case MoveError::SamePeg: return "same-peg";
    case MoveError::NotAnEdge: return "not-an-edge";
    case MoveError::EmptySource: return "empty-source";
    case MoveError::LargerOnSmaller: return "larger-on-smaller";
  }
  return "unknown";
}

HanoiState apply_move(const HanoiState& state, const PegGraph& graph, Move m) {
  auto where = [&] { return std::to_string(m.from) + ">" + std::to_string(m.to); };
  if (!graph.valid_peg(m.from) || !graph.valid_peg(m.to)) {
    throw IllegalMove(MoveError::InvalidPeg, "move " + where() + ": peg out of range");
  }
  if (m.from == m.to) throw IllegalMove(MoveError::SamePeg, "move " + where() + ": same peg");
  if (!graph.adjacent(m.from, m.to)) {
    throw IllegalMove(MoveError::NotAnEdge, "move " + where() + ": pegs are not adjacent");
  }
  auto disk = state.top(m.from);
  if (!disk) throw IllegalMove(MoveError::EmptySource, "move " + where() + ": source peg is empty");
  auto target_top = state.top(m.to);
  if (target_top && *target_top < *disk) {
    throw IllegalMove(MoveError::LargerOnSmaller,
                      "move " + where() + ": disk " + std::to_string(*disk + 1) +
                          " onto smaller disk " + std::to_string(*target_top + 1));
  }
  HanoiState next = state;
  next.positions_[*disk] = m.to;
  return next;
}

ReplayReport validate_plan(const MovePlan& plan) {
  ReplayReport report;
  report.move_count = plan.moves.size();
  HanoiState state = HanoiState::all_on(plan.disks, plan.src);
  for (std::size_t i = 0; i < plan.moves.size(); ++i) {
    try {
      state = apply_move(state, plan.graph, plan.moves[i]);
      ++report.moves_replayed;
    } catch (const IllegalMove& e) {
      report.legal = false;
      report.first_illegal = i;
      report.error = e.code();
      report.cause = e.what();
      break;
    }
  }
  report.final_state = state;
  report.reached_destination = report.legal && state.all_on(plan.dst);
  report.count_matches = BigInt(plan.moves.size()) == plan.predicted;
  if (report.legal) {
    if (!report.reached_destination) {
      report.cause = "wrong final state: not all disks on peg " + std::to_string(plan.dst);
    } else if (!report.count_matches) {
      report.cause = "move count " + std::to_string(plan.moves.size()) +
                     " differs from predicted " + to_decimal(plan.predicted);
    }
  }
  return report;
}

}  // namespace gfs::hanoi
