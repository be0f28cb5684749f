#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfs/bigint.hpp"
#include "gfs/peg_graph.hpp"

namespace gfs::hanoi {

/// A single move along an edge. The disk is not recorded: it is always the
/// topmost (smallest) disk on `from`, recomputed at replay.
struct Move {
  Peg from = 0;
  Peg to = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Where every disk sits. Disk 0 is the smallest; each peg's stack order is
/// implied by disk index.
class HanoiState {
 public:
  HanoiState() = default;
  explicit HanoiState(std::vector<Peg> positions) : positions_(std::move(positions)) {}

  static HanoiState all_on(std::size_t disks, Peg peg) {
    return HanoiState(std::vector<Peg>(disks, peg));
  }

  std::size_t disks() const { return positions_.size(); }
  const std::vector<Peg>& positions() const { return positions_; }

  /// Smallest disk on `peg`, if any.
  std::optional<std::size_t> top(Peg peg) const;

  bool all_on(Peg peg) const;

  friend bool operator==(const HanoiState&, const HanoiState&) = default;

 private:
  friend HanoiState apply_move(const HanoiState&, const PegGraph&, Move);
  std::vector<Peg> positions_;
};

enum class MoveError {
  InvalidPeg = 1,
  SamePeg,
  NotAnEdge,
  EmptySource,
  LargerOnSmaller,
};

const char* to_string(MoveError e);

class IllegalMove : public std::runtime_error {
 public:
  IllegalMove(MoveError code, const std::string& what) : std::runtime_error(what), code_(code) {}
  MoveError code() const { return code_; }

 private:
  MoveError code_;
};

/// Relocates the topmost disk of m.from to m.to. Throws IllegalMove.
HanoiState apply_move(const HanoiState& state, const PegGraph& graph, Move m);

struct MovePlan {
  PegGraph graph;
  std::size_t disks = 0;
  Peg src = 0;
  Peg dst = 0;
  std::vector<Move> moves;
  BigInt predicted;
};

struct ReplayReport {
  HanoiState final_state;
  std::size_t moves_replayed = 0;
  std::size_t move_count = 0;
  bool legal = true;
  std::optional<std::size_t> first_illegal;
  std::optional<MoveError> error;
  std::string cause;
  bool reached_destination = false;
  bool count_matches = false;

  bool passed() const { return legal && reached_destination && count_matches; }
};

/// Replays the plan from the all-on-src state. Never throws for an illegal
/// move; the first failure is described in the report.
ReplayReport validate_plan(const MovePlan& plan);

}  // namespace gfs::hanoi
