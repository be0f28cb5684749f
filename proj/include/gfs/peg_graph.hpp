#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gfs::hanoi {

/// Peg number, 1-based, matching the figure labels used throughout
/// (P3 is 1-2-3 in a line; a star has center 1 and leaves 2..k+1).
using Peg = int;

enum class GraphKind { Complete, Path3, Star, Custom };

/// Simple connected graph on pegs 1..peg_count().
class PegGraph {
 public:
  /// Throws ParamError for loops, duplicate edges, labels out of range, or a
  /// disconnected graph.
  PegGraph(int peg_count, std::vector<std::pair<Peg, Peg>> edges);

  static PegGraph complete(int pegs);
  static PegGraph path3();
  /// Star S_leaves: center 1, leaves 2..leaves+1.
  static PegGraph star(int leaves);

  /// Accepts "K<k>", "P3", "S<k>" or an explicit "<k>; <u>-<v>,<u>-<v>,...".
  /// Throws ParseError on malformed text.
  static PegGraph parse(std::string_view spec);

  int peg_count() const { return peg_count_; }
  const std::vector<std::pair<Peg, Peg>>& edges() const { return edges_; }
  bool adjacent(Peg a, Peg b) const;
  bool valid_peg(Peg p) const { return p >= 1 && p <= peg_count_; }

  GraphKind kind() const { return kind_; }
  /// Canonical name: "K4", "P3", "S3" or the explicit edge-list form.
  const std::string& name() const { return name_; }

 private:
  int peg_count_ = 0;
  std::vector<std::pair<Peg, Peg>> edges_;
  std::vector<char> adjacency_;
  GraphKind kind_ = GraphKind::Custom;
  std::string name_;
};

}  // namespace gfs::hanoi
