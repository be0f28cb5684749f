#pragma once

#include <iosfwd>
#include <string>

#include "gfs/hanoi.hpp"

namespace gfs::hanoi {

// Line-oriented plan format:
//
//   hanoi-plan v1; graph=<name>; k=<pegs>; n=<disks>; src=<peg>; dst=<peg>; predicted=<decimal>
//   <from>><to>
//   ...
//
// <name> is K<k>, P3, S<k> or an explicit edge list "<k>; <u>-<v>,...".
// k is the number of pegs (vertices), so S3 carries k=4.

void write_plan(std::ostream& os, const MovePlan& plan);
std::string format_plan(const MovePlan& plan);

/// Throws ParseError on a malformed header, a bad move line, or a k that
/// disagrees with the graph.
MovePlan read_plan(std::istream& is);

}  // namespace gfs::hanoi
