#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gfs/bigint.hpp"

namespace gfs {

/// Parameter sequences (p_i) and (q_i) of the generalized recurrence.
///
/// Index origin is 3: bases[0] is p_3, bases[1] is p_4, and so on, so a
/// Params with m pairs describes G_k for k = m + 2 pegs.
class Params {
 public:
  Params() = default;

  /// Throws ParamError if the lists are empty, differ in length, or hold a 0.
  Params(std::vector<std::uint64_t> bases, std::vector<std::uint64_t> weights);

  /// All q_i = 1.
  static Params unit_weights(std::vector<std::uint64_t> bases);

  /// (p_i, q_i) = (p, q) for i = 3..pegs.
  static Params constant(std::uint64_t p, std::uint64_t q, int pegs);

  /// Classic Frame-Stewart parameters, (2, 1) at every level.
  static Params frame_stewart(int pegs) { return constant(2, 1, pegs); }

  /// Star graph S_leaves: (3, 2) then (2, 1) up to peg count leaves + 1.
  static Params star(int leaves);

  /// Parses "p:q" pairs in index order i = 3, 4, ...
  static Params parse(std::span<const std::string> pairs);

  int pegs() const { return static_cast<int>(bases_.size()) + 2; }
  std::size_t levels() const { return bases_.size(); }

  const std::vector<std::uint64_t>& bases() const { return bases_; }
  const std::vector<std::uint64_t>& weights() const { return weights_; }

  std::uint64_t p(int peg) const { return bases_.at(static_cast<std::size_t>(peg - 3)); }
  std::uint64_t q(int peg) const { return weights_.at(static_cast<std::size_t>(peg - 3)); }

  /// Product of all weights.
  BigInt weight_product() const;

  bool has_unit_base() const;

  /// The parameters for G_pegs, i.e. the first pegs - 2 pairs.
  Params prefix(int pegs) const;

  /// Same bases with every q_i = 1.
  Params with_unit_weights() const { return unit_weights(bases_); }

  std::string to_string() const;

  friend bool operator==(const Params&, const Params&) = default;

 private:
  std::vector<std::uint64_t> bases_;
  std::vector<std::uint64_t> weights_;
};

}  // namespace gfs
