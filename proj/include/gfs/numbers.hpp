#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gfs/bigint.hpp"
#include "gfs/params.hpp"

namespace gfs {

/// Direct bottom-up evaluation of
///
///   G_3(n) = p_3 G_3(n-1) + q_3
///   G_i(n) = min_{1<=t<=n} p_i G_i(n-t) + q_i G_{i-1}(t)     (i >= 4)
///
/// with G_i(0) = 0, scanning every t at every cell. This is the ground truth
/// the smooth-number route is checked against, so it never touches
/// SmoothStream. Immutable once built.
class GfsTable {
 public:
  static GfsTable build(const Params& params, std::size_t max_n);

  const Params& params() const { return params_; }
  std::size_t max_n() const { return max_n_; }

  /// G_peg(n) for 3 <= peg <= params().pegs(), n <= max_n().
  const BigInt& at(int peg, std::size_t n) const;

  /// Smallest t attaining the minimum in row `peg` at n (peg >= 4, n >= 1).
  std::size_t argmin(int peg, std::size_t n) const;

  /// The row for the full peg count, G_k(0..max_n).
  const std::vector<BigInt>& top_row() const { return values_.back(); }

 private:
  Params params_;
  std::size_t max_n_ = 0;
  std::vector<std::vector<BigInt>> values_;
  std::vector<std::vector<std::size_t>> argmin_;
};

/// G_k(n) through GfsTable.
BigInt gfs_oracle(const Params& params, std::size_t n);

/// G_k(n) = q * (u_1 + ... + u_n) with q the product of the weights.
BigInt gfs_fast(const Params& params, std::size_t n);

/// G_k(0..max_n) by prefix sums over one stream pass.
std::vector<BigInt> gfs_fast_prefix(const Params& params, std::size_t max_n);

/// G_k(n) - G_k(n-1) = q * u_n. Throws ParamError for n = 0.
BigInt gfs_diff(const Params& params, std::size_t n);

/// The t with k_j <= n < k_{j+1}, t = j, attaining the minimum for G_k(n).
/// Needs k >= 4 (ParamError otherwise) and every base >= 2
/// (UnsupportedRegime otherwise).
std::size_t optimal_split(const Params& params, std::size_t n);

/// optimal_split for every n in 1..max_n; element 0 is unused and set to 0.
std::vector<std::size_t> optimal_splits(const Params& params, std::size_t max_n);

/// G_k(n) for p_i = p, q_i = 1:
///   sum_{m<j} C(k+m-3, k-3) p^m + (n - C(k+j-3, k-2)) p^j
/// with j as in constant_p_exponent. n = 0 gives 0.
BigInt constant_case_closed_form(std::uint64_t p, int pegs, std::uint64_t n);

}  // namespace gfs
