#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "gfs/bigint.hpp"

namespace gfs {

/// One term u^k_j: a product of the bases together with the exponents that
/// produced it. exponents[i] is the power of bases[i].
struct SmoothTerm {
  BigInt value;
  std::vector<std::uint32_t> exponents;

  friend bool operator==(const SmoothTerm&, const SmoothTerm&) = default;
};

/// Unbounded, resumable generator of every product of the bases, in
/// non-decreasing order, one term per exponent vector.
///
/// Equal values are emitted in lexicographically ascending exponent order.
/// Level i of the generator is the merge of level i - 1 with p_i times its
/// own output, so each exponent vector is reached along exactly one path.
/// If any base is 1 the stream is the constant 1 and the exponent of the
/// last unit base counts up (0, 1, 2, ...).
class SmoothStream {
 public:
  /// Throws ParamError on an empty list or a zero base.
  explicit SmoothStream(std::span<const std::uint64_t> bases);

  SmoothTerm next();

  /// Number of terms returned so far.
  std::size_t position() const { return emitted_; }

 private:
  struct Level {
    std::uint64_t base = 0;
    // Terms already produced by this level that p_i * term has not consumed.
    std::deque<SmoothTerm> backlog;
    std::optional<SmoothTerm> lower_head;
  };

  SmoothTerm pull(std::size_t level);

  std::vector<Level> levels_;
  std::size_t width_ = 0;
  std::optional<std::size_t> unit_index_;
  std::uint32_t next_power_ = 0;
  std::size_t emitted_ = 0;
};

/// Materialized prefix: the `count` smallest terms. count = 0 gives an
/// empty list.
std::vector<SmoothTerm> smooth_stream(std::span<const std::uint64_t> bases, std::size_t count);

/// Values only.
std::vector<BigInt> smooth_values(std::span<const std::uint64_t> bases, std::size_t count);

/// First `count` split indices k_1 < k_2 < ... (1-based) where k_1 = 1 and
/// k_j is the first position after k_{j-1} whose value in the stream over
/// all bases equals the j-th value of the stream that omits the last base.
///
/// Requires at least two bases, all >= 2 (throws UnsupportedRegime for a
/// unit base).
std::vector<std::size_t> split_indices(std::span<const std::uint64_t> bases, std::size_t count);

/// Split indices k_1..k_J where J is the smallest index with k_{J} > bound.
/// The final element is the first index beyond `bound`.
std::vector<std::size_t> split_indices_past(std::span<const std::uint64_t> bases,
                                            std::size_t bound);

/// p^j for the unique j >= 0 with C(k+j-3, k-2) < n <= C(k+j-2, k-2): the
/// n-th term of the stream over k - 2 copies of p.
BigInt constant_p_term(std::uint64_t p, int pegs, std::uint64_t n);

/// The exponent j used by constant_p_term.
std::uint64_t constant_p_exponent(int pegs, std::uint64_t n);

/// Exact binomial coefficient.
BigInt binomial(std::uint64_t n, std::uint64_t k);

}  // namespace gfs
