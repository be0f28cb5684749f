#include "gfs/numbers.hpp"

#include <algorithm>

#include "gfs/errors.hpp"
#include "gfs/smooth_seq.hpp"

namespace gfs {

GfsTable GfsTable::build(const Params& params, std::size_t max_n) {
  GfsTable table;
  table.params_ = params;
  table.max_n_ = max_n;
  const auto rows = params.levels();
  table.values_.assign(rows, std::vector<BigInt>(max_n + 1, 0));
  table.argmin_.assign(rows, std::vector<std::size_t>(max_n + 1, 0));

  auto& base_row = table.values_[0];
  for (std::size_t n = 1; n <= max_n; ++n) {
    base_row[n] = params.bases()[0] * base_row[n - 1] + params.weights()[0];
  }

  for (std::size_t r = 1; r < rows; ++r) {
    const auto p = params.bases()[r];
    const auto q = params.weights()[r];
    auto& row = table.values_[r];
    const auto& below = table.values_[r - 1];
    for (std::size_t n = 1; n <= max_n; ++n) {
      BigInt best = p * row[n - 1] + q * below[1];
      std::size_t best_t = 1;
      for (std::size_t t = 2; t <= n; ++t) {
        BigInt cand = p * row[n - t] + q * below[t];
        if (cand < best) {
          best = std::move(cand);
          best_t = t;
        }
      }
      row[n] = std::move(best);
      table.argmin_[r][n] = best_t;
    }
  }
  return table;
}

const BigInt& GfsTable::at(int peg, std::size_t n) const {
  if (peg < 3 || peg > params_.pegs()) throw ParamError("peg index out of range");
  if (n > max_n_) throw ParamError("n beyond table size");
  return values_[static_cast<std::size_t>(peg - 3)][n];
}

std::size_t GfsTable::argmin(int peg, std::size_t n) const {
  if (peg < 4 || peg > params_.pegs()) throw ParamError("argmin is defined for pegs >= 4");
  if (n == 0 || n > max_n_) throw ParamError("n out of range for argmin");
  return argmin_[static_cast<std::size_t>(peg - 3)][n];
}

BigInt gfs_oracle(const Params& params, std::size_t n) {
  return GfsTable::build(params, n).at(params.pegs(), n);
}

std::vector<BigInt> gfs_fast_prefix(const Params& params, std::size_t max_n) {
  const BigInt q = params.weight_product();
  std::vector<BigInt> out(max_n + 1, 0);
  SmoothStream stream(params.bases());
  BigInt sum = 0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    sum += stream.next().value;
    out[n] = q * sum;
  }
  return out;
}

BigInt gfs_fast(const Params& params, std::size_t n) { return gfs_fast_prefix(params, n).back(); }

BigInt gfs_diff(const Params& params, std::size_t n) {
  if (n == 0) throw ParamError("the difference G(n) - G(n-1) needs n >= 1");
  SmoothStream stream(params.bases());
  for (std::size_t i = 1; i < n; ++i) stream.next();
  return params.weight_product() * stream.next().value;
}

std::vector<std::size_t> optimal_splits(const Params& params, std::size_t max_n) {
  if (params.pegs() < 4) throw ParamError("no split at the 3-peg level");
  if (params.has_unit_base()) {
    throw UnsupportedRegime("optimal split is defined only for bases >= 2");
  }
  std::vector<std::size_t> out(max_n + 1, 0);
  if (max_n == 0) return out;
  auto ks = split_indices_past(params.bases(), max_n);
  // ks[j-1] = k_j; for n in [k_j, k_{j+1}) the split is j.
  std::size_t j = 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    while (ks[j] <= n) ++j;
    out[n] = j;
  }
  return out;
}

std::size_t optimal_split(const Params& params, std::size_t n) {
  if (n == 0) throw ParamError("optimal split needs n >= 1");
  return optimal_splits(params, n)[n];
}

BigInt constant_case_closed_form(std::uint64_t p, int pegs, std::uint64_t n) {
  if (p == 0) throw ParamError("p must be positive");
  if (pegs < 3) throw ParamError("peg count must be at least 3");
  if (n == 0) return 0;
  const auto k = static_cast<std::uint64_t>(pegs);
  const auto j = constant_p_exponent(pegs, n);
  BigInt sum = 0;
  BigInt power = 1;
  for (std::uint64_t m = 0; m < j; ++m) {
    sum += binomial(k + m - 3, k - 3) * power;
    power *= p;
  }
  sum += (BigInt(n) - binomial(k + j - 3, k - 2)) * power;
  return sum;
}

}  // namespace gfs
