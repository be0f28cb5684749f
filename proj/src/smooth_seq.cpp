#include "gfs/smooth_seq.hpp"

#include <algorithm>
#include <stdexcept>

#include "gfs/errors.hpp"

namespace gfs {

namespace {

bool term_less(const SmoothTerm& a, const SmoothTerm& b) {
  if (a.value != b.value) return a.value < b.value;
  return a.exponents < b.exponents;
}

void check_bases(std::span<const std::uint64_t> bases) {
  if (bases.empty()) throw ParamError("bases list must be nonempty");
  if (std::ranges::find(bases, std::uint64_t{0}) != bases.end()) {
    throw ParamError("bases must be positive integers");
  }
}

}  // namespace

SmoothStream::SmoothStream(std::span<const std::uint64_t> bases) : width_(bases.size()) {
  check_bases(bases);
  for (std::size_t i = bases.size(); i-- > 0;) {
    if (bases[i] == 1) {
      unit_index_ = i;
      return;
    }
  }
  levels_.resize(bases.size());
  for (std::size_t i = 0; i < bases.size(); ++i) levels_[i].base = bases[i];
}

SmoothTerm SmoothStream::next() {
  ++emitted_;
  if (unit_index_) {
    SmoothTerm t{1, std::vector<std::uint32_t>(width_, 0)};
    t.exponents[*unit_index_] = next_power_++;
    return t;
  }
  return pull(levels_.size() - 1);
}

SmoothTerm SmoothStream::pull(std::size_t level) {
  Level& lv = levels_[level];

  // Level 0 is the geometric progression of p_3; its "lower" input is the
  // single term 1.
  if (level == 0) {
    if (lv.backlog.empty()) {
      SmoothTerm one{1, std::vector<std::uint32_t>(width_, 0)};
      lv.backlog.push_back(one);
      return one;
    }
    SmoothTerm t = lv.backlog.back();
    t.value *= lv.base;
    ++t.exponents[0];
    lv.backlog.back() = t;
    return t;
  }

  if (!lv.lower_head) lv.lower_head = pull(level - 1);

  SmoothTerm out;
  if (lv.backlog.empty()) {
    out = std::move(*lv.lower_head);
    lv.lower_head.reset();
  } else {
    SmoothTerm scaled = lv.backlog.front();
    scaled.value *= lv.base;
    ++scaled.exponents[level];
    if (term_less(*lv.lower_head, scaled)) {
      out = std::move(*lv.lower_head);
      lv.lower_head.reset();
    } else {
      out = std::move(scaled);
      lv.backlog.pop_front();
    }
  }
  lv.backlog.push_back(out);
  return out;
}

std::vector<SmoothTerm> smooth_stream(std::span<const std::uint64_t> bases, std::size_t count) {
  SmoothStream stream(bases);
  std::vector<SmoothTerm> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(stream.next());
  return out;
}

std::vector<BigInt> smooth_values(std::span<const std::uint64_t> bases, std::size_t count) {
  SmoothStream stream(bases);
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(stream.next().value);
  return out;
}

namespace {

// Walks the two streams and reports split indices until `stop` says enough.
template <typename Stop>
std::vector<std::size_t> walk_splits(std::span<const std::uint64_t> bases, Stop stop) {
  check_bases(bases);
  if (bases.size() < 2) {
    throw ParamError("split indices need at least two bases");
  }
  if (std::ranges::find(bases, std::uint64_t{1}) != bases.end()) {
    throw UnsupportedRegime("split indices are defined only for bases >= 2");
  }
  SmoothStream full(bases);
  SmoothStream lower(bases.first(bases.size() - 1));

  std::vector<std::size_t> out;
  full.next();
  lower.next();
  out.push_back(1);
  while (!stop(out)) {
    BigInt target = lower.next().value;
    for (;;) {
      BigInt v = full.next().value;
      if (v == target) break;
      if (v > target) {
        throw std::logic_error("split index search overshot its target value");
      }
    }
    out.push_back(full.position());
  }
  return out;
}

}  // namespace

std::vector<std::size_t> split_indices(std::span<const std::uint64_t> bases, std::size_t count) {
  if (count == 0) {
    // Still validate the regime.
    walk_splits(bases, [](const auto&) { return true; });
    return {};
  }
  return walk_splits(bases, [count](const auto& v) { return v.size() >= count; });
}

std::vector<std::size_t> split_indices_past(std::span<const std::uint64_t> bases,
                                            std::size_t bound) {
  return walk_splits(bases, [bound](const auto& v) { return v.back() > bound; });
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::uint64_t constant_p_exponent(int pegs, std::uint64_t n) {
  if (pegs < 3) throw ParamError("peg count must be at least 3");
  if (n == 0) throw ParamError("n must be at least 1");
  if (pegs == 3) return n - 1;
  const auto r = static_cast<std::uint64_t>(pegs - 2);
  // upper = C(k+j-2, k-2), advanced by C(m+1, r) = C(m, r) * (m+1) / (m+1-r).
  std::uint64_t j = 0;
  std::uint64_t m = r;
  BigInt upper = 1;
  while (upper < n) {
    ++j;
    ++m;
    upper = upper * m / (m - r);
  }
  return j;
}

BigInt constant_p_term(std::uint64_t p, int pegs, std::uint64_t n) {
  if (p == 0) throw ParamError("p must be positive");
  return pow_big(p, constant_p_exponent(pegs, n));
}

}  // namespace gfs
