#include "gfs/params.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "gfs/errors.hpp"

namespace gfs {

namespace {

std::uint64_t parse_positive(std::string_view text, std::string_view whole) {
  std::uint64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError("malformed --pq pair '" + std::string(whole) + "': expected p:q");
  }
  if (value == 0) {
    throw ParamError("--pq pair '" + std::string(whole) + "': p and q must be positive");
  }
  return value;
}

}  // namespace

Params::Params(std::vector<std::uint64_t> bases, std::vector<std::uint64_t> weights)
    : bases_(std::move(bases)), weights_(std::move(weights)) {
  if (bases_.empty()) throw ParamError("at least one (p, q) pair is required");
  if (bases_.size() != weights_.size()) {
    throw ParamError("bases and weights must have the same length");
  }
  auto zero = [](std::uint64_t v) { return v == 0; };
  if (std::ranges::any_of(bases_, zero) || std::ranges::any_of(weights_, zero)) {
    throw ParamError("all p_i and q_i must be positive integers");
  }
}

Params Params::unit_weights(std::vector<std::uint64_t> bases) {
  std::vector<std::uint64_t> weights(bases.size(), 1);
  return Params(std::move(bases), std::move(weights));
}

Params Params::constant(std::uint64_t p, std::uint64_t q, int pegs) {
  if (pegs < 3) throw ParamError("peg count must be at least 3");
  auto m = static_cast<std::size_t>(pegs - 2);
  return Params(std::vector<std::uint64_t>(m, p), std::vector<std::uint64_t>(m, q));
}

Params Params::star(int leaves) {
  if (leaves < 2) throw ParamError("a star needs at least 2 leaves");
  auto m = static_cast<std::size_t>(leaves - 1);
  std::vector<std::uint64_t> bases(m, 2);
  std::vector<std::uint64_t> weights(m, 1);
  bases[0] = 3;
  weights[0] = 2;
  return Params(std::move(bases), std::move(weights));
}

Params Params::parse(std::span<const std::string> pairs) {
  std::vector<std::uint64_t> bases;
  std::vector<std::uint64_t> weights;
  for (const auto& pair : pairs) {
    std::string_view sv(pair);
    auto colon = sv.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("malformed --pq pair '" + pair + "': expected p:q");
    }
    bases.push_back(parse_positive(sv.substr(0, colon), pair));
    weights.push_back(parse_positive(sv.substr(colon + 1), pair));
  }
  return Params(std::move(bases), std::move(weights));
}

BigInt Params::weight_product() const {
  BigInt q = 1;
  for (auto w : weights_) q *= w;
  return q;
}

bool Params::has_unit_base() const {
  return std::ranges::find(bases_, std::uint64_t{1}) != bases_.end();
}

Params Params::prefix(int pegs) const {
  if (pegs < 3 || pegs > this->pegs()) {
    throw ParamError("prefix peg count out of range");
  }
  auto m = static_cast<std::ptrdiff_t>(pegs - 2);
  return Params(std::vector<std::uint64_t>(bases_.begin(), bases_.begin() + m),
                std::vector<std::uint64_t>(weights_.begin(), weights_.begin() + m));
}

std::string Params::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < bases_.size(); ++i) {
    if (i) os << ',';
    os << bases_[i] << ':' << weights_[i];
  }
  return os.str();
}

}  // namespace gfs
