#include "gfs/peg_graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "gfs/errors.hpp"

namespace gfs::hanoi {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("bad integer '" + std::string(s) + "' in graph spec '" +
                     std::string(context) + "'");
  }
  return v;
}

std::string edge_list_name(int k, const std::vector<std::pair<Peg, Peg>>& edges) {
  std::ostringstream os;
  os << k << "; ";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) os << ',';
    os << edges[i].first << '-' << edges[i].second;
  }
  return os.str();
}

}  // namespace

PegGraph::PegGraph(int peg_count, std::vector<std::pair<Peg, Peg>> edges)
    : peg_count_(peg_count), edges_(std::move(edges)) {
  if (peg_count_ < 2) throw ParamError("a peg graph needs at least 2 pegs");
  const auto k = static_cast<std::size_t>(peg_count_);
  adjacency_.assign(k * k, 0);
  for (auto [u, v] : edges_) {
    if (!valid_peg(u) || !valid_peg(v)) throw ParamError("edge endpoint out of range");
    if (u == v) throw ParamError("self-loop in peg graph");
    auto& cell = adjacency_[static_cast<std::size_t>(u - 1) * k + static_cast<std::size_t>(v - 1)];
    if (cell) throw ParamError("duplicate edge in peg graph");
    cell = 1;
    adjacency_[static_cast<std::size_t>(v - 1) * k + static_cast<std::size_t>(u - 1)] = 1;
  }

  std::vector<char> seen(k, 0);
  std::vector<Peg> stack{1};
  seen[0] = 1;
  while (!stack.empty()) {
    Peg u = stack.back();
    stack.pop_back();
    for (Peg v = 1; v <= peg_count_; ++v) {
      if (!seen[static_cast<std::size_t>(v - 1)] && adjacent(u, v)) {
        seen[static_cast<std::size_t>(v - 1)] = 1;
        stack.push_back(v);
      }
    }
  }
  if (std::ranges::find(seen, 0) != seen.end()) throw ParamError("peg graph is not connected");
  name_ = edge_list_name(peg_count_, edges_);
}

bool PegGraph::adjacent(Peg a, Peg b) const {
  if (!valid_peg(a) || !valid_peg(b)) return false;
  return adjacency_[static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(peg_count_) +
                    static_cast<std::size_t>(b - 1)] != 0;
}

PegGraph PegGraph::complete(int pegs) {
  if (pegs < 3) throw ParamError("complete graph needs at least 3 pegs");
  std::vector<std::pair<Peg, Peg>> edges;
  for (Peg u = 1; u <= pegs; ++u)
    for (Peg v = u + 1; v <= pegs; ++v) edges.emplace_back(u, v);
  PegGraph g(pegs, std::move(edges));
  g.kind_ = GraphKind::Complete;
  g.name_ = "K" + std::to_string(pegs);
  return g;
}

PegGraph PegGraph::path3() {
  PegGraph g(3, {{1, 2}, {2, 3}});
  g.kind_ = GraphKind::Path3;
  g.name_ = "P3";
  return g;
}

PegGraph PegGraph::star(int leaves) {
  if (leaves < 2) throw ParamError("star graph needs at least 2 leaves");
  std::vector<std::pair<Peg, Peg>> edges;
  for (Peg leaf = 2; leaf <= leaves + 1; ++leaf) edges.emplace_back(1, leaf);
  PegGraph g(leaves + 1, std::move(edges));
  g.kind_ = GraphKind::Star;
  g.name_ = "S" + std::to_string(leaves);
  return g;
}

PegGraph PegGraph::parse(std::string_view spec) {
  spec = trim(spec);
  if (spec.empty()) throw ParseError("empty graph spec");
  auto semi = spec.find(';');
  if (semi == std::string_view::npos) {
    if (spec == "P3") return path3();
    if (spec.size() >= 2 && (spec[0] == 'K' || spec[0] == 'S')) {
      int n = parse_int(spec.substr(1), spec);
      try {
        return spec[0] == 'K' ? complete(n) : star(n);
      } catch (const ParamError& e) {
        throw ParseError("graph spec '" + std::string(spec) + "': " + e.what());
      }
    }
    throw ParseError("unknown graph '" + std::string(spec) + "' (expected K<k>, P3, S<k> or an edge list)");
  }

  int k = parse_int(spec.substr(0, semi), spec);
  std::vector<std::pair<Peg, Peg>> edges;
  std::string_view rest = trim(spec.substr(semi + 1));
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = trim(rest.substr(0, comma));
    auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      throw ParseError("bad edge '" + std::string(item) + "' in graph spec");
    }
    edges.emplace_back(parse_int(item.substr(0, dash), spec), parse_int(item.substr(dash + 1), spec));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  try {
    return PegGraph(k, std::move(edges));
  } catch (const ParamError& e) {
    throw ParseError("graph spec '" + std::string(spec) + "': " + e.what());
  }
}

}  // namespace gfs::hanoi
