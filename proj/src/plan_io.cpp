#include "gfs/plan_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "gfs/errors.hpp"

namespace gfs::hanoi {

namespace {

constexpr std::string_view kMagic = "hanoi-plan v1; graph=";

template <typename Int>
Int parse_number(std::string_view text, std::string_view what) {
  Int v{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("plan header: bad value for " + std::string(what) + ": '" +
                     std::string(text) + "'");
  }
  return v;
}

std::string_view field(std::string_view item, std::string_view key) {
  if (item.size() <= key.size() + 1 || item.substr(0, key.size()) != key || item[key.size()] != '=') {
    throw ParseError("plan header: expected field '" + std::string(key) + "=', got '" +
                     std::string(item) + "'");
  }
  return item.substr(key.size() + 1);
}

}  // namespace

void write_plan(std::ostream& os, const MovePlan& plan) {
  os << kMagic << plan.graph.name() << "; k=" << plan.graph.peg_count() << "; n=" << plan.disks
     << "; src=" << plan.src << "; dst=" << plan.dst << "; predicted=" << to_decimal(plan.predicted)
     << '\n';
  for (const auto& m : plan.moves) os << m.from << '>' << m.to << '\n';
}

std::string format_plan(const MovePlan& plan) {
  std::ostringstream os;
  write_plan(os, plan);
  return os.str();
}

MovePlan read_plan(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw ParseError("empty plan input");
  if (!header.empty() && header.back() == '\r') header.pop_back();
  std::string_view hv(header);
  if (hv.substr(0, kMagic.size()) != kMagic) {
    throw ParseError("not a hanoi-plan v1 file (header must start with '" + std::string(kMagic) + "')");
  }
  hv.remove_prefix(kMagic.size());
  auto kpos = hv.find("; k=");
  if (kpos == std::string_view::npos) throw ParseError("plan header: missing k field");
  PegGraph graph = PegGraph::parse(hv.substr(0, kpos));
  hv.remove_prefix(kpos + 2);

  std::vector<std::string_view> items;
  while (!hv.empty()) {
    auto sep = hv.find("; ");
    items.push_back(hv.substr(0, sep));
    if (sep == std::string_view::npos) break;
    hv.remove_prefix(sep + 2);
  }
  if (items.size() != 5) throw ParseError("plan header: expected k, n, src, dst, predicted");

  const int k = parse_number<int>(field(items[0], "k"), "k");
  if (k != graph.peg_count()) {
    throw ParseError("plan header: k=" + std::to_string(k) + " disagrees with graph " + graph.name());
  }
  const auto disks = parse_number<std::size_t>(field(items[1], "n"), "n");
  const Peg src = parse_number<int>(field(items[2], "src"), "src");
  const Peg dst = parse_number<int>(field(items[3], "dst"), "dst");
  const std::string_view predicted = field(items[4], "predicted");
  for (char c : predicted) {
    if (c < '0' || c > '9') throw ParseError("plan header: predicted must be a decimal integer");
  }

  MovePlan plan{std::move(graph), disks, src, dst, {}, BigInt(std::string(predicted))};
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::string_view lv(line);
    auto gt = lv.find('>');
    if (gt == std::string_view::npos) {
      throw ParseError("plan line " + std::to_string(lineno) + ": expected <from>><to>");
    }
    Move m;
    try {
      m.from = parse_number<int>(lv.substr(0, gt), "from");
      m.to = parse_number<int>(lv.substr(gt + 1), "to");
    } catch (const ParseError&) {
      throw ParseError("plan line " + std::to_string(lineno) + ": bad move '" + line + "'");
    }
    plan.moves.push_back(m);
  }
  return plan;
}

}  // namespace gfs::hanoi
