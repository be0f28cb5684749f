#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "gfs/bfs.hpp"
#include "gfs/errors.hpp"
#include "gfs/numbers.hpp"
#include "gfs/plan_io.hpp"
#include "gfs/planners.hpp"
#include "gfs/smooth_seq.hpp"

namespace py = pybind11;
using namespace gfs;

namespace pybind11::detail {

// BigInt <-> Python int through the decimal representation.
template <>
struct type_caster<BigInt> {
  PYBIND11_TYPE_CASTER(BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = BigInt(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const BigInt& v, return_value_policy, handle) {
    const std::string s = v.str();
    return PyLong_FromString(s.c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

using PQ = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

Params to_params(const PQ& pq) {
  std::vector<std::uint64_t> p, q;
  for (auto [a, b] : pq) {
    p.push_back(a);
    q.push_back(b);
  }
  return Params(p, q);
}

struct Endpoints {
  hanoi::Peg src, dst;
};

Endpoints endpoints(const hanoi::PegGraph& g, std::optional<int> src, std::optional<int> dst) {
  const bool star = g.kind() == hanoi::GraphKind::Star;
  return {src.value_or(star ? 2 : 1), dst.value_or(star ? 3 : g.peg_count())};
}

py::dict report_dict(const hanoi::ReplayReport& r) {
  py::dict d;
  d["passed"] = r.passed();
  d["legal"] = r.legal;
  d["moves_replayed"] = r.moves_replayed;
  d["move_count"] = r.move_count;
  d["reached_destination"] = r.reached_destination;
  d["count_matches"] = r.count_matches;
  d["first_illegal"] = r.first_illegal ? py::cast(*r.first_illegal) : py::none();
  d["error"] = r.error ? py::cast(std::string(hanoi::to_string(*r.error))) : py::none();
  d["cause"] = r.cause;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generalized Frame-Stewart numbers, smooth sequences and Hanoi planners";

  auto value_error = py::register_exception<ParamError>(m, "ParamError", PyExc_ValueError);
  py::register_exception<UnsupportedRegime>(m, "UnsupportedRegime", value_error);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<hanoi::IllegalMove>(m, "IllegalMove", PyExc_ValueError);

  m.def(
      "smooth_stream",
      [](const std::vector<std::uint64_t>& bases, std::size_t count) { return smooth_values(bases, count); },
      py::arg("bases"), py::arg("count"), "First `count` values of the sorted smooth stream, with multiplicity.");
  m.def(
      "smooth_terms",
      [](const std::vector<std::uint64_t>& bases, std::size_t count) {
        std::vector<std::pair<BigInt, std::vector<std::uint32_t>>> out;
        for (auto& t : smooth_stream(bases, count)) out.emplace_back(t.value, t.exponents);
        return out;
      },
      py::arg("bases"), py::arg("count"), "Like smooth_stream, paired with exponent vectors.");
  m.def(
      "split_indices",
      [](const std::vector<std::uint64_t>& bases, std::size_t count) { return split_indices(bases, count); },
      py::arg("bases"), py::arg("count"));
  m.def("constant_p_term", &constant_p_term, py::arg("p"), py::arg("pegs"), py::arg("n"));
  m.def("binomial", &binomial, py::arg("n"), py::arg("k"));

  m.def(
      "gfs_oracle", [](const PQ& pq, std::size_t n) { return gfs_oracle(to_params(pq), n); }, py::arg("pq"),
      py::arg("n"), "Full-scan DP value. `pq` lists (p_i, q_i) for i = 3, 4, ...");
  m.def(
      "gfs_fast", [](const PQ& pq, std::size_t n) { return gfs_fast(to_params(pq), n); }, py::arg("pq"),
      py::arg("n"));
  m.def(
      "gfs_prefix", [](const PQ& pq, std::size_t max_n) { return gfs_fast_prefix(to_params(pq), max_n); },
      py::arg("pq"), py::arg("max_n"), "Values for n = 0..max_n.");
  m.def(
      "gfs_diff", [](const PQ& pq, std::size_t n) { return gfs_diff(to_params(pq), n); }, py::arg("pq"),
      py::arg("n"));
  m.def(
      "optimal_split", [](const PQ& pq, std::size_t n) { return optimal_split(to_params(pq), n); },
      py::arg("pq"), py::arg("n"));
  m.def("constant_case_closed_form", &constant_case_closed_form, py::arg("p"), py::arg("pegs"), py::arg("n"));

  m.def(
      "plan",
      [](const std::string& graph, std::size_t n, std::optional<int> src, std::optional<int> dst) {
        auto g = hanoi::PegGraph::parse(graph);
        auto e = endpoints(g, src, dst);
        return hanoi::format_plan(hanoi::plan_for(g, n, e.src, e.dst));
      },
      py::arg("graph"), py::arg("n"), py::arg("src") = py::none(), py::arg("dst") = py::none(),
      "Plan text for graph K<k>, P3 or S<k>.");
  m.def(
      "plan_moves",
      [](const std::string& graph, std::size_t n, std::optional<int> src, std::optional<int> dst) {
        auto g = hanoi::PegGraph::parse(graph);
        auto e = endpoints(g, src, dst);
        std::vector<std::pair<int, int>> out;
        for (auto mv : hanoi::plan_for(g, n, e.src, e.dst).moves) out.emplace_back(mv.from, mv.to);
        return out;
      },
      py::arg("graph"), py::arg("n"), py::arg("src") = py::none(), py::arg("dst") = py::none());
  m.def(
      "validate",
      [](const std::string& text) {
        std::istringstream in(text);
        return report_dict(hanoi::validate_plan(hanoi::read_plan(in)));
      },
      py::arg("text"), "Replay a plan in text form.");
  m.def(
      "bfs_optimal",
      [](const std::string& graph, std::size_t n, std::optional<int> src, std::optional<int> dst,
         std::uint64_t budget) {
        auto g = hanoi::PegGraph::parse(graph);
        auto e = endpoints(g, src, dst);
        py::gil_scoped_release release;
        return hanoi::bfs_optimal(g, n, e.src, e.dst, budget);
      },
      py::arg("graph"), py::arg("n"), py::arg("src") = py::none(), py::arg("dst") = py::none(),
      py::arg("budget") = hanoi::kDefaultStateBudget);
}
