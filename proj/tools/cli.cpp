#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gfs/bfs.hpp"
#include "gfs/errors.hpp"
#include "gfs/numbers.hpp"
#include "gfs/plan_io.hpp"
#include "gfs/planners.hpp"
#include "gfs/smooth_seq.hpp"
#include "gfs/verify.hpp"

namespace gfs::cli {

namespace {

using json = nlohmann::ordered_json;

// Thrown for results that contradict an independent route (oracle mismatch,
// failed replay, failed verify sweep). Carries exit code 2.
struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NRange {
  std::size_t first = 0;
  std::size_t last = 0;
};

std::size_t parse_size(std::string_view s, std::string_view what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParamError("bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

NRange parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    auto n = parse_size(text, "--n");
    return {n, n};
  }
  NRange r{parse_size(std::string_view(text).substr(0, dots), "--n"),
           parse_size(std::string_view(text).substr(dots + 2), "--n")};
  if (r.first > r.last) throw ParamError("--n range " + text + " is empty");
  return r;
}

Params params_from_flags(const std::vector<std::string>& pairs) {
  try {
    return Params::parse(pairs);
  } catch (const ParseError& e) {
    // A malformed --pq is a usage problem, not an input-file problem.
    throw ParamError(e.what());
  }
}

std::string join(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

json params_json(const Params& params) {
  json arr = json::array();
  for (std::size_t i = 0; i < params.levels(); ++i) {
    arr.push_back({{"i", i + 3}, {"p", params.bases()[i]}, {"q", params.weights()[i]}});
  }
  return arr;
}

std::uint64_t budget_from_env() {
  if (const char* env = std::getenv("GFS_STATE_BUDGET"); env && *env) {
    return parse_size(env, "GFS_STATE_BUDGET");
  }
  return hanoi::kDefaultStateBudget;
}

struct GraphEndpoints {
  hanoi::Peg src;
  hanoi::Peg dst;
};

GraphEndpoints endpoints(const hanoi::PegGraph& graph, std::optional<int> src, std::optional<int> dst) {
  const bool star = graph.kind() == hanoi::GraphKind::Star;
  GraphEndpoints e{src.value_or(star ? 2 : 1), dst.value_or(star ? 3 : graph.peg_count())};
  if (!graph.valid_peg(e.src) || !graph.valid_peg(e.dst)) {
    throw ParamError("illegal peg label for graph " + graph.name() + " (pegs are 1.." +
                     std::to_string(graph.peg_count()) + ")");
  }
  return e;
}

// ---------------------------------------------------------------- compute

struct ComputeConfig {
  std::vector<std::string> pq;
  std::string n = "10";
  bool oracle = false;
  std::string format = "plain";
};

void cmd_compute(const ComputeConfig& cfg, std::ostream& out) {
  const Params params = params_from_flags(cfg.pq);
  const NRange range = parse_range(cfg.n);
  const auto values = gfs_fast_prefix(params, range.last);
  const int k = params.pegs();

  std::vector<std::size_t> splits;
  std::string split_source;
  std::optional<GfsTable> table;
  if (cfg.oracle || (k >= 4 && params.has_unit_base())) table = GfsTable::build(params, range.last);
  if (k >= 4 && !params.has_unit_base()) {
    splits = optimal_splits(params, range.last);
    split_source = "optimal";
  } else if (k >= 4) {
    split_source = "oracle-argmin";
  }
  auto split_at = [&](std::size_t n) -> std::optional<std::size_t> {
    if (n == 0 || split_source.empty()) return std::nullopt;
    if (!splits.empty()) return splits[n];
    return table->argmin(k, n);
  };

  std::optional<std::size_t> mismatch_at;
  if (cfg.oracle) {
    for (std::size_t n = range.first; n <= range.last; ++n) {
      if (values[n] != table->at(k, n)) {
        mismatch_at = n;
        break;
      }
    }
  }

  if (cfg.format == "json") {
    json rows = json::array();
    for (std::size_t n = range.first; n <= range.last; ++n) {
      json row{{"n", n}, {"value", to_decimal(values[n])}};
      row["diff"] = n == 0 ? json(nullptr) : json(to_decimal(values[n] - values[n - 1]));
      auto s = split_at(n);
      row["split"] = s ? json(*s) : json(nullptr);
      row["split_source"] = s ? json(split_source) : json(nullptr);
      rows.push_back(std::move(row));
    }
    json doc{{"pegs", k}, {"params", params_json(params)},
             {"q", to_decimal(params.weight_product())}, {"rows", std::move(rows)}};
    doc["oracle"] = !cfg.oracle ? "not-run" : (mismatch_at ? "mismatch" : "match");
    out << doc.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "n,value,diff,split,split_source\n";
    for (std::size_t n = range.first; n <= range.last; ++n) {
      auto s = split_at(n);
      out << n << ',' << values[n] << ',' << (n ? to_decimal(values[n] - values[n - 1]) : "") << ','
          << (s ? std::to_string(*s) : "") << ',' << (s ? split_source : "") << '\n';
    }
  } else {
    for (std::size_t n = range.first; n <= range.last; ++n) {
      out << "G_" << k << '(' << n << ") = " << values[n];
      if (n) out << "  diff=" << values[n] - values[n - 1];
      if (auto s = split_at(n)) {
        out << "  split=" << *s;
        if (split_source != "optimal") out << " (" << split_source << ')';
      }
      out << '\n';
    }
    if (cfg.oracle) out << "oracle: " << (mismatch_at ? "MISMATCH" : "match") << '\n';
  }

  if (mismatch_at) {
    throw Mismatch("oracle mismatch at n=" + std::to_string(*mismatch_at) + ": fast=" +
                   to_decimal(values[*mismatch_at]) + " oracle=" + to_decimal(table->at(k, *mismatch_at)));
  }
}

// --------------------------------------------------------------- sequence

struct SequenceConfig {
  std::vector<std::string> pq;
  std::size_t count = 10;
  bool splits = false;
  std::string format = "plain";
};

void cmd_sequence(const SequenceConfig& cfg, std::ostream& out) {
  const Params params = params_from_flags(cfg.pq);
  const auto terms = smooth_stream(params.bases(), cfg.count);
  std::vector<std::size_t> ks;
  if (cfg.splits) {
    if (params.levels() < 2) throw ParamError("--splits needs at least two --pq pairs");
    ks = split_indices_past(params.bases(), cfg.count);
    ks.pop_back();  // the last entry lies beyond --count
  }
  auto exps_text = [](const SmoothTerm& t, char sep) {
    std::vector<std::string> parts;
    for (auto a : t.exponents) parts.push_back(std::to_string(a));
    return join(parts, sep);
  };
  auto split_rank = [&](std::size_t j) -> std::optional<std::size_t> {
    auto it = std::ranges::find(ks, j);
    if (it == ks.end()) return std::nullopt;
    return static_cast<std::size_t>(it - ks.begin()) + 1;
  };

  if (cfg.format == "json") {
    json arr = json::array();
    for (std::size_t j = 0; j < terms.size(); ++j) {
      arr.push_back({{"j", j + 1}, {"value", to_decimal(terms[j].value)}, {"exponents", terms[j].exponents}});
    }
    json doc{{"bases", params.bases()}, {"terms", std::move(arr)}};
    if (cfg.splits) doc["splits"] = ks;
    out << doc.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "j,value,exponents" << (cfg.splits ? ",split_rank" : "") << '\n';
    for (std::size_t j = 0; j < terms.size(); ++j) {
      out << j + 1 << ',' << terms[j].value << ',' << exps_text(terms[j], ';');
      if (cfg.splits) {
        auto r = split_rank(j + 1);
        out << ',' << (r ? std::to_string(*r) : "");
      }
      out << '\n';
    }
  } else {
    std::vector<std::string> vals;
    for (const auto& t : terms) vals.push_back(to_decimal(t.value));
    out << "values: " << join(vals, ',') << '\n';
    for (std::size_t j = 0; j < terms.size(); ++j) {
      out << "u_" << j + 1 << " = " << terms[j].value << "  exponents=(" << exps_text(terms[j], ',')
          << ")\n";
    }
    if (cfg.splits) {
      std::vector<std::string> parts;
      for (auto k : ks) parts.push_back(std::to_string(k));
      out << "splits: " << join(parts, ',') << '\n';
    }
  }
}

// ------------------------------------------------------ plan / validate / bfs

struct GraphConfig {
  std::string graph;
  std::size_t n = 0;
  std::optional<int> src;
  std::optional<int> dst;
};

void cmd_plan(const GraphConfig& cfg, const std::string& out_path, std::ostream& out) {
  const auto graph = hanoi::PegGraph::parse(cfg.graph);
  const auto [src, dst] = endpoints(graph, cfg.src, cfg.dst);
  const auto plan = hanoi::plan_for(graph, cfg.n, src, dst);
  if (out_path.empty() || out_path == "-") {
    hanoi::write_plan(out, plan);
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw std::ios_base::failure("cannot open " + out_path + " for writing");
  hanoi::write_plan(file, plan);
}

void cmd_validate(const std::string& path, const std::string& format, std::istream& in,
                  std::ostream& out) {
  std::optional<hanoi::MovePlan> plan;
  if (path.empty() || path == "-") {
    plan = hanoi::read_plan(in);
  } else {
    std::ifstream file(path);
    if (!file) throw std::ios_base::failure("cannot open plan file " + path);
    plan = hanoi::read_plan(file);
  }
  const auto report = hanoi::validate_plan(*plan);

  if (format == "json") {
    json doc{{"verdict", report.passed() ? "pass" : "fail"},
             {"graph", plan->graph.name()},
             {"n", plan->disks},
             {"src", plan->src},
             {"dst", plan->dst},
             {"moves", report.move_count},
             {"predicted", to_decimal(plan->predicted)},
             {"legal", report.legal},
             {"reached_destination", report.reached_destination},
             {"count_matches", report.count_matches},
             {"final_state", report.final_state.positions()}};
    doc["first_illegal"] = report.first_illegal ? json(*report.first_illegal) : json(nullptr);
    doc["error"] = report.error ? json(hanoi::to_string(*report.error)) : json(nullptr);
    doc["cause"] = report.cause;
    out << doc.dump(2) << '\n';
  } else {
    if (report.passed()) {
      out << "pass: " << report.move_count << " moves\n";
    } else if (!report.legal) {
      out << "fail at move " << *report.first_illegal << " (" << hanoi::to_string(*report.error)
          << "): " << report.cause << '\n';
    } else {
      out << "fail: " << report.cause << '\n';
    }
  }
  if (!report.passed()) throw Mismatch("plan validation failed");
}

void cmd_bfs(const GraphConfig& cfg, std::optional<std::uint64_t> budget, const std::string& format,
             std::ostream& out) {
  const auto graph = hanoi::PegGraph::parse(cfg.graph);
  const auto [src, dst] = endpoints(graph, cfg.src, cfg.dst);
  const auto best = hanoi::bfs_optimal(graph, cfg.n, src, dst, budget.value_or(budget_from_env()));
  if (format == "json") {
    json doc{{"graph", graph.name()}, {"n", cfg.n}, {"src", src}, {"dst", dst}, {"optimal", to_decimal(best)}};
    out << doc.dump(2) << '\n';
  } else {
    out << best << '\n';
  }
}

// ------------------------------------------------------------------ verify

void cmd_verify(const VerifyOptions& options, const std::string& format, std::ostream& out) {
  const auto summary = run_verify(options);
  if (format == "json") {
    json checks = json::array();
    for (const auto& c : summary.checks) {
      json item{{"name", c.name},
                {"passed", c.passed},
                {"instances", c.instances},
                {"elapsed_ms", std::round(c.elapsed_ms * 1000.0) / 1000.0}};
      item["failure"] = c.failure.empty() ? json(nullptr) : json(c.failure);
      if (!c.notes.empty()) item["notes"] = c.notes;
      checks.push_back(std::move(item));
    }
    json doc{{"passed", summary.passed()},
             {"total_instances", summary.total_instances()},
             {"max_n", options.max_n},
             {"seed", options.seed},
             {"warnings", summary.warnings},
             {"checks", std::move(checks)}};
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& c : summary.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name << "  instances=" << c.instances << "  "
          << c.elapsed_ms << " ms\n";
      if (!c.passed) out << "  first failure: " << c.failure << '\n';
      for (const auto& note : c.notes) out << "  note: " << note << '\n';
    }
    for (const auto& w : summary.warnings) out << "warning: " << w << '\n';
    out << (summary.passed() ? "all checks passed" : "verification FAILED") << '\n';
  }
  if (!summary.passed()) {
    auto failed = std::ranges::find_if(summary.checks, [](const CheckResult& c) { return !c.passed; });
    throw Mismatch("check '" + failed->name + "' failed: " + failed->failure);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Frame-Stewart numbers and Tower of Hanoi planners", "gfs"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"plain", "json", "csv"};
  const char* pq_help = "Parameter pair p:q; the first flag is (p_3, q_3), then (p_4, q_4), ...";

  ComputeConfig compute;
  auto* c = app.add_subcommand("compute", "G_k(n) table: n, value, difference, split");
  c->add_option("--pq", compute.pq, pq_help)->required();
  c->add_option("--n", compute.n, "Disk count n or range a..b")->capture_default_str();
  c->add_flag("--oracle", compute.oracle, "Recompute with the direct DP; mismatch exits 2");
  c->add_option("--format", compute.format)->check(CLI::IsMember(formats))->capture_default_str();

  SequenceConfig sequence;
  auto* s = app.add_subcommand("sequence", "Smooth-number terms u_j with exponent vectors");
  s->add_option("--pq", sequence.pq, pq_help)->required();
  s->add_option("--count", sequence.count, "Number of terms")->capture_default_str();
  s->add_flag("--splits", sequence.splits, "Also print the split indices k_j <= count");
  s->add_option("--format", sequence.format)->check(CLI::IsMember(formats))->capture_default_str();

  auto add_graph_opts = [](CLI::App* sub, GraphConfig& cfg) {
    sub->add_option("--graph", cfg.graph, "K<k>, P3, S<k> or '<k>; <u>-<v>,...'")->required();
    sub->add_option("--n", cfg.n, "Number of disks")->required();
    sub->add_option("--src", cfg.src, "Source peg (default 1, or 2 on a star)");
    sub->add_option("--dst", cfg.dst, "Destination peg (default last peg, or 3 on a star)");
  };

  GraphConfig plan_cfg;
  std::string plan_out;
  auto* p = app.add_subcommand("plan", "Emit a hanoi-plan v1 move list");
  add_graph_opts(p, plan_cfg);
  p->add_option("--out", plan_out, "Write to a file instead of standard output");

  std::string validate_path = "-";
  std::string validate_format = "plain";
  auto* v = app.add_subcommand("validate", "Replay a plan file and report legality");
  v->add_option("plan", validate_path, "Plan file, '-' for standard input")->capture_default_str();
  v->add_option("--format", validate_format)->check(CLI::IsMember(formats))->capture_default_str();

  GraphConfig bfs_cfg;
  std::optional<std::uint64_t> bfs_budget;
  std::string bfs_format = "plain";
  auto* b = app.add_subcommand("bfs", "Exact optimum by breadth-first search");
  add_graph_opts(b, bfs_cfg);
  b->add_option("--budget", bfs_budget, "State budget (default $GFS_STATE_BUDGET or 5000000)");
  b->add_option("--format", bfs_format)->check(CLI::IsMember(formats))->capture_default_str();

  VerifyOptions verify_opts;
  std::string verify_format = "json";
  std::string fault;
  auto* w = app.add_subcommand("verify", "Run the full cross-check sweep");
  w->add_option("--max-n", verify_opts.max_n, "Cap on every check's n range")->capture_default_str();
  w->add_option("--seed", verify_opts.seed, "Seed for sampled parameter sets")->capture_default_str();
  w->add_option("--format", verify_format)->check(CLI::IsMember(formats))->capture_default_str();
  w->add_option("--inject-fault", fault)->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    if (*c) cmd_compute(compute, out);
    else if (*s) cmd_sequence(sequence, out);
    else if (*p) cmd_plan(plan_cfg, plan_out, out);
    else if (*v) cmd_validate(validate_path, validate_format, in, out);
    else if (*b) cmd_bfs(bfs_cfg, bfs_budget, bfs_format, out);
    else if (*w) {
      if (!fault.empty()) verify_opts.inject_fault = fault;
      cmd_verify(verify_opts, verify_format, out);
    }
  } catch (const Mismatch& e) {
    err << "gfs: " << e.what() << '\n';
    return kMismatch;
  } catch (const BudgetExceeded& e) {
    err << "gfs: " << e.what() << '\n';
    return kBudget;
  } catch (const ParseError& e) {
    err << "gfs: " << e.what() << '\n';
    return kIo;
  } catch (const std::ios_base::failure& e) {
    err << "gfs: " << e.what() << '\n';
    return kIo;
  } catch (const ParamError& e) {
    err << "gfs: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedRegime& e) {
    err << "gfs: unsupported regime: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace gfs::cli
