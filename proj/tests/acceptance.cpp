// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. argv[1] is the path of the gfs executable for the
// end-to-end CLI criterion.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gfs/bfs.hpp"
#include "gfs/numbers.hpp"
#include "gfs/planners.hpp"
#include "gfs/smooth_seq.hpp"

using namespace gfs;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t instances = 0;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void expect(bool ok, const std::function<std::string()>& why) {
    ++instances;
    if (!ok) fail(why());
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string join_values(const std::vector<BigInt>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + to_decimal(vs[i]);
  return out;
}

int exit_status(int raw) { return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1; }

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  status = exit_status(pclose(pipe));
  return out;
}

// 1. Smooth-sum route equals the DP oracle; >= 50 parameter sets, n <= 60, < 30 s.
Outcome fast_equals_oracle() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> pd(1, 5), qd(1, 4);
  std::size_t sets = 0;
  for (int k = 3; k <= 6; ++k) {
    // 15 sets per peg count: 60 total, every k represented.
    for (int s = 0; s < 15; ++s, ++sets) {
      std::vector<std::uint64_t> b, w;
      for (int i = 3; i <= k; ++i) {
        b.push_back(pd(rng));
        w.push_back(qd(rng));
      }
      Params params(b, w);
      auto table = GfsTable::build(params, 60);
      auto fast = gfs_fast_prefix(params, 60);
      for (std::size_t n = 0; n <= 60; ++n) {
        o.expect(fast[n] == table.at(k, n), [&] {
          return "params " + params.to_string() + " n=" + std::to_string(n);
        });
      }
    }
  }
  const double secs = seconds_since(t0);
  if (sets < 50) o.fail("only " + std::to_string(sets) + " parameter sets");
  if (secs >= 30.0) o.fail("took " + std::to_string(secs) + " s (limit 30 s)");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(sets) + " sets in " +
              std::to_string(secs) + " s";
  return o;
}

// 2. S_3(n) = 2^n - 1 for n <= 30; S_4 differences 2^{i-1} on C(i,2) < n <= C(i+1,2), n <= 120.
Outcome classic_values() {
  Outcome o;
  auto s3_oracle = GfsTable::build(Params::frame_stewart(3), 30);
  auto s3_fast = gfs_fast_prefix(Params::frame_stewart(3), 30);
  for (std::size_t n = 0; n <= 30; ++n) {
    const BigInt want = pow_big(2, n) - 1;
    o.expect(s3_fast[n] == want && s3_oracle.at(3, n) == want,
             [&] { return "S_3(" + std::to_string(n) + ")"; });
  }
  auto s4_oracle = GfsTable::build(Params::frame_stewart(4), 120);
  auto s4_fast = gfs_fast_prefix(Params::frame_stewart(4), 120);
  for (std::size_t n = 1; n <= 120; ++n) {
    std::uint64_t i = 1;
    while (!(i * (i - 1) / 2 < n && n <= (i + 1) * i / 2)) ++i;
    const BigInt want = pow_big(2, i - 1);
    o.expect(s4_fast[n] - s4_fast[n - 1] == want && s4_oracle.at(4, n) - s4_oracle.at(4, n - 1) == want,
             [&] { return "S_4 difference at n=" + std::to_string(n); });
  }
  return o;
}

// 3. Golden prefixes, byte-exact; unit-base stream is constant 1.
Outcome golden_sequences() {
  Outcome o;
  const std::vector<std::uint64_t> b22{2, 2}, b23{2, 3};
  const auto s22 = join_values(smooth_values(b22, 7));
  const auto s23 = join_values(smooth_values(b23, 7));
  o.expect(s22 == "1,2,2,4,4,4,8", [&] { return "(2,2) prefix " + s22; });
  o.expect(s23 == "1,2,3,4,6,8,9", [&] { return "(2,3) prefix " + s23; });
  for (const auto& bases : {std::vector<std::uint64_t>{1}, {2, 1}, {1, 3}, {5, 1, 2}}) {
    for (const auto& v : smooth_values(bases, 200)) {
      o.expect(v == 1, [&] { return "unit-base stream produced " + to_decimal(v); });
    }
  }
  return o;
}

// 4. Split recursion identity (>= 20 tuples, n <= 500) and constant-p interval law (p <= 5, k <= 7, n <= 300).
Outcome split_and_constant_laws() {
  Outcome o;
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> len(2, 5);
  std::uniform_int_distribution<std::uint64_t> base(2, 9);
  for (int tuple = 0; tuple < 25; ++tuple) {
    std::vector<std::uint64_t> bases(static_cast<std::size_t>(len(rng)));
    for (auto& b : bases) b = base(rng);
    const auto u = smooth_values(bases, 501);
    const auto ks = split_indices_past(bases, 500);
    for (std::size_t j = 1; j < ks.size(); ++j) {
      for (std::size_t n = ks[j - 1] + 1; n < ks[j] && n <= 500; ++n) {
        o.expect(u[n - 1] == bases.back() * u[n - j - 1],
                 [&] { return "recursion identity fails at n=" + std::to_string(n); });
      }
    }
  }
  for (std::uint64_t p = 1; p <= 5; ++p) {
    for (int k = 3; k <= 7; ++k) {
      const auto u = smooth_values(std::vector<std::uint64_t>(static_cast<std::size_t>(k - 2), p), 300);
      for (std::uint64_t n = 1; n <= 300; ++n) {
        // Interval law stated directly: find j with C(k+j-3,k-2) < n <= C(k+j-2,k-2).
        std::uint64_t j = 0;
        while (!(binomial(k + j - 3, static_cast<std::uint64_t>(k - 2)) < n &&
                 n <= binomial(k + j - 2, static_cast<std::uint64_t>(k - 2))))
          ++j;
        o.expect(u[n - 1] == pow_big(p, j) && constant_p_term(p, k, n) == u[n - 1], [&] {
          return "constant-p law p=" + std::to_string(p) + " k=" + std::to_string(k) +
                 " n=" + std::to_string(n);
        });
      }
    }
  }
  return o;
}

// 5. G_k(n) = p_k G_k(n-j) + q_k G_{k-1}(j) at the optimal split, equal to the full-scan min; n <= 200, k <= 5.
Outcome optimal_split_identity() {
  Outcome o;
  std::vector<Params> samples{Params::frame_stewart(4), Params::frame_stewart(5), Params::star(3),
                              Params::star(4), Params::unit_weights({2, 3}), Params({5, 2, 3}, {1, 4, 2})};
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint64_t> pd(2, 6), qd(1, 4);
  for (int s = 0; s < 14; ++s) {
    const int k = s % 2 ? 5 : 4;
    std::vector<std::uint64_t> b, w;
    for (int i = 3; i <= k; ++i) {
      b.push_back(pd(rng));
      w.push_back(qd(rng));
    }
    samples.emplace_back(b, w);
  }
  for (const auto& params : samples) {
    const int k = params.pegs();
    const auto table = GfsTable::build(params, 200);
    const auto splits = optimal_splits(params, 200);
    for (std::size_t n = 1; n <= 200; ++n) {
      const auto j = splits[n];
      const BigInt via = params.p(k) * table.at(k, n - j) + params.q(k) * table.at(k - 1, j);
      BigInt scan = via;
      for (std::size_t t = 1; t <= n; ++t) {
        scan = std::min<BigInt>(scan, params.p(k) * table.at(k, n - t) + params.q(k) * table.at(k - 1, t));
      }
      o.expect(via == table.at(k, n) && via == scan, [&] {
        return "params " + params.to_string() + " n=" + std::to_string(n) + " j=" + std::to_string(j);
      });
    }
  }
  return o;
}

// 6. P3: end-to-end 3^n - 1, end-to-middle (3^n - 1)/2 for n <= 10; equal to BFS for n <= 6.
Outcome path3_lengths() {
  Outcome o;
  const auto graph = hanoi::PegGraph::path3();
  for (std::size_t n = 1; n <= 10; ++n) {
    const BigInt full = pow_big(3, n) - 1;
    const auto e2e = hanoi::plan_path3(n, 1, 3);
    const auto e2m = hanoi::plan_path3(n, 1, 2);
    o.expect(hanoi::validate_plan(e2e).passed() && BigInt(e2e.moves.size()) == full,
             [&] { return "end-to-end n=" + std::to_string(n); });
    o.expect(hanoi::validate_plan(e2m).passed() && BigInt(e2m.moves.size()) == full / 2,
             [&] { return "end-to-middle n=" + std::to_string(n); });
    if (n <= 6) {
      o.expect(hanoi::bfs_optimal(graph, n, 1, 3) == full, [&] { return "BFS end-to-end n=" + std::to_string(n); });
      o.expect(hanoi::bfs_optimal(graph, n, 1, 2) == full / 2,
               [&] { return "BFS end-to-middle n=" + std::to_string(n); });
    }
  }
  return o;
}

// 7. Star: plan validates with length G_{k+1}(n) for k <= 5, n <= 8; BFS <= length for k = 3, n <= 5.
Outcome star_bound() {
  Outcome o;
  for (int leaves = 2; leaves <= 5; ++leaves) {
    const auto table = GfsTable::build(Params::star(leaves), 8);
    for (std::size_t n = 1; n <= 8; ++n) {
      const auto plan = hanoi::plan_star(leaves, n, 2, 3);
      o.expect(hanoi::validate_plan(plan).passed() && BigInt(plan.moves.size()) == table.at(leaves + 1, n),
               [&] { return "S" + std::to_string(leaves) + " n=" + std::to_string(n); });
    }
  }
  std::size_t equal = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const BigInt best = hanoi::bfs_optimal(hanoi::PegGraph::star(3), n, 2, 3);
    const BigInt len = hanoi::plan_star(3, n, 2, 3).moves.size();
    o.expect(best <= len, [&] { return "BFS exceeds plan on S3 n=" + std::to_string(n); });
    if (best == len) ++equal;
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("S3 plan = BFS optimum on ") +
              std::to_string(equal) + "/5 (reported)";
  return o;
}

// 8. Closed form equals the smooth-sum route for p <= 4, k <= 6, n <= 200.
Outcome closed_form() {
  Outcome o;
  for (std::uint64_t p = 1; p <= 4; ++p) {
    for (int k = 3; k <= 6; ++k) {
      const auto fast = gfs_fast_prefix(Params::constant(p, 1, k), 200);
      for (std::uint64_t n = 1; n <= 200; ++n) {
        o.expect(constant_case_closed_form(p, k, n) == fast[n], [&] {
          return "p=" + std::to_string(p) + " k=" + std::to_string(k) + " n=" + std::to_string(n);
        });
      }
    }
  }
  return o;
}

// 9. `gfs verify` exits 0 in under 2 minutes; plan | validate passes for K3..K5, P3, S2..S4, n <= 8.
Outcome end_to_end_cli(const std::string& exe) {
  Outcome o;
  const auto t0 = Clock::now();
  int status = 0;
  const auto report = run_capture("'" + exe + "' verify", status);
  const double secs = seconds_since(t0);
  ++o.instances;
  if (status != 0) o.fail("verify exited " + std::to_string(status));
  if (secs >= 120.0) o.fail("verify took " + std::to_string(secs) + " s");
  try {
    auto doc = nlohmann::json::parse(report);
    if (doc["passed"] != true) o.fail("verify summary reports failure");
  } catch (const std::exception& e) {
    o.fail(std::string("verify output is not JSON: ") + e.what());
  }

  for (const char* graph : {"K3", "K4", "K5", "P3", "S2", "S3", "S4"}) {
    for (int n = 0; n <= 8; ++n) {
      const std::string cmd = "'" + exe + "' plan --graph " + graph + " --n " + std::to_string(n) + " | '" +
                              exe + "' validate -";
      int st = 0;
      const auto out = run_capture(cmd, st);
      o.expect(st == 0 && out.rfind("pass:", 0) == 0,
               [&] { return std::string(graph) + " n=" + std::to_string(n) + ": " + out; });
    }
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("verify ") + std::to_string(secs) + " s";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-gfs>\n";
    return 2;
  }
  const std::string exe = argv[1];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 smooth-sum equals DP oracle", fast_equals_oracle},
      {"AC2 classic S_3 and S_4 values", classic_values},
      {"AC3 golden smooth sequences", golden_sequences},
      {"AC4 split recursion and constant-p laws", split_and_constant_laws},
      {"AC5 optimal split identity", optimal_split_identity},
      {"AC6 path P3 lengths and optimality", path3_lengths},
      {"AC7 star plans and BFS bound", star_bound},
      {"AC8 constant-case closed form", closed_form},
      {"AC9 end-to-end CLI", [&] { return end_to_end_cli(exe); }},
  };

  bool all = true;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = Clock::now();
    Outcome o = fn();
    all = all && o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << "  (" << o.instances << " instances, "
              << seconds_since(t0) << " s)";
    if (!o.detail.empty()) std::cout << "  " << o.detail;
    std::cout << std::endl;
  }
  std::cout << (all ? "all acceptance criteria passed" : "acceptance FAILED") << std::endl;
  return all ? 0 : 1;
}
