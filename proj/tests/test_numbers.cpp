#include <doctest.h>

#include <random>

#include "gfs/errors.hpp"
#include "gfs/numbers.hpp"

using namespace gfs;

namespace {

Params classic(int pegs) { return Params::frame_stewart(pegs); }

Params random_params(std::mt19937_64& rng, int min_pegs, int max_pegs, std::uint64_t min_p,
                     std::uint64_t max_p, std::uint64_t max_q) {
  std::uniform_int_distribution<int> pegs(min_pegs, max_pegs);
  std::uniform_int_distribution<std::uint64_t> pd(min_p, max_p), qd(1, max_q);
  const int k = pegs(rng);
  std::vector<std::uint64_t> b, w;
  for (int i = 3; i <= k; ++i) {
    b.push_back(pd(rng));
    w.push_back(qd(rng));
  }
  return Params(b, w);
}

}  // namespace

TEST_CASE("Params validation and parsing") {
  CHECK_THROWS_AS(Params({}, {}), ParamError);
  CHECK_THROWS_AS(Params({2, 0}, {1, 1}), ParamError);
  CHECK_THROWS_AS(Params({2}, {1, 1}), ParamError);
  std::vector<std::string> flags{"2:1", "3:4"};
  auto p = Params::parse(flags);
  CHECK(p.pegs() == 4);
  CHECK(p.p(3) == 2);
  CHECK(p.q(4) == 4);
  CHECK(p.weight_product() == 4);
  std::vector<std::string> bad{"2-1"};
  CHECK_THROWS_AS(Params::parse(bad), ParseError);
  std::vector<std::string> zero{"0:1"};
  CHECK_THROWS_AS(Params::parse(zero), ParamError);
  CHECK(Params::star(3) == Params({3, 2}, {2, 1}));
}

TEST_CASE("gfs_oracle examples") {
  CHECK(gfs_oracle(classic(3), 5) == 31);
  CHECK(gfs_oracle(classic(5), 0) == 0);
  CHECK(gfs_oracle(Params({3, 2}, {4, 1}), 0) == 0);
  CHECK(gfs_oracle(classic(4), 4) == 9);
  // Hand expansion: S_4(1..4) = 1, 3, 5, 9.
  auto t = GfsTable::build(classic(4), 4);
  CHECK(t.at(4, 1) == 1);
  CHECK(t.at(4, 2) == 3);
  CHECK(t.at(4, 3) == 5);
  CHECK(t.at(3, 4) == 15);
}

TEST_CASE("GfsTable invariants") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto params = random_params(rng, 3, 6, 1, 5, 4);
    auto t = GfsTable::build(params, 40);
    for (int peg = 3; peg <= params.pegs(); ++peg) {
      CHECK(t.at(peg, 0) == 0);
      for (std::size_t n = 1; n <= 40; ++n) REQUIRE(t.at(peg, n) >= t.at(peg, n - 1));
    }
    for (std::size_t n = 1; n <= 40; ++n) {
      REQUIRE(t.at(3, n) == params.p(3) * t.at(3, n - 1) + params.q(3));
    }
  }
  auto t = GfsTable::build(classic(4), 3);
  CHECK_THROWS_AS(t.at(5, 1), ParamError);
  CHECK_THROWS_AS(t.at(4, 4), ParamError);
  CHECK_THROWS_AS(t.argmin(3, 1), ParamError);
}

TEST_CASE("gfs_fast examples") {
  CHECK(gfs_fast(Params({3}, {2}), 2) == 8);
  CHECK(gfs_fast(Params({2, 2}, {1, 3}), 3) == 15);
  CHECK(gfs_oracle(Params({2, 2}, {1, 3}), 3) == 15);
  CHECK(gfs_fast(Params({4, 2}, {3, 3}), 0) == 0);
}

TEST_CASE("gfs_diff examples") {
  for (std::size_t n = 4; n <= 6; ++n) CHECK(gfs_diff(classic(4), n) == 4);
  CHECK(gfs_diff(Params({3}, {2}), 3) == 18);
  CHECK(gfs_diff(Params::unit_weights({2, 3}), 5) == 6);
  CHECK_THROWS_AS(gfs_diff(classic(4), 0), ParamError);
}

TEST_CASE("property: smooth-sum route equals the DP oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    auto params = random_params(rng, 3, 6, 1, 5, 4);
    auto table = GfsTable::build(params, 60);
    auto fast = gfs_fast_prefix(params, 60);
    for (std::size_t n = 0; n <= 60; ++n) REQUIRE(fast[n] == table.at(params.pegs(), n));
  }
}

TEST_CASE("property: weight scaling and difference law") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    auto params = random_params(rng, 3, 6, 1, 5, 4);
    auto weighted = gfs_fast_prefix(params, 40);
    auto unit = gfs_fast_prefix(params.with_unit_weights(), 40);
    for (std::size_t n = 1; n <= 40; ++n) {
      REQUIRE(weighted[n] == params.weight_product() * unit[n]);
      REQUIRE(weighted[n] - weighted[n - 1] == gfs_diff(params, n));
    }
  }
}

TEST_CASE("optimal_split examples") {
  CHECK(optimal_split(classic(4), 5) == 3);
  auto t = GfsTable::build(classic(4), 5);
  CHECK(2 * t.at(4, 2) + t.at(3, 3) == 13);
  CHECK(t.at(4, 5) == 13);
  CHECK(optimal_split(classic(4), 1) == 1);
  CHECK(optimal_split(Params::unit_weights({2, 3}), 7) == 4);

  CHECK_THROWS_AS(optimal_split(classic(3), 3), ParamError);
  CHECK_THROWS_AS(optimal_split(Params::unit_weights({2, 1}), 3), UnsupportedRegime);
  CHECK_THROWS_AS(optimal_split(classic(4), 0), ParamError);
}

TEST_CASE("property: optimal split attains the full-scan minimum") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 12; ++trial) {
    auto params = random_params(rng, 4, 5, 2, 5, 4);
    const std::size_t n_max = 200;
    auto table = GfsTable::build(params, n_max);
    const int k = params.pegs();
    auto splits = optimal_splits(params, n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
      const auto j = splits[n];
      const BigInt via = params.p(k) * table.at(k, n - j) + params.q(k) * table.at(k - 1, j);
      REQUIRE(via == table.at(k, n));
      // The oracle's smallest argmin can only be <= j or another minimizer.
      const auto a = table.argmin(k, n);
      REQUIRE(params.p(k) * table.at(k, n - a) + params.q(k) * table.at(k - 1, a) == via);
    }
  }
}

TEST_CASE("constant_case_closed_form") {
  CHECK(constant_case_closed_form(2, 4, 4) == 9);
  CHECK(constant_case_closed_form(1, 5, 12) == 12);
  CHECK(constant_case_closed_form(3, 4, 1) == 1);
  CHECK(constant_case_closed_form(3, 4, 0) == 0);
  for (std::uint64_t p = 1; p <= 4; ++p) {
    for (int k = 3; k <= 6; ++k) {
      auto fast = gfs_fast_prefix(Params::constant(p, 1, k), 200);
      for (std::uint64_t n = 1; n <= 200; ++n) REQUIRE(constant_case_closed_form(p, k, n) == fast[n]);
    }
  }
}

TEST_CASE("a unit base makes G the identity") {
  for (auto bases : {std::vector<std::uint64_t>{1}, {2, 1}, {1, 4}, {3, 2, 1}}) {
    auto table = GfsTable::build(Params::unit_weights(bases), 50);
    for (std::size_t n = 0; n <= 50; ++n) REQUIRE(table.at(static_cast<int>(bases.size()) + 2, n) == n);
  }
}

TEST_CASE("classic Frame-Stewart values") {
  auto s3 = gfs_fast_prefix(classic(3), 30);
  for (std::size_t n = 0; n <= 30; ++n) CHECK(s3[n] == pow_big(2, n) - 1);
  // Known S_4: 0, 1, 3, 5, 9, 13, 17, 25, 33, 41, 49.
  auto s4 = gfs_fast_prefix(classic(4), 10);
  std::vector<int> known{0, 1, 3, 5, 9, 13, 17, 25, 33, 41, 49};
  for (std::size_t n = 0; n <= 10; ++n) CHECK(s4[n] == known[n]);
}
