#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "mdx/error.hpp"
#include "mdx/instances.hpp"
#include "mdx/tournament.hpp"
#include "support.hpp"

using namespace mdx;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

const std::string kSymmetric5 = read_file(MDX_TEST_DATA_DIR "/symmetric5.graph");

// Every single n-cycle, tried directly.
bool brute_force_symmetric(const WeightedTournamentGraph& g) {
  Permutation tau(g.size());
  std::iota(tau.begin(), tau.end(), Candidate{0});
  do {
    if (!is_single_cycle(tau)) continue;
    bool ok = true;
    for (Candidate u = 0; u < g.size() && ok; ++u) {
      for (Candidate v = 0; v < g.size() && ok; ++v) ok = g.count(u, v) == g.count(tau[u], tau[v]);
    }
    if (ok) return true;
  } while (std::next_permutation(tau.begin(), tau.end()));
  return false;
}

}  // namespace

TEST_CASE("weights of the three-voter cycle") {
  const auto g = build_tournament(three_cycle().profile);
  CHECK(g.weight(0, 1) == Rational(2, 3));
  CHECK(g.weight(1, 0) == Rational(1, 3));
  CHECK(g.weight(2, 0) == Rational(2, 3));
  CHECK(g.weight(0, 0) == 0);
}

TEST_CASE("hundred-voter weights") {
  const auto g = build_tournament(counterexample_relax2().profile);
  CHECK(g.weight(0, 1) == Rational(3, 10));
  CHECK(g.weight(1, 2) == Rational(35, 100));
  CHECK(g.weight(2, 3) == Rational(35, 100));
  CHECK(g.weight(3, 0) == Rational(3, 10));
  CHECK(g.weight(2, 0) == Rational(1, 2));
  CHECK(g.weight(3, 1) == Rational(55, 100));
}

TEST_CASE("weight invariants on random profiles") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = testing::uniform(rng, 1, 6);
    const std::size_t m = testing::uniform(rng, 1, 9);
    const auto g = build_tournament(testing::random_profile(rng, n, m));
    for (Candidate x = 0; x < n; ++x) {
      CHECK(g.weight(x, x) == 0);
      for (Candidate y = 0; y < n; ++y) {
        if (x == y) continue;
        CHECK(g.weight(x, y) + g.weight(y, x) == 1);
        CHECK(static_cast<std::int64_t>(m) % g.weight(x, y).denominator() == 0);
      }
    }
  }
}

TEST_CASE("graph files round-trip") {
  const auto g = build_tournament(counterexample_relax2().profile);
  const auto h = parse_graph(serialize_graph(g));
  CHECK(h.names() == g.names());
  for (Candidate x = 0; x < 4; ++x) {
    for (Candidate y = 0; y < 4; ++y) CHECK(h.weight(x, y) == g.weight(x, y));
  }
  const auto five = parse_graph(kSymmetric5);
  CHECK(five.size() == 5);
  CHECK(five.scale() == 10);
  CHECK(five.weight(0, 2) == Rational(2, 5));
}

TEST_CASE("graph file errors") {
  CHECK_THROWS_AS(parse_graph("names: A B\n0 1/2\n1/3 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("names: A B\n1 0\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("names: A B\n0 2\n-1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("names: A B\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("names: A B\nB: 0 1\nA: 0 0\n"), ParseError);
  try {
    parse_graph("names: A B\n0 x\n1 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("cyclic symmetry of a five-candidate graph") {
  const auto g = parse_graph(kSymmetric5);
  const auto w = find_cyclic_symmetry(g);
  REQUIRE(w.tau.has_value());
  CHECK(cycle_notation(g, *w.tau) == "(A B C D E)");
  CHECK(check_cyclic_symmetry(g, {1, 2, 3, 4, 0}));
  CHECK_FALSE(check_cyclic_symmetry(g, {1, 0, 3, 4, 2}));
}

TEST_CASE("three-cycle is symmetric under (A B C)") {
  const auto g = build_tournament(three_cycle().profile);
  const auto w = find_cyclic_symmetry(g);
  REQUIRE(w.tau.has_value());
  CHECK(cycle_notation(g, *w.tau) == "(A B C)");
}

TEST_CASE("unanimous profiles are not cyclically symmetric") {
  const auto p = parse_profile("3: A > B > C > D");
  CHECK_FALSE(find_cyclic_symmetry(build_tournament(p)).tau.has_value());
}

TEST_CASE("single-cycle detection") {
  CHECK(is_single_cycle({1, 2, 0}));
  CHECK_FALSE(is_single_cycle({1, 0, 2}));
  CHECK_FALSE(is_single_cycle({0, 1, 2}));
  CHECK(is_single_cycle({0}));
  CHECK_THROWS_AS(is_single_cycle({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("symmetry search honours its size limit") {
  const auto g = build_tournament(rotational_profile(9).profile);
  CHECK_THROWS_AS(find_cyclic_symmetry(g), LimitExceeded);
  CHECK(find_cyclic_symmetry(g, 9).tau.has_value());
}

TEST_CASE("symmetry search agrees with brute force") {
  std::mt19937_64 rng(17);
  int symmetric = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = testing::uniform(rng, 2, 6);
    // Rotational profiles plus noise voters give a mix of both outcomes.
    auto orderings = rotational_profile(n).profile.orderings();
    if (t % 3 != 0) {
      std::vector<Candidate> base(n);
      std::iota(base.begin(), base.end(), Candidate{0});
      std::shuffle(base.begin(), base.end(), rng);
      const auto shifted = rotational_profile(base).profile;
      for (const auto& o : shifted.orderings()) orderings.push_back(o);
    }
    if (t % 2 == 0) {
      const auto extra = testing::random_profile(rng, n, 1);
      orderings.push_back(extra.orderings()[0]);
    }
    const auto g = build_tournament(VotingProfile(default_names(n), orderings));
    const auto w = find_cyclic_symmetry(g);
    CHECK(w.tau.has_value() == brute_force_symmetric(g));
    if (w.tau) {
      ++symmetric;
      CHECK(is_single_cycle(*w.tau));
      CHECK(check_cyclic_symmetry(g, *w.tau));
    }
  }
  CHECK(symmetric > 50);
}
