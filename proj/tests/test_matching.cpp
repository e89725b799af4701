#include <doctest.h>

#include <random>

#include "mdx/error.hpp"
#include "mdx/instances.hpp"
#include "mdx/matching.hpp"
#include "support.hpp"

using namespace mdx;

namespace {

using Pairs = std::vector<std::pair<Voter, Voter>>;

// Matchings written with 1-based voter numbers.
Pairs one_based(std::initializer_list<std::pair<Voter, Voter>> list) {
  Pairs out;
  for (auto [l, r] : list) out.emplace_back(l - 1, r - 1);
  return out;
}

// Largest matching by exhaustive search over the right partner of each
// left vertex.
std::size_t brute_force_matching(const BipartiteCoverGraph& g, Voter left = 0, std::uint64_t used = 0) {
  if (left == g.num_voters()) return 0;
  std::size_t best = brute_force_matching(g, left + 1, used);
  for (Voter r = 0; r < g.num_voters(); ++r) {
    if (g.has_edge(left, r) && !((used >> r) & 1U)) {
      best = std::max(best, 1 + brute_force_matching(g, left + 1, used | (std::uint64_t{1} << r)));
    }
  }
  return best;
}

BipartiteCoverGraph random_graph(std::mt19937_64& rng, std::size_t m, double density) {
  BipartiteCoverGraph g(m, 0, 1);
  std::bernoulli_distribution coin(density);
  for (Voter l = 0; l < m; ++l) {
    for (Voter r = 0; r < m; ++r) g.set_edge(l, r, coin(rng));
  }
  return g;
}

}  // namespace

TEST_CASE("G(A, B) of the three-voter cycle") {
  const auto p = three_cycle().profile;
  const auto g = build_cover_graph(p, 0, 1);
  // Every pair except (2, 2).
  for (Voter l = 0; l < 3; ++l) {
    for (Voter r = 0; r < 3; ++r) CHECK(g.has_edge(l, r) == !(l == 1 && r == 1));
  }
  CHECK(is_perfect_matching(g, one_based({{1, 2}, {2, 1}, {3, 3}})));
  CHECK_FALSE(is_perfect_matching(g, one_based({{1, 1}, {2, 2}, {3, 3}})));
  CHECK_FALSE(is_perfect_matching(g, one_based({{1, 2}, {3, 3}})));
  CHECK(max_matching(g).perfect);
}

TEST_CASE("G(A, C) of the three-voter cycle") {
  const auto g = build_cover_graph(three_cycle().profile, 0, 2);
  CHECK(is_perfect_matching(g, one_based({{1, 2}, {2, 3}, {3, 1}})));
}

TEST_CASE("cover graph needs distinct candidates") {
  CHECK_THROWS_AS(build_cover_graph(three_cycle().profile, 1, 1), std::invalid_argument);
}

TEST_CASE("five-voter example: only G(D, A) has a perfect matching on the cycle") {
  const auto p = counterexample_relax1().profile;
  CHECK_FALSE(max_matching(build_cover_graph(p, 0, 1)).perfect);
  CHECK_FALSE(max_matching(build_cover_graph(p, 1, 2)).perfect);
  CHECK_FALSE(max_matching(build_cover_graph(p, 2, 3)).perfect);
  const auto da = build_cover_graph(p, 3, 0);
  CHECK(max_matching(da).perfect);
  CHECK(is_perfect_matching(da, one_based({{1, 1}, {2, 3}, {3, 2}, {4, 5}, {5, 4}})));
  CHECK(hall_violator(build_cover_graph(p, 0, 1)).has_value());
}

TEST_CASE("rank-sum test on G(D, A)") {
  const auto p = counterexample_relax1().profile;
  const auto hit = rank_sum_test(p, 3, 0);
  REQUIRE(hit.has_value());
  CHECK(hit->k == 3);
  CHECK(hit->left_size == 2);
  CHECK(hit->right_size == 2);
  CHECK(hit->left_size + hit->right_size <= p.num_candidates());
  // The literal reading pairs the other two set families.
  const auto literal = rank_sum_test(p, 3, 0, RankSumReading::kLiteral);
  REQUIRE(literal.has_value());
  CHECK(literal->k == 1);
}

TEST_CASE("interval remainders of the hundred-voter example") {
  const auto p = counterexample_relax2().profile;
  const auto g = build_tournament(p);
  const Rational h(1, 100);
  struct Expected {
    Candidate a, b;
    Interval base, first, second, remainder;
  };
  const Expected cases[] = {
      {0, 1, Interval::open(30 * h, 70 * h), Interval::closed(50 * h, 65 * h), Interval::closed(30 * h, 55 * h),
       Interval::open(65 * h, 70 * h)},
      {1, 2, Interval::open(35 * h, 65 * h), Interval::closed(55 * h, 65 * h), Interval::closed(30 * h, 50 * h),
       Interval::open(50 * h, 55 * h)},
      {2, 3, Interval::open(35 * h, 65 * h), Interval::closed(50 * h, 70 * h), Interval::closed(35 * h, 45 * h),
       Interval::open(45 * h, 50 * h)},
      {3, 0, Interval::open(30 * h, 70 * h), Interval::closed(45 * h, 70 * h), Interval::closed(35 * h, 50 * h),
       Interval::open(30 * h, 35 * h)},
  };
  for (const auto& e : cases) {
    const auto diff = interval_test(g, e.a, e.b);
    CHECK(diff.base == e.base);
    REQUIRE(diff.subtracted.size() == 2);
    // The subtracted intervals come in candidate order, so compare as a set.
    CHECK(std::find(diff.subtracted.begin(), diff.subtracted.end(), e.first) != diff.subtracted.end());
    CHECK(std::find(diff.subtracted.begin(), diff.subtracted.end(), e.second) != diff.subtracted.end());
    REQUIRE(diff.remainder.size() == 1);
    CHECK(diff.remainder[0] == e.remainder);
    CHECK_FALSE(interval_remainder_empty(pairwise_counts(p), e.a, e.b));
  }
  CHECK(max_matching(build_cover_graph(p, 2, 3)).perfect);
  CHECK(max_matching(build_cover_graph(p, 3, 0)).perfect);
}

TEST_CASE("Hopcroft-Karp agrees with exhaustive search and Hall's condition") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 1500; ++t) {
    const std::size_t m = testing::uniform(rng, 1, 8);
    const double density = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    const auto g = random_graph(rng, m, density);
    const auto result = max_matching(g);
    CHECK(result.size == brute_force_matching(g));
    CHECK(result.perfect == (result.size == m));
    CHECK(result.perfect == !hall_violator(g).has_value());
    Pairs pairs;
    for (Voter l = 0; l < m; ++l) {
      if (result.match[l]) {
        CHECK(g.has_edge(l, *result.match[l]));
        pairs.emplace_back(l, *result.match[l]);
      }
    }
    CHECK(pairs.size() == result.size);
    if (result.perfect) CHECK(is_perfect_matching(g, pairs));
    if (auto s = hall_violator(g)) {
      std::uint64_t neighbours = 0;
      for (Voter l : *s) {
        for (Voter r = 0; r < m; ++r) {
          if (g.has_edge(l, r)) neighbours |= std::uint64_t{1} << r;
        }
      }
      CHECK(static_cast<std::size_t>(std::popcount(neighbours)) < s->size());
    }
  }
}

TEST_CASE("Hall oracle refuses large graphs") {
  CHECK_THROWS_AS(hall_violator(BipartiteCoverGraph(kHallOracleLimit + 1, 0, 1)), LimitExceeded);
}

TEST_CASE("sufficient conditions imply perfect matchings on random profiles") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 600; ++t) {
    const std::size_t n = testing::uniform(rng, 2, 5);
    const std::size_t m = testing::uniform(rng, 1, 7);
    const auto p = testing::random_profile(rng, n, m);
    const auto counts = pairwise_counts(p);
    const auto g = build_tournament(p);
    for (Candidate a = 0; a < n; ++a) {
      for (Candidate b = 0; b < n; ++b) {
        if (a == b) continue;
        const bool perfect = max_matching(build_cover_graph(p, a, b)).perfect;
        if (2 * counts(a, b) >= static_cast<std::int64_t>(m)) CHECK(perfect);
        const bool empty = interval_test(g, a, b).empty();
        CHECK(empty == interval_remainder_empty(counts, a, b));
        if (empty) CHECK(perfect);
        if (!rank_sum_test(p, a, b)) CHECK(perfect);
        CHECK(decide_perfect_matching(p, counts, a, b, true).perfect == perfect);
        CHECK(decide_perfect_matching(p, counts, a, b, false).perfect == perfect);
      }
    }
  }
}

TEST_CASE("matching uncovered set") {
  CHECK(matching_uncovered_set(three_cycle().profile) == CandidateSet::all(3));
  CHECK(matching_uncovered_set(parse_profile("A > B > C")) == CandidateSet::of({0}));
  // A Condorcet winner beats everyone by majority, so it is always a member.
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = testing::uniform(rng, 2, 5);
    const std::size_t m = testing::uniform(rng, 1, 7);
    const Candidate w = testing::uniform(rng, 0, n - 1);
    CHECK(matching_uncovered_set(testing::random_condorcet_profile(rng, n, m, w)).contains(w));
  }
}
