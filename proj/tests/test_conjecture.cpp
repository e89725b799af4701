#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "mdx/conjecture.hpp"
#include "mdx/instances.hpp"
#include "support.hpp"

using namespace mdx;

namespace {

using Seq = std::vector<std::uint32_t>;

// Orbit representatives computed directly: every multiset of orderings is
// relabelled under each rotation and the least sorted sequence is kept.
std::set<Seq> orbit_oracle(std::size_t n, std::size_t m) {
  const auto table = ordering_table(n);
  std::map<std::vector<Candidate>, std::uint32_t> rank;
  for (std::uint32_t r = 0; r < table.size(); ++r) rank[table[r]] = r;
  std::set<Seq> reps;
  Seq seq(m, 0);
  auto canonical = [&](const Seq& s) {
    Seq best;
    for (std::size_t k = 0; k < n; ++k) {
      Seq rotated;
      for (auto r : s) {
        auto o = table[r];
        for (auto& c : o) c = (c + k) % n;
        rotated.push_back(rank[o]);
      }
      std::sort(rotated.begin(), rotated.end());
      if (k == 0 || rotated < best) best = rotated;
    }
    return best;
  };
  auto recurse = [&](auto&& self, std::size_t i, std::uint32_t from) -> void {
    if (i == m) {
      reps.insert(canonical(seq));
      return;
    }
    for (std::uint32_t r = from; r < table.size(); ++r) {
      seq[i] = r;
      self(self, i + 1, r);
    }
  };
  recurse(recurse, 0, 0);
  return reps;
}

}  // namespace

TEST_CASE("ordering table is lexicographic") {
  const auto t = ordering_table(3);
  REQUIRE(t.size() == 6);
  CHECK(t.front() == std::vector<Candidate>{0, 1, 2});
  CHECK(t[1] == std::vector<Candidate>{0, 2, 1});
  CHECK(t.back() == std::vector<Candidate>{2, 1, 0});
  CHECK(std::is_sorted(t.begin(), t.end()));
  CHECK(default_names(3) == std::vector<std::string>{"A", "B", "C"});
  const std::uint32_t ranks[] = {5, 0};
  CHECK(profile_from_ranks(3, ranks) == parse_profile("C > B > A\nA > B > C"));
}

TEST_CASE("class counts for tiny cases") {
  CHECK(count_canonical_profiles(2, 1) == 1);
  CHECK(count_canonical_profiles(3, 1) == 2);
  CHECK(count_canonical_profiles(3, 2) == 7);
  CHECK(count_canonical_profiles(2, 2) == 2);
  CHECK(count_canonical_profiles(4, 30) > 0);
  CHECK(count_canonical_profiles(9, 64) == UINT64_MAX);
}

TEST_CASE("enumeration matches the orbit oracle and Burnside") {
  const std::pair<std::size_t, std::size_t> cases[] = {{2, 1}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {3, 4}, {4, 1}, {4, 2}, {4, 3}, {5, 2}};
  for (auto [n, m] : cases) {
    CAPTURE(n);
    CAPTURE(m);
    const auto reps = orbit_oracle(n, m);
    std::set<Seq> seen;
    std::size_t visits = 0;
    for_each_canonical_profile(n, m, [&](std::span<const std::uint32_t> s) {
      ++visits;
      CHECK(std::is_sorted(s.begin(), s.end()));
      seen.insert(Seq(s.begin(), s.end()));
      return true;
    });
    CHECK(visits == seen.size());
    CHECK(seen == reps);
    CHECK(count_canonical_profiles(n, m) == reps.size());
    CHECK(enumerate_profiles(n, m).size() == reps.size());
  }
}

TEST_CASE("enumeration can stop early") {
  std::size_t visits = 0;
  for_each_canonical_profile(4, 3, [&](std::span<const std::uint32_t>) { return ++visits < 5; });
  CHECK(visits == 5);
}

TEST_CASE("cycle condition on the five-voter example") {
  const auto check = check_cycle_condition(counterexample_relax1().profile);
  REQUIRE(check.edges.size() == 4);
  CHECK_FALSE(check.edges[0].perfect);
  CHECK_FALSE(check.edges[1].perfect);
  CHECK_FALSE(check.edges[2].perfect);
  CHECK(check.edges[3].perfect);
  CHECK(check.edges[3].from == 3);
  CHECK(check.edges[3].to == 0);
  CHECK(check.holds());
  const auto slow = check_cycle_condition(counterexample_relax1().profile, false);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(slow.edges[i].perfect == check.edges[i].perfect);
    CHECK(slow.edges[i].path == MatchingPath::kMatching);
  }
}

TEST_CASE("fast paths agree with full matching on random profiles") {
  std::mt19937_64 rng(97);
  for (int t = 0; t < 300; ++t) {
    const auto p = testing::random_profile(rng, testing::uniform(rng, 2, 6), testing::uniform(rng, 1, 9));
    const auto fast = check_cycle_condition(p, true);
    const auto slow = check_cycle_condition(p, false);
    for (std::size_t i = 0; i < fast.edges.size(); ++i) CHECK(fast.edges[i].perfect == slow.edges[i].perfect);
    CHECK(fast.holds() == slow.holds());
  }
}

TEST_CASE("every ordered profile for n = 3, m = 3 satisfies the condition") {
  const auto table = ordering_table(3);
  for (std::uint32_t a = 0; a < 6; ++a) {
    for (std::uint32_t b = 0; b < 6; ++b) {
      for (std::uint32_t c = 0; c < 6; ++c) {
        const std::uint32_t ranks[] = {a, b, c};
        const auto p = profile_from_ranks(3, ranks);
        bool any = false;
        for (Candidate x = 0; x < 3; ++x) any = any || !hall_violator(build_cover_graph(p, x, (x + 1) % 3)).has_value();
        CHECK(any);
        CHECK(check_cycle_condition(p).holds() == any);
      }
    }
  }
}

TEST_CASE("small grids verify") {
  for (std::size_t m = 1; m <= 4; ++m) {
    const auto v = verify_conjecture(3, m);
    CHECK(v.status == VerdictStatus::kVerified);
    CHECK(v.profiles_checked == count_canonical_profiles(3, m));
    CHECK_FALSE(v.counterexample.has_value());
  }
  CHECK(verify_conjecture(2, 5).status == VerdictStatus::kVerified);
  CHECK(verify_conjecture(4, 2, {1, kDefaultProfileBudget, false}).status == VerdictStatus::kVerified);
}

TEST_CASE("worker count does not change the verdict") {
  const auto one = verify_conjecture(4, 3, {1, kDefaultProfileBudget, true});
  const auto three = verify_conjecture(4, 3, {3, kDefaultProfileBudget, true});
  CHECK(one.status == three.status);
  CHECK(one.profiles_checked == three.profiles_checked);
  CHECK(one.n == 4);
  CHECK(one.m == 3);
}

TEST_CASE("budget and size limits") {
  const auto v = verify_conjecture(4, 3, {1, 10, true});
  CHECK(v.status == VerdictStatus::kBudgetExceeded);
  CHECK(v.profiles_checked == 0);
  CHECK(verify_conjecture(10, 1).status == VerdictStatus::kBudgetExceeded);
  CHECK(verify_conjecture(3, 65).status == VerdictStatus::kBudgetExceeded);
  CHECK(std::string(to_string(VerdictStatus::kBudgetExceeded)) == "budget_exceeded");
  CHECK(std::string(to_string(VerdictStatus::kVerified)) == "verified");
  CHECK(std::string(to_string(VerdictStatus::kCounterexample)) == "counterexample");
}
