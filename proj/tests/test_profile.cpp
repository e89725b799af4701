#include <doctest.h>

#include <random>

#include "mdx/error.hpp"
#include "mdx/profile.hpp"
#include "support.hpp"

using namespace mdx;

namespace {

constexpr const char* kThreeCycle = "A > B > C\nB > C > A\nC > A > B\n";

std::size_t error_line(const std::string& text) {
  try {
    parse_profile(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("expected a parse error");
  return 0;
}

}  // namespace

TEST_CASE("parse the three-voter cycle") {
  const auto p = parse_profile(kThreeCycle);
  CHECK(p.num_candidates() == 3);
  CHECK(p.num_voters() == 3);
  CHECK(p.names() == std::vector<std::string>{"A", "B", "C"});
  CHECK(p.ordering(1)[0] == 1);
  CHECK(p.prefers(2, 2, 0));
}

TEST_CASE("single voter, two candidates") {
  const auto p = parse_profile("A > B");
  CHECK(p.num_candidates() == 2);
  CHECK(p.num_voters() == 1);
}

TEST_CASE("multiplicities expand") {
  const auto p = parse_profile("2: X > Y\n1: Y > X");
  CHECK(p.num_voters() == 3);
  CHECK(pairwise_counts(p)(0, 1) == 2);
  CHECK(pairwise_counts(p)(1, 0) == 1);
}

TEST_CASE("comments, blank lines and whitespace are ignored") {
  const auto p = parse_profile("# header\n\n  B>A  \n# mid\n3 :  A >  B\n");
  CHECK(p.num_voters() == 4);
  CHECK(p.names() == std::vector<std::string>{"A", "B"});
}

TEST_CASE("candidate indices follow name order") {
  const auto p = parse_profile("Zed > Amy > Bob");
  CHECK(p.names() == std::vector<std::string>{"Amy", "Bob", "Zed"});
  CHECK(p.ordering(0)[0] == 2);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_line("A > B > C\nA > A > C\n") == 2);
  CHECK(error_line("A > B\n# c\nA > Q\n") == 3);
  CHECK(error_line("A > B > C\nA > B\n") == 2);
  CHECK(error_line("0: A > B\n") == 1);
  CHECK(error_line("x: A > B\n") == 1);
  CHECK(error_line("A > > B\n") == 1);
  CHECK(error_line("# nothing\n\n") == 0);
  CHECK(error_line("") == 0);
}

TEST_CASE("serialization round-trips without multiplicities") {
  const auto p = parse_profile("2: A > B > C\nC > B > A");
  const std::string text = serialize_profile(p);
  CHECK(text == "A > B > C\nA > B > C\nC > B > A\n");
  CHECK(parse_profile(text) == p);
}

TEST_CASE("pairwise counts on small profiles") {
  const auto cyc = parse_profile(kThreeCycle);
  const auto c = pairwise_counts(cyc);
  CHECK(c(0, 1) == 2);
  CHECK(c(1, 2) == 2);
  CHECK(c(2, 0) == 2);
  CHECK(c(0, 0) == 0);

  const auto un = parse_profile("4: A > B > C");
  const auto u = pairwise_counts(un);
  CHECK(u(0, 1) == 4);
  CHECK(u(0, 2) == 4);
  CHECK(u(1, 2) == 4);
  CHECK(u(2, 0) == 0);
}

TEST_CASE("triple counts") {
  const auto cyc = parse_profile(kThreeCycle);
  CHECK(triple_count(cyc, 0, 1, 2) == 1);
  const auto un = parse_profile("5: A > B > C");
  CHECK(triple_count(un, 2, 1, 0) == 0);
  CHECK(triple_count(un, 0, 1, 2) == 5);
  CHECK_THROWS_AS(triple_count(un, 0, 0, 2), std::invalid_argument);
}

TEST_CASE("P and Q sets") {
  const auto cyc = parse_profile(kThreeCycle);
  CHECK(prefer_at_least(cyc, 0, 1) == CandidateSet::of({0, 1}));
  CHECK(prefer_at_most(cyc, 1, 0) == CandidateSet::of({0}));
  CHECK(prefer_at_least(cyc, 2, 2) == CandidateSet::of({2}));
  CHECK(prefer_at_most(cyc, 0, 2) == CandidateSet::of({2}));

  const auto rel = parse_profile("2: D > C > B > A\n2: B > A > D > C\nC > A > D > B");
  CHECK(prefer_at_least(rel, 4, 0) == CandidateSet::of({0, 2}));
  CHECK(prefer_at_most(rel, 2, 3) == CandidateSet::of({2, 3}));
}

TEST_CASE("restriction keeps relative order") {
  const auto cyc = parse_profile(kThreeCycle);
  CHECK(restrict_profile(cyc, CandidateSet::all(3)) == cyc);
  const auto ab = restrict_profile(cyc, CandidateSet::of({0, 1}));
  CHECK(ab == parse_profile("A > B\nB > A\nA > B"));

  const auto rel = parse_profile("2: D > C > B > A\n2: B > A > D > C\nC > A > D > B");
  const auto ad = restrict_profile(rel, CandidateSet::of({0, 3}));
  CHECK(ad == parse_profile("2: D > A\n3: A > D"));
  CHECK_THROWS_AS(restrict_profile(rel, CandidateSet{}), std::invalid_argument);
}

TEST_CASE("profile invariants on random profiles") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = testing::uniform(rng, 1, 6);
    const std::size_t m = testing::uniform(rng, 1, 7);
    const auto p = testing::random_profile(rng, n, m);
    const auto c = pairwise_counts(p);
    for (Candidate x = 0; x < n; ++x) {
      for (Candidate y = 0; y < n; ++y) {
        if (x != y) CHECK(c(x, y) + c(y, x) == static_cast<std::int64_t>(m));
      }
    }
    for (Voter v = 0; v < m; ++v) {
      for (Candidate x = 0; x < n; ++x) {
        const auto up = prefer_at_least(p, v, x);
        const auto down = prefer_at_most(p, v, x);
        CHECK((up | down) == CandidateSet::all(n));
        CHECK((up & down) == CandidateSet::of({x}));
        CHECK(up.size() == p.position(v, x) + 1);
      }
    }
    CandidateSet keep;
    for (Candidate x = 0; x < n; ++x) {
      if (rng() % 2) keep.insert(x);
    }
    if (keep.empty()) keep.insert(0);
    const auto r = restrict_profile(p, keep);
    const auto rc = pairwise_counts(r);
    const auto kept = keep.members();
    for (std::size_t i = 0; i < kept.size(); ++i) {
      for (std::size_t j = 0; j < kept.size(); ++j) CHECK(rc(i, j) == c(kept[i], kept[j]));
    }
  }
}
