#include "mdx/matching.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>

#include "mdx/error.hpp"

namespace mdx {

BipartiteCoverGraph::BipartiteCoverGraph(std::size_t m, Candidate a, Candidate b)
    : m_(m), words_((m + 63) / 64), a_(a), b_(b), rows_(m * words_, 0) {}

void BipartiteCoverGraph::set_edge(Voter left, Voter right, bool present) {
  auto& word = rows_[left * words_ + right / 64];
  const std::uint64_t bit = std::uint64_t{1} << (right % 64);
  word = present ? (word | bit) : (word & ~bit);
}

std::size_t BipartiteCoverGraph::degree(Voter left) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(rows_[left * words_ + w]));
  return d;
}

BipartiteCoverGraph build_cover_graph(const VotingProfile& p, Candidate a, Candidate b) {
  if (a == b) throw std::invalid_argument("cover graph needs two distinct candidates");
  const std::size_t m = p.num_voters();
  std::vector<CandidateSet> left(m), right(m);
  for (Voter v = 0; v < m; ++v) {
    left[v] = prefer_at_least(p, v, b);
    right[v] = prefer_at_most(p, v, a);
  }
  BipartiteCoverGraph g(m, a, b);
  for (Voter l = 0; l < m; ++l) {
    for (Voter r = 0; r < m; ++r) {
      if (left[l].intersects(right[r])) g.set_edge(l, r);
    }
  }
  return g;
}

MatchingResult max_matching(const BipartiteCoverGraph& g) {
  const std::size_t m = g.num_voters();
  constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

  std::vector<std::vector<Voter>> adj(m);
  for (Voter l = 0; l < m; ++l) {
    for (Voter r = 0; r < m; ++r) {
      if (g.has_edge(l, r)) adj[l].push_back(r);
    }
  }

  std::vector<std::size_t> match_left(m, kFree), match_right(m, kFree), dist(m);
  std::size_t size = 0;

  auto bfs = [&]() {
    std::queue<Voter> q;
    bool reachable_free = false;
    for (Voter l = 0; l < m; ++l) {
      if (match_left[l] == kFree) {
        dist[l] = 0;
        q.push(l);
      } else {
        dist[l] = kInf;
      }
    }
    while (!q.empty()) {
      const Voter l = q.front();
      q.pop();
      for (Voter r : adj[l]) {
        const std::size_t next = match_right[r];
        if (next == kFree) {
          reachable_free = true;
        } else if (dist[next] == kInf) {
          dist[next] = dist[l] + 1;
          q.push(next);
        }
      }
    }
    return reachable_free;
  };

  std::function<bool(Voter)> dfs = [&](Voter l) {
    for (Voter r : adj[l]) {
      const std::size_t next = match_right[r];
      if (next == kFree || (dist[next] == dist[l] + 1 && dfs(next))) {
        match_left[l] = r;
        match_right[r] = l;
        return true;
      }
    }
    dist[l] = kInf;
    return false;
  };

  while (bfs()) {
    for (Voter l = 0; l < m; ++l) {
      if (match_left[l] == kFree && dfs(l)) ++size;
    }
  }

  MatchingResult result;
  result.size = size;
  result.perfect = size == m;
  result.match.resize(m);
  for (Voter l = 0; l < m; ++l) {
    if (match_left[l] != kFree) result.match[l] = match_left[l];
  }
  return result;
}

bool is_perfect_matching(const BipartiteCoverGraph& g, std::span<const std::pair<Voter, Voter>> pairs) {
  const std::size_t m = g.num_voters();
  if (pairs.size() != m) return false;
  std::vector<bool> left_used(m, false), right_used(m, false);
  for (const auto& [l, r] : pairs) {
    if (l >= m || r >= m || left_used[l] || right_used[r] || !g.has_edge(l, r)) return false;
    left_used[l] = right_used[r] = true;
  }
  return true;
}

std::optional<std::vector<Voter>> hall_violator(const BipartiteCoverGraph& g) {
  const std::size_t m = g.num_voters();
  if (m > kHallOracleLimit) {
    throw LimitExceeded("Hall oracle limited to " + std::to_string(kHallOracleLimit) + " voters");
  }
  std::vector<std::uint32_t> neighbours(m, 0);
  for (Voter l = 0; l < m; ++l) {
    for (Voter r = 0; r < m; ++r) {
      if (g.has_edge(l, r)) neighbours[l] |= std::uint32_t{1} << r;
    }
  }
  for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << m); ++subset) {
    std::uint32_t hood = 0;
    for (Voter l = 0; l < m; ++l) {
      if ((subset >> l) & 1U) hood |= neighbours[l];
    }
    if (std::popcount(hood) < std::popcount(subset)) {
      std::vector<Voter> s;
      for (Voter l = 0; l < m; ++l) {
        if ((subset >> l) & 1U) s.push_back(l);
      }
      return s;
    }
  }
  return std::nullopt;
}

IntervalDifference interval_test(const WeightedTournamentGraph& g, Candidate a, Candidate b) {
  if (a == b) throw std::invalid_argument("interval test needs two distinct candidates");
  IntervalDifference diff;
  diff.base = Interval::open(g.weight(a, b), g.weight(b, a));
  for (Candidate c = 0; c < g.size(); ++c) {
    if (c == a || c == b) continue;
    diff.subtracted.push_back(Interval::closed(g.weight(c, a), g.weight(c, b)));
  }
  diff.remainder = subtract_intervals(diff.base, diff.subtracted);
  return diff;
}

bool interval_remainder_empty(const PairwiseMatrix& counts, Candidate a, Candidate b) {
  using IntInterval = BasicInterval<std::int64_t>;
  const auto base = IntInterval::open(counts(a, b), counts(b, a));
  if (base.empty()) return true;
  std::vector<IntInterval> removed;
  for (Candidate c = 0; c < counts.num_candidates(); ++c) {
    if (c != a && c != b) removed.push_back(IntInterval::closed(counts(c, a), counts(c, b)));
  }
  return subtract_intervals(base, std::move(removed)).empty();
}

std::optional<RankSumHit> rank_sum_test(const VotingProfile& p, Candidate a, Candidate b, RankSumReading reading) {
  if (a == b) throw std::invalid_argument("rank-sum test needs two distinct candidates");
  const std::size_t m = p.num_voters();
  const Candidate left_of = reading == RankSumReading::kExampleConsistent ? b : a;
  const Candidate right_of = reading == RankSumReading::kExampleConsistent ? a : b;
  std::vector<std::size_t> left(m), right(m);
  for (Voter v = 0; v < m; ++v) {
    left[v] = prefer_at_least(p, v, left_of).size();
    right[v] = prefer_at_most(p, v, right_of).size();
  }
  std::sort(left.begin(), left.end(), std::greater<>());
  std::sort(right.begin(), right.end());
  for (std::size_t k = 0; k < m; ++k) {
    if (left[k] + right[k] <= p.num_candidates()) return RankSumHit{k + 1, left[k], right[k]};
  }
  return std::nullopt;
}

const char* to_string(MatchingPath path) {
  switch (path) {
    case MatchingPath::kMajority:
      return "majority";
    case MatchingPath::kInterval:
      return "interval";
    case MatchingPath::kMatching:
      return "matching";
  }
  return "unknown";
}

PairDecision decide_perfect_matching(const VotingProfile& p, const PairwiseMatrix& counts, Candidate a, Candidate b,
                                     bool fast_paths) {
  if (fast_paths) {
    if (2 * counts(a, b) >= static_cast<std::int64_t>(p.num_voters())) return {true, MatchingPath::kMajority};
    if (interval_remainder_empty(counts, a, b)) return {true, MatchingPath::kInterval};
  }
  return {max_matching(build_cover_graph(p, a, b)).perfect, MatchingPath::kMatching};
}

CandidateSet matching_uncovered_set(const VotingProfile& p) {
  const std::size_t n = p.num_candidates();
  const PairwiseMatrix counts = pairwise_counts(p);
  CandidateSet set;
  for (Candidate a = 0; a < n; ++a) {
    bool member = true;
    for (Candidate b = 0; b < n && member; ++b) {
      if (b != a) member = decide_perfect_matching(p, counts, a, b).perfect;
    }
    if (member) set.insert(a);
  }
  return set;
}

}  // namespace mdx
