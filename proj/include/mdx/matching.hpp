#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mdx/interval.hpp"
#include "mdx/profile.hpp"
#include "mdx/rational.hpp"
#include "mdx/tournament.hpp"

namespace mdx {

/// G(A, B): both sides are the voters; left v and right v' are adjacent iff
/// P_v(B) and Q_v'(A) share a candidate.
class BipartiteCoverGraph {
 public:
  /// Empty graph on m voters per side.
  BipartiteCoverGraph(std::size_t m, Candidate a, Candidate b);

  std::size_t num_voters() const { return m_; }
  Candidate first() const { return a_; }
  Candidate second() const { return b_; }

  bool has_edge(Voter left, Voter right) const {
    return (rows_[left * words_ + right / 64] >> (right % 64)) & 1U;
  }
  void set_edge(Voter left, Voter right, bool present = true);
  std::size_t degree(Voter left) const;

 private:
  std::size_t m_;
  std::size_t words_;
  Candidate a_;
  Candidate b_;
  std::vector<std::uint64_t> rows_;
};

struct MatchingResult {
  std::size_t size = 0;
  /// match[left] = matched right vertex, if any.
  std::vector<std::optional<Voter>> match;
  bool perfect = false;
};

/// Throws std::invalid_argument when a == b.
BipartiteCoverGraph build_cover_graph(const VotingProfile& p, Candidate a, Candidate b);

/// Maximum-cardinality matching (Hopcroft-Karp).
MatchingResult max_matching(const BipartiteCoverGraph& g);

/// True iff `pairs` (left, right) is a perfect matching made of edges of g.
bool is_perfect_matching(const BipartiteCoverGraph& g, std::span<const std::pair<Voter, Voter>> pairs);

inline constexpr std::size_t kHallOracleLimit = 12;

/// Brute-force Hall check over all left subsets: returns some S with
/// |N(S)| < |S|, or nothing when every subset satisfies Hall's condition.
/// Throws LimitExceeded when m > kHallOracleLimit.
std::optional<std::vector<Voter>> hall_violator(const BipartiteCoverGraph& g);

using Interval = BasicInterval<Rational>;

/// (w(A,B), w(B,A)) minus the closed intervals [w(C,A), w(C,B)], C != A, B.
struct IntervalDifference {
  Interval base;
  std::vector<Interval> subtracted;
  std::vector<Interval> remainder;

  bool empty() const { return remainder.empty(); }
};

/// Empty remainder guarantees a perfect matching in G(A, B) for every
/// profile inducing g; a nonempty remainder proves nothing.
IntervalDifference interval_test(const WeightedTournamentGraph& g, Candidate a, Candidate b);

/// Integer-count version of interval_test's emptiness decision (all weights
/// share the denominator m, so numerators compare exactly).
bool interval_remainder_empty(const PairwiseMatrix& counts, Candidate a, Candidate b);

/// Which pairing of set sizes the rank-sum test uses for G(A, B).
enum class RankSumReading {
  /// |P_v(B)| descending against |Q_v(A)| ascending; gives k = 3 on G(D, A)
  /// of the five-voter instance.
  kExampleConsistent,
  /// |P_v(A)| descending against |Q_v(B)| ascending.
  kLiteral,
};

struct RankSumHit {
  std::size_t k = 0;           ///< 1-based
  std::size_t left_size = 0;   ///< k-th largest left set size
  std::size_t right_size = 0;  ///< k-th smallest right set size
};

/// Least k with (k-th largest left size) + (k-th smallest right size) <= n.
/// No such k implies G(A, B) has a perfect matching.
std::optional<RankSumHit> rank_sum_test(const VotingProfile& p, Candidate a, Candidate b,
                                        RankSumReading reading = RankSumReading::kExampleConsistent);

/// How a perfect-matching decision was reached.
enum class MatchingPath {
  kMajority,  ///< 2|AB| >= m: the AB voters are adjacent to everything
  kInterval,  ///< empty interval remainder
  kMatching,  ///< full Hopcroft-Karp
};

const char* to_string(MatchingPath path);

struct PairDecision {
  bool perfect = false;
  MatchingPath path = MatchingPath::kMatching;
};

/// Decides whether G(A, B) has a perfect matching, trying the majority and
/// interval sufficient conditions first when `fast_paths` is set.
PairDecision decide_perfect_matching(const VotingProfile& p, const PairwiseMatrix& counts, Candidate a, Candidate b,
                                     bool fast_paths = true);

/// Candidates A such that G(A, B) has a perfect matching for every B != A.
CandidateSet matching_uncovered_set(const VotingProfile& p);

}  // namespace mdx
