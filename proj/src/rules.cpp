#include "mdx/rules.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mdx/matching.hpp"

namespace mdx {
namespace {

__extension__ typedef __int128 i128;

bool reaches_cycle(const std::vector<std::vector<bool>>& adj, Candidate from, Candidate to) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<Candidate> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    const Candidate c = stack.back();
    stack.pop_back();
    if (c == to) return true;
    for (Candidate d = 0; d < adj.size(); ++d) {
      if (adj[c][d] && !seen[d]) {
        seen[d] = true;
        stack.push_back(d);
      }
    }
  }
  return false;
}

}  // namespace

std::string_view rule_name(RuleId id) {
  switch (id) {
    case RuleId::kCopeland:
      return "copeland";
    case RuleId::kUncovered:
      return "uncovered";
    case RuleId::kRankedPairs:
      return "ranked-pairs";
    case RuleId::kSchulze:
      return "schulze";
    case RuleId::kWeightedUncovered:
      return "weighted-uncovered";
    case RuleId::kMatchingUncovered:
      return "matching-uncovered";
    case RuleId::kOptimalLp:
      return "optimal-lp";
  }
  return "unknown";
}

std::optional<RuleId> parse_rule_id(std::string_view name) {
  for (RuleId id : kAllRules) {
    if (rule_name(id) == name) return id;
  }
  return std::nullopt;
}

Threshold Threshold::rational(Rational value) {
  if (value < 0 || value > 1) throw std::invalid_argument("threshold must lie in [0, 1]");
  return Threshold(false, value);
}

Threshold Threshold::golden() { return Threshold(true, Rational(0)); }

double Threshold::approx() const { return golden_ ? (std::sqrt(5.0) - 1.0) / 2.0 : to_double(value_); }

bool Threshold::reaches(std::int64_t count, std::int64_t m) const {
  if (golden_) {
    // count >= (sqrt5 - 1) m / 2  <=>  (2 count + m)^2 >= 5 m^2
    const i128 lhs = 2 * static_cast<i128>(count) + m;
    return lhs >= 0 && lhs * lhs >= 5 * static_cast<i128>(m) * m;
  }
  return static_cast<i128>(count) * value_.denominator() >= static_cast<i128>(value_.numerator()) * m;
}

bool Threshold::reaches_complement(std::int64_t count, std::int64_t m) const {
  if (golden_) {
    // count >= (3 - sqrt5) m / 2  <=>  3m - 2 count <= sqrt5 m
    const i128 gap = 3 * static_cast<i128>(m) - 2 * static_cast<i128>(count);
    return gap <= 0 || gap * gap <= 5 * static_cast<i128>(m) * m;
  }
  return static_cast<i128>(count) * value_.denominator() >=
         static_cast<i128>(value_.denominator() - value_.numerator()) * m;
}

Candidate alphabetical_first(const std::vector<std::string>& names, CandidateSet set) {
  const auto members = set.members();
  if (members.empty()) throw std::logic_error("alphabetical_first of an empty set");
  return *std::min_element(members.begin(), members.end(),
                           [&](Candidate a, Candidate b) { return names[a] < names[b]; });
}

RuleOutcome copeland_winner(const WeightedTournamentGraph& g) {
  const std::size_t n = g.size();
  CopelandSupport support{std::vector<std::size_t>(n, 0)};
  for (Candidate x = 0; x < n; ++x) {
    for (Candidate y = 0; y < n; ++y) {
      if (x != y && g.beats(x, y)) ++support.scores[x];
    }
  }
  const std::size_t best = *std::max_element(support.scores.begin(), support.scores.end());
  CandidateSet top;
  for (Candidate x = 0; x < n; ++x) {
    if (support.scores[x] == best) top.insert(x);
  }
  return {alphabetical_first(g.names(), top), RuleId::kCopeland, std::move(support)};
}

CandidateSet uncovered_set(const WeightedTournamentGraph& g) {
  const std::size_t n = g.size();
  CandidateSet set;
  for (Candidate a = 0; a < n; ++a) {
    bool member = true;
    for (Candidate b = 0; b < n && member; ++b) {
      if (b == a || g.beats(a, b)) continue;
      bool two_step = false;
      for (Candidate c = 0; c < n && !two_step; ++c) {
        two_step = c != a && c != b && g.beats(a, c) && g.beats(c, b);
      }
      member = two_step;
    }
    if (member) set.insert(a);
  }
  return set;
}

RuleOutcome uncovered_winner(const WeightedTournamentGraph& g) {
  const CandidateSet set = uncovered_set(g);
  return {alphabetical_first(g.names(), set), RuleId::kUncovered, SetSupport{set, false}};
}

CandidateSet weighted_uncovered_set(const WeightedTournamentGraph& g, const Threshold& lambda) {
  const std::size_t n = g.size();
  const std::int64_t m = g.scale();
  const bool upper = lambda.at_least_half();
  CandidateSet set;
  for (Candidate a = 0; a < n; ++a) {
    bool member = true;
    for (Candidate b = 0; b < n && member; ++b) {
      if (b == a) continue;
      const bool direct = upper ? lambda.reaches_complement(g.count(a, b), m) : lambda.reaches(g.count(a, b), m);
      if (direct) continue;
      bool two_step = false;
      for (Candidate c = 0; c < n && !two_step; ++c) {
        two_step = c != a && c != b && lambda.reaches_complement(g.count(a, c), m) && lambda.reaches(g.count(c, b), m);
      }
      member = two_step;
    }
    if (member) set.insert(a);
  }
  return set;
}

RuleOutcome weighted_uncovered_winner(const WeightedTournamentGraph& g) {
  const CandidateSet set = weighted_uncovered_set(g, Threshold::golden());
  if (set.empty()) throw std::logic_error("golden-ratio weighted uncovered set is empty");
  return {alphabetical_first(g.names(), set), RuleId::kWeightedUncovered, SetSupport{set, false}};
}

RuleOutcome matching_uncovered_winner(const VotingProfile& p) {
  const CandidateSet set = matching_uncovered_set(p);
  const bool fallback = set.empty();
  const CandidateSet pool = fallback ? CandidateSet::all(p.num_candidates()) : set;
  return {alphabetical_first(p.names(), pool), RuleId::kMatchingUncovered, SetSupport{set, fallback}};
}

RuleOutcome ranked_pairs_winner(const WeightedTournamentGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::pair<Candidate, Candidate>> edges;
  for (Candidate x = 0; x < n; ++x) {
    for (Candidate y = 0; y < n; ++y) {
      if (x != y && g.strictly_beats(x, y)) edges.emplace_back(x, y);
    }
  }
  std::sort(edges.begin(), edges.end(), [&](const auto& e, const auto& f) {
    if (g.count(e.first, e.second) != g.count(f.first, f.second)) {
      return g.count(e.first, e.second) > g.count(f.first, f.second);
    }
    if (e.first != f.first) return g.name(e.first) < g.name(f.first);
    return g.name(e.second) < g.name(f.second);
  });

  RankedPairsSupport support;
  std::vector<std::vector<bool>> locked(n, std::vector<bool>(n, false));
  for (const auto& [x, y] : edges) {
    if (reaches_cycle(locked, y, x)) {
      support.skipped.emplace_back(x, y);
    } else {
      locked[x][y] = true;
      support.locked.emplace_back(x, y);
    }
  }
  CandidateSet sources = CandidateSet::all(n);
  for (const auto& [x, y] : support.locked) sources.erase(y);
  return {alphabetical_first(g.names(), sources), RuleId::kRankedPairs, std::move(support)};
}

RuleOutcome schulze_winner(const WeightedTournamentGraph& g) {
  const std::size_t n = g.size();
  SchulzeSupport support;
  support.strength.assign(n, std::vector<Rational>(n, Rational(0)));
  for (Candidate x = 0; x < n; ++x) {
    for (Candidate y = 0; y < n; ++y) {
      if (x != y) support.strength[x][y] = g.weight(x, y);
    }
  }
  auto& s = support.strength;
  for (Candidate k = 0; k < n; ++k) {
    for (Candidate i = 0; i < n; ++i) {
      if (i == k) continue;
      for (Candidate j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        s[i][j] = std::max(s[i][j], std::min(s[i][k], s[k][j]));
      }
    }
  }
  CandidateSet winners;
  for (Candidate x = 0; x < n; ++x) {
    bool ok = true;
    for (Candidate y = 0; y < n && ok; ++y) ok = y == x || s[x][y] >= s[y][x];
    if (ok) winners.insert(x);
  }
  if (winners.empty()) throw std::logic_error("Schulze produced no winner");
  return {alphabetical_first(g.names(), winners), RuleId::kSchulze, std::move(support)};
}

RuleOutcome optimal_lp_winner(const VotingProfile& p, const LpOptions& options) {
  const std::size_t n = p.num_candidates();
  OptimalLpSupport support;
  support.values = distortion_matrix(p, options);
  support.worst.resize(n);
  std::vector<double> worst(n);
  for (Candidate a = 0; a < n; ++a) {
    worst[a] = row_worst(support.values, a);
    if (std::isfinite(worst[a])) support.worst[a] = worst[a];
  }
  // Values are LP optima, so equal values may differ in the last bits.
  const double best = *std::min_element(worst.begin(), worst.end());
  CandidateSet argmin;
  for (Candidate a = 0; a < n; ++a) {
    if (worst[a] == best || (std::isfinite(best) && worst[a] <= best + options.tie_tolerance)) argmin.insert(a);
  }
  return {alphabetical_first(p.names(), argmin), RuleId::kOptimalLp, std::move(support)};
}

RuleOutcome run_rule(RuleId id, const VotingProfile& p, const LpOptions& options) {
  switch (id) {
    case RuleId::kCopeland:
      return copeland_winner(build_tournament(p));
    case RuleId::kUncovered:
      return uncovered_winner(build_tournament(p));
    case RuleId::kRankedPairs:
      return ranked_pairs_winner(build_tournament(p));
    case RuleId::kSchulze:
      return schulze_winner(build_tournament(p));
    case RuleId::kWeightedUncovered:
      return weighted_uncovered_winner(build_tournament(p));
    case RuleId::kMatchingUncovered:
      return matching_uncovered_winner(p);
    case RuleId::kOptimalLp:
      return optimal_lp_winner(p, options);
  }
  throw std::invalid_argument("unknown rule");
}

}  // namespace mdx
