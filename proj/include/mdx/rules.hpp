#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mdx/distortion.hpp"
#include "mdx/profile.hpp"
#include "mdx/rational.hpp"
#include "mdx/tournament.hpp"

namespace mdx {

enum class RuleId {
  kCopeland,
  kUncovered,
  kRankedPairs,
  kSchulze,
  kWeightedUncovered,
  kMatchingUncovered,
  kOptimalLp,
};

inline constexpr RuleId kAllRules[] = {RuleId::kCopeland,          RuleId::kUncovered,         RuleId::kRankedPairs,
                                       RuleId::kSchulze,           RuleId::kWeightedUncovered, RuleId::kMatchingUncovered,
                                       RuleId::kOptimalLp};

/// CLI/JSON identifier, e.g. "ranked-pairs".
std::string_view rule_name(RuleId id);
std::optional<RuleId> parse_rule_id(std::string_view name);

/// Threshold lambda in [0, 1]: an exact rational or the golden ratio
/// (sqrt(5) - 1) / 2. All comparisons against counts are exact integer tests.
class Threshold {
 public:
  /// Throws std::invalid_argument outside [0, 1].
  static Threshold rational(Rational value);
  static Threshold golden();

  bool is_golden() const { return golden_; }
  /// The rational value; meaningless for the golden threshold.
  const Rational& value() const { return value_; }
  bool at_least_half() const { return golden_ || value_ * 2 >= 1; }
  double approx() const;

  /// count >= lambda * m
  bool reaches(std::int64_t count, std::int64_t m) const;
  /// count >= (1 - lambda) * m
  bool reaches_complement(std::int64_t count, std::int64_t m) const;

 private:
  Threshold(bool golden, Rational value) : golden_(golden), value_(value) {}
  bool golden_;
  Rational value_;
};

/// Alphabetically smallest member by candidate name. Precondition: nonempty.
Candidate alphabetical_first(const std::vector<std::string>& names, CandidateSet set);

struct CopelandSupport {
  std::vector<std::size_t> scores;
};
struct SetSupport {
  CandidateSet set;
  bool fallback = false;  ///< set was empty; winner falls back to the alphabetical first
};
struct RankedPairsSupport {
  std::vector<std::pair<Candidate, Candidate>> locked;
  std::vector<std::pair<Candidate, Candidate>> skipped;
};
struct SchulzeSupport {
  /// strength[x][y]: widest-path bottleneck from x to y.
  std::vector<std::vector<Rational>> strength;
};
struct OptimalLpSupport {
  DistortionMatrix values;
  /// worst[x] = max over opponents; nullopt for an unbounded value.
  std::vector<std::optional<double>> worst;
};

using RuleSupport = std::variant<CopelandSupport, SetSupport, RankedPairsSupport, SchulzeSupport, OptimalLpSupport>;

struct RuleOutcome {
  Candidate winner = 0;
  RuleId rule = RuleId::kCopeland;
  RuleSupport support;
};

RuleOutcome copeland_winner(const WeightedTournamentGraph& g);

/// Candidates reaching every other candidate in one or two "beats" steps,
/// where x beats y iff weight(x, y) >= 1/2.
CandidateSet uncovered_set(const WeightedTournamentGraph& g);
RuleOutcome uncovered_winner(const WeightedTournamentGraph& g);

/// For lambda >= 1/2: A is in the set iff for every B, |AB| >= (1-lambda)m or
/// some C has |AC| >= (1-lambda)m and |CB| >= lambda m. Below 1/2 the direct
/// clause becomes |AB| >= lambda m.
CandidateSet weighted_uncovered_set(const WeightedTournamentGraph& g, const Threshold& lambda);
/// Alphabetical first of the golden-ratio weighted uncovered set.
RuleOutcome weighted_uncovered_winner(const WeightedTournamentGraph& g);

RuleOutcome matching_uncovered_winner(const VotingProfile& p);

/// Majority edges (weight > 1/2) locked in decreasing weight order, ties by
/// source then target name, skipping any edge that closes a cycle. The winner
/// is the alphabetically first source of the locked graph.
RuleOutcome ranked_pairs_winner(const WeightedTournamentGraph& g);

RuleOutcome schulze_winner(const WeightedTournamentGraph& g);

/// argmin over A of max over B of P(A, B); unbounded counts as +infinity.
RuleOutcome optimal_lp_winner(const VotingProfile& p, const LpOptions& options = {});

/// Dispatches to the rule; tournament rules use build_tournament(p).
RuleOutcome run_rule(RuleId id, const VotingProfile& p, const LpOptions& options = {});

}  // namespace mdx
