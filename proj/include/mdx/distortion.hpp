#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mdx/metric.hpp"
#include "mdx/profile.hpp"

namespace mdx {

inline constexpr std::size_t kDefaultLpCap = 20;

struct LpOptions {
  std::size_t max_points = kDefaultLpCap;  ///< cap on n + m
  double tolerance = 1e-9;
  std::size_t max_iterations = 1'000'000;
  std::size_t workers = 1;
  double tie_tolerance = 1e-9;  ///< argmin slack in optimal_lp_winner
  bool want_witness = false;
};

enum class LpOutcomeStatus { kOptimal, kUnbounded };

struct LpOutcome {
  LpOutcomeStatus status = LpOutcomeStatus::kOptimal;
  double value = 0.0;
  std::optional<Metric> witness;  ///< optimal distances over candidates then voters

  bool bounded() const { return status == LpOutcomeStatus::kOptimal; }
};

/// Worst case of sum_v d(a, v) over pseudometrics consistent with p and
/// normalized by sum_v d(b, v) = 1. a == b gives 1 without solving.
/// Throws LimitExceeded when n + m > options.max_points.
LpOutcome pairwise_distortion_lp(const VotingProfile& p, Candidate a, Candidate b, const LpOptions& options = {});

/// values[a][b] = P(a, b); nullopt marks an unbounded LP. Diagonal is 1.
using DistortionMatrix = std::vector<std::vector<std::optional<double>>>;

/// All pairwise LPs, spread over options.workers threads.
DistortionMatrix distortion_matrix(const VotingProfile& p, const LpOptions& options = {});

/// max over b != a of P(a, b); +infinity if any is unbounded, 1 when n = 1.
double max_distortion(const VotingProfile& p, Candidate a, const LpOptions& options = {});

/// Row maximum of a distortion matrix, +infinity for unbounded entries.
double row_worst(const DistortionMatrix& values, Candidate a);

/// U(v, a, b, d) = d(a, v) - 3 d(b, v).
double voter_excess(const Metric& d, Voter v, Candidate a, Candidate b);

}  // namespace mdx
