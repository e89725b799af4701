#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mdx/profile.hpp"

namespace mdx {

/// Distances over candidates (points 0..n-1) followed by voters (points
/// n..n+m-1). Distinct points may be at distance zero.
class Metric {
 public:
  /// Validates a square, symmetric, nonnegative, finite matrix with a zero
  /// diagonal (std::invalid_argument otherwise). The triangle inequality is
  /// checked separately by satisfies_triangle().
  Metric(std::vector<std::string> labels, std::size_t num_candidates, std::vector<double> dist);

  /// Points on a line; always a metric.
  static Metric on_line(std::vector<std::string> labels, std::size_t num_candidates, const std::vector<double>& positions);

  std::size_t size() const { return labels_.size(); }
  std::size_t num_candidates() const { return n_; }
  std::size_t num_voters() const { return labels_.size() - n_; }
  const std::vector<std::string>& labels() const { return labels_; }

  double operator()(std::size_t i, std::size_t j) const {
    return line_.empty() ? dist_[i * size() + j] : std::fabs(line_[i] - line_[j]);
  }
  double to_voter(Candidate c, Voter v) const { return (*this)(c, n_ + v); }

 private:
  Metric() = default;

  std::vector<std::string> labels_;
  std::size_t n_ = 0;
  std::vector<double> dist_;
  // Positions for metrics built by on_line(); dist_ is then empty.
  std::vector<double> line_;
};

/// "v1".."vm".
std::vector<std::string> voter_labels(std::size_t m);

/// First (i, j, k) with d(i, j) > d(i, k) + d(k, j) + tolerance.
std::optional<std::array<std::size_t, 3>> find_triangle_violation(const Metric& d, double tolerance = 1e-9);
inline bool satisfies_triangle(const Metric& d, double tolerance = 1e-9) {
  return !find_triangle_violation(d, tolerance).has_value();
}

/// CSV with a header row and a header column of point labels: candidate
/// names, then v1..vm. Entries are "p/q" or decimals; the metric axioms are
/// checked exactly on the parsed rationals. Throws ParseError.
Metric parse_metric_csv(std::string_view text);
std::string serialize_metric_csv(const Metric& d);

/// Every voter's adjacent ordering pairs X > Y satisfy d(X, v) <= d(Y, v)
/// (+ tolerance). Throws std::invalid_argument when the metric's labels do
/// not match the profile's candidates and voter count.
bool check_consistent(const Metric& d, const VotingProfile& p, double tolerance = 0.0);

/// Sum over voters of d(v, x).
double social_cost(const Metric& d, Candidate x);

/// S(x) / min_A S(A); +infinity when the optimum is 0 and S(x) > 0.
/// Throws InconsistentMetric when d is not consistent with p.
double instance_distortion(const Metric& d, const VotingProfile& p, Candidate x);

/// (sum of the k largest voter distances to x) / min over A of the same sum.
/// Throws std::invalid_argument unless 1 <= k <= m; InconsistentMetric as above.
double fairness_ratio_fixed(const Metric& d, const VotingProfile& p, Candidate x, std::size_t k);

}  // namespace mdx
