#include "mdx/distortion.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "mdx/error.hpp"
#include "mdx/simplex.hpp"

namespace mdx {
namespace {

// Index of the variable for the unordered pair {i, j}, i != j.
class PairIndex {
 public:
  explicit PairIndex(std::size_t points) : n_(points) {}
  std::size_t count() const { return n_ * (n_ - 1) / 2; }
  std::size_t operator()(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
  }

 private:
  std::size_t n_;
};

LinearProgram build_lp(const VotingProfile& p, Candidate a, Candidate b) {
  const std::size_t n = p.num_candidates();
  const std::size_t m = p.num_voters();
  const std::size_t points = n + m;
  const PairIndex idx(points);
  LinearProgram lp;
  lp.num_vars = idx.count();
  lp.objective.assign(lp.num_vars, 0.0);
  for (Voter v = 0; v < m; ++v) lp.objective[idx(a, n + v)] = 1.0;

  auto row = [&] { return LinearConstraint{std::vector<double>(lp.num_vars, 0.0), ConstraintSense::kLessEqual, 0.0}; };
  for (std::size_t i = 0; i < points; ++i) {
    for (std::size_t j = i + 1; j < points; ++j) {
      for (std::size_t k = 0; k < points; ++k) {
        if (k == i || k == j) continue;
        auto con = row();
        con.coeffs[idx(i, j)] = 1.0;
        con.coeffs[idx(i, k)] = -1.0;
        con.coeffs[idx(k, j)] = -1.0;
        lp.constraints.push_back(std::move(con));
      }
    }
  }
  for (Voter v = 0; v < m; ++v) {
    const auto order = p.ordering(v);
    for (std::size_t r = 0; r + 1 < n; ++r) {
      auto con = row();
      con.coeffs[idx(order[r], n + v)] = 1.0;
      con.coeffs[idx(order[r + 1], n + v)] = -1.0;
      lp.constraints.push_back(std::move(con));
    }
  }
  auto norm = row();
  norm.sense = ConstraintSense::kEqual;
  norm.rhs = 1.0;
  for (Voter v = 0; v < m; ++v) norm.coeffs[idx(b, n + v)] = 1.0;
  lp.constraints.push_back(std::move(norm));
  return lp;
}

Metric witness_metric(const VotingProfile& p, const std::vector<double>& x) {
  const std::size_t n = p.num_candidates();
  const std::size_t points = n + p.num_voters();
  const PairIndex idx(points);
  std::vector<double> dist(points * points, 0.0);
  for (std::size_t i = 0; i < points; ++i) {
    for (std::size_t j = i + 1; j < points; ++j) dist[i * points + j] = dist[j * points + i] = x[idx(i, j)];
  }
  std::vector<std::string> labels = p.names();
  for (auto& l : voter_labels(p.num_voters())) labels.push_back(std::move(l));
  return Metric(std::move(labels), n, std::move(dist));
}

}  // namespace

LpOutcome pairwise_distortion_lp(const VotingProfile& p, Candidate a, Candidate b, const LpOptions& options) {
  const std::size_t n = p.num_candidates();
  if (a >= n || b >= n) throw std::out_of_range("candidate index out of range");
  if (a == b) return {LpOutcomeStatus::kOptimal, 1.0, std::nullopt};
  const std::size_t points = n + p.num_voters();
  if (points > options.max_points) {
    throw LimitExceeded("LP needs " + std::to_string(points) + " points; cap is " + std::to_string(options.max_points));
  }
  const LinearProgram lp = build_lp(p, a, b);
  const LpSolution sol = solve_lp(lp, {options.tolerance, options.max_iterations});
  switch (sol.status) {
    case LpStatus::kUnbounded:
      return {LpOutcomeStatus::kUnbounded, std::numeric_limits<double>::infinity(), std::nullopt};
    case LpStatus::kInfeasible:
      // The line metric with every point at distance 1/m from B's voters is
      // always feasible, so this is numerical trouble.
      throw SolverFailure("distortion LP reported infeasible");
    case LpStatus::kOptimal:
      break;
  }
  LpOutcome out{LpOutcomeStatus::kOptimal, sol.value, std::nullopt};
  if (options.want_witness) out.witness = witness_metric(p, sol.x);
  return out;
}

DistortionMatrix distortion_matrix(const VotingProfile& p, const LpOptions& options) {
  const std::size_t n = p.num_candidates();
  DistortionMatrix values(n, std::vector<std::optional<double>>(n));
  std::vector<std::pair<Candidate, Candidate>> jobs;
  for (Candidate a = 0; a < n; ++a) {
    values[a][a] = 1.0;
    for (Candidate b = 0; b < n; ++b) {
      if (a != b) jobs.emplace_back(a, b);
    }
  }
  LpOptions job_options = options;
  job_options.want_witness = false;

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t j = next++; j < jobs.size() && !failed; j = next++) {
      const auto [a, b] = jobs[j];
      try {
        const LpOutcome out = pairwise_distortion_lp(p, a, b, job_options);
        if (out.bounded()) values[a][b] = out.value;
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(options.workers, 1, std::max<std::size_t>(jobs.size(), 1));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return values;
}

double row_worst(const DistortionMatrix& values, Candidate a) {
  double worst = 1.0;
  for (Candidate b = 0; b < values.size(); ++b) {
    if (b == a) continue;
    const auto& v = values[a][b];
    worst = std::max(worst, v ? *v : std::numeric_limits<double>::infinity());
  }
  return worst;
}

double max_distortion(const VotingProfile& p, Candidate a, const LpOptions& options) {
  const std::size_t n = p.num_candidates();
  if (a >= n) throw std::out_of_range("candidate index out of range");
  double worst = 1.0;
  for (Candidate b = 0; b < n; ++b) {
    if (b == a) continue;
    const LpOutcome out = pairwise_distortion_lp(p, a, b, options);
    if (!out.bounded()) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, out.value);
  }
  return worst;
}

double voter_excess(const Metric& d, Voter v, Candidate a, Candidate b) {
  return d.to_voter(a, v) - 3.0 * d.to_voter(b, v);
}

}  // namespace mdx
