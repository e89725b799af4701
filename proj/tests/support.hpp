#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mdx/conjecture.hpp"
#include "mdx/metric.hpp"
#include "mdx/profile.hpp"

namespace mdx::testing {

inline VotingProfile random_profile(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::vector<std::vector<Candidate>> orderings(m, std::vector<Candidate>(n));
  for (auto& o : orderings) {
    std::iota(o.begin(), o.end(), Candidate{0});
    std::shuffle(o.begin(), o.end(), rng);
  }
  return VotingProfile(default_names(n), std::move(orderings));
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Voters and candidates as points in R^dim; the profile is read off the
/// distances, so the metric is consistent by construction (ties broken by
/// index).
struct Embedded {
  VotingProfile profile;
  Metric metric;
};

inline Embedded random_euclidean(std::mt19937_64& rng, std::size_t n, std::size_t m, std::size_t dim = 3) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::vector<double>> pts(n + m, std::vector<double>(dim));
  for (auto& p : pts) {
    for (double& x : p) x = gauss(rng);
  }
  const std::size_t size = n + m;
  std::vector<double> dist(size * size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      double s = 0;
      for (std::size_t k = 0; k < dim; ++k) s += (pts[i][k] - pts[j][k]) * (pts[i][k] - pts[j][k]);
      dist[i * size + j] = std::sqrt(s);
    }
  }
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < i; ++j) dist[i * size + j] = dist[j * size + i];
  }
  std::vector<std::vector<Candidate>> orderings;
  for (std::size_t v = 0; v < m; ++v) {
    std::vector<Candidate> o(n);
    std::iota(o.begin(), o.end(), Candidate{0});
    std::stable_sort(o.begin(), o.end(),
                     [&](Candidate a, Candidate b) { return dist[a * size + n + v] < dist[b * size + n + v]; });
    orderings.push_back(std::move(o));
  }
  auto names = default_names(n);
  std::vector<std::string> labels = names;
  for (auto& l : voter_labels(m)) labels.push_back(l);
  return {VotingProfile(names, std::move(orderings)), Metric(std::move(labels), n, std::move(dist))};
}

/// Metrics consistent with a fixed profile: candidates and voters in R^dim,
/// each voter rejection-sampled until its distance order matches its ballot.
/// Empty if sampling gave up.
inline std::optional<Metric> sample_consistent_metric(std::mt19937_64& rng, const VotingProfile& p,
                                                      std::size_t dim = 3, std::size_t attempts = 20000) {
  const std::size_t n = p.num_candidates();
  const std::size_t m = p.num_voters();
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> spread(0.2, 3.0);
  std::vector<std::vector<double>> pts(n + m, std::vector<double>(dim));
  const double scale = spread(rng);
  for (std::size_t c = 0; c < n; ++c) {
    for (double& x : pts[c]) x = scale * gauss(rng);
  }
  auto d2 = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t k = 0; k < dim; ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
    return s;
  };
  for (Voter v = 0; v < m; ++v) {
    const auto order = p.ordering(v);
    bool placed = false;
    for (std::size_t t = 0; t < attempts && !placed; ++t) {
      // Start near the voter's top choice so short ballots succeed quickly.
      const double jitter = spread(rng);
      for (std::size_t k = 0; k < dim; ++k) pts[n + v][k] = pts[order[0]][k] + jitter * gauss(rng);
      placed = true;
      for (std::size_t r = 0; r + 1 < n && placed; ++r) {
        placed = d2(pts[order[r]], pts[n + v]) <= d2(pts[order[r + 1]], pts[n + v]);
      }
    }
    if (!placed) return std::nullopt;
  }
  const std::size_t size = n + m;
  std::vector<double> dist(size * size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) dist[i * size + j] = std::sqrt(d2(pts[i], pts[j]));
  }
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < i; ++j) dist[i * size + j] = dist[j * size + i];
  }
  std::vector<std::string> labels = p.names();
  for (auto& l : voter_labels(m)) labels.push_back(l);
  return Metric(std::move(labels), n, std::move(dist));
}

/// Profile with a strict Condorcet winner: random ballots, then `winner` is
/// promoted to the top for enough voters.
inline VotingProfile random_condorcet_profile(std::mt19937_64& rng, std::size_t n, std::size_t m, Candidate winner) {
  auto p = random_profile(rng, n, m);
  auto orderings = p.orderings();
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::shuffle(idx.begin(), idx.end(), rng);
  for (std::size_t i = 0; i < m / 2 + 1; ++i) {
    auto& o = orderings[idx[i]];
    o.erase(std::find(o.begin(), o.end(), winner));
    o.insert(o.begin(), winner);
  }
  return VotingProfile(p.names(), std::move(orderings));
}

}  // namespace mdx::testing
