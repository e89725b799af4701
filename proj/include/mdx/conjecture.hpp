#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mdx/matching.hpp"
#include "mdx/profile.hpp"

namespace mdx {

struct EdgeResult {
  Candidate from = 0;
  Candidate to = 0;
  bool perfect = false;
  MatchingPath path = MatchingPath::kMatching;
};

/// Perfect-matching status of G(X1, X2), ..., G(Xn, X1) with the cycle taken
/// in candidate index order.
struct CycleCheck {
  std::vector<EdgeResult> edges;
  /// Some graph on the cycle has a perfect matching.
  bool holds() const;
};

CycleCheck check_cycle_condition(const VotingProfile& p, bool fast_paths = true);

/// All n! orderings of 0..n-1 in lexicographic order; an ordering's index in
/// this list is its rank.
std::vector<std::vector<Candidate>> ordering_table(std::size_t n);

/// Names "A", "B", ... for generated profiles (n <= 26).
std::vector<std::string> default_names(std::size_t n);

/// Profile whose voters hold the orderings with the given ranks.
VotingProfile profile_from_ranks(std::size_t n, std::span<const std::uint32_t> ranks);

/// Number of profiles up to voter order and candidate rotation, by Burnside's
/// lemma. Saturates at UINT64_MAX.
std::uint64_t count_canonical_profiles(std::size_t n, std::size_t m);

/// Calls `visit` with the sorted rank sequence of every canonical profile:
/// the lexicographically least sorted sequence in its rotation orbit.
/// Returning false from `visit` stops the enumeration.
void for_each_canonical_profile(std::size_t n, std::size_t m,
                                const std::function<bool(std::span<const std::uint32_t>)>& visit);

/// Materialized canonical profiles; for small (n, m) only.
std::vector<VotingProfile> enumerate_profiles(std::size_t n, std::size_t m);

inline constexpr std::uint64_t kDefaultProfileBudget = 100'000'000;

struct VerifyOptions {
  std::size_t workers = 1;
  std::uint64_t budget = kDefaultProfileBudget;
  bool fast_paths = true;
};

enum class VerdictStatus { kVerified, kCounterexample, kBudgetExceeded };

const char* to_string(VerdictStatus status);

struct Verdict {
  VerdictStatus status = VerdictStatus::kVerified;
  std::size_t n = 0;
  std::size_t m = 0;
  /// Canonical profiles examined up to and including a counterexample; the
  /// whole class count when verified; 0 when the budget check fails.
  std::uint64_t profiles_checked = 0;
  std::optional<VotingProfile> counterexample;
  std::chrono::milliseconds elapsed{0};
};

/// Checks the cycle condition on every canonical (n, m) profile. Shards by
/// the first voter's ordering. The reported counterexample and count do not
/// depend on the number of workers.
Verdict verify_conjecture(std::size_t n, std::size_t m, const VerifyOptions& options = {});

}  // namespace mdx
