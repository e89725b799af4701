#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdx/metric.hpp"
#include "mdx/profile.hpp"

namespace mdx {

struct NamedInstance {
  std::string name;
  VotingProfile profile;
  std::optional<Metric> metric;  ///< consistent with profile when present
  std::string notes;
};

/// A > B > C, B > C > A, C > A > B.
NamedInstance three_cycle();

/// n voters; voter k ranks base with every candidate index shifted by k
/// (mod n). The tournament is invariant under i -> i + 1.
NamedInstance rotational_profile(std::span<const Candidate> base);
/// Rotations of the identity ordering over n candidates.
NamedInstance rotational_profile(std::size_t n);

/// Line metric A=0, B=2; round(p * scale_m) voters at 1 ranking A > B, the
/// rest at 2 ranking B > A. Requires 0 < p <= 1 and at least one voter at 1.
NamedInstance lower_left(std::int64_t p_num, std::int64_t p_den, std::int64_t scale_m);

/// Line metric A=0, B=2, C=4 with voters at 2 (B > A > C) and at 3
/// (C > B > A), the latter round(lam * scale_m) strong. Requires 0 < lam < 1
/// and at least one voter at 3.
NamedInstance lower_right(std::int64_t lam_num, std::int64_t lam_den, std::int64_t scale_m);

/// Five-point metric over A, B, C, v1, v2 where choosing A costs its worst
/// voter 5 against 1 for B. round(lam * scale_m) voters of type v1
/// (C > B > A), the rest of type v2 (B > A > C). Requires 0 < lam < 1 and
/// both types present.
NamedInstance fairness_table(std::int64_t lam_num, std::int64_t lam_den, std::int64_t scale_m);

/// 5 voters, 4 candidates: only G(D, A) on the cycle has a perfect matching.
NamedInstance counterexample_relax1();

/// 100 voters, 4 candidates: every cycle pair has a nonempty interval
/// remainder, yet G(C, D) and G(D, A) have perfect matchings.
NamedInstance counterexample_relax2();

/// Instance names accepted by make_instance.
std::vector<std::string> instance_names();

struct InstanceParams {
  std::int64_t num = 1;
  std::int64_t den = 2;
  std::int64_t scale = 2;
  std::size_t n = 3;
};

/// Builds an instance by CLI name; throws std::invalid_argument for unknown
/// names.
NamedInstance make_instance(const std::string& name, const InstanceParams& params);

}  // namespace mdx
