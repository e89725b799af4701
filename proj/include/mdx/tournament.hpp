#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mdx/profile.hpp"
#include "mdx/rational.hpp"

namespace mdx {

/// Complete weighted tournament: weight(x, y) = count(x, y) / m exactly.
///
/// Graphs induced by a profile use the voter count as m. Graphs loaded from a
/// weight file use the least common denominator of the entries, so every
/// weight is still an integer count over m and threshold tests stay integral.
class WeightedTournamentGraph {
 public:
  /// Throws std::invalid_argument unless counts is n x n with a zero diagonal,
  /// counts[x][y] + counts[y][x] = m off the diagonal, and m >= 1.
  WeightedTournamentGraph(std::vector<std::string> names, std::vector<std::int64_t> counts, std::int64_t m);

  std::size_t size() const { return names_.size(); }
  std::int64_t scale() const { return m_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Candidate c) const { return names_.at(c); }

  std::int64_t count(Candidate x, Candidate y) const { return counts_[x * size() + y]; }
  Rational weight(Candidate x, Candidate y) const { return Rational(count(x, y), m_); }

  /// x beats y in the unweighted sense used by Copeland and Uncovered:
  /// weight(x, y) >= 1/2, so an exact tie counts for both.
  bool beats(Candidate x, Candidate y) const { return 2 * count(x, y) >= m_; }
  bool strictly_beats(Candidate x, Candidate y) const { return 2 * count(x, y) > m_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::int64_t> counts_;
  std::int64_t m_;
};

WeightedTournamentGraph build_tournament(const VotingProfile& p);

/// Weight-matrix format:
///
///     names: A,B,C
///     0 2/3 1/3
///     1/3 0 2/3
///     2/3 1/3 0
///
/// Entries are "p/q" or decimals, separated by whitespace or commas. A row
/// may start with its candidate label followed by a colon.
WeightedTournamentGraph parse_graph(std::string_view text);
std::string serialize_graph(const WeightedTournamentGraph& g);

/// tau[c] is the image of candidate c.
using Permutation = std::vector<Candidate>;

struct CyclicSymmetryWitness {
  std::optional<Permutation> tau;
};

inline constexpr std::size_t kSymmetrySearchLimit = 8;

/// True iff tau is a single cycle through all of 0..n-1. Throws
/// std::invalid_argument if tau is not a permutation of 0..n-1.
bool is_single_cycle(const Permutation& tau);

/// Searches all (n-1)! n-cycles, pruning as soon as a partially assigned
/// cycle breaks a weight equality. Throws LimitExceeded above `limit`.
CyclicSymmetryWitness find_cyclic_symmetry(const WeightedTournamentGraph& g,
                                           std::size_t limit = kSymmetrySearchLimit);

/// True iff tau is a single n-cycle and weight(u, v) = weight(tau u, tau v)
/// for every pair. Throws std::invalid_argument if tau is not a permutation.
bool check_cyclic_symmetry(const WeightedTournamentGraph& g, const Permutation& tau);

/// Cycle notation using candidate names, e.g. "(A B C D E)".
std::string cycle_notation(const WeightedTournamentGraph& g, const Permutation& tau);

}  // namespace mdx
