#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mdx {

using Candidate = std::size_t;
using Voter = std::size_t;

/// Largest candidate count representable in a CandidateSet.
inline constexpr std::size_t kMaxCandidates = 64;

/// Subset of candidate indices stored as a 64-bit mask.
class CandidateSet {
 public:
  constexpr CandidateSet() = default;
  constexpr explicit CandidateSet(std::uint64_t bits) : bits_(bits) {}

  static CandidateSet all(std::size_t n) {
    return CandidateSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static CandidateSet of(std::initializer_list<Candidate> cs) {
    CandidateSet s;
    for (Candidate c : cs) s.insert(c);
    return s;
  }

  constexpr bool contains(Candidate c) const { return (bits_ >> c) & 1U; }
  constexpr void insert(Candidate c) { bits_ |= std::uint64_t{1} << c; }
  constexpr void erase(Candidate c) { bits_ &= ~(std::uint64_t{1} << c); }
  constexpr bool empty() const { return bits_ == 0; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr bool intersects(CandidateSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr CandidateSet operator&(CandidateSet o) const { return CandidateSet(bits_ & o.bits_); }
  constexpr CandidateSet operator|(CandidateSet o) const { return CandidateSet(bits_ | o.bits_); }
  constexpr bool operator==(const CandidateSet&) const = default;

  /// Members in increasing index order.
  std::vector<Candidate> members() const;

 private:
  std::uint64_t bits_ = 0;
};

/// m strict, complete orderings over n named candidates. Orderings list
/// candidate indices most-preferred first. Immutable once built.
class VotingProfile {
 public:
  /// Validates: n >= 1, m >= 1, unique nonempty names, every ordering a
  /// permutation of 0..n-1. Throws std::invalid_argument otherwise.
  VotingProfile(std::vector<std::string> names, std::vector<std::vector<Candidate>> orderings);

  std::size_t num_candidates() const { return names_.size(); }
  std::size_t num_voters() const { return orderings_.size(); }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Candidate c) const { return names_.at(c); }
  std::optional<Candidate> find(std::string_view name) const;

  std::span<const Candidate> ordering(Voter v) const { return orderings_.at(v); }
  const std::vector<std::vector<Candidate>>& orderings() const { return orderings_; }

  /// 0-based position of c in v's ordering (0 = top choice).
  std::size_t position(Voter v, Candidate c) const { return positions_[v * num_candidates() + c]; }
  bool prefers(Voter v, Candidate x, Candidate y) const { return position(v, x) < position(v, y); }

  bool operator==(const VotingProfile& o) const { return names_ == o.names_ && orderings_ == o.orderings_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<Candidate>> orderings_;
  std::vector<std::size_t> positions_;
};

/// counts[x][y] = number of voters preferring x to y.
class PairwiseMatrix {
 public:
  PairwiseMatrix(std::size_t n, std::size_t m) : n_(n), m_(m), counts_(n * n, 0) {}

  std::size_t num_candidates() const { return n_; }
  std::size_t num_voters() const { return m_; }
  std::int64_t operator()(Candidate x, Candidate y) const { return counts_[x * n_ + y]; }
  std::int64_t& operator()(Candidate x, Candidate y) { return counts_[x * n_ + y]; }

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<std::int64_t> counts_;
};

/// Parses the profile text format:
///
///     # comment
///     3: A > B > C
///     B > C > A
///
/// Candidate indices follow lexicographic order of names, so index order is
/// the alphabetical tie-breaking order. Throws ParseError with the line number.
VotingProfile parse_profile(std::string_view text);

/// One voter per line, no multiplicities.
std::string serialize_profile(const VotingProfile& p);

PairwiseMatrix pairwise_counts(const VotingProfile& p);

/// Number of voters with x > y > z. Throws std::invalid_argument unless the
/// three candidates are distinct.
std::size_t triple_count(const VotingProfile& p, Candidate x, Candidate y, Candidate z);

/// P_v(x): x together with every candidate v ranks above x.
CandidateSet prefer_at_least(const VotingProfile& p, Voter v, Candidate x);

/// Q_v(x): x together with every candidate v ranks below x.
CandidateSet prefer_at_most(const VotingProfile& p, Voter v, Candidate x);

/// Keeps only the candidates in `keep`, preserving relative order in every
/// ordering and the relative index order of the kept candidates.
VotingProfile restrict_profile(const VotingProfile& p, CandidateSet keep);

}  // namespace mdx
