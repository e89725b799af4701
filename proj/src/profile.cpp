#include "mdx/profile.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <stdexcept>

#include "mdx/error.hpp"

namespace mdx {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct RawLine {
  std::size_t line_no;
  std::size_t multiplicity;
  std::vector<std::string> names;
};

RawLine parse_line(std::string_view line, std::size_t line_no) {
  RawLine raw{line_no, 1, {}};
  std::string_view body = line;
  if (auto colon = line.find(':'); colon != std::string_view::npos) {
    const std::string_view count = trim(line.substr(0, colon));
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), k);
    if (count.empty() || ec != std::errc{} || ptr != count.data() + count.size() || k == 0) {
      throw ParseError(line_no, "multiplicity must be a positive integer, got '" + std::string(count) + "'");
    }
    raw.multiplicity = k;
    body = line.substr(colon + 1);
  }
  std::size_t start = 0;
  while (true) {
    const std::size_t gt = body.find('>', start);
    const std::string_view name = trim(body.substr(start, gt == std::string_view::npos ? gt : gt - start));
    if (name.empty()) throw ParseError(line_no, "empty candidate name");
    if (std::any_of(name.begin(), name.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); })) {
      throw ParseError(line_no, "candidate names may not contain whitespace: '" + std::string(name) + "'");
    }
    raw.names.emplace_back(name);
    if (gt == std::string_view::npos) break;
    start = gt + 1;
  }
  return raw;
}

}  // namespace

std::vector<Candidate> CandidateSet::members() const {
  std::vector<Candidate> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<Candidate>(std::countr_zero(b)));
  return out;
}

VotingProfile::VotingProfile(std::vector<std::string> names, std::vector<std::vector<Candidate>> orderings)
    : names_(std::move(names)), orderings_(std::move(orderings)) {
  const std::size_t n = names_.size();
  if (n == 0) throw std::invalid_argument("profile needs at least one candidate");
  if (n > kMaxCandidates) throw std::invalid_argument("at most 64 candidates are supported");
  if (orderings_.empty()) throw std::invalid_argument("profile needs at least one voter");
  std::set<std::string_view> seen_names;
  for (const auto& nm : names_) {
    if (nm.empty()) throw std::invalid_argument("candidate names must be nonempty");
    if (!seen_names.insert(nm).second) throw std::invalid_argument("duplicate candidate name '" + nm + "'");
  }
  positions_.assign(n * orderings_.size(), 0);
  for (std::size_t v = 0; v < orderings_.size(); ++v) {
    const auto& order = orderings_[v];
    if (order.size() != n) throw std::invalid_argument("ordering " + std::to_string(v) + " is not complete");
    std::vector<bool> seen(n, false);
    for (std::size_t pos = 0; pos < n; ++pos) {
      const Candidate c = order[pos];
      if (c >= n || seen[c]) throw std::invalid_argument("ordering " + std::to_string(v) + " is not a permutation");
      seen[c] = true;
      positions_[v * n + c] = pos;
    }
  }
}

std::optional<Candidate> VotingProfile::find(std::string_view name) const {
  for (Candidate c = 0; c < names_.size(); ++c) {
    if (names_[c] == name) return c;
  }
  return std::nullopt;
}

VotingProfile parse_profile(std::string_view text) {
  std::vector<RawLine> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line = trim(text.substr(pos, nl == std::string_view::npos ? nl : nl - pos));
    ++line_no;
    if (!line.empty() && line.front() != '#') lines.push_back(parse_line(line, line_no));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (lines.empty()) throw ParseError(0, "empty profile");

  std::vector<std::string> names = lines.front().names;
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) != names.end()) {
    throw ParseError(lines.front().line_no, "duplicate candidate '" + *std::adjacent_find(names.begin(), names.end()) + "'");
  }
  if (names.size() > kMaxCandidates) throw ParseError(lines.front().line_no, "more than 64 candidates");
  std::map<std::string, Candidate, std::less<>> index;
  for (Candidate c = 0; c < names.size(); ++c) index.emplace(names[c], c);

  std::vector<std::vector<Candidate>> orderings;
  for (const RawLine& raw : lines) {
    std::vector<Candidate> order;
    std::vector<bool> seen(names.size(), false);
    for (const auto& nm : raw.names) {
      auto it = index.find(nm);
      if (it == index.end()) throw ParseError(raw.line_no, "unknown candidate '" + nm + "'");
      if (seen[it->second]) throw ParseError(raw.line_no, "duplicate candidate '" + nm + "'");
      seen[it->second] = true;
      order.push_back(it->second);
    }
    if (order.size() != names.size()) {
      throw ParseError(raw.line_no, "ordering lists " + std::to_string(order.size()) + " of " +
                                        std::to_string(names.size()) + " candidates");
    }
    for (std::size_t k = 0; k < raw.multiplicity; ++k) orderings.push_back(order);
  }
  return VotingProfile(std::move(names), std::move(orderings));
}

std::string serialize_profile(const VotingProfile& p) {
  std::string out;
  for (Voter v = 0; v < p.num_voters(); ++v) {
    const auto order = p.ordering(v);
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i > 0) out += " > ";
      out += p.name(order[i]);
    }
    out += '\n';
  }
  return out;
}

PairwiseMatrix pairwise_counts(const VotingProfile& p) {
  const std::size_t n = p.num_candidates();
  PairwiseMatrix counts(n, p.num_voters());
  for (Voter v = 0; v < p.num_voters(); ++v) {
    const auto order = p.ordering(v);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) ++counts(order[i], order[j]);
    }
  }
  return counts;
}

std::size_t triple_count(const VotingProfile& p, Candidate x, Candidate y, Candidate z) {
  if (x == y || y == z || x == z) throw std::invalid_argument("triple_count needs three distinct candidates");
  std::size_t count = 0;
  for (Voter v = 0; v < p.num_voters(); ++v) {
    if (p.prefers(v, x, y) && p.prefers(v, y, z)) ++count;
  }
  return count;
}

CandidateSet prefer_at_least(const VotingProfile& p, Voter v, Candidate x) {
  CandidateSet s;
  for (Candidate c : p.ordering(v)) {
    s.insert(c);
    if (c == x) break;
  }
  return s;
}

CandidateSet prefer_at_most(const VotingProfile& p, Voter v, Candidate x) {
  CandidateSet s;
  const auto order = p.ordering(v);
  for (std::size_t i = p.position(v, x); i < order.size(); ++i) s.insert(order[i]);
  return s;
}

VotingProfile restrict_profile(const VotingProfile& p, CandidateSet keep) {
  keep = keep & CandidateSet::all(p.num_candidates());
  if (keep.empty()) throw std::invalid_argument("restrict_profile needs a nonempty candidate set");
  std::vector<std::size_t> new_index(p.num_candidates(), 0);
  std::vector<std::string> names;
  for (Candidate c : keep.members()) {
    new_index[c] = names.size();
    names.push_back(p.name(c));
  }
  std::vector<std::vector<Candidate>> orderings;
  orderings.reserve(p.num_voters());
  for (Voter v = 0; v < p.num_voters(); ++v) {
    std::vector<Candidate> order;
    for (Candidate c : p.ordering(v)) {
      if (keep.contains(c)) order.push_back(new_index[c]);
    }
    orderings.push_back(std::move(order));
  }
  return VotingProfile(std::move(names), std::move(orderings));
}

}  // namespace mdx
