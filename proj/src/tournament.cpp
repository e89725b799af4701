#include "mdx/tournament.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
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

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ',' || std::isspace(static_cast<unsigned char>(line[i])))) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ',' && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

// Backtracking over n-cycles through 0. `tau` holds images assigned so far
// (n = unassigned); every pair with both images known is checked.
bool extend_cycle(const WeightedTournamentGraph& g, Permutation& tau, std::vector<bool>& used, Candidate last,
                  std::size_t placed) {
  const std::size_t n = g.size();
  const std::size_t unset = n;
  if (placed == n) {
    tau[last] = 0;
    for (Candidate u = 0; u < n; ++u) {
      if (g.count(u, last) != g.count(tau[u], 0) || g.count(last, u) != g.count(0, tau[u])) {
        tau[last] = unset;
        return false;
      }
    }
    return true;
  }
  for (Candidate next = 1; next < n; ++next) {
    if (used[next]) continue;
    tau[last] = next;
    bool ok = true;
    for (Candidate u = 0; u < n && ok; ++u) {
      if (tau[u] == unset) continue;
      ok = g.count(u, last) == g.count(tau[u], next) && g.count(last, u) == g.count(next, tau[u]);
    }
    if (ok) {
      used[next] = true;
      if (extend_cycle(g, tau, used, next, placed + 1)) return true;
      used[next] = false;
    }
    tau[last] = unset;
  }
  return false;
}

}  // namespace

WeightedTournamentGraph::WeightedTournamentGraph(std::vector<std::string> names, std::vector<std::int64_t> counts,
                                                 std::int64_t m)
    : names_(std::move(names)), counts_(std::move(counts)), m_(m) {
  const std::size_t n = names_.size();
  if (n == 0) throw std::invalid_argument("tournament needs at least one candidate");
  if (m_ < 1) throw std::invalid_argument("tournament scale must be positive");
  if (counts_.size() != n * n) throw std::invalid_argument("tournament count matrix has the wrong size");
  std::set<std::string_view> seen;
  for (const auto& nm : names_) {
    if (nm.empty() || !seen.insert(nm).second) throw std::invalid_argument("candidate names must be unique and nonempty");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (count(x, x) != 0) throw std::invalid_argument("tournament diagonal must be zero");
    for (std::size_t y = x + 1; y < n; ++y) {
      if (count(x, y) < 0 || count(y, x) < 0 || count(x, y) + count(y, x) != m_) {
        throw std::invalid_argument("weights of " + names_[x] + "," + names_[y] + " do not sum to 1");
      }
    }
  }
}

WeightedTournamentGraph build_tournament(const VotingProfile& p) {
  const PairwiseMatrix pm = pairwise_counts(p);
  const std::size_t n = p.num_candidates();
  std::vector<std::int64_t> counts(n * n);
  for (Candidate x = 0; x < n; ++x) {
    for (Candidate y = 0; y < n; ++y) counts[x * n + y] = pm(x, y);
  }
  return WeightedTournamentGraph(p.names(), std::move(counts), static_cast<std::int64_t>(p.num_voters()));
}

WeightedTournamentGraph parse_graph(std::string_view text) {
  std::vector<std::string> names;
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> row_lines;
  std::size_t line_no = 0;
  std::size_t header_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line = trim(text.substr(pos, nl == std::string_view::npos ? nl : nl - pos));
    ++line_no;
    if (!line.empty() && line.front() != '#') {
      if (header_line == 0) {
        if (line.substr(0, 6) != "names:") throw ParseError(line_no, "expected 'names:' header");
        header_line = line_no;
        for (auto f : split_fields(line.substr(6))) names.emplace_back(f);
        if (names.empty()) throw ParseError(line_no, "no candidate names in header");
      } else {
        std::string_view body = line;
        if (const std::size_t colon = line.find(':'); colon != std::string_view::npos) {
          const std::string_view label = trim(line.substr(0, colon));
          if (rows.size() < names.size() && label != names[rows.size()]) {
            throw ParseError(line_no, "row label '" + std::string(label) + "' does not match '" + names[rows.size()] + "'");
          }
          body = line.substr(colon + 1);
        }
        std::vector<Rational> row;
        for (auto f : split_fields(body)) {
          try {
            row.push_back(parse_rational(f));
          } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
          }
        }
        if (row.size() != names.size()) {
          throw ParseError(line_no, "expected " + std::to_string(names.size()) + " entries, got " +
                                        std::to_string(row.size()));
        }
        rows.push_back(std::move(row));
        row_lines.push_back(line_no);
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (header_line == 0) throw ParseError(0, "empty graph file");
  const std::size_t n = names.size();
  if (rows.size() != n) throw ParseError(0, "expected " + std::to_string(n) + " weight rows, got " + std::to_string(rows.size()));

  std::int64_t scale = 1;
  for (const auto& row : rows) {
    for (const auto& w : row) scale = std::lcm(scale, w.denominator());
  }
  std::vector<std::int64_t> counts(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Rational& w = rows[x][y];
      if (x == y && w != 0) throw ParseError(row_lines[x], "diagonal entry must be 0");
      if (w < 0 || w > 1) throw ParseError(row_lines[x], "weight outside [0,1]");
      counts[x * n + y] = w.numerator() * (scale / w.denominator());
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (counts[x * n + y] + counts[y * n + x] != scale) {
        throw ParseError(row_lines[x], "weights of " + names[x] + "," + names[y] + " do not sum to 1");
      }
    }
  }
  try {
    return WeightedTournamentGraph(std::move(names), std::move(counts), scale);
  } catch (const std::invalid_argument& e) {
    throw ParseError(header_line, e.what());
  }
}

std::string serialize_graph(const WeightedTournamentGraph& g) {
  std::string out = "names: ";
  for (std::size_t i = 0; i < g.size(); ++i) out += (i ? "," : "") + g.name(i);
  out += '\n';
  for (Candidate x = 0; x < g.size(); ++x) {
    for (Candidate y = 0; y < g.size(); ++y) out += (y ? " " : "") + to_string(g.weight(x, y));
    out += '\n';
  }
  return out;
}

bool is_single_cycle(const Permutation& tau) {
  const std::size_t n = tau.size();
  std::vector<bool> seen(n, false);
  for (Candidate c : tau) {
    if (c >= n || seen[c]) throw std::invalid_argument("tau is not a permutation");
    seen[c] = true;
  }
  if (n == 0) return false;
  std::size_t length = 0;
  Candidate c = 0;
  do {
    c = tau[c];
    ++length;
  } while (c != 0);
  return length == n;
}

CyclicSymmetryWitness find_cyclic_symmetry(const WeightedTournamentGraph& g, std::size_t limit) {
  const std::size_t n = g.size();
  if (n > limit) {
    throw LimitExceeded("symmetry search too large: " + std::to_string(n) + " candidates exceed the limit of " +
                        std::to_string(limit) + "; supply a candidate permutation instead");
  }
  if (n == 1) return {Permutation{0}};
  Permutation tau(n, n);
  std::vector<bool> used(n, false);
  used[0] = true;
  if (extend_cycle(g, tau, used, 0, 1)) return {tau};
  return {};
}

bool check_cyclic_symmetry(const WeightedTournamentGraph& g, const Permutation& tau) {
  if (tau.size() != g.size()) throw std::invalid_argument("tau has the wrong length");
  if (!is_single_cycle(tau)) return false;
  for (Candidate u = 0; u < g.size(); ++u) {
    for (Candidate v = 0; v < g.size(); ++v) {
      if (g.count(u, v) != g.count(tau[u], tau[v])) return false;
    }
  }
  return true;
}

std::string cycle_notation(const WeightedTournamentGraph& g, const Permutation& tau) {
  std::string out = "(";
  std::vector<bool> seen(tau.size(), false);
  bool first_cycle = true;
  for (Candidate start = 0; start < tau.size(); ++start) {
    if (seen[start]) continue;
    if (!first_cycle) out += ")(";
    first_cycle = false;
    Candidate c = start;
    bool first = true;
    do {
      seen[c] = true;
      out += (first ? "" : " ") + g.name(c);
      first = false;
      c = tau[c];
    } while (c != start);
  }
  return out + ")";
}

}  // namespace mdx
