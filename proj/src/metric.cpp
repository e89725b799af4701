#include "mdx/metric.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "mdx/error.hpp"
#include "mdx/rational.hpp"

namespace mdx {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_number(double x) {
  if (x == std::floor(x) && std::fabs(x) < 1e15) return std::to_string(static_cast<long long>(x));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<double> k_largest_sums(const Metric& d, std::size_t k) {
  std::vector<double> sums(d.num_candidates(), 0.0);
  std::vector<double> costs(d.num_voters());
  for (Candidate c = 0; c < d.num_candidates(); ++c) {
    for (Voter v = 0; v < d.num_voters(); ++v) costs[v] = d.to_voter(c, v);
    std::partial_sort(costs.begin(), costs.begin() + static_cast<std::ptrdiff_t>(k), costs.end(), std::greater<>());
    sums[c] = std::accumulate(costs.begin(), costs.begin() + static_cast<std::ptrdiff_t>(k), 0.0);
  }
  return sums;
}

double ratio_to_best(const std::vector<double>& values, Candidate x) {
  const double best = *std::min_element(values.begin(), values.end());
  if (best == 0.0) return values[x] == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  return values[x] / best;
}

// Entries over a common denominator, or nullopt if that would leave too
// little headroom to add two entries in int64.
std::optional<std::vector<std::int64_t>> common_scale(const std::vector<Rational>& exact) {
  constexpr std::int64_t kLimit = std::int64_t{1} << 61;
  std::int64_t den = 1;
  for (const auto& r : exact) {
    const std::int64_t g = std::gcd(den, r.denominator());
    if (den / g > kLimit / r.denominator()) return std::nullopt;
    den = den / g * r.denominator();
  }
  std::vector<std::int64_t> out;
  out.reserve(exact.size());
  for (const auto& r : exact) {
    const std::int64_t factor = den / r.denominator();
    if (r.numerator() > kLimit / factor) return std::nullopt;
    out.push_back(r.numerator() * factor);
  }
  return out;
}

template <class T>
std::optional<std::array<std::size_t, 3>> first_violation(const std::vector<T>& d, std::size_t size) {
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t k = 0; k < size; ++k) {
      const T& ik = d[i * size + k];
      const T* row = &d[k * size];
      const T* out = &d[i * size];
      bool any = false;
      for (std::size_t j = 0; j < size; ++j) any |= out[j] > ik + row[j];
      if (!any) continue;
      for (std::size_t j = 0; j < size; ++j) {
        if (out[j] > ik + row[j]) return std::array<std::size_t, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<std::size_t, 3>> exact_triangle_violation(const std::vector<Rational>& exact,
                                                                   std::size_t size) {
  if (const auto scaled = common_scale(exact)) return first_violation(*scaled, size);
  return first_violation(exact, size);
}

void require_consistent(const Metric& d, const VotingProfile& p) {
  if (!check_consistent(d, p)) throw InconsistentMetric("metric is not consistent with the profile");
}

}  // namespace

Metric::Metric(std::vector<std::string> labels, std::size_t num_candidates, std::vector<double> dist)
    : labels_(std::move(labels)), n_(num_candidates), dist_(std::move(dist)) {
  const std::size_t size = labels_.size();
  if (n_ > size) throw std::invalid_argument("more candidates than metric points");
  if (dist_.size() != size * size) throw std::invalid_argument("distance matrix has the wrong size");
  for (std::size_t i = 0; i < size; ++i) {
    if ((*this)(i, i) != 0.0) throw std::invalid_argument("metric diagonal must be zero");
    for (std::size_t j = i + 1; j < size; ++j) {
      const double x = (*this)(i, j);
      if (!std::isfinite(x) || x < 0.0) throw std::invalid_argument("distances must be finite and nonnegative");
      if (x != (*this)(j, i)) throw std::invalid_argument("metric must be symmetric");
    }
  }
}

Metric Metric::on_line(std::vector<std::string> labels, std::size_t num_candidates, const std::vector<double>& positions) {
  const std::size_t size = positions.size();
  if (labels.size() != size) throw std::invalid_argument("one label per point is required");
  if (num_candidates > size) throw std::invalid_argument("more candidates than metric points");
  for (double x : positions) {
    if (!std::isfinite(x)) throw std::invalid_argument("positions must be finite");
  }
  Metric out;
  out.labels_ = std::move(labels);
  out.n_ = num_candidates;
  out.line_ = positions;
  return out;
}

std::vector<std::string> voter_labels(std::size_t m) {
  std::vector<std::string> out;
  out.reserve(m);
  for (std::size_t v = 1; v <= m; ++v) out.push_back("v" + std::to_string(v));
  return out;
}

std::optional<std::array<std::size_t, 3>> find_triangle_violation(const Metric& d, double tolerance) {
  const std::size_t size = d.size();
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      for (std::size_t k = 0; k < size; ++k) {
        if (k != i && k != j && d(i, j) > d(i, k) + d(k, j) + tolerance) return std::array{i, j, k};
      }
    }
  }
  return std::nullopt;
}

Metric parse_metric_csv(std::string_view text) {
  std::vector<std::vector<std::string_view>> lines;
  std::vector<std::size_t> line_nos;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line = trim(text.substr(pos, nl == std::string_view::npos ? nl : nl - pos));
    ++line_no;
    if (!line.empty() && line.front() != '#') {
      lines.push_back(split_csv(line));
      line_nos.push_back(line_no);
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (lines.empty()) throw ParseError(0, "empty metric file");

  const auto& header = lines.front();
  std::vector<std::string> labels;
  for (std::size_t i = 1; i < header.size(); ++i) {
    if (header[i].empty()) throw ParseError(line_nos.front(), "empty point label");
    labels.emplace_back(header[i]);
  }
  const std::size_t size = labels.size();
  if (size == 0) throw ParseError(line_nos.front(), "metric header has no labels");
  // Voters are the maximal trailing run v1..vm; the last label fixes m.
  std::size_t num_candidates = size;
  std::size_t m = 0;
  const std::string& last = labels.back();
  if (last.size() > 1 && last[0] == 'v' &&
      std::from_chars(last.data() + 1, last.data() + last.size(), m).ptr == last.data() + last.size() && m >= 1 &&
      m <= size) {
    bool run = true;
    for (std::size_t i = size - m; i < size && run; ++i) run = labels[i] == "v" + std::to_string(i - (size - m) + 1);
    if (run) num_candidates = size - m;
  }
  if (lines.size() != size + 1) {
    throw ParseError(0, "expected " + std::to_string(size) + " metric rows, got " + std::to_string(lines.size() - 1));
  }
  std::vector<Rational> exact(size * size);
  for (std::size_t i = 0; i < size; ++i) {
    const auto& row = lines[i + 1];
    if (row.size() != size + 1) throw ParseError(line_nos[i + 1], "expected " + std::to_string(size + 1) + " fields");
    if (row[0] != labels[i]) {
      throw ParseError(line_nos[i + 1], "row label '" + std::string(row[0]) + "' does not match column '" + labels[i] + "'");
    }
    for (std::size_t j = 0; j < size; ++j) {
      try {
        exact[i * size + j] = parse_rational(row[j + 1]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_nos[i + 1], e.what());
      }
      if (exact[i * size + j] < 0) throw ParseError(line_nos[i + 1], "negative distance");
    }
  }
  for (std::size_t i = 0; i < size; ++i) {
    if (exact[i * size + i] != 0) throw ParseError(line_nos[i + 1], "diagonal entry must be 0");
    for (std::size_t j = i + 1; j < size; ++j) {
      if (exact[i * size + j] != exact[j * size + i]) throw ParseError(line_nos[i + 1], "metric must be symmetric");
    }
  }
  if (const auto bad = exact_triangle_violation(exact, size)) {
    const auto [i, j, k] = *bad;
    throw ParseError(line_nos[i + 1], "triangle inequality fails for " + labels[i] + "," + labels[j] + " via " + labels[k]);
  }
  std::vector<double> dist(size * size);
  std::transform(exact.begin(), exact.end(), dist.begin(), [](const Rational& r) { return to_double(r); });
  return Metric(std::move(labels), num_candidates, std::move(dist));
}

std::string serialize_metric_csv(const Metric& d) {
  std::string out = "point";
  for (const auto& l : d.labels()) out += "," + l;
  out += '\n';
  for (std::size_t i = 0; i < d.size(); ++i) {
    out += d.labels()[i];
    for (std::size_t j = 0; j < d.size(); ++j) out += "," + format_number(d(i, j));
    out += '\n';
  }
  return out;
}

bool check_consistent(const Metric& d, const VotingProfile& p, double tolerance) {
  const std::size_t n = p.num_candidates();
  if (d.num_candidates() != n || d.num_voters() != p.num_voters()) {
    throw std::invalid_argument("metric labels do not match the profile");
  }
  for (Candidate c = 0; c < n; ++c) {
    if (d.labels()[c] != p.name(c)) throw std::invalid_argument("metric labels do not match the profile");
  }
  for (Voter v = 0; v < p.num_voters(); ++v) {
    const auto order = p.ordering(v);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (d.to_voter(order[i], v) > d.to_voter(order[i + 1], v) + tolerance) return false;
    }
  }
  return true;
}

double social_cost(const Metric& d, Candidate x) {
  double total = 0.0;
  for (Voter v = 0; v < d.num_voters(); ++v) total += d.to_voter(x, v);
  return total;
}

double instance_distortion(const Metric& d, const VotingProfile& p, Candidate x) {
  require_consistent(d, p);
  std::vector<double> costs(p.num_candidates());
  for (Candidate c = 0; c < costs.size(); ++c) costs[c] = social_cost(d, c);
  return ratio_to_best(costs, x);
}

double fairness_ratio_fixed(const Metric& d, const VotingProfile& p, Candidate x, std::size_t k) {
  if (k < 1 || k > p.num_voters()) throw std::invalid_argument("k must lie in 1..m");
  require_consistent(d, p);
  return ratio_to_best(k_largest_sums(d, k), x);
}

}  // namespace mdx
