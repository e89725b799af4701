#include "mdx/instances.hpp"

#include <stdexcept>

#include "mdx/conjecture.hpp"

namespace mdx {
namespace {

using Block = std::pair<std::size_t, std::vector<Candidate>>;

VotingProfile from_blocks(std::vector<std::string> names, const std::vector<Block>& blocks) {
  std::vector<std::vector<Candidate>> orderings;
  for (const auto& [count, order] : blocks) orderings.insert(orderings.end(), count, order);
  return VotingProfile(std::move(names), std::move(orderings));
}

// round(num / den * scale), halves rounded up.
std::size_t scaled_count(std::int64_t num, std::int64_t den, std::int64_t scale) {
  if (den <= 0 || num < 0 || scale <= 0) throw std::invalid_argument("fraction and scale must be positive");
  return static_cast<std::size_t>((2 * num * scale + den) / (2 * den));
}

// Voters at one of two positions on a line of candidates.
Metric two_type_line(const std::vector<std::string>& names, const std::vector<double>& candidate_at,
                     std::size_t first_count, double first_at, std::size_t second_count, double second_at) {
  std::vector<double> positions = candidate_at;
  positions.insert(positions.end(), first_count, first_at);
  positions.insert(positions.end(), second_count, second_at);
  std::vector<std::string> labels = names;
  for (auto& l : voter_labels(first_count + second_count)) labels.push_back(std::move(l));
  return Metric::on_line(std::move(labels), names.size(), positions);
}

}  // namespace

NamedInstance three_cycle() {
  return {"three-cycle", from_blocks({"A", "B", "C"}, {{1, {0, 1, 2}}, {1, {1, 2, 0}}, {1, {2, 0, 1}}}), std::nullopt,
          "three voters with cyclic preferences"};
}

NamedInstance rotational_profile(std::span<const Candidate> base) {
  const std::size_t n = base.size();
  std::vector<bool> seen(n, false);
  for (Candidate c : base) {
    if (c >= n || seen[c]) throw std::invalid_argument("base must be a permutation");
    seen[c] = true;
  }
  std::vector<std::vector<Candidate>> orderings;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Candidate> order;
    for (Candidate c : base) order.push_back((c + k) % n);
    orderings.push_back(std::move(order));
  }
  return {"rotational", VotingProfile(default_names(n), std::move(orderings)), std::nullopt,
          "all cyclic shifts of one ordering"};
}

NamedInstance rotational_profile(std::size_t n) {
  std::vector<Candidate> base(n);
  for (std::size_t i = 0; i < n; ++i) base[i] = i;
  return rotational_profile(base);
}

NamedInstance lower_left(std::int64_t p_num, std::int64_t p_den, std::int64_t scale_m) {
  if (p_num <= 0 || p_num > p_den) throw std::invalid_argument("p must lie in (0, 1]");
  const std::size_t near = scaled_count(p_num, p_den, scale_m);
  const auto m = static_cast<std::size_t>(scale_m);
  if (near == 0) throw std::invalid_argument("p * scale rounds to zero voters at A's side");
  const std::vector<std::string> names{"A", "B"};
  NamedInstance inst{"lower-left", from_blocks(names, {{near, {0, 1}}, {m - near, {1, 0}}}), std::nullopt,
                     "A at 0, B at 2; voters at 1 rank A first, voters at 2 rank B first"};
  inst.metric = two_type_line(names, {0, 2}, near, 1, m - near, 2);
  return inst;
}

NamedInstance lower_right(std::int64_t lam_num, std::int64_t lam_den, std::int64_t scale_m) {
  if (lam_num <= 0 || lam_num >= lam_den) throw std::invalid_argument("lambda must lie in (0, 1)");
  const std::size_t strong = scaled_count(lam_num, lam_den, scale_m);
  const auto m = static_cast<std::size_t>(scale_m);
  if (strong == 0) throw std::invalid_argument("lambda * scale rounds to zero voters at 3");
  const std::size_t weak = m - strong;
  const std::vector<std::string> names{"A", "B", "C"};
  NamedInstance inst{"lower-right", from_blocks(names, {{weak, {1, 0, 2}}, {strong, {2, 1, 0}}}), std::nullopt,
                     "A at 0, B at 2, C at 4; voters at 2 rank B > A > C, voters at 3 rank C > B > A"};
  inst.metric = two_type_line(names, {0, 2, 4}, weak, 2, strong, 3);
  return inst;
}

NamedInstance fairness_table(std::int64_t lam_num, std::int64_t lam_den, std::int64_t scale_m) {
  if (lam_num <= 0 || lam_num >= lam_den) throw std::invalid_argument("lambda must lie in (0, 1)");
  const std::size_t first = scaled_count(lam_num, lam_den, scale_m);
  const auto m = static_cast<std::size_t>(scale_m);
  if (first == 0 || first == m) throw std::invalid_argument("both voter types need at least one voter");
  const std::vector<std::string> names{"A", "B", "C"};

  // Distances from A, B, C and from the other voter type, per type.
  constexpr double kType1[] = {5, 1, 1};
  constexpr double kType2[] = {3, 1, 3};
  constexpr double kCandidates[3][3] = {{0, 4, 4}, {4, 0, 2}, {4, 2, 0}};
  constexpr double kBetweenTypes = 2;

  const std::size_t size = 3 + m;
  std::vector<double> dist(size * size, 0.0);
  auto set = [&](std::size_t i, std::size_t j, double x) { dist[i * size + j] = dist[j * size + i] = x; };
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) set(i, j, kCandidates[i][j]);
  }
  auto is_first = [&](std::size_t v) { return v < first; };
  for (std::size_t v = 0; v < m; ++v) {
    for (std::size_t c = 0; c < 3; ++c) set(c, 3 + v, is_first(v) ? kType1[c] : kType2[c]);
    for (std::size_t w = v + 1; w < m; ++w) set(3 + v, 3 + w, is_first(v) == is_first(w) ? 0.0 : kBetweenTypes);
  }
  std::vector<std::string> labels = names;
  for (auto& l : voter_labels(m)) labels.push_back(std::move(l));

  NamedInstance inst{"fairness-table", from_blocks(names, {{first, {2, 1, 0}}, {m - first, {1, 0, 2}}}), std::nullopt,
                     "type v1 ranks C > B > A, type v2 ranks B > A > C"};
  inst.metric = Metric(std::move(labels), 3, std::move(dist));
  if (!satisfies_triangle(*inst.metric, 0.0)) throw std::logic_error("fairness table violates the triangle inequality");
  return inst;
}

NamedInstance counterexample_relax1() {
  // A=0, B=1, C=2, D=3.
  return {"counterexample-relax1",
          from_blocks({"A", "B", "C", "D"}, {{2, {3, 2, 1, 0}}, {2, {1, 0, 3, 2}}, {1, {2, 0, 3, 1}}}), std::nullopt,
          "rank-sum test fails on G(D, A) although it has a perfect matching"};
}

NamedInstance counterexample_relax2() {
  return {"counterexample-relax2",
          from_blocks({"A", "B", "C", "D"}, {{35, {1, 0, 3, 2}},
                                             {10, {2, 1, 0, 3}},
                                             {15, {3, 2, 1, 0}},
                                             {10, {2, 3, 1, 0}},
                                             {15, {0, 3, 2, 1}},
                                             {10, {2, 0, 3, 1}},
                                             {5, {2, 3, 0, 1}}}),
          std::nullopt, "interval test is inconclusive on every cycle pair"};
}

std::vector<std::string> instance_names() {
  return {"three-cycle",    "rotational",           "lower-left",           "lower-right",
          "fairness-table", "counterexample-relax1", "counterexample-relax2"};
}

NamedInstance make_instance(const std::string& name, const InstanceParams& params) {
  if (name == "three-cycle") return three_cycle();
  if (name == "rotational") return rotational_profile(params.n);
  if (name == "lower-left") return lower_left(params.num, params.den, params.scale);
  if (name == "lower-right") return lower_right(params.num, params.den, params.scale);
  if (name == "fairness-table") return fairness_table(params.num, params.den, params.scale);
  if (name == "counterexample-relax1") return counterexample_relax1();
  if (name == "counterexample-relax2") return counterexample_relax2();
  throw std::invalid_argument("unknown instance '" + name + "'");
}

}  // namespace mdx
