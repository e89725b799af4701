#include "mdx/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "mdx/conjecture.hpp"
#include "mdx/distortion.hpp"
#include "mdx/error.hpp"
#include "mdx/instances.hpp"
#include "mdx/matching.hpp"
#include "mdx/metric.hpp"
#include "mdx/profile.hpp"
#include "mdx/rules.hpp"
#include "mdx/tournament.hpp"

#ifndef MDX_VERSION
#define MDX_VERSION "0.0.0"
#endif

namespace mdx::cli {
namespace {

using Json = nlohmann::ordered_json;

// Unreadable files, unknown candidate names and similar user-input problems.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  bool plain = false;
  std::string digest_data;
};

std::string read_input(Context& ctx, const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << ctx.in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  ctx.digest_data += text;
  ctx.digest_data += '\0';
  return text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

Json rational_json(const Rational& r) {
  return Json{{"num", r.numerator()}, {"den", r.denominator()}, {"value", to_double(r)}};
}

// JSON has no infinity; unbounded values are reported as the string "inf".
Json number_json(double x) { return std::isfinite(x) ? Json(x) : Json("inf"); }

Json set_json(const std::vector<std::string>& names, CandidateSet set) {
  Json out = Json::array();
  for (Candidate c : set.members()) out.push_back(names[c]);
  return out;
}

std::string set_text(const std::vector<std::string>& names, CandidateSet set) {
  std::string out = "{";
  for (Candidate c : set.members()) out += (out.size() > 1 ? ", " : "") + names[c];
  return out + "}";
}

Json metric_json(const Metric& d) {
  Json dist = Json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < d.size(); ++j) row.push_back(d(i, j));
    dist.push_back(std::move(row));
  }
  return Json{{"labels", d.labels()}, {"dist", std::move(dist)}};
}

Candidate candidate_named(const std::vector<std::string>& names, const std::string& name) {
  for (Candidate c = 0; c < names.size(); ++c) {
    if (names[c] == name) return c;
  }
  throw InputError("unknown candidate '" + name + "'");
}

LpOptions lp_options(std::size_t workers) {
  LpOptions options;
  options.workers = std::max<std::size_t>(workers, 1);
  if (const char* cap = std::getenv("MDX_LP_CAP"); cap != nullptr && *cap != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(cap, &end, 10);
    if (*end != '\0' || value == 0) throw InputError("MDX_LP_CAP must be a positive integer");
    options.max_points = static_cast<std::size_t>(value);
  }
  return options;
}

bool looks_like_graph(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    if (!line.empty() && line.front() != '#') return line.rfind("names:", 0) == 0;
    pos = nl + 1;
  }
  return false;
}

WeightedTournamentGraph graph_from_input(std::string_view text) {
  return looks_like_graph(text) ? parse_graph(text) : build_tournament(parse_profile(text));
}

Json support_json(const RuleOutcome& outcome, const std::vector<std::string>& names) {
  return std::visit(
      [&](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CopelandSupport>) {
          Json scores = Json::object();
          for (Candidate c = 0; c < names.size(); ++c) scores[names[c]] = s.scores[c];
          return Json{{"scores", scores}};
        } else if constexpr (std::is_same_v<T, SetSupport>) {
          return Json{{"set", set_json(names, s.set)}, {"fallback", s.fallback}};
        } else if constexpr (std::is_same_v<T, RankedPairsSupport>) {
          auto edges = [&](const auto& list) {
            Json out = Json::array();
            for (const auto& [x, y] : list) out.push_back(Json::array({names[x], names[y]}));
            return out;
          };
          return Json{{"locked", edges(s.locked)}, {"skipped", edges(s.skipped)}};
        } else if constexpr (std::is_same_v<T, SchulzeSupport>) {
          Json strength = Json::object();
          for (Candidate x = 0; x < names.size(); ++x) {
            Json row = Json::object();
            for (Candidate y = 0; y < names.size(); ++y) {
              if (x != y) row[names[y]] = rational_json(s.strength[x][y]);
            }
            strength[names[x]] = std::move(row);
          }
          return Json{{"strength", strength}};
        } else {
          Json values = Json::object();
          Json worst = Json::object();
          for (Candidate a = 0; a < names.size(); ++a) {
            Json row = Json::object();
            for (Candidate b = 0; b < names.size(); ++b) {
              if (a != b) row[names[b]] = s.values[a][b] ? Json(*s.values[a][b]) : Json("inf");
            }
            values[names[a]] = std::move(row);
            worst[names[a]] = s.worst[a] ? Json(*s.worst[a]) : Json("inf");
          }
          return Json{{"values", values}, {"worst", worst}};
        }
      },
      outcome.support);
}

class Reporter {
 public:
  explicit Reporter(Context& ctx) : ctx_(ctx) {}

  void emit(const std::string& command, Json inputs, Json result, const std::string& plain) {
    if (ctx_.plain) {
      ctx_.out << plain;
      if (!plain.empty() && plain.back() != '\n') ctx_.out << '\n';
      return;
    }
    const std::uint64_t digest = fnv1a(inputs.dump(), fnv1a(ctx_.digest_data));
    inputs["digest"] = "fnv1a64:" + hex64(digest);
    Json report{{"command", command}, {"inputs", std::move(inputs)}, {"result", std::move(result)}, {"version", MDX_VERSION}};
    ctx_.out << report.dump(2) << '\n';
  }

 private:
  Context& ctx_;
};

// ---- subcommands ----------------------------------------------------------

struct WinnerArgs {
  std::string profile;
  std::string rule;
  std::size_t workers = 1;
};

int cmd_winner(Context& ctx, const WinnerArgs& a) {
  const auto id = parse_rule_id(a.rule);
  if (!id) throw InputError("unknown rule '" + a.rule + "'");
  const VotingProfile p = parse_profile(read_input(ctx, a.profile));
  const RuleOutcome outcome = run_rule(*id, p, lp_options(a.workers));
  Json result{{"rule", a.rule}, {"winner", p.name(outcome.winner)}, {"support", support_json(outcome, p.names())}};
  Reporter(ctx).emit("winner", Json{{"profile", a.profile}, {"rule", a.rule}}, std::move(result),
                     "winner: " + p.name(outcome.winner) + " (" + a.rule + ")");
  return kOk;
}

struct DistortionArgs {
  std::string profile;
  std::string candidate;
  std::string metric;
  std::size_t k = 0;
  bool witness = false;
  std::size_t workers = 1;
};

int cmd_distortion(Context& ctx, const DistortionArgs& a) {
  const VotingProfile p = parse_profile(read_input(ctx, a.profile));
  const Candidate x = candidate_named(p.names(), a.candidate);
  Json inputs{{"profile", a.profile}, {"candidate", a.candidate}};
  if (!a.metric.empty()) {
    const Metric d = parse_metric_csv(read_input(ctx, a.metric));
    inputs["metric"] = a.metric;
    bool consistent = false;
    try {
      consistent = check_consistent(d, p);
    } catch (const std::invalid_argument& e) {
      throw InconsistentMetric(e.what());
    }
    if (!consistent) throw InconsistentMetric("metric is not consistent with the profile");
    Json costs = Json::object();
    for (Candidate c = 0; c < p.num_candidates(); ++c) costs[p.name(c)] = social_cost(d, c);
    double value = 0.0;
    Json result{{"mode", "metric"}, {"candidate", a.candidate}};
    if (a.k > 0) {
      inputs["k"] = a.k;
      value = fairness_ratio_fixed(d, p, x, a.k);
      result["k"] = a.k;
      result["fairness_ratio"] = number_json(value);
    } else {
      value = instance_distortion(d, p, x);
      result["distortion"] = number_json(value);
    }
    result["social_costs"] = std::move(costs);
    Reporter(ctx).emit("distortion", std::move(inputs), std::move(result),
                       std::string(a.k > 0 ? "fairness ratio of " : "distortion of ") + a.candidate + ": " +
                           format_double(value));
    return kOk;
  }
  if (a.k > 0) throw InputError("--k needs --metric");

  LpOptions options = lp_options(a.workers);
  options.want_witness = a.witness;
  Json per = Json::object();
  double worst = 1.0;
  std::string plain;
  for (Candidate b = 0; b < p.num_candidates(); ++b) {
    if (b == x) continue;
    const LpOutcome out = pairwise_distortion_lp(p, x, b, options);
    Json entry{{"status", out.bounded() ? "optimal" : "unbounded"}, {"value", number_json(out.value)}};
    if (out.witness) entry["witness"] = metric_json(*out.witness);
    per[p.name(b)] = std::move(entry);
    worst = std::max(worst, out.value);
    plain += "P(" + a.candidate + ", " + p.name(b) + ") = " + format_double(out.value) + "\n";
  }
  Json result{{"mode", "lp"},
              {"candidate", a.candidate},
              {"status", std::isfinite(worst) ? "optimal" : "unbounded"},
              {"max_distortion", number_json(worst)},
              {"per_opponent", std::move(per)}};
  plain += "max distortion of " + a.candidate + ": " + format_double(worst);
  Reporter(ctx).emit("distortion", std::move(inputs), std::move(result), plain);
  return kOk;
}

struct PairwiseArgs {
  std::string profile;
  std::string a;
  std::string b;
  bool witness = false;
};

int cmd_pairwise_lp(Context& ctx, const PairwiseArgs& args) {
  const VotingProfile p = parse_profile(read_input(ctx, args.profile));
  const Candidate a = candidate_named(p.names(), args.a);
  const Candidate b = candidate_named(p.names(), args.b);
  if (a == b) throw InputError("pairwise-lp needs two distinct candidates");
  LpOptions options = lp_options(1);
  options.want_witness = args.witness;
  const LpOutcome out = pairwise_distortion_lp(p, a, b, options);
  Json result{{"a", args.a}, {"b", args.b}, {"status", out.bounded() ? "optimal" : "unbounded"},
              {"value", number_json(out.value)}};
  if (out.witness) result["witness"] = metric_json(*out.witness);
  Reporter(ctx).emit("pairwise-lp", Json{{"profile", args.profile}, {"a", args.a}, {"b", args.b}}, std::move(result),
                     "P(" + args.a + ", " + args.b + ") = " + format_double(out.value));
  return kOk;
}

struct TournamentArgs {
  std::string input;
  bool check_symmetry = false;
  std::string tau;
};

// "(A B C)" or "A B C": the cycle A -> B -> C -> A.
Permutation parse_cycle(const WeightedTournamentGraph& g, std::string text) {
  for (char& ch : text) {
    if (ch == '(' || ch == ')' || ch == ',') ch = ' ';
  }
  std::istringstream in(text);
  std::vector<Candidate> cycle;
  for (std::string name; in >> name;) cycle.push_back(candidate_named(g.names(), name));
  if (cycle.size() != g.size()) throw InputError("--tau must list every candidate once");
  Permutation tau(g.size(), g.size());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (tau[cycle[i]] != g.size()) throw InputError("--tau repeats a candidate");
    tau[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return tau;
}

int cmd_tournament(Context& ctx, const TournamentArgs& a) {
  const WeightedTournamentGraph g = graph_from_input(read_input(ctx, a.input));
  const std::size_t n = g.size();
  Json weights = Json::array();
  std::string plain;
  for (Candidate x = 0; x < n; ++x) {
    Json row = Json::array();
    plain += g.name(x);
    for (Candidate y = 0; y < n; ++y) {
      row.push_back(rational_json(g.weight(x, y)));
      plain += " " + to_string(g.weight(x, y));
    }
    plain += "\n";
    weights.push_back(std::move(row));
  }
  Json result{{"names", g.names()}, {"scale", g.scale()}, {"weights", std::move(weights)}};
  Json inputs{{"input", a.input}};
  if (!a.tau.empty()) {
    const Permutation tau = parse_cycle(g, a.tau);
    const bool valid = check_cyclic_symmetry(g, tau);
    inputs["tau"] = a.tau;
    result["symmetry"] = Json{{"tau", cycle_notation(g, tau)}, {"valid", valid}};
    plain += "tau " + cycle_notation(g, tau) + (valid ? " preserves" : " does not preserve") + " the weights";
  } else if (a.check_symmetry) {
    inputs["check_symmetry"] = true;
    const CyclicSymmetryWitness w = find_cyclic_symmetry(g);
    if (w.tau) {
      result["symmetry"] = Json{{"tau", cycle_notation(g, *w.tau)}, {"valid", true}};
      plain += "cyclic symmetry " + cycle_notation(g, *w.tau);
    } else {
      result["symmetry"] = Json{{"tau", nullptr}, {"valid", false}};
      plain += "no cyclic symmetry";
    }
  }
  Reporter(ctx).emit("tournament", std::move(inputs), std::move(result), plain);
  return kOk;
}

int cmd_matching_set(Context& ctx, const std::string& path) {
  const VotingProfile p = parse_profile(read_input(ctx, path));
  const PairwiseMatrix counts = pairwise_counts(p);
  const std::size_t n = p.num_candidates();
  Json pairs = Json::array();
  CandidateSet set = CandidateSet::all(n);
  for (Candidate a = 0; a < n; ++a) {
    for (Candidate b = 0; b < n; ++b) {
      if (a == b) continue;
      const PairDecision d = decide_perfect_matching(p, counts, a, b);
      if (!d.perfect) set.erase(a);
      pairs.push_back(Json{{"a", p.name(a)}, {"b", p.name(b)}, {"perfect", d.perfect}, {"path", to_string(d.path)}});
    }
  }
  Json result{{"set", set_json(p.names(), set)}, {"pairs", std::move(pairs)}};
  Reporter(ctx).emit("matching-set", Json{{"profile", path}}, std::move(result),
                     "matching uncovered set: " + set_text(p.names(), set));
  return kOk;
}

int cmd_weighted_set(Context& ctx, const std::string& path, const std::string& lambda) {
  const WeightedTournamentGraph g = graph_from_input(read_input(ctx, path));
  const Threshold threshold = lambda == "golden" ? Threshold::golden() : Threshold::rational(parse_rational(lambda));
  const CandidateSet set = weighted_uncovered_set(g, threshold);
  Json result{{"lambda", lambda == "golden" ? Json("golden") : rational_json(parse_rational(lambda))},
              {"set", set_json(g.names(), set)}};
  if (!set.empty()) result["winner"] = g.name(alphabetical_first(g.names(), set));
  Reporter(ctx).emit("weighted-set", Json{{"input", path}, {"lambda", lambda}}, std::move(result),
                     "weighted uncovered set: " + set_text(g.names(), set));
  return kOk;
}

struct VerifyArgs {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t workers = 1;
  std::uint64_t budget = kDefaultProfileBudget;
  bool no_fast_paths = false;
};

int cmd_verify(Context& ctx, const VerifyArgs& a) {
  VerifyOptions options;
  options.workers = std::max<std::size_t>(a.workers, 1);
  options.budget = a.budget;
  options.fast_paths = !a.no_fast_paths;
  const Verdict v = verify_conjecture(a.n, a.m, options);
  Json result{{"status", to_string(v.status)},
              {"n", v.n},
              {"m", v.m},
              {"profiles_checked", v.profiles_checked},
              {"elapsed_ms", v.elapsed.count()}};
  if (v.counterexample) result["counterexample"] = serialize_profile(*v.counterexample);
  Json inputs{{"n", a.n}, {"m", a.m}, {"workers", options.workers}, {"budget", a.budget}, {"fast_paths", options.fast_paths}};
  Reporter(ctx).emit("verify-conjecture", std::move(inputs), std::move(result),
                     std::string(to_string(v.status)) + ": n=" + std::to_string(v.n) + " m=" + std::to_string(v.m) +
                         ", " + std::to_string(v.profiles_checked) + " profiles");
  switch (v.status) {
    case VerdictStatus::kVerified:
      return kOk;
    case VerdictStatus::kCounterexample:
      return kCounterexample;
    case VerdictStatus::kBudgetExceeded:
      return kBudgetExceeded;
  }
  return kOk;
}

struct InstanceArgs {
  std::string name;
  std::string fraction;
  std::int64_t scale = 0;
  std::size_t n = 3;
  bool raw = false;
  std::string profile_out;
  std::string metric_out;
};

InstanceParams instance_params(const InstanceArgs& a) {
  InstanceParams params;
  params.n = a.n;
  if (a.name == "lower-left") {
    params = {382, 1000, 1000, a.n};
  } else if (a.name == "lower-right") {
    params = {618, 1000, 1000, a.n};
  } else {
    params = {1, 2, 2, a.n};
  }
  if (!a.fraction.empty()) {
    const Rational r = parse_rational(a.fraction);
    params.num = r.numerator();
    params.den = r.denominator();
  }
  if (a.scale > 0) params.scale = a.scale;
  return params;
}

int cmd_instance(Context& ctx, const InstanceArgs& a) {
  const NamedInstance inst = make_instance(a.name, instance_params(a));
  const std::string profile_text = serialize_profile(inst.profile);
  const std::string metric_text = inst.metric ? serialize_metric_csv(*inst.metric) : std::string();
  if (!a.profile_out.empty()) write_file(a.profile_out, profile_text);
  if (!a.metric_out.empty()) {
    if (!inst.metric) throw InputError("instance '" + a.name + "' has no metric");
    write_file(a.metric_out, metric_text);
  }
  if (a.raw) {
    ctx.out << profile_text;
    return kOk;
  }
  Json result{{"name", inst.name},
              {"notes", inst.notes},
              {"candidates", inst.profile.names()},
              {"voters", inst.profile.num_voters()},
              {"profile", profile_text},
              {"metric", inst.metric ? Json(metric_text) : Json(nullptr)}};
  Json inputs{{"name", a.name}};
  if (!a.fraction.empty()) inputs["fraction"] = a.fraction;
  if (a.scale > 0) inputs["scale"] = a.scale;
  Reporter(ctx).emit("instance", std::move(inputs), std::move(result), profile_text + metric_text);
  return kOk;
}

}  // namespace

std::uint64_t fnv1a(std::string_view data, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metric-distortion voting rules, distortion LPs and the cycle matching search", "mdx"};
  app.set_version_flag("--version", MDX_VERSION);
  app.require_subcommand(1);
  Context ctx{in, out, false, {}};
  app.add_flag("--plain", ctx.plain, "Print a short human-readable summary instead of JSON")->configurable(false);
  app.fallthrough();
  const unsigned hardware = std::max(1U, std::thread::hardware_concurrency());

  WinnerArgs winner;
  auto* w = app.add_subcommand("winner", "Winner of a voting rule");
  w->add_option("profile", winner.profile, "Profile file, or - for stdin")->required();
  w->add_option("--rule", winner.rule, "copeland|uncovered|ranked-pairs|schulze|weighted-uncovered|"
                                       "matching-uncovered|optimal-lp")
      ->required();
  w->add_option("--workers", winner.workers, "Threads for the optimal-lp value matrix");

  DistortionArgs dist;
  auto* d = app.add_subcommand("distortion", "Distortion of a candidate under a metric or in the worst case");
  d->add_option("profile", dist.profile, "Profile file, or - for stdin")->required();
  d->add_option("candidate", dist.candidate, "Candidate name")->required();
  d->add_option("--metric", dist.metric, "Metric CSV; omit for the worst-case LP");
  d->add_option("--k", dist.k, "Fairness ratio over the k worst-off voters (needs --metric)");
  d->add_flag("--witness", dist.witness, "Include the optimal LP metrics");
  d->add_option("--workers", dist.workers, "Unused for a single candidate; accepted for symmetry");

  PairwiseArgs pair;
  auto* pl = app.add_subcommand("pairwise-lp", "Worst-case ratio P(A, B) from the distortion LP");
  pl->add_option("profile", pair.profile, "Profile file, or - for stdin")->required();
  pl->add_option("a", pair.a, "Candidate A")->required();
  pl->add_option("b", pair.b, "Candidate B")->required();
  pl->add_flag("--witness", pair.witness, "Include the optimal metric");

  TournamentArgs tour;
  auto* t = app.add_subcommand("tournament", "Exact weighted tournament graph");
  t->add_option("input", tour.input, "Profile or graph file, or - for stdin")->required();
  t->add_flag("--check-symmetry", tour.check_symmetry, "Search for a cyclic symmetry");
  t->add_option("--tau", tour.tau, "Check a given cycle, e.g. \"(A B C)\"");

  std::string matching_path;
  auto* ms = app.add_subcommand("matching-set", "Matching uncovered set with per-pair decisions");
  ms->add_option("profile", matching_path, "Profile file, or - for stdin")->required();

  std::string weighted_path;
  std::string lambda = "golden";
  auto* ws = app.add_subcommand("weighted-set", "Lambda-weighted uncovered set");
  ws->add_option("input", weighted_path, "Profile or graph file, or - for stdin")->required();
  ws->add_option("--lambda", lambda, "Threshold p/q, decimal, or golden")->capture_default_str();

  VerifyArgs verify;
  verify.workers = hardware;
  auto* vc = app.add_subcommand("verify-conjecture", "Exhaustive search of the cycle matching condition");
  vc->add_option("--n", verify.n, "Number of candidates")->required()->check(CLI::Range(2, 9));
  vc->add_option("--m", verify.m, "Number of voters")->required()->check(CLI::Range(1, 64));
  vc->add_option("--workers", verify.workers, "Worker threads")->capture_default_str();
  vc->add_option("--budget", verify.budget, "Maximum number of canonical profiles")->capture_default_str();
  vc->add_flag("--no-fast-paths", verify.no_fast_paths, "Decide every graph by full matching");

  InstanceArgs inst;
  auto* is = app.add_subcommand("instance", "Built-in example instances");
  is->add_option("name", inst.name, "Instance name")->required()->check(CLI::IsMember(instance_names()));
  is->add_option("--fraction,--p,--lambda", inst.fraction, "Population fraction as p/q");
  is->add_option("--scale", inst.scale, "Number of voters for fractional instances");
  is->add_option("--n", inst.n, "Candidates for the rotational instance")->capture_default_str();
  is->add_flag("--raw", inst.raw, "Print only the profile text");
  is->add_option("--profile-out", inst.profile_out, "Write the profile to a file");
  is->add_option("--metric-out", inst.metric_out, "Write the metric CSV to a file");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (w->parsed()) return cmd_winner(ctx, winner);
    if (d->parsed()) return cmd_distortion(ctx, dist);
    if (pl->parsed()) return cmd_pairwise_lp(ctx, pair);
    if (t->parsed()) return cmd_tournament(ctx, tour);
    if (ms->parsed()) return cmd_matching_set(ctx, matching_path);
    if (ws->parsed()) return cmd_weighted_set(ctx, weighted_path, lambda);
    if (vc->parsed()) return cmd_verify(ctx, verify);
    if (is->parsed()) return cmd_instance(ctx, inst);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const InconsistentMetric& e) {
    err << "inconsistent metric: " << e.what() << '\n';
    return kInconsistentMetric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuleError;
  }
  return kParseError;
}

}  // namespace mdx::cli
