#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>

#include "mdx/conjecture.hpp"
#include "mdx/distortion.hpp"
#include "mdx/error.hpp"
#include "mdx/instances.hpp"
#include "mdx/matching.hpp"
#include "mdx/metric.hpp"
#include "mdx/rules.hpp"
#include "mdx/tournament.hpp"

namespace py = pybind11;
using namespace mdx;

namespace {

Candidate lookup(const VotingProfile& p, const std::string& name) {
  if (auto c = p.find(name)) return *c;
  throw py::key_error("unknown candidate '" + name + "'");
}

std::vector<std::string> set_names(const std::vector<std::string>& names, CandidateSet set) {
  std::vector<std::string> out;
  for (Candidate c : set.members()) out.push_back(names[c]);
  return out;
}

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.numerator(), r.denominator());
}

py::dict instance_dict(const NamedInstance& inst) {
  py::dict d;
  d["name"] = inst.name;
  d["notes"] = inst.notes;
  d["profile"] = inst.profile;
  d["metric_csv"] = inst.metric ? py::cast(serialize_metric_csv(*inst.metric)) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Voting rules with metric distortion guarantees";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<LimitExceeded>(m, "LimitExceeded", PyExc_RuntimeError);
  py::register_exception<InconsistentMetric>(m, "InconsistentMetric", PyExc_ValueError);
  py::register_exception<SolverFailure>(m, "SolverFailure", PyExc_RuntimeError);

  py::class_<VotingProfile>(m, "Profile")
      .def(py::init<std::vector<std::string>, std::vector<std::vector<Candidate>>>(), py::arg("names"),
           py::arg("orderings"))
      .def_property_readonly("names", &VotingProfile::names)
      .def_property_readonly("orderings", &VotingProfile::orderings)
      .def_property_readonly("num_candidates", &VotingProfile::num_candidates)
      .def_property_readonly("num_voters", &VotingProfile::num_voters)
      .def("serialize", [](const VotingProfile& p) { return serialize_profile(p); })
      .def("__eq__", [](const VotingProfile& a, const VotingProfile& b) { return a == b; })
      .def("__repr__", [](const VotingProfile& p) {
        return "<Profile n=" + std::to_string(p.num_candidates()) + " m=" + std::to_string(p.num_voters()) + ">";
      });

  m.def("parse_profile", [](const std::string& text) { return parse_profile(text); }, py::arg("text"));

  m.def(
      "pairwise_counts",
      [](const VotingProfile& p) {
        const PairwiseMatrix c = pairwise_counts(p);
        std::vector<std::vector<std::int64_t>> out(p.num_candidates(), std::vector<std::int64_t>(p.num_candidates()));
        for (Candidate x = 0; x < p.num_candidates(); ++x) {
          for (Candidate y = 0; y < p.num_candidates(); ++y) out[x][y] = c(x, y);
        }
        return out;
      },
      py::arg("profile"));

  m.def(
      "tournament_weights",
      [](const VotingProfile& p) {
        const WeightedTournamentGraph g = build_tournament(p);
        py::list rows;
        for (Candidate x = 0; x < g.size(); ++x) {
          py::list row;
          for (Candidate y = 0; y < g.size(); ++y) row.append(fraction(g.weight(x, y)));
          rows.append(row);
        }
        return rows;
      },
      py::arg("profile"), "Exact w(X, Y) as fractions.Fraction");

  m.def(
      "cyclic_symmetry",
      [](const VotingProfile& p) -> std::optional<std::string> {
        const WeightedTournamentGraph g = build_tournament(p);
        const auto w = find_cyclic_symmetry(g);
        if (!w.tau) return std::nullopt;
        return cycle_notation(g, *w.tau);
      },
      py::arg("profile"), "Cycle notation of a weight-preserving n-cycle, or None");

  m.def("rules", [] {
    std::vector<std::string> out;
    for (RuleId id : kAllRules) out.emplace_back(rule_name(id));
    return out;
  });

  m.def(
      "winner",
      [](const VotingProfile& p, const std::string& rule, std::size_t workers) {
        const auto id = parse_rule_id(rule);
        if (!id) throw py::value_error("unknown rule '" + rule + "'");
        LpOptions options;
        options.workers = workers;
        py::gil_scoped_release release;
        return p.name(run_rule(*id, p, options).winner);
      },
      py::arg("profile"), py::arg("rule"), py::arg("workers") = 1);

  m.def(
      "matching_uncovered_set", [](const VotingProfile& p) { return set_names(p.names(), matching_uncovered_set(p)); },
      py::arg("profile"));

  m.def(
      "weighted_uncovered_set",
      [](const VotingProfile& p, std::optional<std::string> lam) {
        const Threshold t = lam ? Threshold::rational(parse_rational(*lam)) : Threshold::golden();
        return set_names(p.names(), weighted_uncovered_set(build_tournament(p), t));
      },
      py::arg("profile"), py::arg("lam") = py::none(), "lam as \"p/q\"; None selects the golden-ratio threshold");

  m.def(
      "cover_graph_perfect",
      [](const VotingProfile& p, const std::string& a, const std::string& b) {
        return max_matching(build_cover_graph(p, lookup(p, a), lookup(p, b))).perfect;
      },
      py::arg("profile"), py::arg("a"), py::arg("b"), "Whether G(a, b) has a perfect matching");

  m.def(
      "pairwise_distortion",
      [](const VotingProfile& p, const std::string& a, const std::string& b) {
        const Candidate ca = lookup(p, a);
        const Candidate cb = lookup(p, b);
        py::gil_scoped_release release;
        return pairwise_distortion_lp(p, ca, cb).value;
      },
      py::arg("profile"), py::arg("a"), py::arg("b"), "P(a, b); math.inf when unbounded");

  m.def(
      "max_distortion",
      [](const VotingProfile& p, const std::string& a) {
        const Candidate ca = lookup(p, a);
        py::gil_scoped_release release;
        return max_distortion(p, ca);
      },
      py::arg("profile"), py::arg("candidate"));

  m.def(
      "instance_distortion",
      [](const VotingProfile& p, const std::string& metric_csv, const std::string& candidate) {
        return instance_distortion(parse_metric_csv(metric_csv), p, lookup(p, candidate));
      },
      py::arg("profile"), py::arg("metric_csv"), py::arg("candidate"));

  m.def(
      "cycle_condition",
      [](const VotingProfile& p) {
        std::vector<py::dict> out;
        for (const auto& e : check_cycle_condition(p).edges) {
          py::dict d;
          d["a"] = p.name(e.from);
          d["b"] = p.name(e.to);
          d["perfect"] = e.perfect;
          d["path"] = to_string(e.path);
          out.push_back(d);
        }
        return out;
      },
      py::arg("profile"));

  m.def("count_canonical_profiles", &count_canonical_profiles, py::arg("n"), py::arg("m"));

  m.def(
      "verify_conjecture",
      [](std::size_t n, std::size_t m, std::size_t workers, std::uint64_t budget) {
        VerifyOptions options;
        options.workers = workers;
        options.budget = budget;
        Verdict v;
        {
          py::gil_scoped_release release;
          v = verify_conjecture(n, m, options);
        }
        py::dict d;
        d["status"] = to_string(v.status);
        d["n"] = v.n;
        d["m"] = v.m;
        d["profiles_checked"] = v.profiles_checked;
        d["elapsed_ms"] = v.elapsed.count();
        d["counterexample"] = v.counterexample ? py::cast(*v.counterexample) : py::none();
        return d;
      },
      py::arg("n"), py::arg("m"), py::arg("workers") = 1, py::arg("budget") = kDefaultProfileBudget);

  m.def("instance_names", &instance_names);
  m.def(
      "instance",
      [](const std::string& name, std::int64_t num, std::int64_t den, std::int64_t scale, std::size_t n) {
        return instance_dict(make_instance(name, InstanceParams{num, den, scale, n}));
      },
      py::arg("name"), py::arg("num") = 1, py::arg("den") = 2, py::arg("scale") = 2, py::arg("n") = 3);
}
