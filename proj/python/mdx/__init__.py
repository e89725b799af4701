"""Voting rules with metric distortion guarantees (C++ core)."""

from ._core import (
    InconsistentMetric,
    LimitExceeded,
    ParseError,
    Profile,
    SolverFailure,
    count_canonical_profiles,
    cover_graph_perfect,
    cycle_condition,
    cyclic_symmetry,
    instance,
    instance_distortion,
    instance_names,
    matching_uncovered_set,
    max_distortion,
    pairwise_counts,
    pairwise_distortion,
    parse_profile,
    rules,
    tournament_weights,
    verify_conjecture,
    weighted_uncovered_set,
    winner,
)

__all__ = [
    "InconsistentMetric",
    "LimitExceeded",
    "ParseError",
    "Profile",
    "SolverFailure",
    "count_canonical_profiles",
    "cover_graph_perfect",
    "cycle_condition",
    "cyclic_symmetry",
    "instance",
    "instance_distortion",
    "instance_names",
    "matching_uncovered_set",
    "max_distortion",
    "pairwise_counts",
    "pairwise_distortion",
    "parse_profile",
    "rules",
    "tournament_weights",
    "verify_conjecture",
    "weighted_uncovered_set",
    "winner",
]
