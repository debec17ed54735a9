"""Limax walks and Limax networks over fully enumerated binary landscapes."""

from ._limax import (
    CorruptionError,
    DependencyError,
    Landscape,
    Network,
    NodeAggregates,
    ParameterError,
    Problem,
    WalkSet,
    assortativity,
    build_network,
    limax_walk,
    local_optima_counts,
    los,
    massive_central,
    plf,
    pull_values,
    reversed_cumulative_distribution,
    run_all_walks,
    step_metrics,
    summarize_walks,
    viscosity,
    walk_seed_for,
)

__all__ = [
    "CorruptionError",
    "DependencyError",
    "Landscape",
    "Network",
    "NodeAggregates",
    "ParameterError",
    "Problem",
    "WalkSet",
    "assortativity",
    "build_network",
    "limax_walk",
    "local_optima_counts",
    "los",
    "massive_central",
    "plf",
    "pull_values",
    "reversed_cumulative_distribution",
    "run_all_walks",
    "step_metrics",
    "summarize_walks",
    "viscosity",
    "walk_seed_for",
]
