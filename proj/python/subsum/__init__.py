"""Exact and heuristic subset-sum solvers backed by the C++ core."""

from ._subsum import (
    DpResult,
    EnumerationResult,
    GreedyResult,
    Instance,
    ParseError,
    PreconditionError,
    ProbeResult,
    ResourceError,
    SubsetSolution,
    SumsetSet,
    TrackedResidual,
    bellman_decides,
    bellman_run,
    brute_force_all,
    capped_sumset,
    color_coding,
    decode_position,
    gen_planted,
    gen_random,
    instance_digest,
    parse_instance_json,
    parse_instance_text,
    position_of,
    prune_and_merge,
    residual_at,
    sample_variance,
    serialize_instance_json,
    serialize_instance_text,
    solve_all,
    solve_greedy,
    solve_probabilistic,
)

__all__ = [
    "DpResult",
    "EnumerationResult",
    "GreedyResult",
    "Instance",
    "ParseError",
    "PreconditionError",
    "ProbeResult",
    "ResourceError",
    "SubsetSolution",
    "SumsetSet",
    "TrackedResidual",
    "bellman_decides",
    "bellman_run",
    "brute_force_all",
    "capped_sumset",
    "color_coding",
    "decode_position",
    "gen_planted",
    "gen_random",
    "instance_digest",
    "parse_instance_json",
    "parse_instance_text",
    "position_of",
    "prune_and_merge",
    "residual_at",
    "sample_variance",
    "serialize_instance_json",
    "serialize_instance_text",
    "solve_all",
    "solve_greedy",
    "solve_probabilistic",
]
