"""Exact shortest common superstring via the overlap graph and a subset DP."""
from .dp import (
    DPTable,
    SplitSchedule,
    cascade_costs,
    get_l,
    held_karp_max,
    nested_max_solve,
    path_weight,
    plan_cascade,
    step1,
)
from .graph import OverlapGraph, construct_graph_allones, construct_graph_hash, pool_size, prime_pool
from .reduce import naive_reduce, remove_duplicates_and_substrings
from .solver import (
    ScsConfig,
    ScsSolution,
    brute_force_scs,
    construct_superstring_by_path,
    overlap_graph_naive,
    solve_scs,
    validate_superstring,
)

__all__ = [
    "DPTable",
    "OverlapGraph",
    "ScsConfig",
    "ScsSolution",
    "SplitSchedule",
    "brute_force_scs",
    "cascade_costs",
    "construct_graph_allones",
    "construct_graph_hash",
    "construct_superstring_by_path",
    "get_l",
    "held_karp_max",
    "naive_reduce",
    "nested_max_solve",
    "overlap_graph_naive",
    "path_weight",
    "plan_cascade",
    "pool_size",
    "prime_pool",
    "remove_duplicates_and_substrings",
    "solve_scs",
    "step1",
    "validate_superstring",
]
