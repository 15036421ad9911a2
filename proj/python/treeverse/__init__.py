from ._core import (
    RootedTree,
    bounds_csv,
    counterexample,
    edge_counts,
    edge_gap,
    embed,
    find_feasible_or_critical,
    free_trees,
    generated_edges,
    is_universal,
    legacy_edges,
    perfect_binary,
    typed_tree,
    validate_balance,
)

__all__ = [
    "RootedTree",
    "bounds_csv",
    "counterexample",
    "edge_counts",
    "edge_gap",
    "embed",
    "find_feasible_or_critical",
    "free_trees",
    "generated_edges",
    "is_universal",
    "legacy_edges",
    "perfect_binary",
    "typed_tree",
    "validate_balance",
]
