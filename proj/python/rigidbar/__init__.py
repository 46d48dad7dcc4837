"""Generic rigidity of linearly constrained frameworks."""

from ._core import (
    Graph,
    add_uniform_loops,
    combinatorial_independent,
    combinatorial_rigid,
    conjecture_instance_check,
    find_circuit,
    generic_rank,
    is_independent,
    is_pinned_independent,
    is_rigid,
    one_extension_chain,
    pebble_game,
    pinned_sufficiency,
    zero_extension_chain,
)

__all__ = [
    "Graph",
    "add_uniform_loops",
    "combinatorial_independent",
    "combinatorial_rigid",
    "conjecture_instance_check",
    "find_circuit",
    "generic_rank",
    "is_independent",
    "is_pinned_independent",
    "is_rigid",
    "one_extension_chain",
    "pebble_game",
    "pinned_sufficiency",
    "zero_extension_chain",
]
