"""Source-oblivious broadcast: constructions, simulation and exact oracles."""

from .graphs import (
    BinomialTreeNode,
    Graph,
    GraphError,
    SizeError,
    make_binomial_tree,
    make_clique,
    make_cycle,
    make_hypercube,
    make_path,
    make_star,
    make_two_cycles,
)
from .schemes import (
    ListAssignment,
    OrderedBroadcastTree,
    Theorem1Spec,
    Theorem2Decomposition,
    clique_lists,
    hypercube_lists,
    lists_from_broadcast_tree,
    log2_ceil,
    theorem1_construction,
    theorem1_spec,
    theorem2_construction,
    theorem2_decompose,
)
from .simulate import INF, Model, SimulationTrace, max_broadcast_time, simulate

__version__ = "0.1.0"
