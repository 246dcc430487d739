"""Brute-force ground truth for tiny graphs.

``classic_broadcast_time`` is an exact BFS over informed-set bitmasks; it
knows nothing about lists. ``optimal_list_assignment`` enumerates list
assignments and scores each with the simulator.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from typing import Optional

from .graphs import Graph, GraphError
from .schemes import (
    ListAssignment,
    OrderedBroadcastTree,
    lists_from_broadcast_tree,
    log2_ceil,
)
from .simulate import INF, Model, Rounds, simulate

DEFAULT_NODE_BUDGET = 14


class BudgetExceeded(RuntimeError):
    pass


class ListSpace(enum.Enum):
    FULL_PERMUTATIONS = "perm"
    ORDERED_SUBSETS = "subset"


@dataclass(frozen=True)
class SearchConfig:
    model: Model = Model.FULLY_ADAPTIVE
    list_space: ListSpace = ListSpace.FULL_PERMUTATIONS
    node_budget: Optional[int] = None
    assignment_budget: int = 2_000_000

    def __post_init__(self):
        if self.node_budget is None:
            small = 9 if self.list_space is ListSpace.ORDERED_SUBSETS else 12
            object.__setattr__(self, "node_budget", small)
        if self.node_budget <= 0 or self.assignment_budget <= 0:
            raise ValueError("budgets must be positive")


# --------------------------------------------------------------------------
# classic broadcast time


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class _StateSpace:
    """Successor generation over informed sets, cached per graph."""

    def __init__(self, g: Graph, node_budget: int = DEFAULT_NODE_BUDGET):
        if g.n > node_budget:
            raise BudgetExceeded(f"{g.n} nodes exceeds the oracle budget of {node_budget}")
        g.require_connected()
        self.g = g
        self.full = (1 << g.n) - 1
        self.adj = [sum(1 << w for w in g.adjacency[v]) for v in range(g.n)]
        self._succ: dict[int, list[int]] = {}

    def successors(self, state: int) -> list[int]:
        """States reachable in one round via a maximum call matching.

        The newly informed sets a matching can cover are the independent
        sets of a transversal matroid, so the maximal ones are exactly the
        coverable sets of maximum size.
        """
        hit = self._succ.get(state)
        if hit is not None:
            return hit
        outside = self.full & ~state
        coverable = {0}
        for v in _bits(state):
            avail = self.adj[v] & outside
            if not avail:
                continue
            grown = set(coverable)
            for t in coverable:
                for w in _bits(avail & ~t):
                    grown.add(t | 1 << w)
            coverable = grown
        best = max(bin(t).count("1") for t in coverable)
        out = sorted(state | t for t in coverable if bin(t).count("1") == best)
        self._succ[state] = out
        return out

    def shortest_path(self, source: int) -> list[int]:
        """Informed sets of one optimal schedule, from {source} to everything."""
        start = 1 << source
        parent = {start: start}
        layer = [start]
        while self.full not in parent:
            nxt = []
            for state in layer:
                for succ in self.successors(state):
                    if succ not in parent:
                        parent[succ] = state
                        nxt.append(succ)
            layer = nxt
        path = [self.full]
        while path[-1] != start:
            path.append(parent[path[-1]])
        return path[::-1]


def classic_broadcast_time(g: Graph, s: int, node_budget: int = DEFAULT_NODE_BUDGET) -> int:
    """Exact b(G, s): fewest rounds when each informed node may call one neighbor."""
    return len(_StateSpace(g, node_budget).shortest_path(s)) - 1


def classic_broadcast_time_all(
    g: Graph, node_budget: int = DEFAULT_NODE_BUDGET
) -> tuple[int, list[int]]:
    space = _StateSpace(g, node_budget)
    per = [len(space.shortest_path(s)) - 1 for s in range(g.n)]
    return max(per), per


def _match(g: Graph, callers: list[int], targets: list[int]) -> dict[int, int]:
    """Perfect matching of ``targets`` into ``callers`` (Kuhn, smallest ids first)."""
    owner: dict[int, int] = {}  # target -> caller
    taken_by: dict[int, int] = {}  # caller -> target
    caller_set = set(callers)

    def augment(t: int, seen: set[int]) -> bool:
        for c in g.adjacency[t]:
            if c not in caller_set or c in seen:
                continue
            seen.add(c)
            if c not in taken_by or augment(taken_by[c], seen):
                owner[t] = c
                taken_by[c] = t
                return True
        return False

    for t in targets:
        if not augment(t, set()):
            raise AssertionError("successor state is not coverable")
    return owner


def optimal_broadcast_tree(
    g: Graph, s: int, node_budget: int = DEFAULT_NODE_BUDGET
) -> tuple[int, OrderedBroadcastTree]:
    """b(G, s) and an ordered broadcast tree realizing it.

    Children are ordered by the round in which the schedule calls them.
    """
    path = _StateSpace(g, node_budget).shortest_path(s)
    children: list[list[int]] = [[] for _ in range(g.n)]
    for before, after in zip(path, path[1:]):
        owner = _match(g, list(_bits(before)), list(_bits(after & ~before)))
        for t in sorted(owner):
            children[owner[t]].append(t)
    return len(path) - 1, OrderedBroadcastTree.of(s, children)


# --------------------------------------------------------------------------
# tree-derived lists against the best classic time


@dataclass(frozen=True)
class Proposition1Report:
    n: int
    center: int
    center_time: int
    bound: int
    measured: Rounds
    tree: OrderedBroadcastTree = field(repr=False)
    lists: ListAssignment = field(repr=False)

    @property
    def ok(self) -> bool:
        return self.measured <= self.bound


def verify_proposition1(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> Proposition1Report:
    """Lists built from an optimal tree at a best source finish within 2 min_s b(G, s)."""
    _, per = classic_broadcast_time_all(g, node_budget)
    center = min(range(g.n), key=lambda v: (per[v], v))
    b, tree = optimal_broadcast_tree(g, center, node_budget)
    assert b == per[center]
    lists = lists_from_broadcast_tree(g, tree)
    measured = max(
        simulate(g, lists, s, Model.FULLY_ADAPTIVE, check=False).completion for s in range(g.n)
    )
    return Proposition1Report(g.n, center, b, 2 * b, measured, tree, lists)


# --------------------------------------------------------------------------
# exhaustive list search


@dataclass(frozen=True)
class SearchResult:
    value: Rounds
    witness: ListAssignment
    exact: bool
    explored: int
    space_size: int


def list_options(g: Graph, v: int, space: ListSpace) -> list[tuple[int, ...]]:
    nbrs = g.adjacency[v]
    if space is ListSpace.FULL_PERMUTATIONS:
        return list(itertools.permutations(nbrs))
    return [p for k in range(len(nbrs) + 1) for p in itertools.permutations(nbrs, k)]


def optimal_list_assignment(g: Graph, cfg: SearchConfig = SearchConfig()) -> SearchResult:
    """Minimize the worst-source completion over every assignment in the space.

    Enumeration is lexicographic by node (node 0 varies slowest), then by
    option rank. A candidate is abandoned as soon as one source fails to
    beat the incumbent, and the search stops early once it reaches
    ceil(log2 n), which nothing can beat. When ``assignment_budget`` runs out
    the incumbent is returned with ``exact=False``.
    """
    from .fastsim import completion_times, pack

    if g.n > cfg.node_budget:
        raise BudgetExceeded(f"{g.n} nodes exceeds the search budget of {cfg.node_budget}")
    options = [list_options(g, v, cfg.list_space) for v in range(g.n)]
    size = math.prod(len(o) for o in options)
    floor = log2_ceil(g.n)
    best: Rounds = INF
    witness: Optional[ListAssignment] = None
    explored = 0
    exact = True
    for combo in itertools.product(*options):
        if explored >= cfg.assignment_budget:
            exact = False
            break
        explored += 1
        cand = ListAssignment(combo)
        bound = -1 if best == INF else int(best) - 1
        per = completion_times(cand, cfg.model, packed=pack(cand), bound=bound)
        value = max(per)
        if witness is None or value < best:
            best, witness = value, cand
            if best == floor:
                break
    assert witness is not None
    return SearchResult(best, witness, exact, explored, size)
