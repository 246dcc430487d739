"""Graphs paired with universal lists.

Every construction here returns ``(Graph, ListAssignment)`` with the lists
already materialized as neighbor ids; symbolic dimension lists never leave
this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graphs import (
    DEFAULT_MAX_NODES,
    BinomialTreeNode,
    Graph,
    GraphError,
    binomial_table,
    check_size,
    hypercube_neighbor,
    make_clique,
    make_hypercube,
    make_labeled_subcube,
)


class ListError(ValueError):
    """A list assignment does not fit its graph."""


@dataclass(frozen=True)
class ListAssignment:
    lists: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, lists: Iterable[Iterable[int]]) -> "ListAssignment":
        return cls(tuple(tuple(int(x) for x in lst) for lst in lists))

    def __len__(self) -> int:
        return len(self.lists)

    def __getitem__(self, v: int) -> tuple[int, ...]:
        return self.lists[v]

    def __iter__(self):
        return iter(self.lists)

    def validate(self, g: Graph) -> None:
        if len(self.lists) != g.n:
            raise ListError(f"{len(self.lists)} lists for a {g.n}-node graph")
        for v, lst in enumerate(self.lists):
            nbrs = set(g.adjacency[v])
            if len(set(lst)) != len(lst):
                raise ListError(f"list of {v} repeats an entry")
            for u in lst:
                if u not in nbrs:
                    raise ListError(f"list of {v} names {u}, which is not a neighbor")


def log2_ceil(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return (n - 1).bit_length()


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


# --------------------------------------------------------------------------
# hypercube


def hypercube_dimension_lists(d: int) -> ListAssignment:
    """Neighbors of each node of Q_d in increasing dimension order."""
    return ListAssignment.of(
        [hypercube_neighbor(v, dim, d) for dim in range(1, d + 1)] for v in range(1 << d)
    )


def hypercube_lists(d: int, max_nodes: int = DEFAULT_MAX_NODES) -> tuple[Graph, ListAssignment]:
    g = make_hypercube(d, max_nodes)
    return g, hypercube_dimension_lists(d)


# --------------------------------------------------------------------------
# union of sub-hypercubes


@dataclass(frozen=True)
class Theorem1Spec:
    n: int
    m: int
    dims: tuple[int, ...]

    def __post_init__(self):
        if sum(1 << (self.m - d) for d in self.dims) != self.n:
            raise ValueError("dims do not sum to n")
        if list(self.dims) != sorted(set(self.dims)) or not self.dims or self.dims[0] != 1:
            raise ValueError("dims must be strictly increasing and start at 1")
        if self.dims[-1] > self.m:
            raise ValueError("dims exceed m")


def theorem1_spec(n: int) -> Theorem1Spec:
    """Write ``n = sum 2^(m - d_i)`` from the 1-bits of n in m-bit binary."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if is_power_of_two(n):
        raise ValueError(f"n={n} is a power of two; use hypercube_lists")
    m = log2_ceil(n)
    dims = tuple(m - b for b in range(m - 1, -1, -1) if n >> b & 1)
    return Theorem1Spec(n, m, dims)


def theorem1_labels(spec: Theorem1Spec) -> list[tuple[str, int]]:
    """(label, d_i) for every node; sub-cube i holds ``1^(d_i - 1) 0 *``."""
    m = spec.m
    out = []
    for d in spec.dims:
        free = m - d
        prefix = "1" * (d - 1) + "0"
        for x in range(1 << free):
            out.append((prefix + (format(x, f"0{free}b") if free else ""), d))
    return out


def theorem1_construction(
    n: int, max_nodes: int = DEFAULT_MAX_NODES
) -> tuple[Graph, ListAssignment]:
    """Union of sub-hypercubes with rotated dimension lists.

    Nodes are numbered by sorted label. A node of the sub-cube with leading
    ones count ``d - 1`` uses dimension order ``d+1..m, 1..d``; dimensions
    whose flipped label is not a node are dropped at construction time.
    """
    check_size(n, max_nodes)
    spec = theorem1_spec(n)
    labelled = sorted(theorem1_labels(spec))
    g = make_labeled_subcube([lab for lab, _ in labelled])
    m = spec.m
    index = {int(lab, 2): i for i, (lab, _) in enumerate(labelled)}
    lists = []
    for lab, d in labelled:
        x = int(lab, 2)
        order = list(range(d + 1, m + 1)) + list(range(1, d + 1))
        lists.append([j for j in (index.get(x ^ (1 << (m - dim))) for dim in order) if j is not None])
    return g, ListAssignment.of(lists)


# --------------------------------------------------------------------------
# binomial forest with root connections


@dataclass(frozen=True)
class Theorem2Decomposition:
    m: int
    k: int
    r: int

    @property
    def n(self) -> int:
        return (1 << self.m) - (1 << self.k) - self.r

    def __post_init__(self):
        if not (0 <= self.k <= self.m - 2):
            raise ValueError("need 0 <= k <= m-2")
        if not (0 <= self.r <= (1 << self.k) - 1):
            raise ValueError("need 0 <= r <= 2^k - 1")
        if log2_ceil(self.n) != self.m:
            raise ValueError("m must equal ceil(log2 n)")


def theorem2_decompose(n: int) -> Theorem2Decomposition:
    """``n = 2^m - 2^k - r`` with ``k = floor(log2(2^m - n))``."""
    if n < 3:
        raise ValueError("n must be at least 3")
    if is_power_of_two(n):
        raise ValueError(f"n={n} is a power of two; use hypercube_lists")
    m = log2_ceil(n)
    gap = (1 << m) - n
    k = gap.bit_length() - 1
    return Theorem2Decomposition(m, k, gap - (1 << k))


def deepest_leaf_pruning(
    table: Sequence[BinomialTreeNode], r: int, tie_break: str = "first"
) -> list[int]:
    """Ids removed by deleting, ``r`` times, a leaf furthest from the root.

    ``table`` is a preorder (highest-dim child first) binomial tree. Among the
    deepest leaves, ``"first"`` takes the earliest one in that preorder, i.e.
    the one reached by always descending into the highest-dim child;
    ``"last"`` takes the latest one.
    """
    if tie_break not in ("first", "last"):
        raise ValueError(f"unknown tie_break {tie_break!r}")
    if r >= len(table):
        raise ValueError("cannot prune the whole tree")
    base = table[0].id
    alive_children = [len(t.children) for t in table]
    alive = [True] * len(table)
    removed = []
    for _ in range(r):
        best = None
        for t in table:
            i = t.id - base
            if not alive[i] or alive_children[i] or t.parent is None:
                continue
            if best is None or t.depth > best.depth or (
                tie_break == "last" and t.depth == best.depth
            ):
                best = t
        assert best is not None
        alive[best.id - base] = False
        alive_children[best.parent - base] -= 1
        removed.append(best.id)
    return removed


@dataclass(frozen=True)
class BinomialForest:
    """Bookkeeping for the pruned forest, in final (dense) ids."""

    decomposition: Theorem2Decomposition
    roots: dict[int, int]  # tree index j -> id of v_j
    dim: tuple[int, ...]  # pre-pruning subtree dim of every node
    parent: tuple[Optional[int], ...]
    children: tuple[tuple[int, ...], ...]  # surviving, decreasing dim
    tree_edges: tuple[tuple[int, int], ...]


def binomial_forest(n: int, tie_break: str = "first") -> BinomialForest:
    dec = theorem2_decompose(n)
    m, k, r = dec.m, dec.k, dec.r
    nodes: list[BinomialTreeNode] = []
    root_old: dict[int, int] = {}
    removed: set[int] = set()
    for j in range(m - 1, k - 1, -1):
        table = binomial_table(j, offset=len(nodes))
        root_old[j] = table[0].id
        if j == k:
            removed = set(deepest_leaf_pruning(table, r, tie_break))
        nodes.extend(table)
    new_id = {}
    for t in nodes:
        if t.id not in removed:
            new_id[t.id] = len(new_id)
    assert len(new_id) == n
    dim, parent, children = [], [], []
    tree_edges = []
    for t in nodes:
        if t.id in removed:
            continue
        dim.append(t.dim)
        parent.append(None if t.parent is None else new_id[t.parent])
        kids = tuple(new_id[c] for c, _ in t.children if c not in removed)
        children.append(kids)
        tree_edges += [(new_id[t.id], c) for c in kids]
    return BinomialForest(
        decomposition=dec,
        roots={j: new_id[i] for j, i in root_old.items()},
        dim=tuple(dim),
        parent=tuple(parent),
        children=tuple(children),
        tree_edges=tuple(tree_edges),
    )


def theorem2_construction(
    n: int, max_nodes: int = DEFAULT_MAX_NODES, tie_break: str = "first"
) -> tuple[Graph, ListAssignment]:
    """Pruned binomial forest T_{m-1}..T_k plus every vertex-root edge.

    A non-root of subtree dim ``d`` lists the roots v_{m-1}..v_{max(d,k)},
    then its surviving children. Root v_j lists v_{m-1}..v_{j+1}, then its
    surviving children.
    """
    check_size(n, max_nodes)
    forest = binomial_forest(n, tie_break)
    m, k = forest.decomposition.m, forest.decomposition.k
    root_ids = set(forest.roots.values())
    edges = {(min(u, v), max(u, v)) for u, v in forest.tree_edges}
    for x in forest.roots.values():
        for u in range(n):
            if u != x:
                edges.add((min(u, x), max(u, x)))
    g = Graph.from_edges(n, edges)
    root_of_index = {v: j for j, v in forest.roots.items()}
    lists = []
    for u in range(n):
        if u in root_ids:
            low = root_of_index[u] + 1
        else:
            low = max(forest.dim[u], k)
        lists.append([forest.roots[j] for j in range(m - 1, low - 1, -1)] + list(forest.children[u]))
    return g, ListAssignment.of(lists)


# --------------------------------------------------------------------------
# lists from an ordered broadcast tree


@dataclass(frozen=True)
class OrderedBroadcastTree:
    root: int
    children: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, root: int, children: Sequence[Iterable[int]]) -> "OrderedBroadcastTree":
        return cls(root, tuple(tuple(c) for c in children))

    def parents(self) -> list[Optional[int]]:
        par: list[Optional[int]] = [None] * len(self.children)
        for v, kids in enumerate(self.children):
            for c in kids:
                par[c] = v
        return par

    def depth(self) -> int:
        best, stack = 0, [(self.root, 0)]
        while stack:
            v, d = stack.pop()
            best = max(best, d)
            stack += [(c, d + 1) for c in self.children[v]]
        return best

    def validate(self, g: Graph) -> None:
        if len(self.children) != g.n:
            raise GraphError("tree and graph sizes differ")
        seen = {self.root}
        stack = [self.root]
        while stack:
            v = stack.pop()
            for c in self.children[v]:
                if not g.has_edge(v, c):
                    raise GraphError(f"tree child {c} of {v} is not a graph neighbor")
                if c in seen:
                    raise GraphError(f"node {c} appears twice in the tree")
                seen.add(c)
                stack.append(c)
        if len(seen) != g.n or sum(map(len, self.children)) != g.n - 1:
            raise GraphError("tree does not span the graph")


def lists_from_broadcast_tree(g: Graph, tree: OrderedBroadcastTree) -> ListAssignment:
    """Parent first, then the ordered children; the root has children only."""
    tree.validate(g)
    par = tree.parents()
    return ListAssignment.of(
        ([] if p is None else [p]) + list(tree.children[v]) for v, p in enumerate(par)
    )


# --------------------------------------------------------------------------
# cliques


def clique_lists(n: int, max_nodes: int = DEFAULT_MAX_NODES) -> tuple[Graph, ListAssignment]:
    """K_n with the (truncated) lists of a spanning hypercube-like subgraph.

    Powers of two reuse the dimension lists of Q_m on integer labels; other
    n reuse the sub-hypercube union, whose ids already index K_n.
    """
    g = make_clique(n, max_nodes)
    if is_power_of_two(n):
        lists = hypercube_dimension_lists(log2_ceil(n))
    else:
        _, lists = theorem1_construction(n, max_nodes)
    lists.validate(g)
    return g, lists
