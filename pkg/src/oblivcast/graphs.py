"""Raw topologies: generic simple graphs, hypercubes, cliques, binomial trees,
and the two-cycle family.

Node ids are dense integers ``0..n-1``. Bit-string labels are optional
metadata; bit position 1 is the leftmost character of a label.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

DEFAULT_MAX_NODES = 1 << 20


class GraphError(ValueError):
    """Structurally invalid graph input."""


class SizeError(GraphError):
    """Requested construction exceeds the node cap."""


def check_size(n: int, max_nodes: int = DEFAULT_MAX_NODES) -> None:
    if n > max_nodes:
        raise SizeError(f"{n} nodes exceeds the cap of {max_nodes}")


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False)
    labels: Optional[tuple[str, ...]] = None

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence[int]],
        labels: Optional[Sequence[str]] = None,
    ) -> "Graph":
        """Build a graph, normalizing each edge to ``(min, max)`` and sorting.

        Raises GraphError on self-loops, duplicates or out-of-range ids.
        """
        if n < 1:
            raise GraphError("a graph needs at least one node")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} references a node outside 0..{n - 1}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
        norm = tuple(sorted(seen))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        if labels is not None:
            _check_labels(labels, n, norm)
        return cls(
            n=n,
            edges=norm,
            adjacency=tuple(tuple(sorted(a)) for a in adj),
            labels=None if labels is None else tuple(labels),
        )

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        a, b = self.adjacency[u], self.adjacency[v]
        return v in a if len(a) <= len(b) else u in b

    def validate(self) -> None:
        """Check adjacency against the edge set and the label invariants."""
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise GraphError(f"malformed edge ({u}, {v})")
            if (u, v) in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        if len(self.adjacency) != self.n:
            raise GraphError("adjacency length differs from n")
        half = 0
        for u, nbrs in enumerate(self.adjacency):
            if any(a >= b for a, b in zip(nbrs, nbrs[1:])):
                raise GraphError(f"adjacency of {u} is not sorted and distinct")
            for v in nbrs:
                if ((u, v) if u < v else (v, u)) not in seen:
                    raise GraphError(f"adjacency entry {u}->{v} is not an edge")
            half += len(nbrs)
        # every adjacency entry is an edge endpoint and counts agree, so the
        # two views coincide
        if half != 2 * len(seen):
            raise GraphError("adjacency does not match the edge set")
        if self.labels is not None:
            _check_labels(self.labels, self.n, self.edges)

    def is_connected(self) -> bool:
        return len(self.component(0)) == self.n

    def component(self, start: int) -> set[int]:
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in self.adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen

    def require_connected(self) -> None:
        if not self.is_connected():
            raise GraphError("graph is disconnected")

    def label_index(self) -> dict[str, int]:
        if self.labels is None:
            raise GraphError("graph carries no labels")
        return {lab: i for i, lab in enumerate(self.labels)}


def _check_labels(labels: Sequence[str], n: int, edges) -> None:
    if len(labels) != n:
        raise GraphError("label count differs from n")
    if len(set(labels)) != n:
        raise GraphError("labels are not pairwise distinct")
    widths = {len(s) for s in labels}
    if len(widths) > 1:
        raise GraphError("labels have unequal lengths")
    for s in labels:
        if set(s) - {"0", "1"}:
            raise GraphError(f"label {s!r} is not a bit string")
    values = [int(s, 2) if s else 0 for s in labels]
    for u, v in edges:
        if (values[u] ^ values[v]).bit_count() != 1:
            raise GraphError(f"edge {u}-{v} joins labels not differing in one bit")


def flip(label: str, dim: int) -> str:
    """Flip bit ``dim`` (1-based, leftmost first)."""
    i = dim - 1
    return label[:i] + ("1" if label[i] == "0" else "0") + label[i + 1 :]


def make_labeled_subcube(labels: Sequence[str]) -> Graph:
    """Induced subgraph of the hypercube on the given bit-string labels.

    Ids follow the order of ``labels``.
    """
    width = len(labels[0]) if labels else 0
    values = [int(lab, 2) if lab else 0 for lab in labels]
    index = {x: i for i, x in enumerate(values)}
    if len(index) != len(labels):
        raise GraphError("labels are not pairwise distinct")
    edges = []
    for i, x in enumerate(values):
        for b in range(width):
            j = index.get(x ^ (1 << b))
            if j is not None and i < j:
                edges.append((i, j))
    return Graph.from_edges(len(labels), edges, labels)


def make_hypercube(d: int, max_nodes: int = DEFAULT_MAX_NODES) -> Graph:
    """Q_d with node id equal to the integer value of its d-bit label."""
    if d < 0:
        raise GraphError("dimension must be non-negative")
    check_size(1 << d, max_nodes)
    n = 1 << d
    labels = [format(i, f"0{d}b") if d else "" for i in range(n)]
    edges = [(i, i ^ (1 << b)) for i in range(n) for b in range(d) if i < i ^ (1 << b)]
    return Graph.from_edges(n, edges, labels)


def hypercube_neighbor(v: int, dim: int, d: int) -> int:
    """Neighbor of ``v`` in Q_d across dimension ``dim`` (1 = most significant bit)."""
    return v ^ (1 << (d - dim))


def make_clique(n: int, max_nodes: int = DEFAULT_MAX_NODES) -> Graph:
    if n < 1:
        raise GraphError("n must be positive")
    check_size(n, max_nodes)
    return Graph.from_edges(n, combinations(range(n), 2))


def make_path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 nodes")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def make_star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def make_two_cycles(k: int, max_nodes: int = DEFAULT_MAX_NODES) -> Graph:
    """Two copies of C_{2k+1} glued at one vertex.

    Node 0 is the cut vertex; nodes 1..2k walk the first cycle and
    2k+1..4k walk the second.
    """
    if k < 1:
        raise GraphError("k must be positive")
    n = 4 * k + 1
    check_size(n, max_nodes)
    edges = []
    for first in (1, 2 * k + 1):
        ring = [0] + list(range(first, first + 2 * k))
        edges += [(ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))]
    return Graph.from_edges(n, edges)


@dataclass(frozen=True)
class BinomialTreeNode:
    id: int
    dim: int
    parent: Optional[int]
    children: tuple[tuple[int, int], ...]  # (child id, child dim), dims decreasing
    depth: int = 0


def binomial_table(d: int, offset: int = 0) -> list[BinomialTreeNode]:
    """Nodes of B_d in preorder, highest-dim child first; ids start at ``offset``.

    Preorder numbering means the root is ``offset`` and every subtree occupies
    a contiguous id range of size 2^dim.
    """
    table: list[BinomialTreeNode] = []

    def build(dim: int, parent: Optional[int], depth: int) -> int:
        me = offset + len(table)
        table.append(None)  # type: ignore[arg-type]
        kids = []
        for cd in range(dim - 1, -1, -1):
            kids.append((build(cd, me, depth + 1), cd))
        table[me - offset] = BinomialTreeNode(me, dim, parent, tuple(kids), depth)
        return me

    build(d, None, 0)
    return table


def make_binomial_tree(
    d: int, max_nodes: int = DEFAULT_MAX_NODES
) -> tuple[Graph, int, tuple[BinomialTreeNode, ...]]:
    """Binomial tree B_d as (graph, root id, node table indexed by id)."""
    if d < 0:
        raise GraphError("dimension must be non-negative")
    check_size(1 << d, max_nodes)
    table = binomial_table(d)
    edges = [(t.parent, t.id) for t in table if t.parent is not None]
    return Graph.from_edges(len(table), edges), 0, tuple(table)
