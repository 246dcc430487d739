"""Instance files, traces, report rows and DOT export.

Instance file (JSON, keys sorted, 2-space indent, trailing newline)::

    {
      "edges": [[u, v], ...],          # u < v, sorted
      "format": "oblivcast-instance",
      "labels": ["000", ...] | null,   # bit strings indexed by node id
      "lists": {"0": [..], ...} | null,
      "metadata": {"family": ..., ...},
      "n": 6,
      "version": 1
    }

Unreachable rounds are written as ``null``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional

from .graphs import Graph
from .schemes import ListAssignment
from .simulate import INF, SimulationTrace

FORMAT_TAG = "oblivcast-instance"
VERSION = 1


class InstanceError(ValueError):
    pass


@dataclass(frozen=True)
class InstanceFile:
    graph: Graph
    lists: Optional[ListAssignment] = None
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.graph.validate()
        if self.lists is not None:
            self.lists.validate(self.graph)

    def to_dict(self) -> dict[str, Any]:
        return {
            "format": FORMAT_TAG,
            "version": VERSION,
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.edges],
            "labels": None if self.graph.labels is None else list(self.graph.labels),
            "lists": None
            if self.lists is None
            else {str(v): list(lst) for v, lst in enumerate(self.lists)},
            "metadata": self.metadata,
        }

    def dumps(self) -> str:
        return canonical_json(self.to_dict())

    @classmethod
    def from_dict(cls, doc: dict) -> "InstanceFile":
        if doc.get("format") != FORMAT_TAG:
            raise InstanceError("not an instance file")
        if doc.get("version") != VERSION:
            raise InstanceError(f"unsupported version {doc.get('version')!r}")
        n = doc["n"]
        try:
            g = Graph.from_edges(n, [tuple(e) for e in doc["edges"]], doc.get("labels"))
        except ValueError as exc:
            raise InstanceError(str(exc)) from exc
        raw = doc.get("lists")
        lists = None
        if raw is not None:
            if set(raw) != {str(v) for v in range(n)}:
                raise InstanceError("lists must have one entry per node")
            lists = ListAssignment.of(raw[str(v)] for v in range(n))
        try:
            return cls(g, lists, dict(doc.get("metadata") or {}))
        except ValueError as exc:
            raise InstanceError(str(exc)) from exc

    @classmethod
    def loads(cls, text: str) -> "InstanceFile":
        return cls.from_dict(json.loads(text))

    @classmethod
    def load(cls, path) -> "InstanceFile":
        with open(path) as fh:
            return cls.loads(fh.read())

    def save(self, path) -> None:
        with open(path, "w") as fh:
            fh.write(self.dumps())


def canonical_json(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _round(x):
    return None if x == INF else x


def trace_to_dict(trace: SimulationTrace) -> dict:
    return {
        "source": trace.source,
        "model": trace.model.value,
        "completion": _round(trace.completion),
        "informed_at": [_round(x) for x in trace.informed_at],
        "calls": [[list(c) for c in rnd] for rnd in trace.calls],
    }


def record_line(record) -> str:
    """One line of the verification stream."""
    return json.dumps(record.to_dict(), sort_keys=True)


def record_table(records) -> str:
    header = f"{'family':<10} {'n':>6} {'m':>3} {'edges':>8} {'budget':>8} {'rounds':>6} {'pass':>5}"
    rows = [header, "-" * len(header)]
    for r in records:
        if r.skipped:
            rows.append(f"{r.family:<10} {r.n:>6} {r.m:>3} {'':>8} {'':>8} {'':>6} {'skip':>5}")
            continue
        worst = "inf" if r.worst == INF else str(r.worst)
        rows.append(
            f"{r.family:<10} {r.n:>6} {r.m:>3} {r.edges:>8} {r.edge_budget:>8} {worst:>6} "
            f"{'yes' if r.passed else 'NO':>5}"
        )
    done = [r for r in records if not r.skipped]
    rows.append(f"{sum(r.passed for r in done)}/{len(done)} passed, {len(records) - len(done)} skipped")
    return "\n".join(rows)


def to_dot(graph: Graph, name: str = "G") -> str:
    """Undirected DOT text; nodes in id order, labels as attributes."""
    out = [f"graph {name} {{"]
    for v in range(graph.n):
        if graph.labels is not None:
            out.append(f'  {v} [label="{graph.labels[v]}"];')
        else:
            out.append(f"  {v};")
    for u, v in graph.edges:
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"
