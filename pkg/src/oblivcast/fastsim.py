"""Compiled all-sources completion kernel.

Same round semantics as ``simulate.simulate`` but returns only completion
rounds, which is what the large sweeps need. Lists are packed CSR-style:
``entries[offsets[v]:offsets[v+1]]`` is the list of v, and ``rev[i]`` is the
flat position of the caller inside the callee's list (or -1) so adaptive
nodes can mark "heard from" entries in O(1).
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np
from numba import njit

from .schemes import ListAssignment
from .simulate import INF, Model, Rounds

_CODE = {Model.NON_ADAPTIVE: 0, Model.ADAPTIVE: 1, Model.FULLY_ADAPTIVE: 2}


def pack(lists: ListAssignment) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    n = len(lists)
    offsets = np.zeros(n + 1, dtype=np.int64)
    for v, lst in enumerate(lists):
        offsets[v + 1] = offsets[v] + len(lst)
    entries = np.fromiter((w for lst in lists for w in lst), dtype=np.int64, count=int(offsets[-1]))
    where = {}
    for v, lst in enumerate(lists):
        for j, w in enumerate(lst):
            where[v, w] = offsets[v] + j
    rev = np.full(len(entries), -1, dtype=np.int64)
    for v, lst in enumerate(lists):
        for j, w in enumerate(lst):
            rev[offsets[v] + j] = where.get((w, v), -1)
    return offsets, entries, rev


@njit(cache=True)
def _completions(offsets, entries, rev, model, sources, bound):  # pragma: no cover - compiled
    n = offsets.shape[0] - 1
    out = np.empty(sources.shape[0], dtype=np.int64)
    informed = np.zeros(n, dtype=np.bool_)
    known = np.zeros(entries.shape[0], dtype=np.bool_)
    cursor = np.empty(n, dtype=np.int64)
    active = np.empty(n, dtype=np.int64)
    nxt = np.empty(n, dtype=np.int64)
    picked = np.empty(n, dtype=np.int64)
    for si in range(sources.shape[0]):
        s = sources[si]
        informed[:] = False
        if model == 1:
            known[:] = False
        for v in range(n):
            cursor[v] = offsets[v]
        informed[s] = True
        count = 1
        na = 1
        active[0] = s
        t = 0
        while count < n and na > 0:
            t += 1
            if bound >= 0 and t > bound:
                break
            nc = 0
            nn = 0
            for i in range(na):
                v = active[i]
                c = cursor[v]
                end = offsets[v + 1]
                if model == 2:
                    while c < end and informed[entries[c]]:
                        c += 1
                elif model == 1:
                    while c < end and known[c]:
                        c += 1
                if c == end:
                    cursor[v] = c
                    continue
                picked[nc] = c
                nc += 1
                cursor[v] = c + 1
                if c + 1 < end:
                    nxt[nn] = v
                    nn += 1
            if nc == 0:
                break
            for j in range(nc):
                c = picked[j]
                w = entries[c]
                if model == 1 and rev[c] >= 0:
                    known[rev[c]] = True
                if not informed[w]:
                    informed[w] = True
                    count += 1
                    nxt[nn] = w
                    nn += 1
            na = nn
            for i in range(nn):
                active[i] = nxt[i]
        out[si] = t if count == n else -1
    return out


def completion_times(
    lists: ListAssignment,
    model: Model = Model.FULLY_ADAPTIVE,
    sources: Optional[Sequence[int]] = None,
    packed=None,
    bound: int = -1,
) -> list[Rounds]:
    """Completion round per source (INF when some node is never reached).

    With ``bound >= 0`` a source stops after ``bound`` rounds and reports INF
    if it has not finished; the search uses this to abandon losers early.
    """
    offsets, entries, rev = packed if packed is not None else pack(lists)
    n = len(offsets) - 1
    src = np.arange(n, dtype=np.int64) if sources is None else np.asarray(sources, dtype=np.int64)
    raw = _completions(offsets, entries, rev, _CODE[Model.parse(model)], src, bound)
    return [INF if x < 0 else int(x) for x in raw]
