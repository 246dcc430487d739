"""Round-by-round source-oblivious broadcast.

Rounds are 1-indexed and the source is informed at round 0. Skip decisions
in round t only see who was informed at the end of round t-1, so two callers
may hit the same node in one round; both calls are logged.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence, Union

from .graphs import Graph
from .schemes import ListAssignment

INF = math.inf
Rounds = Union[int, float]  # int, or INF when some node is never reached


class Model(enum.Enum):
    NON_ADAPTIVE = "na"
    ADAPTIVE = "a"
    FULLY_ADAPTIVE = "fa"

    @classmethod
    def parse(cls, text: Union[str, "Model"]) -> "Model":
        if isinstance(text, Model):
            return text
        aliases = {
            "na": cls.NON_ADAPTIVE,
            "non-adaptive": cls.NON_ADAPTIVE,
            "a": cls.ADAPTIVE,
            "adaptive": cls.ADAPTIVE,
            "fa": cls.FULLY_ADAPTIVE,
            "fully-adaptive": cls.FULLY_ADAPTIVE,
        }
        try:
            return aliases[text.lower()]
        except KeyError:
            raise ValueError(f"unknown model {text!r}") from None


@dataclass(frozen=True)
class SimulationTrace:
    source: int
    model: Model
    informed_at: tuple[Rounds, ...]
    calls: tuple[tuple[tuple[int, int], ...], ...]  # calls[t-1] = round t
    completion: Rounds

    @property
    def rounds(self) -> int:
        return len(self.calls)


def simulate(
    g: Graph,
    lists: ListAssignment,
    source: int,
    model: Model = Model.FULLY_ADAPTIVE,
    check: bool = True,
) -> SimulationTrace:
    """Broadcast from ``source`` following ``lists`` under ``model``.

    Fully-adaptive nodes skip every list entry informed before the round.
    Adaptive nodes skip only entries they have received the message from
    (their own callees never come up again since entries are distinct).
    Non-adaptive nodes skip nothing.
    """
    model = Model.parse(model)
    n = g.n
    if check:
        lists.validate(g)
    if not 0 <= source < n:
        raise ValueError(f"source {source} outside 0..{n - 1}")

    informed_at: list[Rounds] = [INF] * n
    informed_at[source] = 0
    informed = [False] * n
    informed[source] = True
    cursor = [0] * n
    heard_from: list[set[int]] = [set() for _ in range(n)]
    active = [source]
    log = []
    count, t = 1, 0

    while count < n and active:
        t += 1
        round_calls = []
        still = []
        for v in active:
            lst = lists[v]
            c = cursor[v]
            if model is Model.FULLY_ADAPTIVE:
                while c < len(lst) and informed[lst[c]]:
                    c += 1
            elif model is Model.ADAPTIVE:
                while c < len(lst) and lst[c] in heard_from[v]:
                    c += 1
            if c == len(lst):
                cursor[v] = c
                continue
            round_calls.append((v, lst[c]))
            cursor[v] = c + 1
            if c + 1 < len(lst):
                still.append(v)
        if not round_calls:
            t -= 1
            break
        fresh = []
        for v, w in round_calls:
            heard_from[w].add(v)
            if informed_at[w] == INF:
                informed_at[w] = t
                fresh.append(w)
        for w in fresh:
            informed[w] = True
        count += len(fresh)
        active = sorted(still + fresh)
        log.append(tuple(round_calls))

    completion: Rounds = max(informed_at) if count == n else INF
    return SimulationTrace(source, model, tuple(informed_at), tuple(log), completion)


def max_broadcast_time(
    g: Graph,
    lists: ListAssignment,
    model: Model = Model.FULLY_ADAPTIVE,
    sources: Sequence[int] | None = None,
) -> tuple[Rounds, list[Rounds]]:
    """Worst completion over sources, plus the per-source completions.

    Uses the compiled batch kernel; ``simulate`` is the reference it is
    tested against.
    """
    from .fastsim import completion_times

    lists.validate(g)
    per = completion_times(lists, Model.parse(model), sources)
    worst = max(per) if per else 0
    return worst, per


def max_broadcast_time_reference(
    g: Graph, lists: ListAssignment, model: Model = Model.FULLY_ADAPTIVE
) -> tuple[Rounds, list[Rounds]]:
    lists.validate(g)
    per = [simulate(g, lists, s, model, check=False).completion for s in range(g.n)]
    return max(per), per
