"""Command-line entry point: ``oblivcast <command> ...``.

Exit codes: 0 success, 1 verification failure or unreachable nodes,
2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .bounds import (
    FAMILIES,
    edge_budget_theorem2,
    leading_ones,
    verify_family,
)
from .graphs import GraphError, make_clique, make_two_cycles
from .fileio import InstanceError, InstanceFile, canonical_json, record_line, record_table, to_dot, trace_to_dict
from .oracle import BudgetExceeded, ListSpace, SearchConfig, optimal_list_assignment
from .schemes import (
    clique_lists,
    hypercube_lists,
    is_power_of_two,
    log2_ceil,
    theorem1_construction,
    theorem2_construction,
    theorem2_decompose,
)
from .simulate import INF, Model, simulate

CONSTRUCT_FAMILIES = ("theorem1", "theorem2", "hypercube", "clique", "clique-graph", "two-cycles")


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    """``A..B`` inclusive, or a single integer."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            return range(int(a), int(b) + 1)
        return range(int(text), int(text) + 1)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected A..B") from None


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name} is required for family {args.family}")
    return value


def build_instance(args) -> InstanceFile:
    fam = args.family
    if fam in ("theorem1", "theorem2"):
        n = _need(args, "n")
        if is_power_of_two(n):
            raise UsageError(f"n={n} is a power of two; use: construct hypercube --d {log2_ceil(n)}")
        if fam == "theorem2" and n < 3:
            raise UsageError("theorem2 needs n >= 3; use: construct clique --n 2")
        build = theorem1_construction if fam == "theorem1" else theorem2_construction
        g, lists = build(n)
        meta = {"family": fam, "n": n}
        if fam == "theorem2":
            dec = theorem2_decompose(n)
            meta.update(m=dec.m, k=dec.k, r=dec.r)
        return InstanceFile(g, lists, meta)
    if fam == "hypercube":
        d = _need(args, "d")
        g, lists = hypercube_lists(d)
        return InstanceFile(g, lists, {"family": fam, "d": d})
    if fam == "clique":
        n = _need(args, "n")
        g, lists = clique_lists(n)
        return InstanceFile(g, lists, {"family": fam, "n": n})
    if fam == "clique-graph":
        n = _need(args, "n")
        return InstanceFile(make_clique(n), None, {"family": "clique", "n": n})
    if fam == "two-cycles":
        k = _need(args, "k")
        return InstanceFile(make_two_cycles(k), None, {"family": fam, "k": k})
    raise UsageError(f"unknown family {fam!r}")


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_construct(args) -> int:
    inst = build_instance(args)
    _emit(inst.dumps(), args.out)
    return 0


def _fmt(x) -> str:
    return "inf" if x == INF else str(x)


def cmd_simulate(args) -> int:
    inst = InstanceFile.load(args.instance)
    if inst.lists is None:
        raise UsageError("instance has no lists; construct a family that defines them")
    if not 0 <= args.source < inst.graph.n:
        raise UsageError(f"source {args.source} outside 0..{inst.graph.n - 1}")
    trace = simulate(inst.graph, inst.lists, args.source, Model.parse(args.model))
    print(f"completion: {_fmt(trace.completion)}")
    if args.trace:
        for t, calls in enumerate(trace.calls, start=1):
            print(f"round {t}: " + " ".join(f"{u}->{w}" for u, w in calls))
        for v, at in enumerate(trace.informed_at):
            print(f"informed {v}: {_fmt(at)}")
        if args.out:
            _emit(canonical_json(trace_to_dict(trace)), args.out)
    return 1 if trace.completion == INF else 0


def cmd_verify(args) -> int:
    values = parse_range(args.range)
    compare = [Model.parse(m) for m in args.compare or ()]
    sink = open(args.out, "w") if args.out else None
    try:
        def stream(rec):
            line = record_line(rec)
            if sink is not None:
                sink.write(line + "\n")
                sink.flush()
            elif not args.quiet:
                print(line)

        records = verify_family(args.family, values, Model.parse(args.model), compare, stream)
    finally:
        if sink is not None:
            sink.close()
    print(record_table(records))
    return 0 if all(r.passed for r in records) else 1


def cmd_search(args) -> int:
    if args.instance:
        graph = InstanceFile.load(args.instance).graph
    elif args.k is not None:
        graph = make_two_cycles(args.k)
    else:
        raise UsageError("search needs an instance path or --k")
    cfg = SearchConfig(Model.parse(args.model), ListSpace(args.list_space))
    if args.assignment_budget:
        cfg = SearchConfig(cfg.model, cfg.list_space, cfg.node_budget, args.assignment_budget)
    res = optimal_list_assignment(graph, cfg)
    flag = "" if res.exact else " (non-exact: assignment budget exhausted)"
    print(f"best: {_fmt(res.value)}{flag}")
    print(f"explored: {res.explored} of {res.space_size}")
    for v, lst in enumerate(res.witness):
        print(f"  {v}: {' '.join(map(str, lst))}")
    return 0


def cmd_bounds(args) -> int:
    n = args.n
    if n < 2:
        raise UsageError("bounds needs n >= 2")
    print(f"n: {n}")
    print(f"m: {log2_ceil(n)}")
    print(f"L: {leading_ones(n)}")
    if is_power_of_two(n):
        print(f"hypercube edges: {log2_ceil(n) * n // 2}")
    elif n >= 3:
        dec = theorem2_decompose(n)
        print(f"theorem2: m={dec.m} k={dec.k} r={dec.r}")
        print(f"theorem2 edge budget: {edge_budget_theorem2(n)}")
    return 0


def cmd_export_dot(args) -> int:
    inst = InstanceFile.load(args.instance)
    _emit(to_dot(inst.graph), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oblivcast", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    models = ["na", "a", "fa"]

    c = sub.add_parser("construct", help="build a family and write an instance file")
    c.add_argument("family", nargs="?", choices=CONSTRUCT_FAMILIES)
    c.add_argument("--family", dest="family_opt", choices=CONSTRUCT_FAMILIES)
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--d", type=int)
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    s = sub.add_parser("simulate", help="broadcast from one source")
    s.add_argument("instance")
    s.add_argument("--source", type=int, default=0)
    s.add_argument("--model", choices=models, default="fa")
    s.add_argument("--trace", action="store_true")
    s.add_argument("--out", help="with --trace, also write the trace as JSON")
    s.set_defaults(func=cmd_simulate)

    v = sub.add_parser("verify", help="sweep a family and check the round and edge claims")
    v.add_argument("family", nargs="?", choices=FAMILIES)
    v.add_argument("--family", dest="family_opt", choices=FAMILIES)
    v.add_argument("--range", required=True, help="A..B (values of d for hypercube)")
    v.add_argument("--model", choices=models, default="fa")
    v.add_argument("--compare", nargs="*", choices=models, help="extra model columns")
    v.add_argument("--out", help="write line-delimited JSON records here")
    v.add_argument("--quiet", action="store_true")
    v.set_defaults(func=cmd_verify)

    q = sub.add_parser("search", help="exhaustive list-assignment search")
    q.add_argument("instance", nargs="?")
    q.add_argument("--k", type=int, help="search the two-cycle graph G_k")
    q.add_argument("--model", choices=models, default="fa")
    q.add_argument("--list-space", choices=["perm", "subset"], default="perm")
    q.add_argument("--assignment-budget", type=int)
    q.set_defaults(func=cmd_search)

    b = sub.add_parser("bounds", help="print m, L(n) and the theorem2 budget")
    b.add_argument("--n", type=int, required=True)
    b.set_defaults(func=cmd_bounds)

    x = sub.add_parser("export-dot", help="write a DOT rendering of an instance")
    x.add_argument("instance")
    x.add_argument("--out")
    x.set_defaults(func=cmd_export_dot)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "family_opt"):
        args.family = args.family or args.family_opt
        if args.family is None:
            parser.error("a family is required")
    try:
        return args.func(args)
    except (UsageError, InstanceError, BudgetExceeded, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
