"""Sweep a construction family over a range of n and write JSON-lines records.

    python3 scripts/sweep_constructions.py theorem2 3 1024 --out results/theorem2.jsonl
"""

import argparse
import json
import sys
import time
from pathlib import Path

from oblivcast.bounds import FAMILIES, verify_family
from oblivcast.simulate import Model


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("family", choices=FAMILIES)
    ap.add_argument("lo", type=int)
    ap.add_argument("hi", type=int, help="inclusive")
    ap.add_argument("--model", default="fa", choices=[m.value for m in Model])
    ap.add_argument("--compare", nargs="*", default=[], choices=[m.value for m in Model])
    ap.add_argument("--out", type=Path)
    args = ap.parse_args()

    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
    sink = args.out.open("w") if args.out else sys.stdout
    start = time.perf_counter()
    records = verify_family(
        args.family,
        range(args.lo, args.hi + 1),
        Model.parse(args.model),
        [Model.parse(c) for c in args.compare],
        on_record=lambda r: print(json.dumps(r.to_dict()), file=sink, flush=True),
    )
    ran = [r for r in records if not r.skipped]
    bad = [r.n for r in ran if not r.passed]
    print(
        f"{args.family}: {len(ran) - len(bad)}/{len(ran)} passed, "
        f"{len(records) - len(ran)} skipped, {time.perf_counter() - start:.1f}s",
        file=sys.stderr,
    )
    if bad:
        print(f"failing n: {bad[:20]}", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
