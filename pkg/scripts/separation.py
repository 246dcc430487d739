"""Classic broadcast time against the best universal lists on the two-cycle graphs.

k=2 with full permutations takes around a minute; k=3 is out of reach.
"""

import argparse

from oblivcast.bounds import separation_report
from oblivcast.oracle import ListSpace
from oblivcast.simulate import Model


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, nargs="+", default=[1, 2])
    ap.add_argument("--models", nargs="+", default=["fa", "a", "na"])
    ap.add_argument("--list-space", default="perm", choices=["perm", "subset"])
    args = ap.parse_args()

    space = ListSpace.FULL_PERMUTATIONS if args.list_space == "perm" else ListSpace.ORDERED_SUBSETS
    print(f"{'k':>2} {'model':>5} {'b':>3} {'lists':>5} {'exact':>5} {'explored':>9}")
    for row in separation_report(args.k, [Model.parse(m) for m in args.models], space):
        print(
            f"{row.k:>2} {row.model.value:>5} {row.classic:>3} {row.list_optimum:>5} "
            f"{str(row.exact):>5} {row.explored:>9}"
        )


if __name__ == "__main__":
    main()
