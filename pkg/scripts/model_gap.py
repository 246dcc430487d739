"""How much the constructions lose when nodes cannot skip informed neighbors.

For each n, prints the worst-source completion under the fully adaptive,
adaptive and non-adaptive rules.
"""

import argparse

from oblivcast.schemes import is_power_of_two, log2_ceil, theorem1_construction, theorem2_construction
from oblivcast.simulate import Model, max_broadcast_time

BUILDERS = {"theorem1": theorem1_construction, "theorem2": theorem2_construction}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--family", choices=sorted(BUILDERS), default="theorem2")
    ap.add_argument("--max-n", type=int, default=64)
    args = ap.parse_args()

    print(f"{'n':>5} {'m':>3} {'fa':>4} {'a':>4} {'na':>4}")
    for n in range(3, args.max_n + 1):
        if is_power_of_two(n):
            continue
        g, lists = BUILDERS[args.family](n)
        fa, a, na = (max_broadcast_time(g, lists, m)[0] for m in (Model.FULLY_ADAPTIVE, Model.ADAPTIVE, Model.NON_ADAPTIVE))
        print(f"{n:>5} {log2_ceil(n):>3} {fa:>4} {a:>4} {na:>4}")


if __name__ == "__main__":
    main()
