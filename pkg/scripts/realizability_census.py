"""Census of interlacement-graph realizability over all small graphs.

Walks every edge set on up to --max-n vertices, decides each one by
exhaustive backtracking, and prints a per-size table: edge sets, how many
realize, and how many isomorphism classes of obstructions remain.  With
the default bound the obstruction column stays zero until six vertices.

    python3 scripts/realizability_census.py
    python3 scripts/realizability_census.py --max-n 6   # a few minutes
"""

import argparse
import time

from graphlinks import LoopedGraph, all_graphs, canonical_form, realize


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=5,
                    help="largest vertex count to sweep (default: 5)")
    args = ap.parse_args()

    print(f"{'n':>2} {'edge sets':>10} {'realizable':>10} {'obstruction classes':>20}")
    for n in range(args.max_n + 1):
        t0 = time.perf_counter()
        total = good = 0
        obstruction_keys = set()
        for edges in all_graphs(n):
            g = LoopedGraph.build([0] * n, edges)
            total += 1
            if realize(g) is not None:
                good += 1
            else:
                obstruction_keys.add(canonical_form(g, respect_labels=False))
        dt = time.perf_counter() - t0
        print(f"{n:>2} {total:>10} {good:>10} {len(obstruction_keys):>20}   [{dt:.1f}s]")


if __name__ == "__main__":
    main()
