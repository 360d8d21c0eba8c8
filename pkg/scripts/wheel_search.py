"""Time the exhaustive non-realizability search on odd wheels.

The 5-wheel is the smallest graph that is no interlacement graph and the
7-wheel is the next odd one; the backtracker proves both by exhausting
every placement.  For each rim size the script also frames the wheel with
all 1s and, when that graph is a knot, reports what chi makes of it.

    python3 scripts/wheel_search.py
    python3 scripts/wheel_search.py --rims 5 7 9 --budget 120
"""

import argparse
import time

from graphlinks import BudgetExceededError, chi, knot_matrix, realize, wheel


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rims", type=int, nargs="+", default=[5, 7], metavar="K",
                    help="rim sizes to try (default: 5 7)")
    ap.add_argument("--budget", type=float, default=None, metavar="SECONDS",
                    help="give up on a wheel after this long")
    args = ap.parse_args()

    for k in args.rims:
        g = wheel(k)
        t0 = time.perf_counter()
        try:
            diagram = realize(g, time_budget=args.budget, max_vertices=g.n)
        except BudgetExceededError:
            print(f"W{k} ({g.n} vertices): budget exhausted after {args.budget}s")
            continue
        dt = time.perf_counter() - t0
        if diagram is None:
            print(f"W{k} ({g.n} vertices): not an interlacement graph [{dt:.2f}s]")
        else:
            print(f"W{k} ({g.n} vertices): realized by {' '.join(diagram.word)} [{dt:.2f}s]")

        framed = wheel(k, framing=1)
        if knot_matrix(framed).determinant() != 1:
            print(f"  all-framings-1 W{k} is not a knot")
            continue
        image = chi(framed)
        loops = sum(image.looped(i) for i in range(image.n))
        print(f"  all-framings-1 W{k} is a knot; chi image carries {loops} loops")


if __name__ == "__main__":
    main()
