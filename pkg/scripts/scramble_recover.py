"""Scramble graphs by random moves and let the search reconnect them.

For each trial: draw a random labeled graph, apply --scramble random
applicable moves, then hand both endpoints to the bounded equivalence
search.  Tabulates outcome counts and certificate depths; Distinguished
should never appear, and Inconclusive only when the bounds are too tight
for the scramble length.

    python3 scripts/scramble_recover.py
    python3 scripts/scramble_recover.py --trials 50 --scramble 5 --max-depth 7
"""

import argparse
import random
from collections import Counter

from graphlinks import (
    AdditionPayload,
    LabeledGraph,
    MoveDescriptor,
    SearchBounds,
    apply_move,
    list_moves,
    prove_equivalent,
)


def random_graph(rng: random.Random, nmax: int) -> LabeledGraph:
    n = rng.randint(0, nmax)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
    framings = [rng.randrange(2) for _ in range(n)]
    signs = [rng.choice((1, -1)) for _ in range(n)]
    return LabeledGraph.build(framings, signs, edges)


def random_addition(rng: random.Random, g: LabeledGraph, tag: int) -> MoveDescriptor:
    pos = rng.randint(0, g.n)
    if rng.random() < 0.5:
        payload = AdditionPayload(labels=((0, rng.choice((1, -1))),), positions=(pos,))
        return MoveDescriptor("Og1", "add", (f"s{tag}",), payload)
    f = rng.randrange(2)
    alpha = rng.choice((1, -1))
    nbrs = tuple(v.name for v in g.vertices if rng.random() < 0.5)
    payload = AdditionPayload(labels=((f, alpha), (f, -alpha)), adjacent=bool(f),
                              neighbors=nbrs, positions=(pos, pos + 1))
    return MoveDescriptor("Og2", "add", (f"s{tag}", f"t{tag}"), payload)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=25)
    ap.add_argument("--scramble", type=int, default=4, help="moves per trial")
    ap.add_argument("--nmax", type=int, default=5, help="starting-graph size cap")
    ap.add_argument("--max-depth", type=int, default=6)
    ap.add_argument("--max-states", type=int, default=30_000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    bounds = SearchBounds(max_depth=args.max_depth, max_states=args.max_states)
    outcomes: Counter = Counter()
    depths: list[int] = []
    for trial in range(args.trials):
        g1 = random_graph(rng, args.nmax)
        g2 = g1
        for step in range(args.scramble):
            pool = list_moves(g2)
            pool.append(random_addition(rng, g2, trial * args.scramble + step))
            g2 = apply_move(g2, rng.choice(pool))
        res = prove_equivalent(g1, g2, bounds=bounds)
        outcomes[res.status] += 1
        if res.certificate is not None:
            depths.append(res.certificate.depth_reached)

    print(f"{args.trials} trials, {args.scramble} scramble moves each: {dict(outcomes)}")
    if depths:
        print(f"certificate depths: min {min(depths)} / mean"
              f" {sum(depths) / len(depths):.1f} / max {max(depths)}")


if __name__ == "__main__":
    main()
