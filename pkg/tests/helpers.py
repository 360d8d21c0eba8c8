"""Shared random generators and hypothesis strategies for the suite."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from graphlinks import ChordDiagram, LabeledGraph, LoopedGraph, is_graph_knot
from graphlinks.gf2 import Gf2Matrix


def names_for(n: int) -> list[str]:
    return [chr(97 + i % 26) + ("" if i < 26 else str(i // 26)) for i in range(n)]


def random_edges(rng: random.Random, n: int, p: float = 0.4) -> set[tuple[int, int]]:
    return {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p}


def random_labeled(rng: random.Random, nmax: int, nmin: int = 0) -> LabeledGraph:
    n = rng.randint(nmin, nmax)
    return LabeledGraph.build(
        [rng.randrange(2) for _ in range(n)],
        [rng.choice((1, -1)) for _ in range(n)],
        random_edges(rng, n),
        names=names_for(n),
    )


def random_looped(rng: random.Random, nmax: int, nmin: int = 0) -> LoopedGraph:
    n = rng.randint(nmin, nmax)
    return LoopedGraph.build(
        [rng.random() < 0.5 for _ in range(n)],
        random_edges(rng, n),
        names=names_for(n),
    )


def random_knot(rng: random.Random, nmax: int, nmin: int = 0) -> LabeledGraph:
    while True:
        g = random_labeled(rng, nmax, nmin)
        if is_graph_knot(g):
            return g


def permuted(g, perm):
    """Rebuild g with vertex i moved to position perm[i]; names dropped."""
    edges = {(min(perm[a], perm[b]), max(perm[a], perm[b])) for a, b in g.edges}
    if isinstance(g, LabeledGraph):
        framings = [0] * g.n
        signs = [1] * g.n
        for v in range(g.n):
            framings[perm[v]] = g.framing(v)
            signs[perm[v]] = g.sign(v)
        return LabeledGraph.build(framings, signs, edges, names=names_for(g.n))
    loops = [False] * g.n
    for v in range(g.n):
        loops[perm[v]] = g.looped(v)
    return LoopedGraph.build(loops, edges, names=names_for(g.n))


def random_symmetric(rng: random.Random, n: int) -> Gf2Matrix:
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = rng.randrange(2)
        for j in range(i + 1, n):
            rows[i][j] = rows[j][i] = rng.randrange(2)
    return Gf2Matrix.from_lists(rows)


def random_diagram(rng: random.Random, nmax: int) -> ChordDiagram:
    n = rng.randint(1, nmax)
    word = names_for(n) * 2
    rng.shuffle(word)
    labels = {
        nm: (rng.randrange(2), rng.choice((1, -1)))
        for nm in names_for(n)
        if rng.random() < 0.5
    }
    return ChordDiagram.build(word, labels)


@st.composite
def square_matrices(draw, max_n: int = 5) -> Gf2Matrix:
    n = draw(st.integers(min_value=0, max_value=max_n))
    rows = draw(
        st.lists(
            st.integers(min_value=0, max_value=(1 << n) - 1 if n else 0),
            min_size=n,
            max_size=n,
        )
    )
    return Gf2Matrix(n, tuple(rows))


@st.composite
def symmetric_matrices(draw, max_n: int = 6) -> Gf2Matrix:
    n = draw(st.integers(min_value=0, max_value=max_n))
    bits = draw(
        st.lists(st.booleans(), min_size=n * (n + 1) // 2, max_size=n * (n + 1) // 2)
    )
    rows = [[0] * n for _ in range(n)]
    k = 0
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = int(bits[k])
            k += 1
    return Gf2Matrix.from_lists(rows)


@st.composite
def labeled_graphs(draw, max_n: int = 6, min_n: int = 0) -> LabeledGraph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return LabeledGraph.build(
        draw(st.lists(st.integers(0, 1), min_size=n, max_size=n)),
        draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n)),
        {p for p, keep in zip(pairs, mask) if keep},
        names=names_for(n),
    )


@st.composite
def looped_graphs(draw, max_n: int = 6, min_n: int = 0) -> LoopedGraph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return LoopedGraph.build(
        draw(st.lists(st.booleans(), min_size=n, max_size=n)),
        {p for p, keep in zip(pairs, mask) if keep},
        names=names_for(n),
    )
