"""Chord diagrams, interlacement graphs, and realizability.

A chord diagram is a double-occurrence word: 2n tokens around a circle,
every chord name appearing exactly twice.  Two chords are linked when their
occurrences alternate.  realize() answers whether a given graph is the
interlacement graph of some diagram by exhaustive backtracking placement of
chords on the 2n circle positions, so a miss is a proof of non-existence.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .errors import BudgetExceededError, TooLargeError
from .graphs import AnyGraph, LabeledGraph, LoopedGraph

REALIZE_BOUND_DEFAULT = 9

DEFAULT_LABEL = (0, 1)  # unlabeled chords count as (0,+)


@dataclass(frozen=True)
class ChordDiagram:
    """Double-occurrence word plus a label per chord name.

    labels holds (name, framing, sign) triples in first-occurrence order;
    chords absent from an input mapping get the default (0,+).
    """

    word: tuple[str, ...]
    labels: tuple[tuple[str, int, int], ...]

    def __post_init__(self) -> None:
        counts: dict[str, int] = {}
        for tok in self.word:
            counts[tok] = counts.get(tok, 0) + 1
        wrong = {t: c for t, c in counts.items() if c != 2}
        if wrong:
            raise ValueError(f"not a double-occurrence word: {wrong}")
        if tuple(nm for nm, _, _ in self.labels) != tuple(self.chord_names()):
            raise ValueError("labels must list chords in first-occurrence order")

    @classmethod
    def build(
        cls,
        word: Sequence[str],
        labels: Optional[Mapping[str, tuple[int, int]]] = None,
    ) -> ChordDiagram:
        labels = dict(labels or {})
        seen: list[str] = []
        for tok in word:
            if tok not in seen:
                seen.append(tok)
        unknown = set(labels) - set(seen)
        if unknown:
            raise ValueError(f"labels for chords not in the word: {sorted(unknown)}")
        triples = tuple((nm, *labels.get(nm, DEFAULT_LABEL)) for nm in seen)
        return cls(tuple(word), triples)

    def chord_names(self) -> list[str]:
        seen: list[str] = []
        for tok in self.word:
            if tok not in seen:
                seen.append(tok)
        return seen

    def label(self, name: str) -> tuple[int, int]:
        for nm, f, s in self.labels:
            if nm == name:
                return (f, s)
        raise KeyError(name)

    @property
    def n(self) -> int:
        return len(self.word) // 2


def _linked(a1: int, a2: int, b1: int, b2: int) -> bool:
    """Chords (a1,a2) and (b1,b2), endpoints given low-to-high, alternate."""
    return (a1 < b1 < a2) != (a1 < b2 < a2)


def interlacement(d: ChordDiagram) -> LabeledGraph:
    """Labeled interlacement graph; vertex order is chord first-occurrence order."""
    names = d.chord_names()
    spans = {}
    for pos, tok in enumerate(d.word):
        spans.setdefault(tok, []).append(pos)
    edges = []
    for i, a in enumerate(names):
        for j in range(i + 1, len(names)):
            b = names[j]
            if _linked(*spans[a], *spans[b]):
                edges.append((i, j))
    framings = [d.label(nm)[0] for nm in names]
    signs = [d.label(nm)[1] for nm in names]
    return LabeledGraph.build(framings, signs, edges, names=names)


def is_d_diagram(d: ChordDiagram) -> bool:
    """True when the chords split into two pairwise-unlinked families."""
    return _is_bipartite(interlacement(d))


def _is_bipartite(g: LabeledGraph) -> bool:
    color: dict[int, int] = {}
    for start in range(g.n):
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if u not in color:
                    color[u] = color[v] ^ 1
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def realize(
    g: AnyGraph,
    time_budget: Optional[float] = None,
    max_vertices: int = REALIZE_BOUND_DEFAULT,
) -> Optional[ChordDiagram]:
    """A chord diagram whose interlacement graph is isomorphic to g, or None.

    None is proof: the backtracking enumerates all placements up to rotation
    and reflection, so exhaustion means no diagram exists.  Loops on looped
    input are ignored; labels on labeled input are carried onto the chords.

    Raises:
        TooLargeError: more vertices than max_vertices.
        BudgetExceededError: time_budget seconds elapsed before an answer.
    """
    n = g.n
    if n > max_vertices:
        raise TooLargeError(f"realize limited to {max_vertices} vertices, got {n}")
    names = [v.name for v in g.vertices]
    if n == 0:
        return ChordDiagram.build(())
    masks = g.neighbor_masks()
    degrees = [masks[v].bit_count() for v in range(n)]
    total = 2 * n
    deadline = None if time_budget is None else time.monotonic() + time_budget

    endpoints: dict[int, tuple[int, int]] = {}
    occupied = [False] * total
    ticks = 0

    def next_vertex() -> int:
        # most placed neighbors first, then degree, then lowest index
        best, key = -1, None
        for v in range(n):
            if v in endpoints:
                continue
            placed_nbrs = sum(1 for u in endpoints if (masks[v] >> u) & 1)
            k = (placed_nbrs, degrees[v], -v)
            if key is None or k > key:
                best, key = v, k
        return best

    def consistent(v: int, p: int, q: int) -> bool:
        for u, (b1, b2) in endpoints.items():
            if _linked(p, q, b1, b2) != bool((masks[v] >> u) & 1):
                return False
        return True

    def place(count: int) -> bool:
        nonlocal ticks
        ticks += 1
        if deadline is not None and ticks % 1024 == 0 and time.monotonic() > deadline:
            raise BudgetExceededError(f"realize ran past its {time_budget}s budget")
        if count == n:
            return True
        v = next_vertex()
        if count == 0:
            pairs = ((0, q) for q in range(1, n + 1))
        else:
            free = [p for p in range(total) if not occupied[p]]
            pairs = ((p, q) for i, p in enumerate(free) for q in free[i + 1 :])
        for p, q in pairs:
            if not consistent(v, p, q):
                continue
            endpoints[v] = (p, q)
            occupied[p] = occupied[q] = True
            if place(count + 1):
                return True
            del endpoints[v]
            occupied[p] = occupied[q] = False
        return False

    if not place(0):
        return None
    word = [""] * total
    for v, (p, q) in endpoints.items():
        word[p] = word[q] = names[v]
    labels = None
    if isinstance(g, LabeledGraph):
        labels = {names[v]: (g.framing(v), g.sign(v)) for v in range(n)}
    return ChordDiagram.build(word, labels)


def wheel(k: int, framing: int = 0, sign: int = 1) -> LabeledGraph:
    """Hub joined to every vertex of a k-cycle; uniform labels.

    wheel(5) and wheel(7) are the non-realizable examples used throughout
    the test suite.
    """
    if k < 3:
        raise ValueError("a wheel needs a cycle of length at least 3")
    edges = [(0, i) for i in range(1, k + 1)]
    edges += [(i, i % k + 1) for i in range(1, k + 1)]
    names = ["hub"] + [f"r{i}" for i in range(1, k + 1)]
    return LabeledGraph.build([framing] * (k + 1), [sign] * (k + 1), edges, names=names)
