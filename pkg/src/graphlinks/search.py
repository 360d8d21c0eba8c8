"""Bounded bidirectional search for move-equivalence certificates.

States are canonical keys; representatives stay concrete so that a found
path replays as a plain descriptor list from the start graph.  The search
answers one of three ways: a Certificate (path found), Distinguished (a
move-invariant differs, so no path exists), or Inconclusive (bounds ran
out).  Inconclusive is never evidence of inequivalence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import TooLargeError
from .graphs import AnyGraph, LabeledGraph, LoopedGraph, are_isomorphic, canonical_form
from .invariants import component_count, is_graph_knot, writhe
from .moves import (
    GRAPH_FAMILIES,
    LOOP_FAMILIES,
    AdditionPayload,
    MoveDescriptor,
    apply_move,
    inverse_descriptor,
    list_moves,
)

MAX_DEPTH_DEFAULT = 8
MAX_STATES_DEFAULT = 100_000


@dataclass(frozen=True)
class SearchBounds:
    max_depth: int = MAX_DEPTH_DEFAULT
    max_states: int = MAX_STATES_DEFAULT
    max_vertices: Optional[int] = None  # None: two more than the larger input


@dataclass(frozen=True)
class MoveCertificate:
    start_key: bytes
    end_key: bytes
    steps: tuple[MoveDescriptor, ...]
    states_explored: int
    depth_reached: int


@dataclass(frozen=True)
class EquivalenceResult:
    status: str  # "Certificate" | "Distinguished" | "Inconclusive"
    certificate: Optional[MoveCertificate] = None
    reason: Optional[str] = None
    stats: dict = field(default_factory=dict)


def replay(g: AnyGraph, steps: Iterable[MoveDescriptor]) -> AnyGraph:
    for m in steps:
        g = apply_move(g, m)
    return g


def invariant_distinguish(
    g1: LabeledGraph, g2: LabeledGraph, families: Optional[Iterable[str]] = None
) -> Optional[str]:
    """First move-invariant separating the two, or None.

    Which invariants apply depends on the requested families: component
    count always does; total writhe once Og1 is off the table; the sorted
    per-vertex writhe multiset only under Og4/Og4' alone.
    """
    fams = set(GRAPH_FAMILIES if families is None else families)
    c1, c2 = component_count(g1), component_count(g2)
    if c1 != c2:
        return f"component count {c1} != {c2}"
    if "Og1" not in fams and is_graph_knot(g1) and is_graph_knot(g2):
        w1, w2 = writhe(g1), writhe(g2)
        if w1.total != w2.total:
            return f"total writhe {w1.total} != {w2.total}"
        if fams <= {"Og4", "Og4'"}:
            m1 = sorted(w1.per_vertex)
            m2 = sorted(w2.per_vertex)
            if m1 != m2:
                return f"per-vertex writhe multiset {m1} != {m2}"
    return None


def _fresh_name(g: AnyGraph, counter: itertools.count) -> str:
    taken = {v.name for v in g.vertices}
    while True:
        nm = f"n{next(counter)}"
        if nm not in taken:
            return nm


def _addition_moves(
    g: AnyGraph, families: set[str], max_vertices: int, counter: itertools.count
) -> list[MoveDescriptor]:
    out: list[MoveDescriptor] = []
    room = max_vertices - g.n
    if room <= 0:
        return out
    names = [v.name for v in g.vertices]
    if isinstance(g, LabeledGraph):
        if "Og1" in families:
            nm = _fresh_name(g, counter)
            for sign in (1, -1):
                out.append(
                    MoveDescriptor("Og1", "add", (nm,), AdditionPayload(((0, sign),)))
                )
        if "Og2" in families and room >= 2:
            nm1 = _fresh_name(g, counter)
            nm2 = _fresh_name(g, counter)
            for adjacent in (False, True):
                f = 1 if adjacent else 0
                payload_labels = ((f, 1), (f, -1))
                for r in range(g.n + 1):
                    for nbrs in itertools.combinations(names, r):
                        out.append(
                            MoveDescriptor(
                                "Og2",
                                "add",
                                (nm1, nm2),
                                AdditionPayload(payload_labels, adjacent, nbrs),
                            )
                        )
    else:
        if "O1" in families:
            nm = _fresh_name(g, counter)
            for looped in (0, 1):
                out.append(
                    MoveDescriptor("O1", "add", (nm,), AdditionPayload((looped,)))
                )
        if "O2" in families and room >= 2:
            nm1 = _fresh_name(g, counter)
            nm2 = _fresh_name(g, counter)
            for adjacent in (False, True):
                for r in range(g.n + 1):
                    for nbrs in itertools.combinations(names, r):
                        out.append(
                            MoveDescriptor(
                                "O2",
                                "add",
                                (nm1, nm2),
                                AdditionPayload((1, 0), adjacent, nbrs),
                            )
                        )
    return out


@dataclass
class _Node:
    graph: AnyGraph
    path: tuple[MoveDescriptor, ...]  # from that side's origin
    lineage: tuple[AnyGraph, ...]  # graphs before each path step


def _successors(
    node: _Node, families: set[str], max_vertices: int, counter: itertools.count
) -> Iterable[tuple[MoveDescriptor, AnyGraph]]:
    g = node.graph
    for m in list_moves(g, families & set(GRAPH_FAMILIES if isinstance(g, LabeledGraph) else LOOP_FAMILIES)):
        yield m, apply_move(g, m)
    for m in _addition_moves(g, families, max_vertices, counter):
        yield m, apply_move(g, m)


def _rename_descriptor(m: MoveDescriptor, rename: dict[str, str]) -> MoveDescriptor:
    names = tuple(rename.get(nm, nm) for nm in m.names)
    payload = m.payload
    if payload is not None:
        payload = AdditionPayload(
            payload.labels,
            payload.adjacent,
            tuple(rename.get(nm, nm) for nm in payload.neighbors),
            payload.positions,
        )
    return MoveDescriptor(m.family, m.direction, names, payload)


def _stitch(fwd: _Node, bwd: _Node) -> tuple[MoveDescriptor, ...]:
    """Splice a forward path with the inverse of a backward path.

    The two meet at isomorphic but not identical graphs, so every backward
    inverse descriptor is rewritten through a running name correspondence
    before it is replayed on the forward lineage.
    """
    steps = list(fwd.path)
    cur = fwd.graph
    iso = are_isomorphic(bwd.graph, cur)
    assert iso is not None, "meet states must be isomorphic"
    rename = {
        bwd.graph.vertices[i].name: cur.vertices[j].name for i, j in iso.items()
    }
    fresh = itertools.count()
    for i in range(len(bwd.path) - 1, -1, -1):
        before = bwd.lineage[i]
        inv = inverse_descriptor(before, bwd.path[i])
        if inv.direction == "add":
            for nm in inv.names:
                taken = {v.name for v in cur.vertices} | set(rename.values())
                cand = nm if nm not in taken else None
                while cand is None:
                    c = f"m{next(fresh)}"
                    if c not in taken:
                        cand = c
                rename[nm] = cand
        renamed = _rename_descriptor(inv, rename)
        steps.append(renamed)
        cur = apply_move(cur, renamed)
        if inv.direction == "remove":
            for nm in inv.names:
                rename.pop(nm, None)
    return tuple(steps)


def prove_equivalent(
    g1: AnyGraph,
    g2: AnyGraph,
    families: Optional[Iterable[str]] = None,
    bounds: Optional[SearchBounds] = None,
) -> EquivalenceResult:
    """Look for a bounded move path between two same-kind graphs.

    Raises:
        TooLargeError: an input exceeds the vertex bound.
    """
    if type(g1) is not type(g2):
        raise TypeError("cannot relate graphs of different kinds")
    bounds = bounds or SearchBounds()
    kind_families = set(GRAPH_FAMILIES if isinstance(g1, LabeledGraph) else LOOP_FAMILIES)
    fams = kind_families if families is None else set(families) & kind_families
    max_vertices = bounds.max_vertices
    if max_vertices is None:
        max_vertices = max(g1.n, g2.n) + 2
    if g1.n > max_vertices or g2.n > max_vertices:
        raise TooLargeError(
            f"inputs of order {g1.n}, {g2.n} exceed max_vertices={max_vertices}"
        )

    if isinstance(g1, LabeledGraph):
        reason = invariant_distinguish(g1, g2, fams)
        if reason is not None:
            return EquivalenceResult("Distinguished", reason=reason, stats={"states": 0})

    key1 = canonical_form(g1, bound=max_vertices)
    key2 = canonical_form(g2, bound=max_vertices)
    states = 2
    if key1 == key2:
        cert = MoveCertificate(key1, key2, (), states, 0)
        return EquivalenceResult("Certificate", cert, stats={"states": states, "depth": 0})

    counter = itertools.count()
    sides: list[dict[bytes, _Node]] = [
        {key1: _Node(g1, (), ())},
        {key2: _Node(g2, (), ())},
    ]
    frontiers: list[dict[bytes, _Node]] = [dict(sides[0]), dict(sides[1])]
    depths = [0, 0]

    def finish(fk: bytes) -> EquivalenceResult:
        fwd, bwd = sides[0][fk], sides[1][fk]
        steps = _stitch(fwd, bwd)
        depth = len(steps)
        cert = MoveCertificate(key1, key2, steps, states, depth)
        return EquivalenceResult(
            "Certificate", cert, stats={"states": states, "depth": depth}
        )

    while frontiers[0] and frontiers[1]:
        if depths[0] + depths[1] >= bounds.max_depth:
            break
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        new_frontier: dict[bytes, _Node] = {}
        hit: Optional[bytes] = None
        for key, node in frontiers[side].items():
            for m, h in _successors(node, fams, max_vertices, counter):
                if h.n > max_vertices:
                    continue
                hk = canonical_form(h, bound=max_vertices)
                if hk in sides[side]:
                    continue
                states += 1
                child = _Node(h, node.path + (m,), node.lineage + (node.graph,))
                sides[side][hk] = child
                new_frontier[hk] = child
                if hk in sides[1 - side]:
                    hit = hk
                    break
                if states > bounds.max_states:
                    return EquivalenceResult(
                        "Inconclusive",
                        reason="state budget exhausted",
                        stats={"states": states, "depth": depths[0] + depths[1]},
                    )
            if hit:
                break
        depths[side] += 1
        frontiers[side] = new_frontier
        if hit:
            return finish(hit)

    return EquivalenceResult(
        "Inconclusive",
        reason="depth budget exhausted" if frontiers[0] and frontiers[1] else "frontier emptied",
        stats={"states": states, "depth": depths[0] + depths[1]},
    )
