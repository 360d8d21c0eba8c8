"""The two move systems on graph representatives.

Labeled graphs carry the four graph-moves Og1, Og2, Og3, Og4 and the variant
Og4'; looped graphs carry the three moves O1, O2, O3.  Enumeration lists
removals and transformations only: additions form an infinite family, so an
addition descriptor must be built by the caller with an explicit payload.

Descriptors name vertices by token so that certificates survive
serialization; they are resolved against vertex names at application time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import PreconditionError
from .graphs import (
    AnyGraph,
    LabeledGraph,
    LabeledVertex,
    LoopedGraph,
    LoopedVertex,
    local_complement,
    pivot,
)

GRAPH_FAMILIES = ("Og1", "Og2", "Og3", "Og4", "Og4'")
LOOP_FAMILIES = ("O1", "O2", "O3")

# direction tokens per family:
#   Og1, Og2, O1, O2: "add" | "remove"
#   Og3:              "fwd" | "inv"
#   Og4, Og4', O3:    "apply" (self-inverse)


class MoveNotApplicableError(PreconditionError):
    """The descriptor's preconditions fail on the given graph."""


@dataclass(frozen=True)
class AdditionPayload:
    """What an addition move needs beyond vertex names.

    labels: per added vertex, (framing, sign) on labeled graphs or a loop
        flag on looped graphs.
    adjacent: whether the added pair is mutually adjacent (pair moves only).
    neighbors: names of existing vertices the added pair attaches to.
    positions: where the new vertices land in the result's vertex order;
        None appends them.  Inverses of removals record the original
        positions here so that remove-then-add restores the graph exactly.
    """

    labels: tuple
    adjacent: Optional[bool] = None
    neighbors: tuple[str, ...] = ()
    positions: Optional[tuple[int, ...]] = None


@dataclass(frozen=True)
class MoveDescriptor:
    family: str
    direction: str
    names: tuple[str, ...]
    payload: Optional[AdditionPayload] = None

    def __post_init__(self) -> None:
        if self.family not in GRAPH_FAMILIES + LOOP_FAMILIES:
            raise ValueError(f"unknown move family {self.family!r}")
        arity = {"Og1": 1, "Og2": 2, "Og3": 3, "Og4": 2, "Og4'": 1, "O1": 1, "O2": 2, "O3": 3}
        if len(self.names) != arity[self.family]:
            raise ValueError(
                f"{self.family} takes {arity[self.family]} vertex names, got {len(self.names)}"
            )
        pair_moves = {"Og1", "Og2", "O1", "O2"}
        if self.family in pair_moves:
            if self.direction not in ("add", "remove"):
                raise ValueError(f"{self.family} direction must be add or remove")
            if self.direction == "add" and self.payload is None:
                raise ValueError(f"{self.family} add needs a payload")
        elif self.family == "Og3":
            if self.direction not in ("fwd", "inv"):
                raise ValueError("Og3 direction must be fwd or inv")
        else:
            if self.direction != "apply":
                raise ValueError(f"{self.family} is self-inverse; direction must be apply")


def _fail(msg: str) -> None:
    raise MoveNotApplicableError(msg)


def _indices(g: AnyGraph, names: Sequence[str]) -> list[int]:
    try:
        out = [g.index_of(nm) for nm in names]
    except KeyError as e:
        _fail(f"vertex {e.args[0]!r} not in graph")
    if len(set(out)) != len(out):
        _fail(f"vertex names {names!r} are not distinct")
    return out


def _outside_neighbors(g: AnyGraph, i: int, excluded: set[int]) -> frozenset[int]:
    return frozenset(t for t in g.neighbors(i) if t not in excluded)


def _fresh_names(g: AnyGraph, names: Sequence[str]) -> None:
    for nm in names:
        try:
            g.index_of(nm)
        except KeyError:
            continue
        _fail(f"vertex name {nm!r} already in use")


def _insert_vertices(g: AnyGraph, new_verts: Sequence, payload: AdditionPayload) -> AnyGraph:
    """Splice new vertices into g at the payload's positions (default: end),
    attach them to the payload's neighbors, and join the pair if adjacent."""
    k = len(new_verts)
    n = g.n
    positions = payload.positions
    if positions is None:
        positions = tuple(range(n, n + k))
    if len(positions) != k or len(set(positions)) != k:
        _fail("insertion positions must be distinct, one per added vertex")
    if not all(0 <= p < n + k for p in positions):
        _fail(f"insertion positions must lie in 0..{n + k - 1}")
    nbrs_old = _indices(g, payload.neighbors) if payload.neighbors else []
    taken = set(positions)
    old_to_new = [p for p in range(n + k) if p not in taken]
    verts: list = [None] * (n + k)
    for p, vx in zip(positions, new_verts):
        verts[p] = vx
    for i, p in enumerate(old_to_new):
        verts[p] = g.vertices[i]
    edges = {(old_to_new[a], old_to_new[b]) for a, b in g.edges}
    for p in positions:
        edges |= {(p, old_to_new[t]) for t in nbrs_old}
    if payload.adjacent:
        edges.add(tuple(positions))
    cls = type(g)
    return cls(tuple(verts), frozenset(edges))


# --------------------------------------------------------------------------
# labeled-graph moves
# --------------------------------------------------------------------------

def apply_graph_move(g: LabeledGraph, m: MoveDescriptor) -> LabeledGraph:
    if not isinstance(g, LabeledGraph) or m.family not in GRAPH_FAMILIES:
        _fail(f"{m.family} does not act on this graph kind")
    if m.family == "Og1":
        return _og1(g, m)
    if m.family == "Og2":
        return _og2(g, m)
    if m.family == "Og3":
        return _og3(g, m)
    if m.family == "Og4":
        return _og4(g, m)
    return _og4p(g, m)


def _og1(g: LabeledGraph, m: MoveDescriptor) -> LabeledGraph:
    if m.direction == "remove":
        (i,) = _indices(g, m.names)
        if g.framing(i) != 0:
            _fail("Og1 removes a framing-0 vertex")
        if g.neighbors(i):
            _fail("Og1 removes an isolated vertex")
        return g.remove_vertices([i])
    _fresh_names(g, m.names)
    ((framing, sign),) = m.payload.labels
    if framing != 0:
        _fail("Og1 adds a framing-0 vertex")
    if m.payload.neighbors:
        _fail("Og1 adds an isolated vertex")
    return _insert_vertices(g, [LabeledVertex(m.names[0], 0, sign)], m.payload)


def _check_og2_pair(g: LabeledGraph, a: int, b: int) -> None:
    adjacent = g.has_edge(a, b)
    want_framing = 1 if adjacent else 0
    if g.framing(a) != want_framing or g.framing(b) != want_framing:
        kind = "an adjacent" if adjacent else "a non-adjacent"
        _fail(f"Og2 needs framing {want_framing} on {kind} pair")
    if g.sign(a) != -g.sign(b):
        _fail("Og2 pair must carry opposite signs")
    if _outside_neighbors(g, a, {a, b}) != _outside_neighbors(g, b, {a, b}):
        _fail("Og2 pair must have identical outside neighborhoods")


def _og2(g: LabeledGraph, m: MoveDescriptor) -> LabeledGraph:
    if m.direction == "remove":
        a, b = _indices(g, m.names)
        _check_og2_pair(g, a, b)
        return g.remove_vertices([a, b])
    _fresh_names(g, m.names)
    p = m.payload
    (fa, sa), (fb, sb) = p.labels
    want = 1 if p.adjacent else 0
    if fa != want or fb != want:
        _fail(f"Og2 {'adjacent' if p.adjacent else 'non-adjacent'} pair needs framing {want}")
    if sa != -sb:
        _fail("Og2 pair must carry opposite signs")
    verts = [LabeledVertex(m.names[0], fa, sa), LabeledVertex(m.names[1], fb, sb)]
    return _insert_vertices(g, verts, p)


def _og3(g: LabeledGraph, m: MoveDescriptor) -> LabeledGraph:
    """Third graph-move on a triple (u, v, w).

    Forward needs u, v, w all labeled (0,-), u adjacent to exactly v and w,
    and v, w non-adjacent.  It detaches u from v and w, toggles u against
    the symmetric difference of the outside neighborhoods of v and w,
    exchanges those outside neighborhoods, and turns the signs of v and w
    positive.  The inverse undoes all of that from the detached shape.
    """
    u, v, w = _indices(g, m.names)
    triple = {u, v, w}
    for i in (u, v, w):
        if g.framing(i) != 0:
            _fail("Og3 vertices must have framing 0")
    nv = _outside_neighbors(g, v, triple)
    nw = _outside_neighbors(g, w, triple)
    if m.direction == "fwd":
        if not (g.sign(u) == g.sign(v) == g.sign(w) == -1):
            _fail("Og3 forward needs all three signs negative")
        if g.neighbors(u) != {v, w}:
            _fail("Og3 forward needs N(u) = {v, w}")
        if g.has_edge(v, w):
            _fail("Og3 forward needs v, w non-adjacent")
        new_sign = 1
        mutual_after = set()
    else:
        if g.sign(u) != -1 or g.sign(v) != 1 or g.sign(w) != 1:
            _fail("Og3 inverse needs sign(u) = -, sign(v) = sign(w) = +")
        if g.has_edge(u, v) or g.has_edge(u, w) or g.has_edge(v, w):
            _fail("Og3 inverse needs u, v, w pairwise non-adjacent")
        if g.neighbors(u) != (nv ^ nw):
            _fail("Og3 inverse needs N(u) = N(v) symmetric-difference N(w)")
        new_sign = -1
        mutual_after = {(min(u, v), max(u, v)), (min(u, w), max(u, w))}
    nu = _outside_neighbors(g, u, triple)
    edges = {e for e in g.edges if not (set(e) & triple)}
    edges |= {(min(u, t), max(u, t)) for t in nu ^ nv ^ nw}
    edges |= {(min(v, t), max(v, t)) for t in nw}
    edges |= {(min(w, t), max(w, t)) for t in nv}
    edges |= mutual_after
    out = g.with_edges(edges)
    out = out.relabel(v, sign=new_sign)
    return out.relabel(w, sign=new_sign)


def _og4(g: LabeledGraph, m: MoveDescriptor) -> LabeledGraph:
    u, v = _indices(g, m.names)
    if not g.has_edge(u, v):
        _fail("Og4 needs an adjacent pair")
    if g.framing(u) != 0 or g.framing(v) != 0:
        _fail("Og4 needs framings 0")
    alpha, beta = g.sign(u), g.sign(v)
    out = pivot(g, u, v)
    out = out.relabel(u, sign=-beta)
    return out.relabel(v, sign=-alpha)


def _og4p(g: LabeledGraph, m: MoveDescriptor) -> LabeledGraph:
    (v,) = _indices(g, m.names)
    if g.framing(v) != 1:
        _fail("Og4' needs framing 1 at its vertex")
    out = local_complement(g, v)
    out = out.relabel(v, sign=-g.sign(v))
    for u in g.neighbors(v):
        out = out.relabel(u, framing=out.framing(u) ^ 1)
    return out


def list_graph_moves(
    g: LabeledGraph, families: Optional[Iterable[str]] = None
) -> list[MoveDescriptor]:
    """Every applicable removal/transformation descriptor, in index order."""
    wanted = set(GRAPH_FAMILIES if families is None else families)
    unknown = wanted - set(GRAPH_FAMILIES)
    if unknown:
        raise ValueError(f"not labeled-graph move families: {sorted(unknown)}")
    out: list[MoveDescriptor] = []
    name = lambda i: g.vertices[i].name
    if "Og1" in wanted:
        for i in range(g.n):
            if g.framing(i) == 0 and not g.neighbors(i):
                out.append(MoveDescriptor("Og1", "remove", (name(i),)))
    if "Og2" in wanted:
        for a in range(g.n):
            for b in range(a + 1, g.n):
                try:
                    _check_og2_pair(g, a, b)
                except MoveNotApplicableError:
                    continue
                out.append(MoveDescriptor("Og2", "remove", (name(a), name(b))))
    if "Og3" in wanted:
        for u in range(g.n):
            if g.framing(u) != 0 or g.sign(u) != -1:
                continue
            nu = g.neighbors(u)
            if len(nu) == 2:
                v, w = sorted(nu)
                d = MoveDescriptor("Og3", "fwd", (name(u), name(v), name(w)))
                if _applicable_graph(g, d):
                    out.append(d)
            for v in range(g.n):
                for w in range(v + 1, g.n):
                    if u in (v, w) or v in nu or w in nu:
                        continue
                    d = MoveDescriptor("Og3", "inv", (name(u), name(v), name(w)))
                    if _applicable_graph(g, d):
                        out.append(d)
    if "Og4" in wanted:
        for u, v in sorted(g.edges):
            if g.framing(u) == 0 and g.framing(v) == 0:
                out.append(MoveDescriptor("Og4", "apply", (name(u), name(v))))
    if "Og4'" in wanted:
        for v in range(g.n):
            if g.framing(v) == 1:
                out.append(MoveDescriptor("Og4'", "apply", (name(v),)))
    return out


def _applicable_graph(g: LabeledGraph, m: MoveDescriptor) -> bool:
    try:
        apply_graph_move(g, m)
    except MoveNotApplicableError:
        return False
    return True


# --------------------------------------------------------------------------
# looped-graph moves
# --------------------------------------------------------------------------

def apply_loop_move(l: LoopedGraph, m: MoveDescriptor) -> LoopedGraph:
    if not isinstance(l, LoopedGraph) or m.family not in LOOP_FAMILIES:
        _fail(f"{m.family} does not act on this graph kind")
    if m.family == "O1":
        return _o1(l, m)
    if m.family == "O2":
        return _o2(l, m)
    return _o3(l, m)


def _o1(l: LoopedGraph, m: MoveDescriptor) -> LoopedGraph:
    if m.direction == "remove":
        (i,) = _indices(l, m.names)
        if l.neighbors(i):
            _fail("O1 removes an isolated vertex")
        return l.remove_vertices([i])
    _fresh_names(l, m.names)
    (looped,) = m.payload.labels
    if m.payload.neighbors:
        _fail("O1 adds an isolated vertex")
    return _insert_vertices(l, [LoopedVertex(m.names[0], bool(looped))], m.payload)


def _check_o2_pair(l: LoopedGraph, a: int, b: int) -> None:
    if l.looped(a) == l.looped(b):
        _fail("O2 pair must be one looped, one unlooped")
    if _outside_neighbors(l, a, {a, b}) != _outside_neighbors(l, b, {a, b}):
        _fail("O2 pair must have identical outside neighborhoods")


def _o2(l: LoopedGraph, m: MoveDescriptor) -> LoopedGraph:
    if m.direction == "remove":
        a, b = _indices(l, m.names)
        _check_o2_pair(l, a, b)
        return l.remove_vertices([a, b])
    _fresh_names(l, m.names)
    p = m.payload
    la, lb = p.labels
    if bool(la) == bool(lb):
        _fail("O2 pair must be one looped, one unlooped")
    verts = [LoopedVertex(m.names[0], bool(la)), LoopedVertex(m.names[1], bool(lb))]
    return _insert_vertices(l, verts, p)


def _o3(l: LoopedGraph, m: MoveDescriptor) -> LoopedGraph:
    """Third move: toggle the three pairwise edges of a qualifying triple."""
    u, v, w = _indices(l, m.names)
    if not l.looped(v) or l.looped(w):
        _fail("O3 needs v looped and w unlooped")
    vw, uv, uw = l.has_edge(v, w), l.has_edge(u, v), l.has_edge(u, w)
    detached = vw and not uv and not uw
    attached = uv and uw and not vw
    if not (detached or attached):
        _fail("O3 triple must match one of its two edge patterns")
    for x in range(l.n):
        if x in (u, v, w):
            continue
        hits = sum(1 for y in (u, v, w) if l.has_edge(x, y))
        if hits not in (0, 2):
            _fail(f"vertex {l.vertices[x].name!r} is adjacent to {hits} of the O3 triple")
    edges = set(l.edges)
    for a, b in ((u, v), (u, w), (v, w)):
        e = (min(a, b), max(a, b))
        if e in edges:
            edges.remove(e)
        else:
            edges.add(e)
    return l.with_edges(edges)


def list_loop_moves(
    l: LoopedGraph, families: Optional[Iterable[str]] = None
) -> list[MoveDescriptor]:
    """Every applicable removal/toggle descriptor, in index order."""
    wanted = set(LOOP_FAMILIES if families is None else families)
    unknown = wanted - set(LOOP_FAMILIES)
    if unknown:
        raise ValueError(f"not looped-graph move families: {sorted(unknown)}")
    out: list[MoveDescriptor] = []
    name = lambda i: l.vertices[i].name
    if "O1" in wanted:
        for i in range(l.n):
            if not l.neighbors(i):
                out.append(MoveDescriptor("O1", "remove", (name(i),)))
    if "O2" in wanted:
        for a in range(l.n):
            for b in range(a + 1, l.n):
                try:
                    _check_o2_pair(l, a, b)
                except MoveNotApplicableError:
                    continue
                out.append(MoveDescriptor("O2", "remove", (name(a), name(b))))
    if "O3" in wanted:
        for u in range(l.n):
            for v in range(l.n):
                for w in range(l.n):
                    if len({u, v, w}) != 3:
                        continue
                    d = MoveDescriptor("O3", "apply", (name(u), name(v), name(w)))
                    try:
                        apply_loop_move(l, d)
                    except MoveNotApplicableError:
                        continue
                    out.append(d)
    return out


# --------------------------------------------------------------------------
# inversion and dispatch
# --------------------------------------------------------------------------

def apply_move(g: AnyGraph, m: MoveDescriptor) -> AnyGraph:
    if m.family in GRAPH_FAMILIES:
        return apply_graph_move(g, m)
    return apply_loop_move(g, m)


def list_moves(g: AnyGraph, families: Optional[Iterable[str]] = None) -> list[MoveDescriptor]:
    if isinstance(g, LabeledGraph):
        return list_graph_moves(g, families)
    return list_loop_moves(g, families)


def inverse_descriptor(g: AnyGraph, m: MoveDescriptor) -> MoveDescriptor:
    """The descriptor that undoes m; applicable to apply_move(g, m).

    g is the graph m acts on: removal inverses need it to record the removed
    labels and attachments.
    """
    if m.direction == "apply":
        return m
    if m.family == "Og3":
        return MoveDescriptor("Og3", "inv" if m.direction == "fwd" else "fwd", m.names)
    if m.direction == "add":
        return MoveDescriptor(m.family, "remove", m.names)
    # removal: rebuild the payload from what is about to go away
    idx = _indices(g, m.names)
    if m.family in ("Og1", "Og2"):
        labels = tuple((g.framing(i), g.sign(i)) for i in idx)
    else:
        labels = tuple(int(g.looped(i)) for i in idx)
    if len(idx) == 1:
        payload = AdditionPayload(labels, positions=tuple(idx))
    else:
        a, b = idx
        outside = sorted(_outside_neighbors(g, a, {a, b}))
        payload = AdditionPayload(
            labels,
            adjacent=g.has_edge(a, b),
            neighbors=tuple(g.vertices[t].name for t in outside),
            positions=tuple(idx),
        )
    return MoveDescriptor(m.family, "add", m.names, payload)
