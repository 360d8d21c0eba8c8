"""Labeled and looped graph values, local complementation, pivot, isomorphism.

Vertex identity is positional: vertex i of a graph is row/column i of its
adjacency matrix.  Names ride along for I/O only and never affect any
computation.  Both graph kinds are immutable; every operation returns a new
graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import SameVertexError, TooLargeError, UnknownVertexError
from .gf2 import Gf2Matrix

Edge = tuple[int, int]


def _normalize_edges(n: int, edges: Iterable[tuple[int, int]]) -> frozenset[Edge]:
    out = set()
    for a, b in edges:
        if not (0 <= a < n and 0 <= b < n):
            raise UnknownVertexError(f"edge ({a},{b}) outside 0..{n - 1}")
        if a == b:
            raise ValueError(f"self-edge at {a}; loops are vertex flags, not edges")
        out.add((a, b) if a < b else (b, a))
    return frozenset(out)


def _default_names(n: int) -> tuple[str, ...]:
    return tuple(f"v{i}" for i in range(n))


@dataclass(frozen=True)
class LabeledVertex:
    name: str
    framing: int
    sign: int

    def __post_init__(self) -> None:
        if self.framing not in (0, 1):
            raise ValueError(f"framing must be 0 or 1, got {self.framing!r}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")


@dataclass(frozen=True)
class LoopedVertex:
    name: str
    looped: bool


@dataclass(frozen=True)
class LabeledGraph:
    """Simple graph whose vertices carry a (framing, sign) label."""

    vertices: tuple[LabeledVertex, ...]
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        names = [v.name for v in self.vertices]
        if len(set(names)) != len(names):
            raise ValueError("duplicate vertex name")
        object.__setattr__(self, "edges", _normalize_edges(self.n, self.edges))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @classmethod
    def build(
        cls,
        framings: Sequence[int],
        signs: Sequence[int],
        edges: Iterable[tuple[int, int]],
        names: Optional[Sequence[str]] = None,
    ) -> LabeledGraph:
        if len(framings) != len(signs):
            raise ValueError("framings and signs differ in length")
        if names is None:
            names = _default_names(len(framings))
        verts = tuple(
            LabeledVertex(nm, f, s) for nm, f, s in zip(names, framings, signs)
        )
        return cls(verts, frozenset(tuple(e) for e in edges))

    # label accessors, index-based like everything else
    def framing(self, i: int) -> int:
        return self.vertices[i].framing

    def sign(self, i: int) -> int:
        return self.vertices[i].sign

    def framings(self) -> tuple[int, ...]:
        return tuple(v.framing for v in self.vertices)

    def signs(self) -> tuple[int, ...]:
        return tuple(v.sign for v in self.vertices)

    def adjacency_matrix(self) -> Gf2Matrix:
        """Framings on the diagonal, 1 off-diagonal exactly at edges."""
        rows = [1 << i if v.framing else 0 for i, v in enumerate(self.vertices)]
        for a, b in self.edges:
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Gf2Matrix(self.n, tuple(rows))

    def neighbor_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for a, b in self.edges:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        return tuple(masks)

    def neighbors(self, i: int) -> frozenset[int]:
        _check_vertex(self.n, i)
        return frozenset(
            b if a == i else a for a, b in self.edges if i in (a, b)
        )

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> LabeledGraph:
        return LabeledGraph(self.vertices, frozenset(tuple(e) for e in edges))

    def relabel(self, i: int, framing: Optional[int] = None, sign: Optional[int] = None) -> LabeledGraph:
        _check_vertex(self.n, i)
        v = self.vertices[i]
        new = LabeledVertex(
            v.name,
            v.framing if framing is None else framing,
            v.sign if sign is None else sign,
        )
        return LabeledGraph(self.vertices[:i] + (new,) + self.vertices[i + 1 :], self.edges)

    def add_vertex(self, name: str, framing: int, sign: int, neighbors: Iterable[int] = ()) -> LabeledGraph:
        """Append a vertex at the last index, joined to the given existing ones."""
        i = self.n
        verts = self.vertices + (LabeledVertex(name, framing, sign),)
        edges = set(self.edges)
        for j in neighbors:
            _check_vertex(self.n, j)
            edges.add((j, i))
        return LabeledGraph(verts, frozenset(edges))

    def remove_vertices(self, indices: Iterable[int]) -> LabeledGraph:
        gone = set(indices)
        for i in gone:
            _check_vertex(self.n, i)
        keep = [i for i in range(self.n) if i not in gone]
        remap = {old: new for new, old in enumerate(keep)}
        verts = tuple(self.vertices[i] for i in keep)
        edges = frozenset(
            (remap[a], remap[b]) for a, b in self.edges if a in remap and b in remap
        )
        return LabeledGraph(verts, edges)

    def index_of(self, name: str) -> int:
        for i, v in enumerate(self.vertices):
            if v.name == name:
                return i
        raise UnknownVertexError(name)


@dataclass(frozen=True)
class LoopedGraph:
    """Simple graph with a loop flag per vertex (no label, no framing)."""

    vertices: tuple[LoopedVertex, ...]
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        names = [v.name for v in self.vertices]
        if len(set(names)) != len(names):
            raise ValueError("duplicate vertex name")
        object.__setattr__(self, "edges", _normalize_edges(self.n, self.edges))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @classmethod
    def build(
        cls,
        loops: Sequence[int | bool],
        edges: Iterable[tuple[int, int]],
        names: Optional[Sequence[str]] = None,
    ) -> LoopedGraph:
        if names is None:
            names = _default_names(len(loops))
        verts = tuple(LoopedVertex(nm, bool(lp)) for nm, lp in zip(names, loops))
        return cls(verts, frozenset(tuple(e) for e in edges))

    def looped(self, i: int) -> bool:
        return self.vertices[i].looped

    def loops(self) -> tuple[int, ...]:
        return tuple(int(v.looped) for v in self.vertices)

    def adjacency_matrix(self) -> Gf2Matrix:
        """Loop flags on the diagonal, 1 off-diagonal exactly at edges."""
        rows = [1 << i if v.looped else 0 for i, v in enumerate(self.vertices)]
        for a, b in self.edges:
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Gf2Matrix(self.n, tuple(rows))

    def neighbor_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for a, b in self.edges:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        return tuple(masks)

    def neighbors(self, i: int) -> frozenset[int]:
        _check_vertex(self.n, i)
        return frozenset(
            b if a == i else a for a, b in self.edges if i in (a, b)
        )

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> LoopedGraph:
        return LoopedGraph(self.vertices, frozenset(tuple(e) for e in edges))

    def with_loop(self, i: int, looped: bool) -> LoopedGraph:
        _check_vertex(self.n, i)
        v = self.vertices[i]
        new = LoopedVertex(v.name, looped)
        return LoopedGraph(self.vertices[:i] + (new,) + self.vertices[i + 1 :], self.edges)

    def add_vertex(self, name: str, looped: bool, neighbors: Iterable[int] = ()) -> LoopedGraph:
        i = self.n
        verts = self.vertices + (LoopedVertex(name, looped),)
        edges = set(self.edges)
        for j in neighbors:
            _check_vertex(self.n, j)
            edges.add((j, i))
        return LoopedGraph(verts, frozenset(edges))

    def remove_vertices(self, indices: Iterable[int]) -> LoopedGraph:
        gone = set(indices)
        for i in gone:
            _check_vertex(self.n, i)
        keep = [i for i in range(self.n) if i not in gone]
        remap = {old: new for new, old in enumerate(keep)}
        verts = tuple(self.vertices[i] for i in keep)
        edges = frozenset(
            (remap[a], remap[b]) for a, b in self.edges if a in remap and b in remap
        )
        return LoopedGraph(verts, edges)

    def index_of(self, name: str) -> int:
        for i, v in enumerate(self.vertices):
            if v.name == name:
                return i
        raise UnknownVertexError(name)


AnyGraph = LabeledGraph | LoopedGraph


def labeled_from_matrix(
    m: Gf2Matrix,
    signs: Sequence[int],
    names: Optional[Sequence[str]] = None,
) -> LabeledGraph:
    """Rebuild a labeled graph from a symmetric matrix plus the sign side-channel."""
    if not m.is_symmetric():
        raise ValueError("adjacency matrix must be symmetric")
    framings = list(m.diagonal())
    edges = [
        (i, j) for i in range(m.n) for j in range(i + 1, m.n) if m.get(i, j)
    ]
    return LabeledGraph.build(framings, list(signs), edges, names)


def looped_from_matrix(m: Gf2Matrix, names: Optional[Sequence[str]] = None) -> LoopedGraph:
    if not m.is_symmetric():
        raise ValueError("adjacency matrix must be symmetric")
    loops = list(m.diagonal())
    edges = [
        (i, j) for i in range(m.n) for j in range(i + 1, m.n) if m.get(i, j)
    ]
    return LoopedGraph.build(loops, edges, names)


def _check_vertex(n: int, i: int) -> None:
    if not 0 <= i < n:
        raise UnknownVertexError(f"vertex {i} not in graph of order {n}")


def local_complement(g: AnyGraph, v: int) -> AnyGraph:
    """Toggle every adjacency between two neighbours of v; nothing else moves."""
    _check_vertex(g.n, v)
    masks = list(g.neighbor_masks())
    nv = masks[v]
    m = nv
    while m:
        low = m & -m
        a = low.bit_length() - 1
        masks[a] ^= nv ^ low
        m ^= low
    return g.with_edges(_edges_from_masks(masks))


def pivot(g: AnyGraph, u: int, v: int) -> AnyGraph:
    """Toggle adjacencies between the three u/v neighbour classes.

    A vertex outside {u, v} is in class A if adjacent to u only, B if
    adjacent to v only, C if adjacent to both.  Every A-B, A-C and B-C pair
    is toggled, which is exactly the pairs (x, y) with x in N(u), y in N(v)
    and not both in the intersection.
    """
    _check_vertex(g.n, u)
    _check_vertex(g.n, v)
    if u == v:
        raise SameVertexError(f"pivot needs two distinct vertices, got {u} twice")
    masks = list(g.neighbor_masks())
    uv_bits = (1 << u) | (1 << v)
    nu = masks[u] & ~uv_bits
    nv = masks[v] & ~uv_bits
    only_u = nu & ~nv
    only_v = nv & ~nu
    both = nu & nv
    for cls, others in ((only_u, only_v | both), (only_v, only_u | both), (both, only_u | only_v)):
        m = cls
        while m:
            low = m & -m
            masks[low.bit_length() - 1] ^= others
            m ^= low
    return g.with_edges(_edges_from_masks(masks))


def _edges_from_masks(masks: Sequence[int]) -> list[Edge]:
    edges = []
    for i, row in enumerate(masks):
        m = row >> (i + 1) << (i + 1)
        while m:
            low = m & -m
            edges.append((i, low.bit_length() - 1))
            m ^= low
    return edges


# --------------------------------------------------------------------------
# Canonical form and isomorphism
#
# The key is the lexicographic minimum, over admissible vertex orderings, of
# the sequence (label of vertex at position 0, then for each later position
# its label and its adjacency bits to the already-placed vertices).  Orderings
# are restricted to be sorted by iterated-refinement colour, which is an
# isomorphism invariant, so the minimum is too.  Equal keys reconstruct equal
# matrices, so equal keys <=> isomorphic.
# --------------------------------------------------------------------------

CANONICAL_BOUND_DEFAULT = 12


def _label_codes(g: AnyGraph, respect_labels: bool) -> tuple[int, ...]:
    if not respect_labels:
        return (0,) * g.n
    if isinstance(g, LabeledGraph):
        # (0,+) < (0,-) < (1,+) < (1,-)
        return tuple(2 * v.framing + (1 if v.sign < 0 else 0) for v in g.vertices)
    return tuple(int(v.looped) for v in g.vertices)


def _refine_colors(masks: Sequence[int], init: Sequence[int]) -> list[int]:
    n = len(masks)
    colors = list(init)
    while True:
        sigs = []
        for i in range(n):
            nb = []
            m = masks[i]
            while m:
                low = m & -m
                nb.append(colors[low.bit_length() - 1])
                m ^= low
            sigs.append((colors[i], tuple(sorted(nb))))
        ranking = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _canonical_search(
    masks: Sequence[int], codes: Sequence[int], bound: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return (key sequence, ordering) minimizing the placement sequence."""
    n = len(masks)
    if n > bound:
        raise TooLargeError(f"canonical form limited to {bound} vertices, got {n}")
    if n == 0:
        return (), ()
    colors = _refine_colors(masks, codes)
    slots = sorted(range(n), key=lambda i: colors[i])
    slot_color = [colors[i] for i in slots]

    best_key: list[int] | None = None
    best_order: list[int] | None = None
    cur: list[int] = []
    order: list[int] = []
    remaining = set(range(n))

    def contribution(v: int, pos: int) -> int:
        bits = 0
        for k in range(pos):
            bits = (bits << 1) | ((masks[v] >> order[k]) & 1)
        return (codes[v] << pos) | bits

    def dfs(pos: int) -> None:
        nonlocal best_key, best_order
        if pos == n:
            if best_key is None or cur < best_key:
                best_key = cur[:]
                best_order = order[:]
            return
        want = slot_color[pos]
        cands = sorted(
            ((contribution(v, pos), v) for v in remaining if colors[v] == want)
        )
        tried: list[int] = []
        for c, v in cands:
            if best_key is not None and cur == best_key[:pos] and c > best_key[pos]:
                break
            if any(
                codes[v] == codes[u]
                and (masks[v] & ~(1 << u)) == (masks[u] & ~(1 << v))
                for u in tried
            ):
                continue  # interchangeable twin of a branch already taken
            tried.append(v)
            remaining.remove(v)
            order.append(v)
            cur.append(c)
            dfs(pos + 1)
            cur.pop()
            order.pop()
            remaining.add(v)

    dfs(0)
    assert best_key is not None and best_order is not None
    return tuple(best_key), tuple(best_order)


def canonical_form(
    g: AnyGraph, respect_labels: bool = True, bound: int = CANONICAL_BOUND_DEFAULT
) -> bytes:
    """Canonical key; equal keys exactly when the graphs are isomorphic."""
    kind = "lg" if isinstance(g, LabeledGraph) else "ug"
    key, _ = _canonical_search(g.neighbor_masks(), _label_codes(g, respect_labels), bound)
    body = ",".join(str(c) for c in key)
    return f"{kind}:{g.n}:{body}".encode("ascii")


def are_isomorphic(
    g1: AnyGraph,
    g2: AnyGraph,
    respect_labels: bool = True,
    bound: int = CANONICAL_BOUND_DEFAULT,
) -> Optional[dict[int, int]]:
    """A label/loop-preserving adjacency bijection g1 -> g2, or None.

    Both graphs must be the same kind.
    """
    if type(g1) is not type(g2):
        raise TypeError("cannot compare graphs of different kinds")
    if g1.n != g2.n:
        return None
    key1, ord1 = _canonical_search(
        g1.neighbor_masks(), _label_codes(g1, respect_labels), bound
    )
    key2, ord2 = _canonical_search(
        g2.neighbor_masks(), _label_codes(g2, respect_labels), bound
    )
    if key1 != key2:
        return None
    return {ord1[pos]: ord2[pos] for pos in range(g1.n)}


def all_graphs(n: int) -> Iterable[frozenset[Edge]]:
    """Every edge set on n fixed vertices; 2^(n(n-1)/2) of them."""
    pairs = list(itertools.combinations(range(n), 2))
    for picks in itertools.product((False, True), repeat=len(pairs)):
        yield frozenset(p for p, take in zip(pairs, picks) if take)
