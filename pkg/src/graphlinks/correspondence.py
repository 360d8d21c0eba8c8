"""The equivalence between graph-knots and looped interlacement graphs.

chi sends a one-component labeled representative G to the looped graph whose
adjacency is the off-diagonal part of (A(G)+E)^-1 and whose loops mark the
vertices of negative writhe.  psi goes back: complete the looped adjacency
matrix to an invertible symmetric matrix, invert, and read framings and
signs off the result.  With the seeded diagonal the two maps are exact
inverses on representatives, not merely up to moves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .gf2 import Gf2Matrix
from .graphs import LabeledGraph, LoopedGraph, labeled_from_matrix, looped_from_matrix
from .invariants import NotAKnotError, knot_matrix, writhe


class InternalContradictionError(RuntimeError):
    """The diagonal completion search exhausted, which existence forbids."""


@dataclass(frozen=True)
class DiagonalCompletion:
    diagonal: tuple[int, ...]
    matrix: Gf2Matrix


@dataclass(frozen=True)
class RoundtripReport:
    """What roundtrip_check found.

    psi_seeded_exact: psi(chi(g), seeded diagonal) == g, vertex for vertex.
    chi_canonical_exact: chi(psi(chi(g))) == chi(g) with the canonical
        (lexicographically smallest) diagonal.
    """

    looped: LoopedGraph
    psi_seeded: LabeledGraph
    psi_seeded_exact: bool
    psi_canonical: LabeledGraph
    chi_canonical_exact: bool


def chi(g: LabeledGraph) -> LoopedGraph:
    """Looped interlacement image of a graph-knot representative.

    Raises:
        NotAKnotError: when g has more than one component.
    """
    rep = writhe(g)  # raises on non-knots
    inv = knot_matrix(g).inverse()
    loops = [1 if w == -1 else 0 for w in rep.per_vertex]
    rows = list(inv.rows)
    for i in range(g.n):
        rows[i] = (rows[i] & ~(1 << i)) | (loops[i] << i)
    m = Gf2Matrix(g.n, tuple(rows))
    return looped_from_matrix(m, names=[v.name for v in g.vertices])


def _off_diagonal_rows(a: Gf2Matrix) -> list[int]:
    return [a.rows[i] & ~(1 << i) for i in range(a.n)]


def _completion_search(
    off_rows: Sequence[int], n: int, forced: Mapping[int, int]
) -> Optional[tuple[int, ...]]:
    """Lexicographically smallest diagonal making the matrix invertible.

    Depth-first over d_0..d_{n-1}, 0 before 1, entries in `forced` pinned.
    After fixing d_k, columns 0..k of the full matrix are known; if they are
    linearly dependent no later choice can rescue invertibility, because a
    kernel vector supported on known columns survives every extension.  That
    is the prune; a surviving leaf has n independent columns, so det = 1.
    """
    basis: dict[int, int] = {}  # leading bit -> reduced column vector
    diag: list[int] = []

    def reduce(col: int) -> int:
        while col:
            h = col.bit_length() - 1
            if h not in basis:
                break
            col ^= basis[h]
        return col

    def dfs(k: int) -> bool:
        if k == n:
            return True
        choices = (forced[k],) if k in forced else (0, 1)
        for d in choices:
            red = reduce(off_rows[k] | (d << k))
            if red == 0:
                continue
            h = red.bit_length() - 1
            basis[h] = red
            diag.append(d)
            if dfs(k + 1):
                return True
            del basis[h]
            diag.pop()
        return False

    if dfs(0):
        return tuple(diag)
    return None


def complete_diagonal(
    a: Gf2Matrix, preferred: Optional[Sequence[int]] = None
) -> DiagonalCompletion:
    """A diagonal making the symmetric matrix invertible.

    A valid `preferred` diagonal is returned verbatim; otherwise the result
    is the lexicographically smallest diagonal bit-string achieving
    determinant 1.  One always exists for symmetric matrices over GF(2).
    """
    if not a.is_symmetric():
        raise ValueError("diagonal completion needs a symmetric matrix")
    off = _off_diagonal_rows(a)
    if preferred is not None:
        if len(preferred) != a.n:
            raise ValueError("preferred diagonal has the wrong length")
        cand = _with_diagonal(off, a.n, preferred)
        if cand.determinant() == 1:
            return DiagonalCompletion(tuple(int(b) for b in preferred), cand)
    diag = _completion_search(off, a.n, {})
    if diag is None:
        raise InternalContradictionError(
            "no invertible completion found; this contradicts symmetric-matrix existence"
        )
    return DiagonalCompletion(diag, _with_diagonal(off, a.n, diag))


def complete_diagonal_forced(
    a: Gf2Matrix, forced: Mapping[int, int]
) -> Optional[DiagonalCompletion]:
    """Like complete_diagonal but with named diagonal entries pinned.

    Pinning can make completion impossible; returns None in that case
    instead of raising.
    """
    if not a.is_symmetric():
        raise ValueError("diagonal completion needs a symmetric matrix")
    off = _off_diagonal_rows(a)
    diag = _completion_search(off, a.n, {i: v & 1 for i, v in forced.items()})
    if diag is None:
        return None
    return DiagonalCompletion(diag, _with_diagonal(off, a.n, diag))


def _with_diagonal(off_rows: Sequence[int], n: int, diag: Sequence[int]) -> Gf2Matrix:
    rows = tuple(off_rows[i] | ((diag[i] & 1) << i) for i in range(n))
    return Gf2Matrix(n, rows)


def psi(
    l: LoopedGraph, preferred_diagonal: Optional[Sequence[int]] = None
) -> LabeledGraph:
    """Graph-knot representative of a looped graph.

    The adjacency matrix of the result is the inverse of the completed
    matrix plus the identity; the sign of vertex i is w_i * (1 - 2*a_ii)
    with w_i = -1 exactly on looped vertices and a_ii taken from the
    completed matrix.
    """
    comp = complete_diagonal(l.adjacency_matrix(), preferred_diagonal)
    inv = comp.matrix.inverse()
    a_g = inv + Gf2Matrix.identity(l.n)
    signs = []
    for i in range(l.n):
        w = -1 if l.looped(i) else 1
        signs.append(w * (1 - 2 * comp.diagonal[i]))
    return labeled_from_matrix(a_g, signs, names=[v.name for v in l.vertices])


def roundtrip_check(g: LabeledGraph) -> RoundtripReport:
    """Run both round trips from a graph-knot representative.

    psi seeded with the diagonal of (A(G)+E)^-1 must reproduce g exactly;
    chi of the canonically completed psi image must reproduce chi(g)
    exactly.
    """
    looped = chi(g)
    seed = knot_matrix(g).inverse().diagonal()
    back = psi(looped, seed)
    canonical = psi(looped)
    return RoundtripReport(
        looped=looped,
        psi_seeded=back,
        psi_seeded_exact=back == g,
        psi_canonical=canonical,
        chi_canonical_exact=chi(canonical) == looped,
    )
