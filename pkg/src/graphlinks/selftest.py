"""Reduced-scale property battery behind the `selftest` subcommand.

Each check reruns one of the library's core guarantees on a few hundred
random cases.  The point is a fast smoke screen for a fresh install, not a
replacement for the test suite; populations here are one or two orders of
magnitude below what the tests run.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Optional

from .chords import ChordDiagram, interlacement, realize, wheel
from .correspondence import complete_diagonal, roundtrip_check
from .formats import Document, format_move, parse_document, parse_move, serialize_document
from .gf2 import Gf2Matrix
from .graphs import LabeledGraph, LoopedGraph, canonical_form
from .invariants import is_graph_knot, knot_matrix, writhe, writhe_via_minor
from .moves import apply_move, inverse_descriptor, list_moves
from .search import SearchBounds, prove_equivalent, replay


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    cases: int
    detail: str = ""


def _names(n: int) -> list[str]:
    return [chr(97 + i % 26) + ("" if i < 26 else str(i // 26)) for i in range(n)]


def _rand_symmetric(rng: random.Random, n: int) -> Gf2Matrix:
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = rng.randrange(2)
        for j in range(i + 1, n):
            rows[i][j] = rows[j][i] = rng.randrange(2)
    return Gf2Matrix.from_lists(rows)


def _rand_labeled(rng: random.Random, nmax: int) -> LabeledGraph:
    n = rng.randrange(nmax + 1)
    edges = {
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4
    }
    framings = [rng.randrange(2) for _ in range(n)]
    signs = [rng.choice((1, -1)) for _ in range(n)]
    return LabeledGraph.build(framings, signs, edges, names=_names(n))


def _rand_looped(rng: random.Random, nmax: int) -> LoopedGraph:
    n = rng.randrange(nmax + 1)
    edges = {
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4
    }
    loops = [rng.randrange(2) == 1 for _ in range(n)]
    return LoopedGraph.build(loops, edges, names=_names(n))


def _rand_knot(rng: random.Random, nmax: int) -> LabeledGraph:
    while True:
        g = _rand_labeled(rng, nmax)
        if is_graph_knot(g):
            return g


def _rand_diagram(rng: random.Random, nmax: int) -> ChordDiagram:
    n = rng.randrange(1, nmax + 1)
    word = _names(n) * 2
    rng.shuffle(word)
    labels = {
        nm: (rng.randrange(2), rng.choice((1, -1)))
        for nm in _names(n)
        if rng.random() < 0.5
    }
    return ChordDiagram.build(word, labels)


def _check_gf2(rng: random.Random) -> int:
    cases = 0
    for _ in range(150):
        n = rng.randrange(9)
        m = _rand_symmetric(rng, n)
        assert m.rank() + m.corank() == n
        assert m.determinant() in (0, 1)
        if m.determinant() == 1:
            assert m @ m.inverse() == Gf2Matrix.identity(n)
        cases += 1
    return cases


def _check_minor_writhe(rng: random.Random) -> int:
    cases = 0
    for _ in range(120):
        g = _rand_knot(rng, 8)
        report = writhe(g)
        for i in range(g.n):
            assert report.per_vertex[i] == writhe_via_minor(g, i), f"vertex {i} of {g}"
        cases += 1
    return cases


def _check_inverse_diagonal(rng: random.Random) -> int:
    cases = 0
    for _ in range(120):
        g = _rand_knot(rng, 8)
        report = writhe(g)
        inv = knot_matrix(g).inverse()
        for i in range(g.n):
            expected = (1 - report.per_vertex[i] * g.sign(i)) // 2
            assert inv.get(i, i) == expected
        cases += 1
    return cases


def _check_completion(rng: random.Random) -> int:
    cases = 0
    for _ in range(100):
        n = rng.randrange(7)
        a = _rand_symmetric(rng, n)
        done = complete_diagonal(a)
        assert done.matrix.determinant() == 1
        if n <= 5:
            best: Optional[tuple[int, ...]] = None
            for bits in itertools.product((0, 1), repeat=n):
                cand = a
                for i, b in enumerate(bits):
                    if cand.get(i, i) != b:
                        cand = cand.flip_diagonal_entry(i)
                if cand.determinant() == 1 and (best is None or bits < best):
                    best = bits
            assert done.diagonal == best
        cases += 1
    return cases


def _check_move_roundtrip(rng: random.Random) -> int:
    cases = 0
    for _ in range(150):
        g = _rand_labeled(rng, 7) if rng.random() < 0.5 else _rand_looped(rng, 7)
        moves = list_moves(g)
        if not moves:
            continue
        m = rng.choice(moves)
        h = apply_move(g, m)
        back = apply_move(h, inverse_descriptor(g, m))
        assert back == g, f"{m} did not invert on {g}"
        cases += 1
    return cases


def _check_corank_invariance(rng: random.Random) -> int:
    cases = 0
    for _ in range(150):
        g = _rand_labeled(rng, 7)
        moves = list_moves(g)
        if not moves:
            continue
        m = rng.choice(moves)
        h = apply_move(g, m)
        assert knot_matrix(g).corank() == knot_matrix(h).corank(), f"{m} on {g}"
        cases += 1
    return cases


def _check_chi_psi(rng: random.Random) -> int:
    cases = 0
    for _ in range(100):
        g = _rand_knot(rng, 7)
        report = roundtrip_check(g)
        assert report.psi_seeded_exact, f"seeded psi missed {g}"
        assert report.chi_canonical_exact, f"chi after canonical psi missed {g}"
        cases += 1
    return cases


def _check_realize(rng: random.Random) -> int:
    cases = 0
    for _ in range(60):
        d = _rand_diagram(rng, 6)
        g = interlacement(d)
        again = realize(g)
        assert again is not None, f"interlacement graph of {d.word} not realized"
        h = interlacement(again)
        assert canonical_form(g) == canonical_form(h)
        cases += 1
    assert realize(wheel(5)) is None
    return cases + 1


def _check_canonical(rng: random.Random) -> int:
    cases = 0
    for _ in range(120):
        g = _rand_labeled(rng, 7) if rng.random() < 0.5 else _rand_looped(rng, 7)
        perm = list(range(g.n))
        rng.shuffle(perm)
        edges = {
            (min(perm[a], perm[b]), max(perm[a], perm[b])) for a, b in g.edges
        }
        if isinstance(g, LabeledGraph):
            framings = [0] * g.n
            signs = [1] * g.n
            for v in range(g.n):
                framings[perm[v]] = g.framing(v)
                signs[perm[v]] = g.sign(v)
            h: LabeledGraph | LoopedGraph = LabeledGraph.build(framings, signs, edges)
        else:
            loops = [False] * g.n
            for v in range(g.n):
                loops[perm[v]] = g.looped(v)
            h = LoopedGraph.build(loops, edges)
        assert canonical_form(g) == canonical_form(h)
        cases += 1
    return cases


def _check_search(rng: random.Random) -> int:
    bounds = SearchBounds(max_depth=8, max_states=20000)
    cases = 0
    for _ in range(40):
        g = _rand_labeled(rng, 5) if rng.random() < 0.5 else _rand_looped(rng, 5)
        h = g
        for _ in range(rng.randrange(1, 4)):
            moves = list_moves(h)
            if not moves:
                break
            h = apply_move(h, rng.choice(moves))
        result = prove_equivalent(g, h, bounds=bounds)
        assert result.status == "Certificate", f"{result.status}: {result.reason}"
        steps = [parse_move(format_move(m)) for m in result.certificate.steps]
        assert canonical_form(replay(g, steps)) == canonical_form(h)
        cases += 1
    return cases


def _check_formats(rng: random.Random) -> int:
    cases = 0
    for _ in range(100):
        kind = rng.randrange(3)
        if kind == 0:
            doc = Document.of(_rand_labeled(rng, 8))
        elif kind == 1:
            doc = Document.of(_rand_looped(rng, 8))
        else:
            doc = Document.of(_rand_diagram(rng, 6))
        text = serialize_document(doc)
        back = parse_document(text, source=doc.source)
        assert back.payload == doc.payload
        assert serialize_document(back) == text
        cases += 1
    for _ in range(80):
        g = _rand_labeled(rng, 6) if rng.random() < 0.5 else _rand_looped(rng, 6)
        for m in list_moves(g):
            assert parse_move(format_move(m)) == m
            inv = inverse_descriptor(g, m)
            assert parse_move(format_move(inv)) == inv
            cases += 1
    return cases


_CHECKS: tuple[tuple[str, Callable[[random.Random], int]], ...] = (
    ("gf2-linear-algebra", _check_gf2),
    ("writhe-minor-formula", _check_minor_writhe),
    ("inverse-diagonal-formula", _check_inverse_diagonal),
    ("diagonal-completion", _check_completion),
    ("move-inverses", _check_move_roundtrip),
    ("corank-invariance", _check_corank_invariance),
    ("chi-psi-roundtrip", _check_chi_psi),
    ("realize-interlacement", _check_realize),
    ("canonical-form", _check_canonical),
    ("equivalence-search", _check_search),
    ("format-roundtrip", _check_formats),
)


def run_selftest(seed: int = 0) -> list[CheckResult]:
    """Run every check on its own seeded generator; never raises."""
    results = []
    for name, fn in _CHECKS:
        rng = random.Random(f"{seed}:{name}")
        try:
            cases = fn(rng)
        except Exception as e:  # noqa: BLE001 - a failing check is data here
            results.append(CheckResult(name, False, 0, f"{type(e).__name__}: {e}"))
        else:
            results.append(CheckResult(name, True, cases))
    return results
