"""chi, psi, diagonal completion, and the exact round trips between them."""

import itertools
import random

import pytest
from hypothesis import given, settings

from graphlinks import (
    AdditionPayload,
    DiagonalCompletion,
    Gf2Matrix,
    InternalContradictionError,
    LabeledGraph,
    LoopedGraph,
    MoveDescriptor,
    NotAKnotError,
    apply_move,
    chi,
    complete_diagonal,
    complete_diagonal_forced,
    knot_matrix,
    psi,
    roundtrip_check,
    writhe,
)
from helpers import (
    looped_graphs,
    names_for,
    permuted,
    random_knot,
    random_looped,
    random_symmetric,
)


# Brute-force oracle: all diagonals of an n x n symmetric matrix that make
# it invertible, as bit tuples in lexicographic bit-string order.
def _all_good_diagonals(a, n):
    off = [a.rows[i] & ~(1 << i) for i in range(n)]
    good = []
    for bits in itertools.product((0, 1), repeat=n):
        rows = tuple(off[i] | (bits[i] << i) for i in range(n))
        if Gf2Matrix(n, rows).determinant() == 1:
            good.append(bits)
    return good


def test_complete_diagonal_single_zero():
    comp = complete_diagonal(Gf2Matrix(1, (0,)))
    assert comp.diagonal == (1,)
    assert comp.matrix.rows == (1,)


def test_complete_diagonal_k2_already_invertible():
    a = Gf2Matrix(2, (0b10, 0b01))
    comp = complete_diagonal(a)
    assert comp.diagonal == (0, 0)
    assert comp.matrix == a


def test_complete_diagonal_zero_matrix_forces_identity():
    comp = complete_diagonal(Gf2Matrix.zero(2))
    assert comp.diagonal == (1, 1)
    assert comp.matrix == Gf2Matrix.identity(2)


def test_complete_diagonal_preferred_kept_verbatim():
    a = Gf2Matrix.zero(1)
    assert complete_diagonal(a, preferred=(1,)).diagonal == (1,)
    # A singular preference ((1,1) gives the all-ones matrix) falls back
    # to the canonical search.
    comp = complete_diagonal(Gf2Matrix(2, (0b10, 0b01)), preferred=(1, 1))
    assert comp.matrix.determinant() == 1
    assert comp.diagonal == (0, 0)


def test_complete_diagonal_validates_input():
    with pytest.raises(ValueError):
        complete_diagonal(Gf2Matrix(2, (0b10, 0b00)))
    with pytest.raises(ValueError):
        complete_diagonal(Gf2Matrix.zero(2), preferred=(1,))


def test_complete_diagonal_canonical_is_lex_smallest():
    rng = random.Random(31)
    for _ in range(200):
        n = rng.randint(1, 5)
        a = random_symmetric(rng, n)
        comp = complete_diagonal(a)
        assert comp.matrix.determinant() == 1
        assert comp.diagonal == min(_all_good_diagonals(a, n))


def test_complete_diagonal_forced_matches_brute_force():
    rng = random.Random(32)
    for _ in range(200):
        n = rng.randint(1, 5)
        a = random_symmetric(rng, n)
        forced = {i: rng.randint(0, 1) for i in range(n) if rng.random() < 0.5}
        comp = complete_diagonal_forced(a, forced)
        want = [d for d in _all_good_diagonals(a, n) if all(d[i] == v for i, v in forced.items())]
        if comp is None:
            assert want == []
        else:
            assert comp.diagonal == min(want)
            assert comp.matrix.determinant() == 1


def test_complete_diagonal_forced_can_fail():
    assert complete_diagonal_forced(Gf2Matrix(1, (0,)), {0: 0}) is None


def _single(framing, sign):
    return LabeledGraph.build([framing], [sign], set())


def test_chi_single_vertex():
    assert chi(_single(0, 1)) == LoopedGraph.build([1], set())
    assert chi(_single(0, -1)) == LoopedGraph.build([0], set())


def test_chi_framed_pair():
    g = LabeledGraph.build([1, 1], [1, 1], {(0, 1)})
    assert chi(g) == LoopedGraph.build([0, 0], {(0, 1)})


def test_chi_rejects_links():
    with pytest.raises(NotAKnotError):
        chi(LabeledGraph.build([0, 0], [1, 1], {(0, 1)}))


def test_chi_keeps_names():
    g = LabeledGraph.build([0, 1, 1], [-1, 1, 1], {(1, 2)}, names=["x", "y", "z"])
    assert [v.name for v in chi(g).vertices] == ["x", "y", "z"]


def test_psi_single_vertices():
    assert psi(LoopedGraph.build([1], set())) == _single(0, 1)
    assert psi(LoopedGraph.build([0], set())) == _single(0, -1)


def test_psi_unlooped_k2():
    want = LabeledGraph.build([1, 1], [1, 1], {(0, 1)})
    assert psi(LoopedGraph.build([0, 0], {(0, 1)})) == want


def test_roundtrip_examples():
    for g in (_single(0, 1), LabeledGraph.build([1, 1], [1, 1], {(0, 1)})):
        rep = roundtrip_check(g)
        assert rep.psi_seeded_exact
        assert rep.chi_canonical_exact


def test_roundtrip_random_knots():
    rng = random.Random(33)
    for _ in range(300):
        rep = roundtrip_check(random_knot(rng, 8))
        assert rep.psi_seeded_exact
        assert rep.chi_canonical_exact


@settings(max_examples=200)
@given(looped_graphs(max_n=6))
def test_chi_psi_is_identity_on_looped_graphs(l):
    assert chi(psi(l)) == l


def test_chi_is_label_equivariant():
    rng = random.Random(34)
    for _ in range(200):
        g = random_knot(rng, 7)
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert chi(permuted(g, perm)) == permuted(chi(g), perm)


def _restrict(l: LoopedGraph, names):
    """Induced looped subgraph on the given names, in their order in l."""
    keep = [i for i, v in enumerate(l.vertices) if v.name in names]
    pos = {i: k for k, i in enumerate(keep)}
    loops = [1 if l.looped(i) else 0 for i in keep]
    edges = {(pos[a], pos[b]) for a, b in l.edges if a in pos and b in pos}
    return LoopedGraph.build(loops, edges, names=[l.vertices[i].name for i in keep])


def test_chi_image_of_og1_addition_is_o1_pattern():
    # Adding a removable vertex on the labeled side adds an isolated vertex
    # on the looped side, looped exactly when the sign is positive, and
    # leaves the rest of the image untouched.
    rng = random.Random(35)
    for _ in range(150):
        g2 = random_knot(rng, 7)
        sign = rng.choice((1, -1))
        at = rng.randint(0, g2.n)
        m = MoveDescriptor(
            "Og1", "add", ("zz",), AdditionPayload(labels=((0, sign),), positions=(at,))
        )
        g1 = apply_move(g2, m)
        l1 = chi(g1)
        i = l1.index_of("zz")
        assert l1.neighbors(i) == frozenset()
        assert l1.looped(i) == (sign == 1)
        old = [v.name for v in g2.vertices]
        assert _restrict(l1, set(old)) == chi(g2)


def test_chi_image_of_og2_addition_is_o2_pattern():
    # The added pair maps to one looped and one unlooped vertex with equal
    # neighborhoods outside the pair; dropping both recovers the old image.
    rng = random.Random(36)
    for _ in range(150):
        g2 = random_knot(rng, 7)
        adjacent = rng.choice((True, False))
        framing = 1 if adjacent else 0
        nbrs = tuple(v.name for v in g2.vertices if rng.random() < 0.5)
        m = MoveDescriptor(
            "Og2",
            "add",
            ("p", "q"),
            AdditionPayload(
                labels=((framing, 1), (framing, -1)), adjacent=adjacent, neighbors=nbrs
            ),
        )
        g1 = apply_move(g2, m)
        l1 = chi(g1)
        i, j = l1.index_of("p"), l1.index_of("q")
        assert l1.looped(i) != l1.looped(j)
        pair = {i, j}
        assert l1.neighbors(i) - pair == l1.neighbors(j) - pair
        old = [v.name for v in g2.vertices]
        assert _restrict(l1, set(old)) == chi(g2)


def test_psi_seeded_diagonal_wrong_length():
    with pytest.raises(ValueError):
        psi(LoopedGraph.build([1], set()), preferred_diagonal=(1, 0))


def test_completion_matrix_matches_off_diagonal():
    rng = random.Random(37)
    for _ in range(100):
        n = rng.randint(1, 8)
        a = random_symmetric(rng, n)
        comp = complete_diagonal(a)
        for i in range(n):
            assert comp.matrix.rows[i] & ~(1 << i) == a.rows[i] & ~(1 << i)
            assert (comp.matrix.rows[i] >> i) & 1 == comp.diagonal[i]
