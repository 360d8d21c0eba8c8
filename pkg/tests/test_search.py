"""Bounded equivalence search: certificates, invariant separation, replays."""

import random

import pytest

from graphlinks import (
    EquivalenceResult,
    LabeledGraph,
    LoopedGraph,
    SearchBounds,
    TooLargeError,
    apply_move,
    canonical_form,
    invariant_distinguish,
    list_moves,
    prove_equivalent,
    replay,
)
from helpers import random_knot, random_labeled, random_looped


def _check_certificate(res, g1, g2):
    assert res.status == "Certificate"
    cert = res.certificate
    end = replay(g1, cert.steps)
    assert canonical_form(end) == cert.end_key == canonical_form(g2)
    assert cert.start_key == canonical_form(g1)
    assert len(cert.steps) == cert.depth_reached


def test_og1_vertex_vs_empty():
    g1 = LabeledGraph.build([0], [1], set())
    g2 = LabeledGraph.build([], [], set())
    res = prove_equivalent(g1, g2)
    _check_certificate(res, g1, g2)
    assert len(res.certificate.steps) == 1
    assert res.certificate.steps[0].family == "Og1"


def test_looped_k1_vs_empty():
    l1 = LoopedGraph.build([1], set())
    l2 = LoopedGraph.build([], set())
    res = prove_equivalent(l1, l2)
    _check_certificate(res, l1, l2)
    assert len(res.certificate.steps) == 1
    assert res.certificate.steps[0].family == "O1"


def test_framings_0_and_1_distinguished():
    g1 = LabeledGraph.build([0], [1], set())
    g2 = LabeledGraph.build([1], [1], set())
    res = prove_equivalent(g1, g2)
    assert res.status == "Distinguished"
    assert "component count" in res.reason


def test_identical_graphs_give_empty_certificate():
    g = LabeledGraph.build([1, 0], [1, -1], {(0, 1)})
    res = prove_equivalent(g, g)
    assert res.status == "Certificate"
    assert res.certificate.steps == ()
    assert res.stats["depth"] == 0


def test_kind_mismatch_rejected():
    with pytest.raises(TypeError):
        prove_equivalent(LabeledGraph.build([], [], set()), LoopedGraph.build([], set()))


def test_vertex_bound_enforced():
    g = LabeledGraph.build([0] * 4, [1] * 4, set())
    with pytest.raises(TooLargeError):
        prove_equivalent(g, g, bounds=SearchBounds(max_vertices=3))


def test_certificate_with_additions_replays():
    # The only route from the empty graph is adding a twin pair, so the
    # stitched path must invert the backward removal and rename cleanly.
    g1 = LabeledGraph.build([], [], set())
    g2 = LabeledGraph.build([0, 0], [1, -1], set())
    res = prove_equivalent(g1, g2)
    _check_certificate(res, g1, g2)
    assert [m.family for m in res.certificate.steps] in (["Og2"], ["Og1", "Og1"])


def test_inconclusive_when_depth_too_small():
    g1 = LabeledGraph.build([], [], set())
    g2 = LabeledGraph.build([0, 0, 0], [1, -1, 1], set())
    res = prove_equivalent(g1, g2, bounds=SearchBounds(max_depth=1))
    assert res.status == "Inconclusive"
    assert res.reason in ("depth budget exhausted", "frontier emptied")


def test_invariant_distinguish_components():
    g1 = LabeledGraph.build([0], [1], set())
    g2 = LabeledGraph.build([1], [1], set())
    assert "component count" in invariant_distinguish(g1, g2)


def test_invariant_distinguish_identical_none():
    g = LabeledGraph.build([1, 1], [1, 1], {(0, 1)})
    assert invariant_distinguish(g, g) is None


def test_invariant_distinguish_total_writhe_without_og1():
    g1 = LabeledGraph.build([0], [1], set())   # writhe -1
    g2 = LabeledGraph.build([0], [-1], set())  # writhe +1
    assert invariant_distinguish(g1, g2) is None
    reason = invariant_distinguish(g1, g2, families=("Og2", "Og3", "Og4", "Og4'"))
    assert "total writhe" in reason


def test_invariant_distinguish_multiset_under_og4_only():
    g1 = LabeledGraph.build([1, 1, 0], [1, 1, 1], {(0, 1), (1, 2)})
    g2 = LabeledGraph.build([1, 1, 0], [1, 1, -1], {(0, 1), (1, 2)})
    w_fams = ("Og4", "Og4'")
    r = invariant_distinguish(g1, g2, families=w_fams)
    if r is not None:
        assert "writhe" in r


def test_invariant_distinguish_survives_moves():
    rng = random.Random(51)
    for _ in range(200):
        g = random_labeled(rng, 6)
        h = g
        for _ in range(rng.randint(1, 4)):
            moves = list_moves(h)
            if not moves:
                break
            h = apply_move(h, rng.choice(moves))
        assert invariant_distinguish(g, h) is None


def _scramble(rng, g, steps):
    for _ in range(steps):
        moves = [
            m
            for m in list_moves(g)
            if not (m.direction == "add" and g.n >= 5)
        ]
        if not moves:
            break
        g = apply_move(g, rng.choice(moves))
    return g


def test_search_after_short_scramble_labeled():
    rng = random.Random(52)
    bounds = SearchBounds(max_depth=6, max_states=30_000)
    for _ in range(25):
        g = random_labeled(rng, 4)
        h = _scramble(rng, g, rng.randint(1, 3))
        res = prove_equivalent(g, h, bounds=bounds)
        assert res.status != "Distinguished"
        if res.status == "Certificate":
            _check_certificate(res, g, h)


def test_search_after_short_scramble_looped():
    rng = random.Random(53)
    bounds = SearchBounds(max_depth=6, max_states=30_000)
    for _ in range(25):
        l = random_looped(rng, 4)
        h = _scramble(rng, l, rng.randint(1, 3))
        res = prove_equivalent(l, h, bounds=bounds)
        assert res.status != "Distinguished"
        if res.status == "Certificate":
            _check_certificate(res, l, h)


def test_search_is_deterministic():
    g1 = LabeledGraph.build([0, 1], [1, 1], {(0, 1)})
    g2 = LabeledGraph.build([1, 0], [1, 1], {(0, 1)})
    a = prove_equivalent(g1, g2)
    b = prove_equivalent(g1, g2)
    assert a == b
