"""GF(2) matrix layer against brute-force oracles."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphlinks.gf2 import Gf2Matrix, SingularMatrixError
from helpers import square_matrices


def _span_size(m: Gf2Matrix) -> int:
    """Size of the row space, counted by closing the rows under XOR."""
    span = {0}
    for r in m.rows:
        span |= {x ^ r for x in span}
    return len(span)


def _det_by_expansion(m: Gf2Matrix) -> int:
    """Permutation expansion; signs vanish mod 2."""
    total = 0
    for perm in itertools.permutations(range(m.n)):
        prod = 1
        for i, j in enumerate(perm):
            prod &= m.get(i, j)
        total ^= prod
    return total


def _all_matrices(n):
    for bits in itertools.product((0, 1), repeat=n * n):
        yield Gf2Matrix.from_lists([list(bits[i * n : (i + 1) * n]) for i in range(n)])


def test_zero_dimensional_conventions():
    m = Gf2Matrix.zero(0)
    assert m.determinant() == 1
    assert m.corank() == 0
    assert m.inverse() == m
    assert m @ m == m


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_rank_and_det_exhaustive(n):
    for m in _all_matrices(n):
        assert 1 << m.rank() == _span_size(m)
        assert m.determinant() == _det_by_expansion(m)
        assert m.corank() == n - m.rank()


@given(square_matrices(max_n=5))
def test_rank_matches_span_oracle(m):
    assert 1 << m.rank() == _span_size(m)


@given(square_matrices(max_n=4))
def test_det_matches_expansion_oracle(m):
    assert m.determinant() == _det_by_expansion(m)


@given(square_matrices(max_n=6))
def test_inverse_roundtrip_or_singular(m):
    if m.determinant() == 1:
        inv = m.inverse()
        assert m @ inv == Gf2Matrix.identity(m.n)
        assert inv @ m == Gf2Matrix.identity(m.n)
    else:
        with pytest.raises(SingularMatrixError):
            m.inverse()


@given(square_matrices(max_n=5), st.randoms(use_true_random=False))
def test_add_is_entrywise_xor(m, rng):
    other = Gf2Matrix(
        m.n, tuple(rng.randrange(1 << m.n) if m.n else 0 for _ in range(m.n))
    )
    s = m + other
    for i in range(m.n):
        for j in range(m.n):
            assert s.get(i, j) == m.get(i, j) ^ other.get(i, j)
    assert s + other == m


@given(square_matrices(max_n=4), st.data())
def test_matmul_matches_schoolbook(m, data):
    other = data.draw(square_matrices(max_n=4).filter(lambda o: o.n == m.n))
    prod = m @ other
    for i in range(m.n):
        for j in range(m.n):
            want = 0
            for k in range(m.n):
                want ^= m.get(i, k) & other.get(k, j)
            assert prod.get(i, j) == want


@given(square_matrices(max_n=5), st.data())
def test_transpose_reverses_products(m, data):
    other = data.draw(square_matrices(max_n=5).filter(lambda o: o.n == m.n))
    assert m.transpose().transpose() == m
    assert (m @ other).transpose() == other.transpose() @ m.transpose()


@given(square_matrices(max_n=6), st.data())
def test_delete_rows_cols_matches_list_slicing(m, data):
    drop = data.draw(st.sets(st.integers(0, m.n - 1)) if m.n else st.just(set()))
    sub = m.delete_rows_cols(drop)
    kept = [i for i in range(m.n) if i not in drop]
    assert sub.to_lists() == [[m.get(i, j) for j in kept] for i in kept]


@given(square_matrices(max_n=6), st.data())
def test_flip_diagonal_entry_touches_one_bit(m, data):
    if m.n == 0:
        return
    i = data.draw(st.integers(0, m.n - 1))
    f = m.flip_diagonal_entry(i)
    assert f.get(i, i) == 1 - m.get(i, i)
    assert f.flip_diagonal_entry(i) == m
    assert sum(a != b for a, b in zip(f.rows, m.rows)) == 1


def test_identity_and_symmetry():
    eye = Gf2Matrix.identity(4)
    assert eye.determinant() == 1
    assert eye.inverse() == eye
    assert eye.is_symmetric()
    swap = Gf2Matrix.from_lists([[0, 1], [1, 0]])
    assert swap.determinant() == 1
    assert swap.inverse() == swap
    ones = Gf2Matrix.from_lists([[1, 1], [1, 1]])
    assert ones.rank() == 1
    assert ones.corank() == 1
    assert not Gf2Matrix.from_lists([[0, 1], [0, 0]]).is_symmetric()


def test_construction_validation():
    with pytest.raises(ValueError):
        Gf2Matrix(2, (1,))
    with pytest.raises(ValueError):
        Gf2Matrix(1, (2,))
    with pytest.raises(ValueError):
        Gf2Matrix.from_lists([[1, 0]])
    with pytest.raises(ValueError):
        Gf2Matrix.identity(2) + Gf2Matrix.identity(3)
    with pytest.raises(IndexError):
        Gf2Matrix.identity(2).get(2, 0)


def test_render_shows_rows():
    assert Gf2Matrix.from_lists([[1, 0], [1, 1]]).render() == "10\n11"
