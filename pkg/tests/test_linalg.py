from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bundlesig import linalg
from bundlesig.linalg import DimensionMismatch, Inertia, NonSymmetric, Singular

from conftest import float_inertia


def test_kernel_of_zero_matrix_is_everything():
    basis = linalg.kernel_basis(linalg.zeros(2, 4))
    assert basis == list(linalg.identity(4))


def test_kernel_of_identity_is_empty():
    assert linalg.kernel_basis(linalg.identity(3)) == []


def test_kernel_of_one_equation_system():
    m = ((0, -1, 0, 1), (0, 0, 0, 0))
    basis = linalg.kernel_basis(m)
    assert len(basis) == 3
    for v in basis:
        assert linalg.mat_vec(m, v) == (0, 0)
        assert v[1] == v[3]
        assert next(x for x in v if x) == 1
    assert linalg.rank(tuple(basis)) == 3


def test_kernel_of_empty_matrix_uses_width():
    assert linalg.kernel_basis((), cols=2) == [(1, 0), (0, 1)]


@pytest.mark.parametrize(
    "g, expected",
    [
        (((1, 0, 0), (0, -1, 0), (0, 0, 0)), Inertia(1, 1, 1)),
        (((2, 1), (1, 2)), Inertia(2, 0, 0)),
        (((0, 1), (1, 0)), Inertia(1, 1, 0)),
        (((0, 0), (0, 0)), Inertia(0, 0, 2)),
    ],
)
def test_inertia_examples(g, expected):
    assert linalg.inertia(g) == expected


def test_inertia_rejects_asymmetric():
    with pytest.raises(NonSymmetric):
        linalg.inertia(((0, 1), (2, 0)))


def test_inertia_hyperbolic_block_with_tail():
    g = ((0, 2, 1), (2, 0, 1), (1, 1, 0))
    assert linalg.inertia(g) == Inertia(*float_inertia(g))


def test_matrix_products_and_inverse():
    T = ((1, 1), (0, 1))
    assert linalg.mul(linalg.identity(2), T) == T
    assert linalg.mul(T, linalg.inverse(T)) == linalg.identity(2)
    assert linalg.mul(T, ((1, 0), (1, 1))) == ((2, 1), (1, 1))
    assert linalg.transpose(((1, 2, 3),)) == ((1,), (2,), (3,))


def test_dimension_errors():
    with pytest.raises(DimensionMismatch):
        linalg.mul(((1, 2),), ((1, 2),))
    with pytest.raises(Singular):
        linalg.inverse(((1, 2), (2, 4)))
    with pytest.raises(DimensionMismatch):
        linalg.as_matrix([[1], [1, 2]])


def test_exact_inverse_has_fractions():
    inv = linalg.inverse(((2, 0), (0, 4)))
    assert inv == ((Fraction(1, 2), 0), (0, Fraction(1, 4)))
    assert linalg.det(((2, 1), (1, 1))) == 1


small = st.integers(-3, 3)


@st.composite
def symmetric_and_congruence(draw):
    n = draw(st.integers(1, 12))
    entries = draw(st.lists(small, min_size=n * n, max_size=n * n))
    a = [[entries[i * n + j] for j in range(n)] for i in range(n)]
    g = tuple(tuple(a[min(i, j)][max(i, j)] for j in range(n)) for i in range(n))
    # unit triangular times a random diagonal of nonzero rationals is invertible
    lower = draw(st.lists(small, min_size=n * n, max_size=n * n))
    diag = draw(st.lists(st.sampled_from([1, -1, 2, Fraction(1, 3), -3]), min_size=n, max_size=n))
    s = tuple(
        tuple(diag[i] if i == j else (lower[i * n + j] if i > j else 0) for j in range(n)) for i in range(n)
    )
    perm = draw(st.permutations(range(n)))
    s = tuple(s[p] for p in perm)
    return g, s


@settings(max_examples=150, deadline=None)
@given(symmetric_and_congruence())
def test_sylvester_law_of_inertia(data):
    g, s = data
    moved = linalg.mul(linalg.mul(linalg.transpose(s), g), s)
    assert linalg.inertia(moved) == linalg.inertia(g)


@settings(max_examples=100, deadline=None)
@given(symmetric_and_congruence())
def test_inertia_matches_float_eigenvalues(data):
    g, _ = data
    inr = linalg.inertia(g)
    assert (inr.positive, inr.negative, inr.zero) == float_inertia(g)
    assert inr.rank == linalg.rank(g)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5), st.integers(1, 7), st.data())
def test_kernel_vectors_are_annihilated(rows, cols, data):
    entries = data.draw(st.lists(small, min_size=rows * cols, max_size=rows * cols))
    m = tuple(tuple(entries[i * cols:(i + 1) * cols]) for i in range(rows))
    basis = linalg.kernel_basis(m)
    assert len(basis) == cols - linalg.rank(m)
    for v in basis:
        assert all(x == 0 for x in linalg.mat_vec(m, v))
    if basis:
        assert linalg.rank(tuple(basis)) == len(basis)
