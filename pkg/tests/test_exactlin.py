from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superlie.exactlin import (
    RationalMatrix,
    as_rational,
    nullspace_basis,
    rank,
    rref,
    row_space_basis,
    solve_in_span,
)


def M(rows):
    return RationalMatrix.from_rows(rows)


def test_rational_normalization():
    assert as_rational("6/4") == Fraction(3, 2)
    assert as_rational("-0/5") == Fraction(0, 1)
    assert as_rational(Fraction(2, -4)).denominator == 2
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_rref_examples():
    assert rref(RationalMatrix.identity(2)) == RationalMatrix.identity(2)
    assert rref(M([[2, 4], [1, 2]])) == M([[1, 2], [0, 0]])
    assert rref(RationalMatrix.zeros(3, 3)) == RationalMatrix.zeros(3, 3)


def test_rank_examples():
    assert rank(RationalMatrix.identity(3)) == 3
    assert rank(RationalMatrix.zeros(2, 5)) == 0
    assert rank(M([[1, 1], [1, 1]])) == 1


def test_nullspace_examples():
    assert nullspace_basis(RationalMatrix.identity(2)) == []
    assert nullspace_basis(M([[1, 1]])) == [[-1, 1]]
    assert nullspace_basis(RationalMatrix.zeros(1, 3)) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_empty_shapes():
    assert rank(RationalMatrix(0, 4)) == 0
    assert len(nullspace_basis(RationalMatrix(0, 4))) == 4
    assert nullspace_basis(RationalMatrix(3, 0)) == []


def test_solve_in_span():
    basis, piv = row_space_basis([[1, 2, 0], [0, 0, 1]], 3)
    assert solve_in_span(basis, piv, [2, 4, 3]) == [2, 3]
    assert solve_in_span(basis, piv, [0, 1, 0]) is None


small = st.integers(-3, 3)


def matrices(max_dim=5):
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_nullity(rows):
    A = M(rows)
    ker = nullspace_basis(A)
    assert rank(A) + len(ker) == A.cols
    for v in ker:
        assert all(x == 0 for x in A @ v)


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rref_idempotent_and_rank_transpose(rows):
    A = M(rows)
    R = rref(A)
    assert rref(R) == R
    assert rank(A) == rank(A.transpose())


@st.composite
def product_pair(draw):
    r, k, c = (draw(st.integers(1, 4)) for _ in range(3))
    a = draw(st.lists(st.lists(small, min_size=k, max_size=k), min_size=r, max_size=r))
    b = draw(st.lists(st.lists(small, min_size=c, max_size=c), min_size=k, max_size=k))
    return M(a), M(b)


@settings(max_examples=50, deadline=None)
@given(product_pair())
def test_rank_of_product_bounded(pair):
    A, B = pair
    assert rank(A @ B) <= min(rank(A), rank(B))
