"""Exact matrix and tensor substrate."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from verlinde.exact import (DimensionMismatchError, Matrix,
                            SingularMatrixError, Tensor3, invert, mat_mul,
                            rank)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def test_mat_mul_identity():
    m = Matrix([[1, 2], [3, 4]])
    assert mat_mul(Matrix.identity(2), m) == m
    assert mat_mul(m, Matrix.identity(2)) == m


def test_mat_mul_permutation_action():
    m = Matrix([[1, 2], [3, 4]])
    swap = Matrix([[0, 1], [1, 0]])
    assert mat_mul(m, swap) == Matrix([[2, 1], [4, 3]])


def test_mat_mul_scalar_rationals():
    got = mat_mul(Matrix([[Fraction(1, 2)]]), Matrix([[Fraction(2, 3)]]))
    assert got == Matrix([[Fraction(1, 3)]])


def test_mat_mul_rejects_mismatch():
    with pytest.raises(DimensionMismatchError) as err:
        mat_mul(Matrix([[1, 2]]), Matrix([[1, 2]]))
    assert "1x2" in str(err.value)


def test_rank_examples():
    assert rank(Matrix.zeros(3, 3)) == 0
    assert rank(Matrix.identity(3)) == 3
    assert rank(Matrix([[1, 2], [2, 4]])) == 1


def test_invert_examples():
    assert invert(Matrix.identity(3)) == Matrix.identity(3)
    assert invert(Matrix([[2, 0], [0, 3]])) == Matrix(
        [[Fraction(1, 2), 0], [0, Fraction(1, 3)]])
    assert invert(Matrix([[1, 1], [0, 1]])) == Matrix([[1, -1], [0, 1]])


def test_invert_singular_carries_rank():
    with pytest.raises(SingularMatrixError) as err:
        invert(Matrix([[1, 2], [2, 4]]))
    assert err.value.rank == 1
    assert err.value.size == 2


def test_invert_rejects_nonsquare():
    with pytest.raises(DimensionMismatchError):
        invert(Matrix([[1, 2, 3], [4, 5, 6]]))


def test_matrix_is_immutable():
    m = Matrix([[1]])
    with pytest.raises(AttributeError):
        m.rows = 2


@given(st.lists(st.lists(rationals, min_size=3, max_size=3),
                min_size=2, max_size=4))
def test_rank_equals_rank_of_transpose(rows):
    m = Matrix(rows)
    assert m.rank() == m.transpose().rank()


@given(st.integers(1, 4), st.data())
@settings(max_examples=40)
def test_inverse_roundtrip_on_lu_built_invertibles(n, data):
    small = st.integers(-3, 3)
    lower = [[1 if i == j else (data.draw(small) if i > j else 0)
              for j in range(n)] for i in range(n)]
    upper = [[data.draw(st.sampled_from([1, -1, 2])) if i == j
              else (data.draw(small) if i < j else 0)
              for j in range(n)] for i in range(n)]
    m = Matrix(lower) @ Matrix(upper)
    assert m @ m.inverse() == Matrix.identity(n)
    assert m.inverse() @ m == Matrix.identity(n)


@given(rationals, rationals, rationals)
def test_rational_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


def test_tensor3_from_dict_and_bounds():
    t = Tensor3.from_dict((2, 2, 2), {(0, 1, 1): Fraction(1, 2)})
    assert t[0, 1, 1] == Fraction(1, 2)
    assert t[1, 1, 1] == 0
    assert list(t.nonzero()) == [((0, 1, 1), Fraction(1, 2))]
    with pytest.raises(IndexError):
        Tensor3.from_dict((2, 2, 2), {(2, 0, 0): 1})


def test_tensor3_equality_and_hash():
    a = Tensor3.from_dict((2, 2, 2), {(0, 0, 0): 1})
    b = Tensor3.from_dict((2, 2, 2), {(0, 0, 0): 1})
    assert a == b
    assert hash(a) == hash(b)
