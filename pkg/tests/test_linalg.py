import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from autorbits.ffield import gf
from autorbits.linalg import (
    Mat,
    SingularMatrixError,
    batch_det2,
    batch_inv,
    batch_matmul,
    complete_basis,
    mat_det,
    mat_inv,
    mat_rank,
    rank_normal_form,
    rref,
)


def mats(q, n, m=None):
    m = m or n
    return st.lists(st.integers(0, q - 1), min_size=n * m, max_size=n * m).map(
        lambda v: Mat(gf(q), np.array(v).reshape(n, m))
    )


@settings(max_examples=100, deadline=None)
@given(st.data(), st.sampled_from([2, 3, 4, 8, 9]), st.integers(1, 4))
def test_det_multiplicative(data, q, n):
    a = data.draw(mats(q, n))
    b = data.draw(mats(q, n))
    assert mat_det(a @ b) == mat_det(a) * mat_det(b)


@settings(max_examples=100, deadline=None)
@given(st.data(), st.sampled_from([2, 4, 5, 16]), st.integers(1, 4))
def test_inverse_round_trip(data, q, n):
    a = data.draw(mats(q, n))
    if mat_det(a).value == 0:
        with pytest.raises(SingularMatrixError):
            mat_inv(a)
        assert mat_rank(a) < n
    else:
        I = Mat.identity(a.field, n)
        assert a @ mat_inv(a) == I and mat_inv(a) @ a == I
        assert mat_rank(a) == n


def test_batch_inverse_and_det():
    F = gf(4)
    rng = np.random.default_rng(7)
    a = rng.integers(0, 4, size=(200, 2, 2)).astype(np.int16)
    d = batch_det2(F, a)
    good = a[d != 0]
    inv = batch_inv(F, good)
    eye = np.broadcast_to(np.eye(2, dtype=np.int16), good.shape)
    assert np.array_equal(batch_matmul(F, good, inv), eye)


def test_rref_pivots():
    F = gf(3)
    a = Mat(F, [[0, 1, 2], [0, 2, 1], [1, 0, 0]])
    r, piv = rref(a)
    assert piv == [0, 1]
    assert r.tolist()[:2] == [[1, 0, 0], [0, 1, 2]]


@settings(max_examples=80, deadline=None)
@given(st.data(), st.sampled_from([2, 4, 8]), st.integers(1, 4))
def test_rank_normal_form(data, q, m):
    y = data.draw(mats(q, 2, m))
    P, Q, r = rank_normal_form(y)
    target = np.zeros((2, m), dtype=np.int16)
    target[np.arange(r), np.arange(r)] = 1
    assert np.array_equal((P @ y @ Q).a, target)
    assert r == mat_rank(y)
    assert mat_det(P).value != 0 and mat_det(Q).value != 0


def test_complete_basis():
    F = gf(4)
    rows = np.array([[2, 3, 0]], dtype=np.int16)
    B = complete_basis(F, rows)
    assert B.shape == (3, 3)
    assert np.array_equal(B[0], rows[0])
    assert mat_rank(Mat(F, B)) == 3


def test_mat_entries_and_shape_errors():
    F = gf(8)
    a = Mat(F, [[1, 2], [3, 4]])
    assert a[0, 1] == F(2)
    assert a.T.tolist() == [[1, 3], [2, 4]]
    with pytest.raises(ValueError):
        a @ Mat(F, [[1, 2, 3]])
