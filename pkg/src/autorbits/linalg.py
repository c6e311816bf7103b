"""Exact dense linear algebra over small finite fields.

:class:`Mat` is the user-facing value type.  The ``batch_*`` functions work on
stacked integer arrays of shape ``(..., r, c)`` holding field element codes and
are what the group machinery uses in its hot loops.
"""

from __future__ import annotations

from functools import reduce

import numpy as np

from .ffield import FFElem, FieldDesc, FieldError

MAX_DIM = 10


class SingularMatrixError(ArithmeticError):
    pass


def batch_matmul(F: FieldDesc, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product over ``F`` of two stacks, broadcasting over leading axes."""
    a = np.asarray(a)
    b = np.asarray(b)
    terms = F.mul[a[..., :, :, None], b[..., None, :, :]]  # (..., r, s, c)
    if F.p == 2:
        return np.bitwise_xor.reduce(terms, axis=-2)
    return reduce(lambda x, y: F.add[x, y], [terms[..., s, :] for s in range(terms.shape[-2])])


def batch_add(F: FieldDesc, a, b):
    if F.p == 2:
        return np.bitwise_xor(a, b)
    return F.add[a, b]


def batch_sub(F: FieldDesc, a, b):
    if F.p == 2:
        return np.bitwise_xor(a, b)
    return F.add[a, F.neg[b]]


def batch_scale(F: FieldDesc, s, a):
    return F.mul[np.asarray(s)[..., None, None], a]


def batch_det2(F: FieldDesc, a):
    return batch_sub(F, F.mul[a[..., 0, 0], a[..., 1, 1]], F.mul[a[..., 0, 1], a[..., 1, 0]])


def batch_inv(F: FieldDesc, a: np.ndarray) -> np.ndarray:
    """Inverse of a stack of invertible matrices (Gauss-Jordan, vectorized over the stack)."""
    a = np.array(a, dtype=np.int16, copy=True)
    n = a.shape[-1]
    lead = a.shape[:-2]
    a = a.reshape(-1, n, n)
    idx = np.arange(a.shape[0])
    aug = np.concatenate([a, np.broadcast_to(np.eye(n, dtype=np.int16), a.shape)], axis=-1)
    for col in range(n):
        nz = aug[:, col:, col] != 0
        if not nz.any(axis=1).all():
            raise SingularMatrixError("singular matrix in batch")
        piv = col + nz.argmax(axis=1)
        rows = aug[idx, piv].copy()
        aug[idx, piv] = aug[:, col]
        aug[:, col] = F.mul[F.inv[rows[:, col]][:, None], rows]
        for r in range(n):
            if r == col:
                continue
            f = aug[:, r, col]
            aug[:, r] = batch_sub(F, aug[:, r], F.mul[f[:, None], aug[:, col]])
    return aug[:, :, n:].reshape(*lead, n, n)


class Mat:
    """An r x c matrix over a finite field.  Immutable by convention."""

    __slots__ = ("field", "a")

    def __init__(self, field: FieldDesc, entries):
        arr = np.array(
            [[int(x) for x in row] for row in entries] if not isinstance(entries, np.ndarray) else entries,
            dtype=np.int16,
        )
        if arr.ndim != 2 or arr.size == 0:
            raise ValueError("matrix entries must form a non-empty 2-d array")
        if arr.min() < 0 or arr.max() >= field.q:
            raise FieldError(f"entry outside GF({field.q})")
        arr.setflags(write=False)
        self.field = field
        self.a = arr

    @classmethod
    def identity(cls, field, n):
        return cls(field, np.eye(n, dtype=np.int16))

    @classmethod
    def zeros(cls, field, r, c):
        return cls(field, np.zeros((r, c), dtype=np.int16))

    @classmethod
    def unit(cls, field, r, c, i, j, value=1):
        a = np.zeros((r, c), dtype=np.int16)
        a[i, j] = int(value)
        return cls(field, a)

    @property
    def rows(self):
        return self.a.shape[0]

    @property
    def cols(self):
        return self.a.shape[1]

    @property
    def shape(self):
        return self.a.shape

    def __getitem__(self, ij) -> FFElem:
        return FFElem(int(self.a[ij]), self.field)

    def _check(self, other, same_shape=True):
        if not isinstance(other, Mat):
            raise TypeError("expected a Mat")
        if other.field is not self.field:
            raise FieldError("field mismatch")
        if same_shape and other.shape != self.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        return mat_add(self, other)

    def __sub__(self, other):
        return mat_sub(self, other)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __mul__(self, other):
        if isinstance(other, Mat):
            return mat_mul(self, other)
        return scalar_mul(other, self)

    def __rmul__(self, s):
        return scalar_mul(s, self)

    def __eq__(self, other):
        return isinstance(other, Mat) and other.field is self.field and np.array_equal(self.a, other.a)

    def __hash__(self):
        return hash((self.shape, self.a.tobytes()))

    @property
    def T(self):
        return Mat(self.field, self.a.T.copy())

    def is_zero(self):
        return not self.a.any()

    def tolist(self):
        return self.a.tolist()

    def __repr__(self):
        name = self.field.name
        return "[" + ",".join("[" + ",".join(name(x) for x in row) + "]" for row in self.a) + "]"


def mat_mul(a: Mat, b: Mat) -> Mat:
    a._check(b, same_shape=False)
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.shape} by {b.shape}")
    return Mat(a.field, batch_matmul(a.field, a.a, b.a))


def mat_add(a: Mat, b: Mat) -> Mat:
    a._check(b)
    return Mat(a.field, batch_add(a.field, a.a, b.a))


def mat_sub(a: Mat, b: Mat) -> Mat:
    a._check(b)
    return Mat(a.field, batch_sub(a.field, a.a, b.a))


def scalar_mul(s, a: Mat) -> Mat:
    s = a.field(s)
    return Mat(a.field, a.field.mul[s.value, a.a])


def _eliminate(F: FieldDesc, a: np.ndarray):
    """Row-reduce a copy of ``a``.  Pivot: leftmost nonzero column, topmost nonzero row.

    Returns (reduced, pivot columns, determinant factor of the row operations)."""
    a = a.copy()
    r, c = a.shape
    pivots = []
    det = 1
    row = 0
    for col in range(c):
        if row == r:
            break
        nz = np.nonzero(a[row:, col])[0]
        if len(nz) == 0:
            continue
        pr = row + int(nz[0])
        if pr != row:
            a[[row, pr]] = a[[pr, row]]
            det = int(F.neg[det])
        pv = int(a[row, col])
        det = int(F.mul[det, pv])
        a[row] = F.mul[int(F.inv[pv]), a[row]]
        for rr in range(r):
            if rr != row and a[rr, col]:
                a[rr] = batch_sub(F, a[rr], F.mul[int(a[rr, col]), a[row]])
        pivots.append(col)
        row += 1
    return a, pivots, det


def mat_rank(a: Mat) -> int:
    return len(_eliminate(a.field, a.a)[1])


def rref(a: Mat) -> tuple[Mat, list[int]]:
    red, piv, _ = _eliminate(a.field, a.a)
    return Mat(a.field, red), piv


def mat_det(a: Mat) -> FFElem:
    if a.rows != a.cols:
        raise ValueError("determinant of a non-square matrix")
    red, piv, det = _eliminate(a.field, a.a)
    if len(piv) < a.rows:
        return FFElem(0, a.field)
    return FFElem(det, a.field)


def mat_inv(a: Mat) -> Mat:
    if a.rows != a.cols:
        raise ValueError("inverse of a non-square matrix")
    F = a.field
    n = a.rows
    aug = np.concatenate([a.a, np.eye(n, dtype=np.int16)], axis=1)
    red, piv, _ = _eliminate(F, aug)
    if piv[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return Mat(F, red[:, n:])


def complete_basis(F: FieldDesc, rows: np.ndarray) -> np.ndarray:
    """Extend linearly independent rows to an invertible square matrix by appending unit rows."""
    rows = np.atleast_2d(np.asarray(rows, dtype=np.int16))
    n = rows.shape[1]
    out = [r for r in rows]
    for i in range(n):
        if len(out) == n:
            break
        cand = np.zeros(n, dtype=np.int16)
        cand[i] = 1
        if len(_eliminate(F, np.array(out + [cand]))[1]) == len(out) + 1:
            out.append(cand)
    return np.array(out, dtype=np.int16)


def rank_normal_form(y: Mat) -> tuple[Mat, Mat, int]:
    """Invertible P, Q with P @ y @ Q = [[I_r, 0], [0, 0]], r = rank(y)."""
    F = y.field
    r_, c_ = y.shape
    # P y has rows: pivot rows of the RREF (independent), then zeros
    aug = np.concatenate([y.a, np.eye(r_, dtype=np.int16)], axis=1)
    red, piv, _ = _eliminate(F, aug)
    rank = sum(1 for p in piv if p < c_)
    P = red[:, c_:]
    R = red[:rank, :c_]
    # Q^{-1} has R as its first rows, so R @ Q = [I_r, 0]
    Qinv = complete_basis(F, R) if rank else np.eye(c_, dtype=np.int16)
    Q = mat_inv(Mat(F, Qinv))
    return Mat(F, P), Q, rank
