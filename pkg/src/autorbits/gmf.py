"""Explicit orbit representatives for the groups SL(2,q) x| M(2 x m, q), q = 2^k > 2.

Every element (X, Y) is carried to one of a short list of representatives by a
chain of explicit automorphisms: conjugation by block matrices [[A, B], [0, C]]
with A in GL(2,q), C in GL(m,q), and entrywise Frobenius maps.

    X = 1           (1, 0), (1, [e1; 0]) or (1, [e1; e2]) according to rank Y
    X^2 = 1, X != 1 (J, 0) for involutions, (J, [0; e1]) for elements of order 4
    X^2 != 1        (X', 0), X' a fixed representative of the Aut(SL(2,q))-orbit of X

where J = [[1, 1], [0, 1]].
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .constructions import field_map, gamma_conjugate, gl_generators, make_sl2, matrix_conjugation
from .ffield import frobenius_table
from .groups import AffineKind, FiniteGroup
from .linalg import Mat, batch_inv, batch_matmul, batch_sub, complete_basis, mat_inv, rank_normal_form

J = np.array([[1, 1], [0, 1]], dtype=np.int16)


class NotAGmfGroup(TypeError):
    pass


@dataclass
class CanonicalForm:
    rep: int
    case: str
    chain: list = field(default_factory=list)


def apply_step(G: FiniteGroup, row: np.ndarray, step) -> np.ndarray:
    kind: AffineKind = G.kind
    x, y = kind.split(row)
    if step[0] == "gamma":
        _, A, B, C = step
        x, y = gamma_conjugate(kind.field, x, y, A, B, C)
    elif step[0] == "field":
        t = frobenius_table(kind.field, step[1])
        x, y = t[x], t[y]
    else:
        raise ValueError(f"unknown step {step[0]!r}")
    return kind.join(x, y)


def apply_chain(G: FiniteGroup, g: int, chain) -> int:
    row = G.elements[g]
    for step in chain:
        row = apply_step(G, row, step)
    return G.id_of(row)


def _check(G):
    kind = G.kind
    if not isinstance(kind, AffineKind) or kind.field.p != 2 or kind.field.q <= 2:
        raise NotAGmfGroup("canonical forms need a group built by make_gmf with q = 2^k > 2")


def _sl_orbit_chains(G):
    """For every X in SL(2,q): the orbit representative and steps carrying X to it."""
    cache = G.meta.get("_sl_chains")
    if cache is not None:
        return cache
    F = G.kind.field
    m = G.kind.m
    SL = make_sl2(F.q)
    I2, Im, Z = np.eye(2, dtype=np.int16), np.eye(m, dtype=np.int16), np.zeros((2, m), dtype=np.int16)
    moves = []  # (images on SL ids, step applied to the element, inverse step)
    for A in gl_generators(F, 2):
        Ai = batch_inv(F, A)
        moves.append((matrix_conjugation(SL, A), ("gamma", A, Z, Im), ("gamma", Ai, Z, Im)))
    if F.k > 1:
        moves.append((field_map(SL, 1), ("field", 1), ("field", F.k - 1)))
    n = SL.order
    rep = np.full(n, -1, dtype=np.int64)
    parent = [None] * n
    for start in range(n):
        if rep[start] >= 0:
            continue
        rep[start] = start
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for images, _, inverse in moves:
                y = int(images[x])
                if rep[y] < 0:
                    rep[y] = start
                    parent[y] = (x, inverse)
                    queue.append(y)
    chains = {}
    for x in range(n):
        chain, cur = [], x
        while parent[cur] is not None:
            prev, inverse = parent[cur]
            chain.append(inverse)
            cur = prev
        chains[x] = chain
    cache = (SL, rep, chains)
    G.meta["_sl_chains"] = cache
    return cache


def _to_J(F, X):
    """A with A^-1 X A = J for an involution X of SL(2,q), char 2."""
    N = batch_sub(F, X, np.eye(2, dtype=np.int16))
    u = np.array([0, 1], dtype=np.int16) if N[:, 1].any() else np.array([1, 0], dtype=np.int16)
    e = batch_matmul(F, N, u[:, None])[:, 0]
    return np.stack([e, u], axis=1).astype(np.int16)


def canonical_form_gmf(G: FiniteGroup, g: int) -> CanonicalForm:
    """Representative of the automorphism orbit of ``g`` plus the witnessing chain of steps."""
    _check(G)
    kind: AffineKind = G.kind
    F, m = kind.field, kind.m
    I2, Im = np.eye(2, dtype=np.int16), np.eye(m, dtype=np.int16)
    Z0 = np.zeros((2, m), dtype=np.int16)
    X, Y = kind.split(G.elements[g])
    chain = []

    def step(s):
        nonlocal X, Y
        chain.append(s)
        X, Y = kind.split(apply_step(G, kind.join(X, Y), s))

    if np.array_equal(X, I2):
        P, Q, r = rank_normal_form(Mat(F, Y))
        case = f"M rank {r}"
        if r:
            step(("gamma", mat_inv(P).a, Z0, Q.a))
    elif np.array_equal(batch_matmul(F, X, X), I2):
        step(("gamma", _to_J(F, X), Z0, Im))
        if not Y[1].any():
            case = "involution"
            Zm = Z0.copy()
            Zm[1] = Y[0]
            step(("gamma", I2, Zm, Im))
        else:
            case = "order 4"
            Cinv = complete_basis(F, Y[1][None])
            step(("gamma", I2, Z0, batch_inv(F, Cinv)))
            Zm = Z0.copy()
            Zm[1] = Y[0]
            step(("gamma", I2, Zm, Im))
    else:
        case = "semisimple"
        Zm = batch_matmul(F, batch_inv(F, batch_sub(F, I2, X)), Y)
        step(("gamma", I2, Zm, Im))
        SL, _, chains = _sl_orbit_chains(G)
        for s in chains[SL.id_of(X.ravel())]:
            step(s)
    return CanonicalForm(G.id_of(kind.join(X, Y)), case, chain)


def representatives(G: FiniteGroup) -> dict[str, list[int]]:
    """The representative ids predicted by the case analysis, grouped by case."""
    _check(G)
    kind: AffineKind = G.kind
    F, m = kind.field, kind.m
    I2 = np.eye(2, dtype=np.int16)
    Z0 = np.zeros((2, m), dtype=np.int16)
    e = np.zeros((2, m), dtype=np.int16)
    out = {"M rank 0": [G.id_of(kind.join(I2, Z0))]}
    e[0, 0] = 1
    out["M rank 1"] = [G.id_of(kind.join(I2, e))]
    if m >= 2:
        e2 = e.copy()
        e2[1, 1] = 1
        out["M rank 2"] = [G.id_of(kind.join(I2, e2))]
    out["involution"] = [G.id_of(kind.join(J, Z0))]
    y4 = Z0.copy()
    y4[1, 0] = 1
    out["order 4"] = [G.id_of(kind.join(J, y4))]
    SL, rep, _ = _sl_orbit_chains(G)
    xs = SL.elements.reshape(-1, 2, 2)
    semis = sorted({int(r) for r in rep if not np.array_equal(batch_matmul(F, xs[r], xs[r]), I2)})
    out["semisimple"] = [G.id_of(kind.join(xs[r], Z0)) for r in semis]
    return out
