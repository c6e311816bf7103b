import numpy as np
import pytest

from autorbits.automorphisms import AutoGenSet, AutoMap, NotAnAutomorphism, is_automorphism
from autorbits.constructions import (
    autogens_for,
    build,
    gamma_conjugate,
    gamma_map,
    make_gmf,
    order_gl,
    order_psl,
    order_sl,
)
from autorbits.ffield import gf
from autorbits.linalg import batch_det2, batch_inv, batch_matmul

ORDERS = {
    "PSL(2,4)": 60,
    "PSL(2,5)": 60,
    "PSL(2,7)": 168,
    "PSL(2,8)": 504,
    "PSL(2,9)": 360,
    "SL(2,2)": 6,
    "SL(2,3)": 24,
    "SL(2,5)": 120,
    "GL(2,3)": 48,
    "SL(3,2)": 168,
    "PGL(2,7)": 336,
    "PGL(2,9)": 720,
    "ASL(2,4)": 960,
    "GMF(1,8)": 504 * 64,
    "GMF(2,4)": 15360,
    "EA(2,3)": 8,
    "EA(3,2)": 9,
    "A(5)": 60,
    "S(5)": 120,
    "S(6)": 720,
    "POW(A(5),2)": 3600,
    "DP(A(4),EA(2,1))": 24,
}


@pytest.mark.parametrize("spec,n", ORDERS.items())
def test_orders(spec, n):
    assert build(spec).order == n


def test_order_formulas():
    assert order_sl(2, 4) == 60 and order_psl(2, 4) == 60
    assert order_psl(3, 4) == 20160
    assert order_gl(2, 3) == 48
    assert order_psl(2, 9) == 360


def test_asl_is_gmf_1():
    a, b = build("ASL(2,4)"), build("GMF(1,4)")
    assert np.array_equal(a.elements, b.elements)


def test_gmf_normal_subgroup_m():
    G = build("GMF(2,4)")
    M = G.meta["M"]
    assert M.order == 4 ** 4
    assert G.is_normal(M) and M.is_abelian()
    assert set(G.orders[M.ids].tolist()) == {1, 2}


@pytest.mark.parametrize(
    "spec", ["PSL(2,4)", "PSL(2,9)", "SL(2,5)", "SL(3,2)", "PGL(2,9)", "ASL(2,4)", "GMF(2,4)", "EA(2,3)", "A(5)", "POW(A(5),2)"]
)
def test_autogens_are_automorphisms(spec):
    G = build(spec)
    auts = autogens_for(G)
    assert len(auts) > 0
    for m in auts:
        assert is_automorphism(G, m.images), m.kind


def test_non_automorphism_rejected():
    G = build("A(5)")
    bad = np.arange(G.order)
    bad[[1, 2]] = bad[[2, 1]]
    assert not is_automorphism(G, bad)
    with pytest.raises(NotAnAutomorphism):
        AutoGenSet(G, [AutoMap("explicit", bad)])


def test_gamma_identity_against_block_matrices():
    # conjugating [[X, Y], [0, 1]] by [[A, B], [0, C]] as 3x3 block matrices (m = 1)
    F = gf(8)
    rng = np.random.default_rng(3)
    for _ in range(200):
        X = rng.integers(0, 8, (2, 2)).astype(np.int16)
        A = rng.integers(0, 8, (2, 2)).astype(np.int16)
        if batch_det2(F, X) == 0 or batch_det2(F, A) == 0:
            continue
        Y = rng.integers(0, 8, (2, 1)).astype(np.int16)
        B = rng.integers(0, 8, (2, 1)).astype(np.int16)
        C = np.array([[rng.integers(1, 8)]], dtype=np.int16)
        big = lambda x, y, c: np.block([[x, y], [np.zeros((1, 2), np.int16), c]]).astype(np.int16)
        g, h = big(X, Y, np.array([[1]], np.int16)), big(A, B, C)
        want = batch_matmul(F, batch_matmul(F, batch_inv(F, h), g), h)
        Xn, Yn = gamma_conjugate(F, X, Y, A, B, C)
        assert np.array_equal(want, big(Xn, Yn, np.array([[1]], np.int16)))


def test_gamma_map_fixes_m_setwise():
    G = make_gmf(2, 4)
    M = G.meta["M"]
    A = np.array([[0, 1], [1, 0]], dtype=np.int16)
    B = np.array([[1, 0], [0, 2]], dtype=np.int16)
    C = np.array([[1, 1], [0, 1]], dtype=np.int16)
    img = gamma_map(G, A, B, C)
    assert is_automorphism(G, img)
    assert M.mask[img[M.ids]].all()


def test_restrict_and_induce():
    G = build("ASL(2,4)")
    auts = autogens_for(G)
    V = G.meta["M"]
    r = auts.restrict(V)
    assert r.group.order == 16 and len(r) == len(auts)
    Q = G.quotient(V)
    ind = auts.induce(Q)
    assert Q.order == 60
    assert all(is_automorphism(Q, m.images) for m in ind)
