import numpy as np
import pytest

from autorbits.constructions import build, make_sl2
from autorbits.gmf import J, NotAGmfGroup, apply_chain, canonical_form_gmf, representatives
from autorbits.linalg import batch_inv, batch_matmul, batch_sub
from autorbits.orbits import omega


@pytest.fixture(scope="module")
def asl8():
    return build("GMF(1,8)")


@pytest.fixture(scope="module")
def gmf24():
    return build("GMF(2,4)")


def test_predicted_representatives_are_the_orbits(gmf24):
    reps = representatives(gmf24)
    flat = [r for v in reps.values() for r in v]
    assert len(flat) == len(set(flat)) == 7
    w = omega(gmf24)
    assert sorted(w.upper.block[flat].tolist()) == list(range(7))


def test_canonical_forms_sample(gmf24):
    rng = np.random.default_rng(5)
    upper = omega(gmf24).upper
    reps = {r for v in representatives(gmf24).values() for r in v}
    for g in rng.integers(0, gmf24.order, 400):
        cf = canonical_form_gmf(gmf24, int(g))
        assert cf.rep in reps
        assert apply_chain(gmf24, int(g), cf.chain) == cf.rep
        assert upper.block[cf.rep] == upper.block[g]
        assert canonical_form_gmf(gmf24, cf.rep).rep == cf.rep


def test_all_of_asl_8(asl8):
    forms = {canonical_form_gmf(asl8, g).rep for g in range(0, asl8.order, 3)}
    assert forms <= {r for v in representatives(asl8).values() for r in v}
    assert omega(asl8).value == len({r for v in representatives(asl8).values() for r in v})


def test_case_labels(gmf24):
    k = gmf24.kind
    z = np.zeros((2, 2), dtype=np.int16)
    y = z.copy()
    y[1, 0] = 3
    assert canonical_form_gmf(gmf24, gmf24.id_of(k.join(J, y))).case == "order 4"
    assert canonical_form_gmf(gmf24, gmf24.id_of(k.join(J, z))).case == "involution"
    assert canonical_form_gmf(gmf24, 0).case == "M rank 0"


@pytest.mark.parametrize("q", [4, 8, 16])
def test_one_minus_x_invertible(q):
    SL = make_sl2(q)
    F = SL.kind.field
    X = SL.elements.reshape(-1, 2, 2)
    I = np.eye(2, dtype=np.int16)
    sq = batch_matmul(F, X, X)
    keep = ~(sq == I).all(axis=(1, 2))
    D = batch_sub(F, I, X[keep])
    det = F.mul[D[:, 0, 0], D[:, 1, 1]] ^ F.mul[D[:, 0, 1], D[:, 1, 0]]
    assert np.all(det != 0)
    assert np.array_equal(batch_matmul(F, D, batch_inv(F, D)), np.broadcast_to(I, D.shape))


def test_rejects_other_groups():
    with pytest.raises(NotAGmfGroup):
        canonical_form_gmf(build("PSL(2,7)"), 1)
