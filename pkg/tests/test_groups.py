import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from autorbits.constructions import build, make_symmetric
from autorbits.groups import CyclicKind, GroupTooLarge, NotNormal, OrbitPartition, PermKind, TupleKind, closure, quotient


@pytest.fixture(scope="module")
def s4():
    return make_symmetric(4)


def test_closure_identity_first_and_sorted_lookup(s4):
    assert s4.order == 24
    assert np.array_equal(s4.elements[0], np.arange(4))
    ids = s4.ids(s4.elements[::-1])
    assert np.array_equal(ids, np.arange(24)[::-1])
    with pytest.raises(KeyError):
        s4.ids(np.array([[0, 0, 1, 2]]))


def test_closure_cap():
    with pytest.raises(GroupTooLarge):
        closure(PermKind(7), [[1, 2, 3, 4, 5, 6, 0], [1, 0, 2, 3, 4, 5, 6]], cap=100)


def test_group_axioms_on_table(s4):
    T = s4.cayley
    n = s4.order
    assert np.all(T[0] == np.arange(n)) and np.all(T[:, 0] == np.arange(n))
    assert np.all(T[np.arange(n), s4.inverse] == 0)
    a, b, c = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
    assert np.array_equal(T[T[a, b], c], T[a, T[b, c]])


@pytest.mark.parametrize("spec", ["S(4)", "A(5)", "PSL(2,7)", "ASL(2,4)", "SL(2,3)", "EA(3,2)"])
def test_class_times_centralizer(spec):
    G = build(spec)
    cls = G.classes
    for rep, size in zip(cls.reps, cls.sizes):
        assert size * G.centralizer(int(rep)).order == G.order
        assert G.centralizer_order(int(rep)) == G.order // size


def test_class_counts():
    assert build("A(5)").classes.count == 5
    assert build("S(4)").classes.count == 5
    assert build("PSL(2,7)").classes.count == 6
    assert build("SL(2,5)").classes.count == 9


def test_orders_agree_with_powers(s4):
    for g in range(s4.order):
        k = s4.elem_order(g)
        assert s4.power_ids(np.array([g]), k)[0] == 0
        assert all(s4.power_ids(np.array([g]), d)[0] != 0 for d in range(1, k))
    assert s4.order_census() == [1, 2, 3, 4]


def test_structure_queries():
    A5 = build("A(5)")
    assert A5.is_perfect() and not A5.is_abelian()
    assert A5.center().order == 1
    S4 = build("S(4)")
    assert S4.derived_subgroup().order == 12
    assert [N.order for N in S4.minimal_normal_subgroups()] == [4]
    assert S4.socle().order == 4
    SL = build("SL(2,5)")
    assert SL.center().order == 2
    H = SL.center()
    assert SL.is_normal(H) and H.is_abelian()


@pytest.mark.parametrize("spec,sub,qorder", [("S(4)", "derived", 2), ("SL(2,5)", "center", 60), ("ASL(2,4)", "socle", 60)])
def test_quotient_well_defined(spec, sub, qorder):
    G = build(spec)
    N = {"derived": G.derived_subgroup, "center": G.center, "socle": G.socle}[sub]()
    Q = quotient(G, N)
    assert Q.order == qorder == G.order // N.order
    proj = Q.meta["projection"]
    # projection is a homomorphism onto Q
    rng = np.random.default_rng(1)
    a = rng.integers(0, G.order, 300)
    b = rng.integers(0, G.order, 300)
    assert np.array_equal(proj[G.mul_ids(a, b)], Q.mul_ids(proj[a], proj[b]))
    # fibres are the cosets of N
    assert np.all(np.bincount(proj) == N.order)
    assert np.all(proj[N.ids] == 0)


def test_quotient_needs_normal():
    S4 = build("S(4)")
    H = S4.subgroup([S4.id_of(np.array([1, 0, 2, 3]))])
    with pytest.raises(NotNormal):
        quotient(S4, H)


def test_subgroup_as_group_and_embedding():
    G = build("PSL(2,7)")
    H = G.centralizer(int(G.gens[0]))
    sub = H.as_group()
    emb = sub.meta["embedding"]
    assert sub.order == H.order
    assert np.array_equal(np.sort(emb), np.sort(H.ids))
    assert H.is_closed()


def test_direct_product_of_cyclics():
    G = closure(TupleKind([CyclicKind(4), CyclicKind(6)]), [[1, 0], [0, 1]])
    assert G.order == 24 and G.is_abelian()
    assert max(G.order_census()) == 12


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 29), min_size=30, max_size=30))
def test_partition_refinement_relation(labels):
    p = OrbitPartition(np.array(labels))
    coarse = OrbitPartition(np.array(labels) % 3)
    assert p.refines(coarse)
    assert p.refines(p)
    assert sum(p.sizes) == 30
    if coarse.count < p.count:
        assert not coarse.refines(p)
    assert all(p.block[r] == i for i, r in enumerate(p.reps))
