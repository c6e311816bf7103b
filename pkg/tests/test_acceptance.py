"""Acceptance criteria, each run at its stated tolerance and time budget.

Every test appends one PASS/FAIL line to the acceptance summary printed at the
end of the pytest run.  Criterion 9 is non-gating but cheap, so it runs by
default; the GMF(3,4) part of criterion 2 (about three minutes) runs only with
AUTORBITS_SLOW=1.
"""

import os
import time

import numpy as np
import pytest

from autorbits.constructions import build
from autorbits.ffield import frobenius, gf
from autorbits.groups import quotient
from autorbits.orbits import omega, orbit_closure, signature_partition
from autorbits.automorphisms import AutoGenSet, inner_autos
from autorbits.suite import run_check

SLOW = os.environ.get("AUTORBITS_SLOW") == "1"


def record(log, number, title, ok, detail):
    line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"
    log.append(line)
    print(line)
    return ok


def run_checks(ids):
    results = [run_check(i) for i in ids]
    bad = [f"{r.id}: expected {r.expected}, got {r.computed}" for r in results if r.status != "pass"]
    return results, bad


def test_criterion_1_nonsolvable_table(acceptance_log):
    want = {"PSL(2,4)": 4, "PSL(2,7)": 5, "PSL(2,8)": 5, "PSL(2,9)": 5, "PSL(3,4)": 6, "ASL(2,4)": 6}
    got, slow = {}, []
    for spec, value in want.items():
        t = time.perf_counter()
        w = omega(build(spec))
        dt = time.perf_counter() - t
        got[spec] = w.value if w.certified else (w.lo, w.hi)
        if dt > (300 if spec == "PSL(3,4)" else 5):
            slow.append(f"{spec} {dt:.1f}s")
    ok = got == want and not slow
    record(acceptance_log, 1, "omega table", ok, f"{got} slow={slow}")
    assert ok


def test_criterion_2_gmf_family(acceptance_log):
    t = time.perf_counter()
    G = build("GMF(2,4)")
    w = omega(G)
    dt = time.perf_counter() - t
    ok = G.order == 15360 and w.certified and w.value == 7 and dt < 120
    record(acceptance_log, 2, "omega(GMF(2,4)) = 7", ok, f"order {G.order}, {w.as_dict()}, {dt:.1f}s")
    assert ok


@pytest.mark.slow
@pytest.mark.skipif(not SLOW, reason="extended check; set AUTORBITS_SLOW=1")
def test_criterion_2_extended_gmf34(acceptance_log):
    t = time.perf_counter()
    G = build("GMF(3,4)")
    w = omega(G)
    dt = time.perf_counter() - t
    ok = G.order == 245760 and w.certified and w.value == 7 and dt < 1800
    record(acceptance_log, "2x", "omega(GMF(3,4)) = 7 (non-gating)", ok, f"{w.as_dict()}, {dt:.1f}s")
    assert ok


def test_criterion_3_identity_and_structure(acceptance_log):
    t = time.perf_counter()
    ids = ["identity.gamma", "structure.M.max_abelian", "identity.one_minus_X", "structure.two_elements", "canonical.GMF(2,4)"]
    results, bad = run_checks(ids)
    dt = time.perf_counter() - t
    ok = not bad and dt < 120
    record(acceptance_log, 3, "family identities and canonical forms", ok, f"{len(results)} checks, {dt:.1f}s {bad}")
    assert ok


def test_criterion_4_census(acceptance_log):
    t = time.perf_counter()
    G = build("ASL(2,4)")
    census = G.order_census()
    lower_from_census = signature_partition(G, 1).count
    w = omega(G)
    dt = time.perf_counter() - t
    ok = census == [1, 2, 3, 4, 5] and lower_from_census >= 5 and w.value == 6 and w.lo > lower_from_census and dt < 5
    record(acceptance_log, 4, "ASL(2,4) census", ok, f"orders {census}, census bound {lower_from_census}, certified {w.value}, {dt:.1f}s")
    assert ok


def test_criterion_5_quotient_bound(acceptance_log):
    t = time.perf_counter()
    results, bad = run_checks(["bound.ASL(2,4)/V", "bound.GMF(2,4)/M", "bound.equality.search", "bound.equality.EA(2,4)/EA(2,2)"])
    dt = time.perf_counter() - t
    by_id = {r.id: r for r in results}
    natural = by_id["bound.equality.search"]
    ok = not bad and dt < 60
    record(
        acceptance_log, 5, "quotient bound", ok,
        f"ASL/V {by_id['bound.ASL(2,4)/V'].computed}; GMF/M {by_id['bound.GMF(2,4)/M'].computed}; "
        f"equality branch: {natural.note}; synthetic: {by_id['bound.equality.EA(2,4)/EA(2,2)'].status}; {dt:.1f}s {bad}",
    )
    assert ok


def test_criterion_6_direct_power(acceptance_log):
    t = time.perf_counter()
    (r,), bad = run_checks(["power.A(5)^2"])
    dt = time.perf_counter() - t
    ok = not bad and r.computed["closure_blocks"] == 10 == r.computed["formula"] and r.computed["trusted"] == "external" and dt < 60
    record(acceptance_log, 6, "A5^2 direct power", ok, f"{r.computed}, trusted {r.trusted}, {dt:.1f}s")
    assert ok


def test_criterion_7_properties(acceptance_log):
    failures = []
    # sandwich soundness and coarsening
    for spec in ["S(4)", "A(5)", "PSL(2,7)", "ASL(2,4)", "SL(2,3)"]:
        G = build(spec)
        w = omega(G)
        levels = [signature_partition(G, L) for L in (1, 2, 3)]
        if not (w.upper.refines(levels[2]) and levels[2].refines(levels[1]) and levels[1].refines(levels[0])):
            failures.append(f"refinement {spec}")
        inner = orbit_closure(G, AutoGenSet(G, inner_autos(G)))
        if not (inner == G.classes and inner.refines(w.upper)):
            failures.append(f"coarsening {spec}")
        # class size times centralizer order
        for rep, size in zip(G.classes.reps, G.classes.sizes):
            if size * G.centralizer(int(rep)).order != G.order:
                failures.append(f"class law {spec}")
                break
    # quotient well-definedness
    for spec, sub in [("S(4)", "derived"), ("SL(2,5)", "center")]:
        G = build(spec)
        N = getattr(G, {"derived": "derived_subgroup", "center": "center"}[sub])()
        Q = quotient(G, N)
        proj = Q.meta["projection"]
        a = np.arange(G.order)
        for g in G.gens:
            if not np.array_equal(proj[G.right_mult_map(int(g))], Q.mul_ids(proj[a], proj[g])):
                failures.append(f"quotient {spec}")
    # Frobenius additivity, exhaustively
    for q in (4, 8, 9, 16):
        F = gf(q)
        for x in range(q):
            for y in range(q):
                if frobenius(F(x) + F(y)) != frobenius(F(x)) + frobenius(F(y)):
                    failures.append(f"frobenius GF({q})")
    # elementary abelian groups have two orbits
    ea = [omega(build(f"EA(2,{k})")).value for k in range(1, 7)]
    if ea != [2] * 6:
        failures.append(f"EA {ea}")
    ok = not failures
    record(acceptance_log, 7, "property suite", ok, "all green" if ok else str(failures))
    assert ok


def test_criterion_8_exhaustive_agreement(acceptance_log):
    t = time.perf_counter()
    ids = ["exact.EA(2,1)", "exact.EA(2,2)", "exact.EA(2,3)", "exact.A(5)", "exact.SL(2,2)", "exact.PSL(2,5)"]
    results, bad = run_checks(ids)
    dt = time.perf_counter() - t
    ok = not bad and dt < 300
    record(acceptance_log, 8, "exhaustive Aut agreement", ok, ", ".join(f"{r.id[6:]}={r.computed['exact']}" for r in results) + f", {dt:.1f}s {bad}")
    assert ok


def test_criterion_9_extended(acceptance_log):
    results, bad = run_checks(["extended.S(6)", "extended.PGL(2,9)", "extended.Aut(PSL(2,q))"])
    aut_psl = results[2].computed
    ok = not bad and sorted(aut_psl.values()) == [7, 9]
    record(acceptance_log, 9, "extended (non-gating)", ok, "; ".join(f"{r.id}={r.computed}" for r in results))
    assert ok
