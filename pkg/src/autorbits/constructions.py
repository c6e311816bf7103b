"""Named group constructors and their automorphism generator sets."""

from __future__ import annotations

from math import factorial, gcd

import numpy as np

from .automorphisms import AutoGenSet, AutoMap, inner_autos
from .ffield import FieldDesc, frobenius_table, gf
from .groups import (
    AffineKind,
    CyclicKind,
    FiniteGroup,
    MatKind,
    PermKind,
    Subgroup,
    TupleKind,
    closure,
)
from .groupspec import GroupSpec, ParameterRangeError, parse_spec, validate
from .linalg import batch_add, batch_inv, batch_matmul, batch_sub

TRUST_LINEAR_2 = "Aut(SL(2,q)) and Aut(PSL(2,q)) are generated by GL(2,q)-conjugation and field automorphisms"
TRUST_LINEAR_3 = "Aut(PSL(3,q)) is generated by diagonal, field and inverse-transpose graph automorphisms"
TRUST_ALT = "Aut(A_n) = S_n for n >= 4, n != 6"
TRUST_WREATH = "Aut(S^m) = Aut(S) wr S_m for non-abelian simple S"
TRUST_PRODUCT = "automorphisms of a direct product taken factor-wise"
TRUST_GAMMA = "generating set of the block-triangular group acting by conjugation plus field automorphisms"


# ---------------------------------------------------------------- closed forms


def order_sl(n, q):
    out = q ** (n * (n - 1) // 2)
    for i in range(2, n + 1):
        out *= q**i - 1
    return out


def order_gl(n, q):
    return order_sl(n, q) * (q - 1)


def order_psl(n, q):
    return order_sl(n, q) // gcd(n, q - 1)


def _check_order(G, expected):
    if G.order != expected:
        raise AssertionError(f"{G.name}: closure gave order {G.order}, expected {expected}")
    return G


# ---------------------------------------------------------------- linear groups


def _unit(n, i, j, v=1):
    a = np.eye(n, dtype=np.int16)
    a[i, j] = v
    return a


def _diag(*vals):
    return np.diag(np.array(vals, dtype=np.int16))


def sl_generators(F: FieldDesc, n: int) -> list[np.ndarray]:
    """Elementary transvections plus diagonal matrices diag(..., z, z^-1, ...) for a primitive z."""
    z = F.generator
    zi = int(F.inv[z])
    gens = []
    for i in range(n - 1):
        gens.append(_unit(n, i, i + 1))
        gens.append(_unit(n, i + 1, i))
    if F.q > 3:
        for i in range(n - 1):
            d = [1] * n
            d[i], d[i + 1] = z, zi
            gens.append(_diag(*d))
    return gens


def gl_generators(F: FieldDesc, n: int) -> list[np.ndarray]:
    gens = sl_generators(F, n)
    if F.q > 2:
        gens.append(_diag(F.generator, *([1] * (n - 1))))
    return gens


def _linear(F, n, gens, projective, name):
    kind = MatKind(F, n, projective)
    G = closure(kind, np.array([g.ravel() for g in gens]), name=name)
    G.meta.update(field=F, n=n)
    return G


def make_sl(n: int, q: int) -> FiniteGroup:
    F = gf(q)
    return _check_order(_linear(F, n, sl_generators(F, n), False, f"SL({n},{q})"), order_sl(n, q))


def make_sl2(q: int) -> FiniteGroup:
    return make_sl(2, q)


def make_sl3(q: int) -> FiniteGroup:
    return make_sl(3, q)


def make_gl(n: int, q: int) -> FiniteGroup:
    F = gf(q)
    return _check_order(_linear(F, n, gl_generators(F, n), False, f"GL({n},{q})"), order_gl(n, q))


def make_psl(n: int, q: int) -> FiniteGroup:
    validate(GroupSpec("PSL", (n, q)))
    F = gf(q)
    return _check_order(_linear(F, n, sl_generators(F, n), True, f"PSL({n},{q})"), order_psl(n, q))


def make_pgl(n: int, q: int) -> FiniteGroup:
    F = gf(q)
    return _check_order(_linear(F, n, gl_generators(F, n), True, f"PGL({n},{q})"), order_sl(n, q))


# ---------------------------------------------------------------- the semidirect products SL(2,q) x| M(2 x m, q)


def make_gmf(m: int, q: int) -> FiniteGroup:
    """SL(2,q) acting on 2 x m matrices by left multiplication, as pairs (X, Y).

    ``meta['M']`` is the normal subgroup of pairs (1, Y)."""
    F = gf(q)
    if F.p != 2 or q <= 2:
        raise ParameterRangeError("GMF(m,q) needs q a power of 2 greater than 2")
    if m < 1:
        raise ParameterRangeError("GMF(m,q) needs m >= 1")
    kind = AffineKind(F, m)
    zero = np.zeros((2, m), dtype=np.int16)
    gens = [kind.join(x, zero) for x in sl_generators(F, 2)]
    for j in range(m):
        y = zero.copy()
        y[0, j] = 1
        gens.append(kind.join(np.eye(2, dtype=np.int16), y))
    G = closure(kind, np.array(gens), name=f"GMF({m},{q})")
    _check_order(G, order_sl(2, q) * q ** (2 * m))
    x, _ = kind.split(G.elements)
    in_m = (x.reshape(-1, 4) == np.array([1, 0, 0, 1])).all(axis=1)
    G.meta.update(field=F, m=m, M=Subgroup(G, np.nonzero(in_m)[0]))
    return G


def make_asl2(q: int) -> FiniteGroup:
    return make_gmf(1, q)


# ---------------------------------------------------------------- permutation groups


def _cycle(n, pts):
    img = np.arange(n, dtype=np.int16)
    for a, b in zip(pts, pts[1:] + pts[:1]):
        img[a] = b
    return img


def make_symmetric(n: int) -> FiniteGroup:
    gens = [] if n < 2 else [_cycle(n, [0, 1])] + ([_cycle(n, list(range(n)))] if n > 2 else [])
    G = closure(PermKind(n), np.array(gens) if gens else [], name=f"S({n})")
    return _check_order(G, factorial(n))


def make_alternating(n: int) -> FiniteGroup:
    if n < 3:
        gens = []
    elif n % 2:
        gens = [_cycle(n, list(range(n))), _cycle(n, [n - 3, n - 2, n - 1])]
    else:
        gens = [_cycle(n, [0, 1, 2]), _cycle(n, list(range(1, n)))]
    G = closure(PermKind(n), np.array(gens) if gens else [], name=f"A({n})")
    return _check_order(G, max(factorial(n) // 2, 1))


def make_perm_family(name: str, n: int) -> FiniteGroup:
    if not 1 <= n <= 10:
        raise ParameterRangeError("permutation degree must be in 1..10")
    return {"A": make_alternating, "S": make_symmetric}[name.upper()[0]](n)


# ---------------------------------------------------------------- products


def make_elementary_abelian(p: int, k: int) -> FiniteGroup:
    validate(GroupSpec("EA", (p, k)))
    kind = TupleKind([CyclicKind(p)] * k)
    gens = np.eye(k, dtype=np.int16)
    G = closure(kind, gens, name=f"EA({p},{k})")
    G.meta.update(p=p, k=k)
    return _check_order(G, p**k)


def make_direct_product(groups: list[FiniteGroup], name=None) -> FiniteGroup:
    kind = TupleKind([H.kind for H in groups])
    gens = []
    for i, H in enumerate(groups):
        for row in H.gen_rows:
            parts = [K.kind.identity() for K in groups]
            parts[i] = row
            gens.append(np.concatenate(parts))
    name = name or " x ".join(H.name for H in groups)
    G = closure(kind, np.array(gens) if gens else [], name=name)
    expected = 1
    for H in groups:
        expected *= H.order
    G.meta["factors"] = list(groups)
    return _check_order(G, expected)


def make_direct_power(base: FiniteGroup | str | GroupSpec, m: int) -> FiniteGroup:
    if not isinstance(base, FiniteGroup):
        base = build(base)
    G = make_direct_product([base] * m, name=f"POW({base.name},{m})")
    return G


# ---------------------------------------------------------------- spec dispatch


def build(spec) -> FiniteGroup:
    """Construct the group named by a spec string or :class:`GroupSpec`; attaches ``meta['spec']``."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    validate(spec)
    n, a = spec.name, spec.args
    if n == "PSL":
        G = make_psl(*a)
    elif n == "SL":
        G = make_sl(*a)
    elif n == "GL":
        G = make_gl(*a)
    elif n == "PGL":
        G = make_pgl(*a)
    elif n == "GMF":
        G = make_gmf(*a)
    elif n == "ASL":
        G = make_gmf(1, a[1])
    elif n == "EA":
        G = make_elementary_abelian(*a)
    elif n in ("A", "S"):
        G = make_perm_family(n, a[0])
    elif n == "POW":
        G = make_direct_power(build(a[0]), a[1])
    elif n == "DP":
        G = make_direct_product([build(s) for s in a])
    else:  # pragma: no cover - validate() rejects unknown names
        raise ParameterRangeError(n)
    G.name = str(spec)
    G.meta["spec"] = spec
    return G


# ---------------------------------------------------------------- automorphism generators


def matrix_conjugation(G: FiniteGroup, A: np.ndarray) -> np.ndarray:
    """Ids of A^-1 X A for a matrix group G."""
    kind: MatKind = G.kind
    F = kind.field
    Ai = batch_inv(F, A)
    X = G.elements.reshape(-1, kind.n, kind.n)
    Y = batch_matmul(F, batch_matmul(F, Ai, X), A)
    return G.ids(kind.normalize(Y.reshape(-1, kind.width)))


def field_map(G: FiniteGroup, power: int = 1) -> np.ndarray:
    """Ids of the entrywise Frobenius image of every element (matrix and affine groups)."""
    F = G.kind.field
    return G.ids(frobenius_table(F, power)[G.elements])


def graph_map(G: FiniteGroup) -> np.ndarray:
    """Ids of the inverse transpose of every element."""
    kind: MatKind = G.kind
    inv = kind.inv(G.elements).reshape(-1, kind.n, kind.n)
    return G.ids(kind.normalize(np.swapaxes(inv, 1, 2).reshape(-1, kind.width)))


def gamma_conjugate(F: FieldDesc, X, Y, A, B, C):
    """Conjugate the block matrix [[X, Y], [0, 1]] by [[A, B], [0, C]].

    Returns (A^-1 X A, A^-1 (X - 1) B + A^-1 Y C), broadcasting over stacks of X, Y."""
    Ai = batch_inv(F, np.asarray(A))
    eye = np.eye(2, dtype=np.int16)
    Xn = batch_matmul(F, batch_matmul(F, Ai, X), A)
    t1 = batch_matmul(F, batch_matmul(F, Ai, batch_sub(F, X, eye)), B)
    t2 = batch_matmul(F, batch_matmul(F, Ai, Y), C)
    return Xn, batch_add(F, t1, t2)


def gamma_map(G: FiniteGroup, A, B, C) -> np.ndarray:
    kind: AffineKind = G.kind
    X, Y = kind.split(G.elements)
    Xn, Yn = gamma_conjugate(kind.field, X, Y, A, B, C)
    return G.ids(kind.join(Xn, Yn))


def perm_conjugation(G: FiniteGroup, sigma: np.ndarray) -> np.ndarray:
    kind: PermKind = G.kind
    si = kind.inv(sigma)
    return G.ids(kind.mul(kind.mul(si, G.elements), sigma))


def gamma_generators(F: FieldDesc, m: int):
    """(A, B, C) triples whose conjugation actions generate the block-triangular group's action."""
    I2, Im = np.eye(2, dtype=np.int16), np.eye(m, dtype=np.int16)
    Z = np.zeros((2, m), dtype=np.int16)
    out = [(A, Z, Im) for A in gl_generators(F, 2)]
    if m > 1 or F.q > 2:
        out += [(I2, Z, C) for C in gl_generators(F, m)]
    for i in range(2):
        for j in range(m):
            B = Z.copy()
            B[i, j] = 1
            out.append((I2, B, Im))
    return out


def _gl_vector_generators(p, k):
    F = gf(p)
    gens = gl_generators(F, k) if k > 1 or p > 2 else []
    if k > 1:
        perm = np.zeros((k, k), dtype=np.int16)
        for i in range(k):
            perm[i, (i + 1) % k] = 1
        gens.append(perm)
    return gens


def autogens_for(G: FiniteGroup) -> AutoGenSet:
    """Inner automorphisms plus the outer generators appropriate to the construction."""
    spec: GroupSpec = G.meta["spec"]
    auts = AutoGenSet(G, inner_autos(G))
    n, a = spec.name, spec.args
    if n in ("PSL", "SL", "GL", "PGL"):
        F = G.kind.field
        dim = a[0]
        if F.q > 2:
            auts.add(AutoMap("ambient", matrix_conjugation(G, _diag(F.generator, *([1] * (dim - 1)))), {"A": "diag(w,1..)"}))
        for power in range(1, F.k):
            auts.add(AutoMap("field", field_map(G, power), {"power": power}))
        if dim == 3:
            auts.add(AutoMap("graph", graph_map(G), {"inverse_transpose": True}))
            auts.trust(TRUST_LINEAR_3)
        else:
            auts.trust(TRUST_LINEAR_2)
    elif n in ("GMF", "ASL"):
        F = G.kind.field
        for A, B, C in gamma_generators(F, G.meta["m"]):
            auts.add(AutoMap("gamma", gamma_map(G, A, B, C), {"A": A.tolist(), "B": B.tolist(), "C": C.tolist()}))
        for power in range(1, F.k):
            auts.add(AutoMap("field", field_map(G, power), {"power": power}))
        auts.trust(TRUST_LINEAR_2)
    elif n == "A":
        deg = a[0]
        if deg >= 2:
            auts.add(AutoMap("ambient", perm_conjugation(G, _cycle(deg, [0, 1])), {"sigma": "(1 2)"}))
        if deg >= 4:
            auts.trust(TRUST_ALT)
    elif n == "EA":
        p, k = a
        for A in _gl_vector_generators(p, k):
            imgs = (G.elements.astype(np.int64) @ A.astype(np.int64)) % p
            auts.add(AutoMap("ambient", G.ids(imgs), {"A": A.tolist()}))
    elif n in ("POW", "DP"):
        factors = G.meta["factors"]
        kind: TupleKind = G.kind
        for i, H in enumerate(factors):
            for m in autogens_for(H):
                if m.kind == "inner":
                    continue
                rows = G.elements.copy()
                comp = H.ids(kind.component(rows, i))
                rows[:, kind._slices()[i]] = H.elements[m.images[comp]]
                auts.add(AutoMap("factor", G.ids(rows), {"factor": i, "from": m.kind, **m.params}))
            for t in autogens_for(H).trusted:
                auts.trust(t)
        if n == "POW" and len(factors) > 1:
            mcount = len(factors)
            for perm in ([1, 0] + list(range(2, mcount)), list(range(1, mcount)) + [0]):
                sl = kind._slices()
                rows = np.concatenate([G.elements[:, sl[j]] for j in perm], axis=1)
                auts.add(AutoMap("swap", G.ids(rows), {"perm": perm}))
            auts.trust(TRUST_WREATH)
        else:
            auts.trust(TRUST_PRODUCT)
    return auts
