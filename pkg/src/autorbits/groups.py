"""Enumerated finite groups.

A group is stored as a table of encoded elements (one integer row per element),
closed under a vectorized multiplication supplied by an element *kind*.  Element
ids are row indices, assigned in breadth-first discovery order from the
identity (id 0) with the generators taken in their given order.  Everything
downstream (classes, centralizers, automorphisms, orbit partitions) works with
id arrays.
"""

from __future__ import annotations

import os
from functools import cached_property

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .ffield import FieldDesc
from .linalg import batch_add, batch_inv, batch_matmul, batch_sub

DEFAULT_CAP = int(os.environ.get("AUTORBITS_CAP", 2_000_000))
SOCLE_CAP = 100_000
CAYLEY_LIMIT = 4096


class GroupTooLarge(RuntimeError):
    pass


class NotNormal(ValueError):
    pass


# ---------------------------------------------------------------- element kinds


class Kind:
    """How elements of one representation are encoded and multiplied.

    Subclasses define ``width`` (row length), ``radix`` (exclusive bound on every
    entry) and vectorized ``mul``/``inv`` on arrays of shape ``(n, width)``.
    """

    width: int
    radix: int

    def identity(self) -> np.ndarray:
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def normalize(self, a):
        return a

    def format(self, row) -> str:
        return str(list(map(int, row)))

    def compatible(self, other) -> bool:
        return self == other


class PermKind(Kind):
    """Permutations of ``range(n)`` as image arrays; ``a*b`` applies ``a`` first."""

    def __init__(self, n):
        self.n = self.width = n
        self.radix = max(n, 2)

    def identity(self):
        return np.arange(self.n, dtype=np.int16)

    def mul(self, a, b):
        a, b = np.broadcast_arrays(a, b)
        return np.take_along_axis(b, a.astype(np.intp), axis=-1)

    def inv(self, a):
        return np.argsort(a, axis=-1).astype(np.int16)

    def format(self, row):
        seen, cycles = set(), []
        for i in range(self.n):
            if i in seen:
                continue
            c, j = [], i
            while j not in seen:
                seen.add(j)
                c.append(j + 1)
                j = int(row[j])
            if len(c) > 1:
                cycles.append("(" + " ".join(map(str, c)) + ")")
        return "".join(cycles) or "()"

    def __eq__(self, other):
        return isinstance(other, PermKind) and other.n == self.n

    def __hash__(self):
        return hash(("perm", self.n))


class MatKind(Kind):
    """n x n matrices over a field, flattened row-major.

    With ``projective=True`` every matrix is scaled so its first nonzero entry is 1,
    so rows represent cosets of the scalar matrices."""

    def __init__(self, field: FieldDesc, n: int, projective: bool = False):
        self.field, self.n, self.projective = field, n, projective
        self.width = n * n
        self.radix = field.q

    def identity(self):
        return np.eye(self.n, dtype=np.int16).ravel()

    def _sq(self, a):
        a = np.asarray(a)
        return a.reshape(*a.shape[:-1], self.n, self.n)

    def mul(self, a, b):
        c = batch_matmul(self.field, self._sq(a), self._sq(b))
        return self.normalize(c.reshape(*c.shape[:-2], self.width))

    def inv(self, a):
        F = self.field
        m = self._sq(a)
        if self.n == 2:
            det_inv = F.inv[batch_sub(F, F.mul[m[..., 0, 0], m[..., 1, 1]], F.mul[m[..., 0, 1], m[..., 1, 0]])]
            adj = np.stack([m[..., 1, 1], F.neg[m[..., 0, 1]], F.neg[m[..., 1, 0]], m[..., 0, 0]], axis=-1)
            out = F.mul[det_inv[..., None], adj]
        else:
            out = batch_inv(F, m).reshape(*m.shape[:-2], self.width)
        return self.normalize(out)

    def normalize(self, a):
        if not self.projective:
            return a
        a = np.asarray(a)
        first = (a != 0).argmax(axis=-1)
        lead = np.take_along_axis(a, first[..., None], axis=-1)
        return self.field.mul[self.field.inv[lead], a]

    def format(self, row):
        name = self.field.name
        rows = np.asarray(row).reshape(self.n, self.n)
        return "[" + ",".join("[" + ",".join(name(x) for x in r) + "]" for r in rows) + "]"

    def __eq__(self, other):
        return (
            isinstance(other, MatKind)
            and other.field is self.field
            and other.n == self.n
            and other.projective == self.projective
        )

    def __hash__(self):
        return hash(("mat", id(self.field), self.n, self.projective))


class AffineKind(Kind):
    """Pairs (X, Y), X a 2x2 and Y a 2xm matrix, standing for the block matrix [[X, Y], [0, 1]].

    (X1, Y1)(X2, Y2) = (X1 X2, X1 Y2 + Y1).  Row layout: 4 entries of X, then 2m of Y."""

    def __init__(self, field: FieldDesc, m: int):
        self.field, self.m = field, m
        self.width = 4 + 2 * m
        self.radix = field.q

    def split(self, a):
        a = np.asarray(a)
        lead = a.shape[:-1]
        return a[..., :4].reshape(*lead, 2, 2), a[..., 4:].reshape(*lead, 2, self.m)

    def join(self, x, y):
        lead = x.shape[:-2]
        return np.concatenate([x.reshape(*lead, 4), y.reshape(*lead, 2 * self.m)], axis=-1)

    def identity(self):
        return self.join(np.eye(2, dtype=np.int16), np.zeros((2, self.m), dtype=np.int16))

    def mul(self, a, b):
        F = self.field
        x1, y1 = self.split(a)
        x2, y2 = self.split(b)
        x = batch_matmul(F, x1, x2)
        y = batch_add(F, batch_matmul(F, x1, y2), y1)
        lead = np.broadcast_shapes(x.shape[:-2], y.shape[:-2])
        return self.join(np.broadcast_to(x, lead + (2, 2)), np.broadcast_to(y, lead + (2, self.m)))

    def inv(self, a):
        F = self.field
        x, y = self.split(a)
        xi = MatKind(F, 2).inv(x.reshape(*x.shape[:-2], 4)).reshape(x.shape)
        yi = F.neg[batch_matmul(F, xi, y)]
        return self.join(xi, yi)

    def format(self, row):
        name = self.field.name
        x, y = self.split(np.asarray(row))
        fx = "[" + ",".join("[" + ",".join(name(v) for v in r) + "]" for r in x) + "]"
        fy = "[" + ",".join("[" + ",".join(name(v) for v in r) + "]" for r in y) + "]"
        return f"{fx} | {fy}"

    def __eq__(self, other):
        return isinstance(other, AffineKind) and other.field is self.field and other.m == self.m

    def __hash__(self):
        return hash(("affine", id(self.field), self.m))


class CyclicKind(Kind):
    """Z/n written additively: one digit per element."""

    width = 1

    def __init__(self, n):
        self.n = n
        self.radix = max(n, 2)

    def identity(self):
        return np.zeros(1, dtype=np.int16)

    def mul(self, a, b):
        return (np.asarray(a) + np.asarray(b)) % self.n

    def inv(self, a):
        return (-np.asarray(a)) % self.n

    def format(self, row):
        return str(int(row[0]))

    def __eq__(self, other):
        return isinstance(other, CyclicKind) and other.n == self.n

    def __hash__(self):
        return hash(("cyclic", self.n))


class TupleKind(Kind):
    """Direct product: concatenated component encodings, componentwise multiplication."""

    def __init__(self, parts):
        self.parts = list(parts)
        self.offsets = np.cumsum([0] + [p.width for p in self.parts])
        self.width = int(self.offsets[-1])
        self.radix = max(p.radix for p in self.parts)

    def _slices(self):
        return [slice(int(a), int(b)) for a, b in zip(self.offsets[:-1], self.offsets[1:])]

    def identity(self):
        return np.concatenate([p.identity() for p in self.parts])

    def _apply(self, fn, *args):
        out = []
        for p, s in zip(self.parts, self._slices()):
            out.append(np.asarray(fn(p, *[np.asarray(a)[..., s] for a in args])))
        lead = np.broadcast_shapes(*[o.shape[:-1] for o in out])
        return np.concatenate([np.broadcast_to(o, lead + o.shape[-1:]) for o in out], axis=-1)

    def mul(self, a, b):
        return self._apply(lambda p, x, y: p.mul(x, y), a, b)

    def inv(self, a):
        return self._apply(lambda p, x: p.inv(x), a)

    def component(self, a, i):
        return np.asarray(a)[..., self._slices()[i]]

    def format(self, row):
        return "(" + ", ".join(p.format(np.asarray(row)[s]) for p, s in zip(self.parts, self._slices())) + ")"

    def __eq__(self, other):
        return isinstance(other, TupleKind) and other.parts == self.parts

    def __hash__(self):
        return hash(("tuple", tuple(self.parts)))


class CosetKind(Kind):
    """Cosets xN of a normal subgroup, encoded by the smallest element id in the coset."""

    width = 1

    def __init__(self, parent: "FiniteGroup", coset_min: np.ndarray, normal_ids: np.ndarray):
        self.parent = parent
        self.coset_min = coset_min
        self.normal_ids = normal_ids
        self.radix = max(parent.order, 2)

    def identity(self):
        return np.zeros(1, dtype=np.int64)

    def mul(self, a, b):
        a, b = np.broadcast_arrays(np.asarray(a)[..., 0], np.asarray(b)[..., 0])
        return self.coset_min[self.parent.mul_ids(a, b)][..., None]

    def inv(self, a):
        return self.coset_min[self.parent.inverse[np.asarray(a)[..., 0]]][..., None]

    def format(self, row):
        return self.parent.format(int(row[0])) + "N"

    def __eq__(self, other):
        return isinstance(other, CosetKind) and other.parent is self.parent and np.array_equal(
            other.normal_ids, self.normal_ids
        )

    def __hash__(self):
        return hash(("coset", id(self.parent), len(self.normal_ids)))


# ---------------------------------------------------------------- partitions


class OrbitPartition:
    """A partition of element ids ``0..n-1``.

    Blocks are numbered by their smallest member, in increasing order, so equal
    partitions always have equal ``block`` arrays."""

    def __init__(self, labels, note: str = ""):
        labels = np.asarray(labels)
        _, first, inverse = np.unique(labels, return_index=True, return_inverse=True)
        rank = np.empty(len(first), dtype=np.int64)
        rank[np.argsort(first)] = np.arange(len(first))
        self.block = rank[inverse.ravel()]
        self.note = note

    @classmethod
    def from_edges(cls, n: int, src, dst, note=""):
        src = np.concatenate([np.asarray(s, dtype=np.int64).ravel() for s in src] or [np.zeros(0, np.int64)])
        dst = np.concatenate([np.asarray(d, dtype=np.int64).ravel() for d in dst] or [np.zeros(0, np.int64)])
        graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(n, n))
        _, labels = connected_components(graph, directed=True, connection="weak")
        return cls(labels, note)

    @property
    def count(self) -> int:
        return int(self.block.max()) + 1 if len(self.block) else 0

    def __len__(self):
        return self.count

    @cached_property
    def blocks(self) -> list[np.ndarray]:
        order = np.argsort(self.block, kind="stable")
        cuts = np.cumsum(np.bincount(self.block, minlength=self.count))[:-1]
        return np.split(order, cuts)

    @property
    def sizes(self) -> list[int]:
        return np.bincount(self.block, minlength=self.count).tolist()

    @property
    def reps(self) -> np.ndarray:
        return np.array([b[0] for b in self.blocks], dtype=np.int64)

    def refines(self, other: "OrbitPartition") -> bool:
        """True if every block of self lies inside a block of other."""
        pairs = np.unique(np.stack([self.block, other.block]), axis=1)
        return pairs.shape[1] == self.count

    def __eq__(self, other):
        return isinstance(other, OrbitPartition) and np.array_equal(self.block, other.block)

    def __repr__(self):
        return f"OrbitPartition({self.count} blocks, sizes={sorted(self.sizes)})"


# ---------------------------------------------------------------- groups


def _dtype(kind: Kind):
    return np.int16 if kind.radix <= 32767 else np.int64


def _pack_weights(kind: Kind) -> np.ndarray:
    if kind.radix ** kind.width >= 2**62:
        raise GroupTooLarge(f"element encoding of width {kind.width} does not fit in 62 bits")
    return (np.int64(kind.radix) ** np.arange(kind.width, dtype=np.int64)).astype(np.int64)


class FiniteGroup:
    """An enumerated finite group; build with :func:`closure`."""

    def __init__(self, kind: Kind, gens: np.ndarray, elements: np.ndarray, name: str = "G"):
        self.kind = kind
        self.name = name
        self.elements = elements
        self.elements.setflags(write=False)
        self._w = _pack_weights(kind)
        self.codes = elements.astype(np.int64) @ self._w
        self._sort = np.argsort(self.codes, kind="stable")
        self._sorted_codes = self.codes[self._sort]
        self.gen_rows = gens
        self.gens = self.ids(gens) if len(gens) else np.zeros(0, dtype=np.int64)
        self.meta: dict = {}

    # -- basic lookups

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return self.order

    identity_id = 0

    def pack(self, rows) -> np.ndarray:
        return np.asarray(rows).astype(np.int64) @ self._w

    def ids(self, rows) -> np.ndarray:
        """Ids of encoded elements; raises KeyError for rows not in the group."""
        codes = self.pack(rows)
        pos = np.searchsorted(self._sorted_codes, codes)
        pos = np.minimum(pos, len(self._sorted_codes) - 1)
        found = self._sorted_codes[pos] == codes
        if not np.all(found):
            raise KeyError("element not in group")
        return self._sort[pos]

    def contains_rows(self, rows) -> np.ndarray:
        codes = self.pack(rows)
        pos = np.minimum(np.searchsorted(self._sorted_codes, codes), len(self._sorted_codes) - 1)
        return self._sorted_codes[pos] == codes

    def id_of(self, row) -> int:
        return int(self.ids(np.asarray(row)[None])[0])

    def format(self, i: int) -> str:
        return self.kind.format(self.elements[int(i)])

    # -- arithmetic on ids

    @cached_property
    def cayley(self):
        """Full multiplication table of ids, built on first access; None above CAYLEY_LIMIT."""
        if self.order > CAYLEY_LIMIT:
            return None
        n = self.order
        table = np.empty((n, n), dtype=np.int16)
        step = max(1, 65536 // n)
        for i in range(0, n, step):
            block = self.kind.mul(self.elements[i : i + step, None, :], self.elements[None, :, :])
            table[i : i + step] = self.ids(block.reshape(-1, self.kind.width)).reshape(-1, n)
        table.setflags(write=False)
        return table

    def mul_ids(self, a, b) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        if "cayley" in self.__dict__ and self.cayley is not None:
            return self.cayley[a, b].astype(np.int64)
        flat = self.kind.mul(self.elements[a.ravel()], self.elements[b.ravel()])
        return self.ids(flat).reshape(a.shape)

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_ids(a, b))

    @cached_property
    def inverse(self) -> np.ndarray:
        return self.ids(self.kind.inv(self.elements))

    @cached_property
    def right_table(self) -> np.ndarray:
        """right_table[x, i] = id of x * gens[i]."""
        all_ids = np.arange(self.order)
        return np.stack([self.mul_ids(all_ids, g) for g in self.gens], axis=1) if len(self.gens) else (
            np.zeros((self.order, 0), dtype=np.int64)
        )

    def right_mult_map(self, g: int) -> np.ndarray:
        return self.mul_ids(np.arange(self.order), g)

    def conj_map(self, g: int) -> np.ndarray:
        """Ids of g^-1 x g for every x."""
        all_ids = np.arange(self.order)
        return self.mul_ids(self.mul_ids(self.inverse[g], all_ids), g)

    @cached_property
    def gen_conj_maps(self) -> list[np.ndarray]:
        return [self.conj_map(int(g)) for g in self.gens]

    def power_ids(self, ids, k: int) -> np.ndarray:
        ids = np.asarray(ids, dtype=np.int64)
        result = np.zeros_like(ids)
        base = ids
        while k:
            if k & 1:
                result = self.mul_ids(result, base)
            base = self.mul_ids(base, base)
            k >>= 1
        return result

    @cached_property
    def orders(self) -> np.ndarray:
        n = self.order
        out = np.zeros(n, dtype=np.int64)
        out[0] = 1
        todo = np.arange(1, n)
        cur = todo.copy()
        k = 1
        while len(todo):
            k += 1
            cur = self.mul_ids(cur, todo)
            done = cur == 0
            out[todo[done]] = k
            todo, cur = todo[~done], cur[~done]
        out.setflags(write=False)
        return out

    def elem_order(self, g: int) -> int:
        return int(self.orders[g])

    def order_census(self) -> list[int]:
        return sorted(set(self.orders.tolist()))

    # -- structure

    @cached_property
    def classes(self) -> OrbitPartition:
        """Conjugacy classes, by closure under conjugation by the generators."""
        all_ids = np.arange(self.order)
        maps = self.gen_conj_maps
        return OrbitPartition.from_edges(self.order, [all_ids] * len(maps), maps, note="conjugacy classes")

    def conjugacy_classes(self) -> OrbitPartition:
        return self.classes

    def commutes_with(self, g: int, ids=None) -> np.ndarray:
        ids = np.arange(self.order) if ids is None else np.asarray(ids)
        return self.mul_ids(ids, g) == self.mul_ids(g, ids)

    def centralizer(self, g: int) -> "Subgroup":
        return Subgroup(self, np.nonzero(self.commutes_with(g))[0])

    def centralizer_order(self, g: int) -> int:
        return self.order // self.classes.sizes[self.classes.block[g]]

    def center(self) -> "Subgroup":
        mask = np.ones(self.order, dtype=bool)
        for g in self.gens:
            mask &= self.commutes_with(int(g))
        return Subgroup(self, np.nonzero(mask)[0])

    def whole(self) -> "Subgroup":
        return Subgroup(self, np.arange(self.order))

    def trivial(self) -> "Subgroup":
        return Subgroup(self, np.zeros(1, dtype=np.int64))

    def subgroup(self, gen_ids) -> "Subgroup":
        return Subgroup(self, subgroup_closure(self, gen_ids), gens=_reduce_gens(self, gen_ids))

    def is_normal(self, H: "Subgroup") -> bool:
        mask = H.mask
        return all(mask[m[H.gens]].all() for m in self.gen_conj_maps) if len(H.gens) else True

    def normal_closure(self, S) -> "Subgroup":
        """Smallest normal subgroup containing the ids in S: generated by their conjugacy classes."""
        S = np.atleast_1d(np.asarray(S, dtype=np.int64))
        blocks = np.unique(self.classes.block[S])
        members = np.nonzero(np.isin(self.classes.block, blocks))[0]
        return greedy_subgroup(self, members)

    def commutator(self, a: int, b: int) -> int:
        inv = self.inverse
        return int(self.mul_ids(self.mul_ids(inv[a], inv[b]), self.mul_ids(a, b)))

    def derived_subgroup(self) -> "Subgroup":
        comms = [self.commutator(int(a), int(b)) for a in self.gens for b in self.gens]
        return self.normal_closure(comms or [0])

    def is_perfect(self) -> bool:
        return self.derived_subgroup().order == self.order

    def is_abelian(self) -> bool:
        return self.whole().is_abelian()

    def minimal_normal_subgroups(self) -> list["Subgroup"]:
        if self.order > SOCLE_CAP:
            raise GroupTooLarge(f"socle computation limited to order {SOCLE_CAP}")
        closures = {}
        for rep in self.classes.reps[1:]:
            H = self.normal_closure(int(rep))
            closures.setdefault(H.key, H)
        cands = sorted(closures.values(), key=lambda H: H.order)
        minimal = []
        for H in cands:
            if not any(K.order < H.order and K.mask[H.ids].sum() == K.order and H.mask[K.ids].all() for K in minimal):
                minimal.append(H)
        return minimal

    def socle(self) -> "Subgroup":
        mins = self.minimal_normal_subgroups()
        if not mins:
            return self.trivial()
        return greedy_subgroup(self, np.concatenate([H.gens for H in mins]))

    def centralizer_of_subgroup(self, H: "Subgroup") -> "Subgroup":
        mask = np.ones(self.order, dtype=bool)
        for h in H.gens:
            mask &= self.commutes_with(int(h))
        return Subgroup(self, np.nonzero(mask)[0])

    def quotient(self, N: "Subgroup") -> "FiniteGroup":
        return quotient(self, N)

    def __repr__(self):
        return f"<FiniteGroup {self.name} order={self.order}>"


class Subgroup:
    """A subgroup of an enumerated group, given by its sorted member ids."""

    def __init__(self, parent: FiniteGroup, ids, gens=None):
        self.parent = parent
        self.ids = np.unique(np.asarray(ids, dtype=np.int64))
        self._gens = None if gens is None else np.asarray(gens, dtype=np.int64)

    @property
    def order(self) -> int:
        return len(self.ids)

    def __len__(self):
        return self.order

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[self.ids] = True
        return m

    @property
    def key(self) -> bytes:
        return self.ids.tobytes()

    @property
    def gens(self) -> np.ndarray:
        if self._gens is None:
            self._gens = _reduce_gens(self.parent, self.ids)
        return self._gens

    def contains(self, g) -> bool:
        return bool(self.mask[g])

    def is_abelian(self) -> bool:
        G = self.parent
        gens = self.gens
        return all(G.commutes_with(int(g), gens).all() for g in gens)

    def is_closed(self) -> bool:
        G = self.parent
        if not self.mask[0]:
            return False
        return all(self.mask[G.mul_ids(self.ids, int(g))].all() for g in self.gens)

    def issubset(self, other: "Subgroup") -> bool:
        return bool(other.mask[self.ids].all())

    def as_group(self, name=None) -> FiniteGroup:
        """This subgroup as a group in its own right (fresh ids); ``meta['embedding']`` maps them back."""
        G = self.parent
        H = closure(G.kind, G.elements[self.gens], name=name or f"subgroup of {G.name}")
        H.meta["embedding"] = G.ids(H.elements)
        return H

    def __eq__(self, other):
        return isinstance(other, Subgroup) and other.parent is self.parent and np.array_equal(self.ids, other.ids)

    def __repr__(self):
        return f"<Subgroup of {self.parent.name} order={self.order}>"


def subgroup_closure(G: FiniteGroup, gen_ids) -> np.ndarray:
    """Ids of the subgroup generated by ``gen_ids`` (breadth-first over right multiplication)."""
    gen_ids = np.unique(np.atleast_1d(np.asarray(gen_ids, dtype=np.int64)))
    gen_ids = gen_ids[gen_ids != 0]
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    frontier = np.zeros(1, dtype=np.int64)
    while len(frontier) and len(gen_ids):
        new = G.mul_ids(frontier[:, None], gen_ids[None, :]).ravel()
        new = np.unique(new[~mask[new]])
        mask[new] = True
        frontier = new
    return np.nonzero(mask)[0]


def _reduce_gens(G: FiniteGroup, candidates) -> np.ndarray:
    """Greedy generating subset of ``candidates``: keep each one not yet generated."""
    gens: list[int] = []
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    for c in np.asarray(candidates, dtype=np.int64).ravel():
        if not mask[c]:
            gens.append(int(c))
            mask[:] = False
            mask[subgroup_closure(G, gens)] = True
    return np.array(gens, dtype=np.int64)


def greedy_subgroup(G: FiniteGroup, candidates) -> Subgroup:
    gens = _reduce_gens(G, candidates)
    return Subgroup(G, subgroup_closure(G, gens), gens=gens)


def closure(kind: Kind, gens, cap: int | None = None, name: str = "G") -> FiniteGroup:
    """Enumerate the group generated by ``gens`` (rows of encoded elements).

    Breadth-first from the identity; within a layer, elements are discovered in
    (frontier position, generator index) order."""
    cap = DEFAULT_CAP if cap is None else cap
    dt = _dtype(kind)
    ident = np.asarray(kind.identity(), dtype=dt)
    gens = np.asarray(gens, dtype=dt).reshape(-1, kind.width) if len(gens) else np.zeros((0, kind.width), dt)
    gens = np.asarray(kind.normalize(gens), dtype=dt)
    w = _pack_weights(kind)
    seen = {int(ident.astype(np.int64) @ w)}
    chunks = [ident[None]]
    frontier = ident[None]
    total = 1
    while len(frontier) and len(gens):
        prod = kind.mul(frontier[:, None, :], gens[None, :, :]).reshape(-1, kind.width).astype(dt)
        codes = prod.astype(np.int64) @ w
        _, first = np.unique(codes, return_index=True)
        first.sort()
        fresh = [i for i in first.tolist() if int(codes[i]) not in seen]
        if not fresh:
            break
        frontier = prod[fresh]
        seen.update(codes[fresh].tolist())
        chunks.append(frontier)
        total += len(fresh)
        if total > cap:
            raise GroupTooLarge(f"closure exceeded cap of {cap} elements")
    G = FiniteGroup(kind, gens, np.concatenate(chunks), name=name)
    return G


def quotient(G: FiniteGroup, N: Subgroup) -> FiniteGroup:
    """The factor group G/N with coset elements; ``meta['projection']`` maps G ids to quotient ids."""
    if not G.is_normal(N):
        raise NotNormal("subgroup is not normal")
    all_ids = np.arange(G.order)
    maps = [G.mul_ids(all_ids, int(n)) for n in N.gens]
    part = OrbitPartition.from_edges(G.order, [all_ids] * len(maps), maps)
    coset_min = part.reps[part.block]
    kind = CosetKind(G, coset_min, N.ids)
    gens = coset_min[G.gens][:, None] if len(G.gens) else np.zeros((0, 1), np.int64)
    Q = closure(kind, gens, name=f"{G.name}/N")
    Q.meta["projection"] = Q.ids(coset_min[:, None])
    Q.meta["parent"] = G
    return Q
