"""Automorphisms of enumerated groups as id permutations.

Every map is checked before it is accepted: it must be a bijection of the
element table and satisfy ``phi(x * g) == phi(x) * phi(g)`` for every element
``x`` and every generator ``g``.  Induction on word length makes that check a
complete proof that ``phi`` is a homomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .groups import FiniteGroup, Subgroup


class NotAnAutomorphism(ValueError):
    pass


def is_automorphism(G: FiniteGroup, images) -> bool:
    images = np.asarray(images, dtype=np.int64)
    n = G.order
    if images.shape != (n,) or images[0] != 0:
        return False
    if not np.array_equal(np.sort(images), np.arange(n)):
        return False
    for i, g in enumerate(G.gens):
        lhs = images[G.right_table[:, i]]
        rhs = G.mul_ids(images, images[g])
        if not np.array_equal(lhs, rhs):
            return False
    return True


@dataclass
class AutoMap:
    """One automorphism: a descriptor of where it came from plus its action on ids.

    ``kind`` is one of inner, ambient, field, graph, gamma, factor, swap,
    explicit, restricted, induced."""

    kind: str
    images: np.ndarray = field(repr=False)
    params: dict = field(default_factory=dict)

    def __call__(self, g):
        return self.images[g]


class AutoGenSet:
    """A list of verified automorphisms of one group.

    ``trusted`` collects notes on assumptions that come from outside this
    package (e.g. completeness of a generating set); they are reported with
    every result computed from the set.  ``aut_order`` is set only by the
    exhaustive search."""

    def __init__(self, group: FiniteGroup, maps=(), trusted=(), aut_order: int | None = None):
        self.group = group
        self.maps: list[AutoMap] = []
        self.trusted: list[str] = list(trusted)
        self.aut_order = aut_order
        for m in maps:
            self.add(m)

    def add(self, m: AutoMap) -> AutoMap:
        if not is_automorphism(self.group, m.images):
            raise NotAnAutomorphism(f"{m.kind} map {m.params} is not an automorphism of {self.group.name}")
        m.images = np.asarray(m.images, dtype=np.int64)
        m.images.setflags(write=False)
        self.maps.append(m)
        return m

    def add_images(self, kind, images, **params) -> AutoMap:
        return self.add(AutoMap(kind, np.asarray(images), params))

    def trust(self, note: str) -> None:
        if note not in self.trusted:
            self.trusted.append(note)

    def __iter__(self):
        return iter(self.maps)

    def __len__(self):
        return len(self.maps)

    def extend(self, other: "AutoGenSet") -> None:
        for m in other.maps:
            self.add(m)
        for t in other.trusted:
            self.trust(t)

    def leaves_invariant(self, H: Subgroup) -> bool:
        mask = H.mask
        return all(mask[m.images[H.ids]].all() for m in self.maps)

    def restrict(self, H: Subgroup, sub: FiniteGroup | None = None) -> "AutoGenSet":
        """Restrictions to an invariant subgroup, as automorphisms of ``H.as_group()``."""
        if not self.leaves_invariant(H):
            raise NotAnAutomorphism("subgroup is not invariant under the automorphism set")
        sub = sub or H.as_group()
        emb = sub.meta["embedding"]
        back = np.full(self.group.order, -1, dtype=np.int64)
        back[emb] = np.arange(sub.order)
        out = AutoGenSet(sub, trusted=self.trusted)
        for m in self.maps:
            out.add(AutoMap("restricted", back[m.images[emb]], {"from": m.kind}))
        return out

    def induce(self, Q: FiniteGroup) -> "AutoGenSet":
        """Induced automorphisms on a quotient built by :func:`groups.quotient`."""
        proj = Q.meta["projection"]
        # any preimage of each coset
        pre = np.zeros(Q.order, dtype=np.int64)
        pre[proj[::-1]] = np.arange(self.group.order)[::-1]
        out = AutoGenSet(Q, trusted=self.trusted)
        for m in self.maps:
            out.add(AutoMap("induced", proj[m.images[pre]], {"from": m.kind}))
        return out


def inner_autos(G: FiniteGroup) -> list[AutoMap]:
    return [AutoMap("inner", G.conj_map(int(g)), {"by": int(g)}) for g in G.gens]
