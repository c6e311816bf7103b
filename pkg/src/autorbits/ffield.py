"""Arithmetic in small finite fields GF(p^k) via precomputed lookup tables.

Elements are encoded as integers in ``[0, p**k)`` by packing the polynomial
coefficient vector in base ``p`` (coefficient of ``x**i`` is digit ``i``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

MAX_ORDER = 512
MAX_DEGREE = 8

# low-order coefficient first; leading 1 included
FIXED_MODULI = {
    (2, 1): (0, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (3, 2): (1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
}


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def _poly_mod(a, b, p):
    """Remainder of a modulo the monic polynomial b (coefficient lists, low first)."""
    a = list(a)
    db = len(b) - 1
    while len(a) - 1 >= db:
        lead = a[-1] % p
        if lead:
            shift = len(a) - 1 - db
            for i, c in enumerate(b):
                a[shift + i] = (a[shift + i] - lead * c) % p
        a.pop()
    return [c % p for c in a]


def is_irreducible(poly, p: int) -> bool:
    """Exhaustive check: no monic factor of degree 1..deg/2 divides ``poly``."""
    deg = len(poly) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not any(_poly_mod(poly, list(low) + [1], p)):
                return False
    return True


def _default_modulus(p, k):
    if (p, k) in FIXED_MODULI:
        return FIXED_MODULI[(p, k)]
    if k == 1:
        return (0, 1)
    # first irreducible monic polynomial in lexicographic order of low coefficients
    for low in itertools.product(range(p), repeat=k):
        poly = tuple(reversed(low)) + (1,)
        if poly[0] and is_irreducible(poly, p):
            return poly
    raise FieldError(f"no irreducible polynomial of degree {k} over GF({p})")


@dataclass(frozen=True, eq=False)
class FieldDesc:
    """The field GF(p^k) together with its full arithmetic tables.

    Use :func:`ff_make` rather than constructing this directly.
    """

    p: int
    k: int
    modulus: tuple
    add: np.ndarray = field(repr=False)
    mul: np.ndarray = field(repr=False)
    neg: np.ndarray = field(repr=False)
    inv: np.ndarray = field(repr=False)
    frob: np.ndarray = field(repr=False)
    generator: int = 0

    @property
    def q(self) -> int:
        return self.p**self.k

    @property
    def sub(self) -> np.ndarray:
        return self.add[:, self.neg]

    def __call__(self, value) -> "FFElem":
        if isinstance(value, FFElem):
            if value.field is not self:
                raise FieldError("element belongs to a different field")
            return value
        if not 0 <= int(value) < self.q:
            raise FieldError(f"{value} is not an element code of GF({self.q})")
        return FFElem(int(value), self)

    def elements(self):
        return [FFElem(i, self) for i in range(self.q)]

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def power(self, a: int, n: int) -> int:
        r = 1
        for _ in range(n):
            r = int(self.mul[r, a])
        return r

    def name(self, a: int) -> str:
        """Print form: 0, 1 for the prime field 0 and 1, otherwise ``w``, ``w2``, ... as powers
        of the primitive element (``w`` stands for the generator of the multiplicative group)."""
        a = int(a)
        if a < self.p and self.k == 1:
            return str(a)
        if a == 0:
            return "0"
        if a == 1:
            return "1"
        e = self._log[a]
        return "w" if e == 1 else f"w{e}"

    @property
    def _log(self):
        log = {}
        x = 1
        for e in range(self.q - 1):
            log[x] = e
            x = int(self.mul[x, self.generator])
        return log

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def ff_make(p: int, k: int = 1) -> FieldDesc:
    """Build GF(p^k) with a fixed modulus. Cached, so equal arguments give the same object."""
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if not 1 <= k <= MAX_DEGREE or p**k > MAX_ORDER:
        raise FieldError(f"GF({p}^{k}) outside the supported range (q <= {MAX_ORDER})")
    modulus = tuple(_default_modulus(p, k))
    if not is_irreducible(modulus, p):
        raise FieldError(f"modulus {modulus} is reducible over GF({p})")
    q = p**k

    digits = np.array([[(a // p**i) % p for i in range(k)] for a in range(q)], dtype=np.int64)
    weights = p ** np.arange(k, dtype=np.int64)
    add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
    neg = ((-digits) % p) @ weights

    mul = np.zeros((q, q), dtype=np.int64)
    for a in range(q):
        for b in range(a, q):
            prod = [0] * (2 * k - 1)
            for i, ca in enumerate(digits[a]):
                if ca:
                    for j, cb in enumerate(digits[b]):
                        prod[i + j] += int(ca) * int(cb)
            r = _poly_mod(prod, modulus, p) if k > 1 else [prod[0] % p]
            r = r + [0] * (k - len(r))
            mul[a, b] = mul[b, a] = sum(c * p**i for i, c in enumerate(r))

    inv = np.zeros(q, dtype=np.int64)
    for a in range(1, q):
        (b,) = np.nonzero(mul[a] == 1)[0]
        inv[a] = b

    frob = np.arange(q, dtype=np.int64)
    for _ in range(p - 1):
        frob = mul[frob, np.arange(q)]

    generator = 0
    for g in range(1, q):
        x, order = g, 1
        while x != 1:
            x, order = int(mul[x, g]), order + 1
        if order == q - 1:
            generator = g
            break

    tables = [t.astype(np.int16) for t in (add, mul, neg, inv, frob)]
    for t in tables:
        t.setflags(write=False)
    F = FieldDesc(p, k, modulus, *tables, generator=generator)
    # multiplicative group has order q - 1
    if q > 2 and F.power(generator, q - 1) != 1:
        raise FieldError("multiplicative group order check failed")
    return F


@dataclass(frozen=True)
class FFElem:
    """A field element: integer code plus owning field."""

    value: int
    field: FieldDesc

    @property
    def coeffs(self) -> list[int]:
        return self.field.digits(self.value)

    def _other(self, other):
        if isinstance(other, FFElem):
            if other.field is not self.field:
                raise FieldError("field mismatch")
            return other.value
        return self.field(other).value

    def __add__(self, other):
        return FFElem(int(self.field.add[self.value, self._other(other)]), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        return FFElem(int(self.field.sub[self.value, self._other(other)]), self.field)

    def __neg__(self):
        return FFElem(int(self.field.neg[self.value]), self.field)

    def __mul__(self, other):
        return FFElem(int(self.field.mul[self.value, self._other(other)]), self.field)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return ff_inv(self) ** (-n)
        return FFElem(self.field.power(self.value, n), self.field)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return self.field.name(self.value)


def ff_add(a: FFElem, b: FFElem) -> FFElem:
    return a + b


def ff_neg(a: FFElem) -> FFElem:
    return -a


def ff_mul(a: FFElem, b: FFElem) -> FFElem:
    return a * b


def ff_inv(a: FFElem) -> FFElem:
    if a.value == 0:
        raise ZeroDivisionError("inverse of zero in a finite field")
    return FFElem(int(a.field.inv[a.value]), a.field)


def frobenius(a: FFElem, power: int = 1) -> FFElem:
    """Apply x -> x^p, ``power`` times."""
    v = a.value
    for _ in range(power % a.field.k):
        v = int(a.field.frob[v])
    return FFElem(v, a.field)


def frobenius_table(F: FieldDesc, power: int = 1) -> np.ndarray:
    t = np.arange(F.q, dtype=np.int16)
    for _ in range(power % F.k):
        t = F.frob[t]
    return t


def prime_power(q: int) -> tuple[int, int]:
    """Split q = p^k; raises FieldError if q is not a prime power."""
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            while q % p == 0:
                q //= p
                k += 1
            if q != 1 or not is_prime(p):
                break
            return p, k
    raise FieldError("not a prime power")


def gf(q: int) -> FieldDesc:
    """GF(q) for a prime power q."""
    return ff_make(*prime_power(q))
