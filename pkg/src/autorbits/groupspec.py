"""Parser for group specification strings such as ``PSL(2,7)`` or ``POW(A(5),2)``.

Grammar::

    spec  := NAME '(' arg (',' arg)* ')'
    arg   := INT | spec

Names are case-insensitive and whitespace is ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

SUPPORTED_Q = (2, 3, 4, 5, 7, 8, 9, 16)
PSL_PAIRS = {(2, 4), (2, 5), (2, 7), (2, 8), (2, 9), (3, 4)}
MAX_M = 8
MAX_N = 10

# name -> (min arity, max arity)
ARITY = {
    "PSL": (2, 2),
    "SL": (2, 2),
    "GL": (2, 2),
    "PGL": (2, 2),
    "GMF": (2, 2),
    "ASL": (2, 2),
    "EA": (2, 2),
    "A": (1, 1),
    "S": (1, 1),
    "POW": (2, 2),
    "DP": (2, 4),
}


class SpecError(ValueError):
    """Base class; ``kind`` is one of 'syntax', 'unknown', 'arity', 'range'."""

    kind = "spec"


class SpecSyntaxError(SpecError):
    kind = "syntax"

    def __init__(self, msg, pos):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


class UnknownConstructor(SpecError):
    kind = "unknown"


class ArityError(SpecError):
    kind = "arity"


class ParameterRangeError(SpecError):
    kind = "range"


@dataclass(frozen=True)
class GroupSpec:
    name: str
    args: tuple

    def __str__(self):
        return f"{self.name}({','.join(str(a) for a in self.args)})"

    @property
    def ints(self) -> tuple[int, ...]:
        return tuple(a for a in self.args if isinstance(a, int))


_TOKEN = re.compile(r"(?P<name>[A-Za-z]+)|(?P<int>\d+)|(?P<punct>[(),])")


def _tokens(text):
    out = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise SpecSyntaxError(f"unexpected character {text[pos]!r}", pos)
        out.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def parse_spec(text: str) -> GroupSpec:
    toks = _tokens(text)
    spec, i = _parse(toks, 0)
    if toks[i][0] != "end":
        raise SpecSyntaxError(f"trailing input {toks[i][1]!r}", toks[i][2])
    return spec


def _expect(toks, i, value):
    kind, val, pos = toks[i]
    if val != value:
        raise SpecSyntaxError(f"expected {value!r}, found {val or 'end of input'!r}", pos)
    return i + 1


def _parse(toks, i):
    kind, val, pos = toks[i]
    if kind != "name":
        raise SpecSyntaxError(f"expected a group name, found {val or 'end of input'!r}", pos)
    name = val.upper()
    if name not in ARITY:
        raise UnknownConstructor(f"unknown group constructor {val!r}")
    i = _expect(toks, i + 1, "(")
    args = []
    while True:
        kind, val, pos = toks[i]
        if kind == "int":
            args.append(int(val))
            i += 1
        elif kind == "name":
            sub, i = _parse(toks, i)
            args.append(sub)
        else:
            raise SpecSyntaxError(f"expected an argument, found {val or 'end of input'!r}", pos)
        if toks[i][1] == ",":
            i += 1
            continue
        i = _expect(toks, i, ")")
        break
    spec = GroupSpec(name, tuple(args))
    validate(spec)
    return spec, i


def validate(spec: GroupSpec) -> None:
    lo, hi = ARITY[spec.name]
    if not lo <= len(spec.args) <= hi:
        raise ArityError(f"{spec.name} takes {lo if lo == hi else f'{lo}-{hi}'} arguments, got {len(spec.args)}")
    nested = spec.name in ("POW", "DP")
    for j, a in enumerate(spec.args):
        want_spec = nested and (spec.name == "DP" or j == 0)
        if want_spec != isinstance(a, GroupSpec):
            raise ArityError(f"argument {j + 1} of {spec.name} must be {'a group' if want_spec else 'an integer'}")
    n = spec.name
    a = spec.args
    if n == "PSL":
        if (a[0], a[1]) not in PSL_PAIRS:
            raise ParameterRangeError(f"PSL(n,q) supported for (n,q) in {sorted(PSL_PAIRS)}")
    elif n == "PGL":
        if a[0] != 2 or a[1] not in SUPPORTED_Q:
            raise ParameterRangeError(f"PGL(2,q) needs q in {SUPPORTED_Q}")
    elif n in ("SL", "GL"):
        if a[0] not in (2, 3) or a[1] not in SUPPORTED_Q:
            raise ParameterRangeError(f"{n}({a[0]},{a[1]}) needs n in (2, 3) and q in {SUPPORTED_Q}")
    elif n == "GMF":
        if not 1 <= a[0] <= MAX_M or a[1] not in (4, 8, 16):
            raise ParameterRangeError("GMF(m,q) needs 1 <= m <= 8 and q a power of 2 greater than 2")
    elif n == "ASL":
        if a[0] != 2 or a[1] not in (4, 8, 16):
            raise ParameterRangeError("ASL(2,q) needs q a power of 2 greater than 2")
    elif n == "EA":
        from .ffield import is_prime

        if not is_prime(a[0]) or a[1] < 1 or a[0] ** a[1] > 4096:
            raise ParameterRangeError("EA(p,k) needs p prime and p^k <= 4096")
    elif n in ("A", "S"):
        if not 1 <= a[0] <= MAX_N:
            raise ParameterRangeError(f"{n}(n) needs 1 <= n <= {MAX_N}")
    elif n == "POW":
        if not 1 <= a[1] <= MAX_M:
            raise ParameterRangeError(f"POW exponent must be in 1..{MAX_M}")
