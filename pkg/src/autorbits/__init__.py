"""Certified automorphism orbit counts of finite groups.

The number of Aut(G)-orbits on G is bracketed between the count of an
invariant signature partition (a lower bound) and the orbit closure under a
set of verified automorphisms (an upper bound).  When the two partitions
coincide the count is certified.
"""

from .constructions import autogens_for, build
from .groups import FiniteGroup, GroupTooLarge, OrbitPartition, Subgroup, closure, quotient
from .groupspec import GroupSpec, SpecError, parse_spec
from .orbits import (
    CertifiedOmega,
    brute_force_aut,
    direct_power_omega,
    omega,
    orbit_closure,
    signature_partition,
    verify_quotient_bound,
)

__all__ = [
    "CertifiedOmega",
    "FiniteGroup",
    "GroupSpec",
    "GroupTooLarge",
    "OrbitPartition",
    "SpecError",
    "Subgroup",
    "autogens_for",
    "brute_force_aut",
    "build",
    "closure",
    "direct_power_omega",
    "omega",
    "orbit_closure",
    "parse_spec",
    "quotient",
    "signature_partition",
    "verify_quotient_bound",
]
