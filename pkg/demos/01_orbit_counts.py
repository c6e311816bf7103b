"""
Counting automorphism orbits
============================

Build a few groups, bracket the number of Aut(G)-orbits between a signature
partition and an orbit closure, and see what happens when the two disagree.
"""

from autorbits import build, omega
from autorbits.orbits import signature_partition

# A5: conjugacy classes 1, 15, 20, 12, 12.  The outer automorphism swaps the
# two classes of 5-cycles, so there are 4 orbits.
A5 = build("A(5)")
print(A5, "classes:", A5.classes.sizes)
w = omega(A5)
print("omega(A5):", w.as_dict(), "orbit sizes", w.upper.sizes)

# The linear groups in the table of nonsolvable groups with few orbits
for spec in ["PSL(2,4)", "PSL(2,7)", "PSL(2,8)", "PSL(2,9)", "ASL(2,4)"]:
    w = omega(build(spec))
    print(f"{spec:10s} lo={w.lo} hi={w.hi} {w.status}")

# Element orders alone are not enough for ASL(2,4): the involutions inside
# and outside the translation subgroup have the same order but different
# centralizers.
G = build("ASL(2,4)")
print("orders:", G.order_census(), "-> bound", signature_partition(G, 1).count)
print("with centralizers -> bound", signature_partition(G, 2).count)

# A6 has an exotic outer automorphism that the generic generating set misses.
A6 = build("A(6)")
w = omega(A6)
print("A6 from known automorphisms:", w.as_dict())
w = omega(A6, exact=True, aut_limit=400)
print("A6 with the exhaustive search:", w.as_dict())
