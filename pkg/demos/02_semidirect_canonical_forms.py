"""
Canonical forms in SL(2,q) acting on 2 x m matrices
===================================================

Every element (X, Y) of GMF(m, q) is moved to one of seven representatives
(for q = 4) by an explicit chain of automorphisms.  Here we check that on the
whole group and print the orbit table.
"""

from collections import Counter

from autorbits import build, omega
from autorbits.gmf import apply_chain, canonical_form_gmf, representatives

G = build("GMF(2,4)")
print(G)

reps = representatives(G)
for case, ids in reps.items():
    print(f"{case:12s}", [G.format(i) for i in ids])

cases = Counter()
forms = set()
for g in range(G.order):
    cf = canonical_form_gmf(G, g)
    assert apply_chain(G, g, cf.chain) == cf.rep
    forms.add(cf.rep)
    cases[cf.case] += 1
print("distinct forms:", len(forms))
print("elements per case:", dict(cases))

w = omega(G)
print("certified:", w.as_dict())
for rep, size in zip(w.upper.reps, w.upper.sizes):
    print(f"{size:6d}  order {G.elem_order(int(rep))}  {G.format(int(rep))}")
