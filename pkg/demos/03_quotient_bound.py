"""
omega(G) >= omega(N) + omega(G/N) - 1
=====================================

For a characteristic subgroup N the orbits inside N and the orbits of the
quotient both show up in G.  The bound is tight for S3 over A3 and loose for
the affine group over its translations.
"""

from autorbits import build, direct_power_omega, omega, verify_quotient_bound

for spec, which in [("S(3)", "derived"), ("S(4)", "derived"), ("ASL(2,4)", "socle"), ("SL(2,5)", "center")]:
    G = build(spec)
    N = {"derived": G.derived_subgroup, "socle": G.socle, "center": G.center}[which]()
    r = verify_quotient_bound(G, N)
    d = r.as_dict()
    print(
        f"{spec:9s} N={which:8s} |N|={N.order:3d}  "
        f"omega(G)={d['omega_G']['lo']}  omega(N)={d['omega_N']['lo']}  omega(G/N)={d['omega_G/N']['lo']}  "
        f"{r.status}{'  equality' if r.equality else ''}"
    )

# Direct powers: A5 x A5 has binom(5, 3) = 10 orbits
w = omega(build("POW(A(5),2)"))
print("A5^2:", w.as_dict(), "formula:", direct_power_omega(4, 2))
print("trusted:", w.trusted)
