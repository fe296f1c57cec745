"""
Fillings of a lens space
========================

Each zero tuple dominated by the cap of L(p,q) gives one minimal filling.
We list them with b2 and the order of the fundamental group.
"""

from lensfill import LensSpace, extremal_form, fillings_of, lens_canonical

for p, q in [(4, 1), (9, 2), (8, 3), (25, 9), (72, 31)]:
    L = LensSpace(p, q)
    print(L, "cap", fillings_of(L)[0].cap, "canonical", lens_canonical(L))
    for F in fillings_of(L):
        ext = extremal_form(F)
        tag = "" if ext is None else f"  extremal n={ext.n} d={ext.d} c={ext.c}"
        print("   ", F.tuple, "b2", F.b2, "pi1", F.pi1_order, tag)

# Rational balls with nontrivial pi1, p < 200
balls = []
for p in range(2, 200):
    for q in range(1, p):
        try:
            L = LensSpace(p, q)
        except ValueError:
            continue
        if lens_canonical(L) != L:
            continue
        balls += [(L, F.pi1_order) for F in fillings_of(L) if F.b2 == 0]
print(len(balls), "rational balls;", [f"{L} |pi1|={d}" for L, d in balls[:8]])
