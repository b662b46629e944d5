"""Checking the axioms and reading off the support.

Run: python3 demos/01_axioms_and_support.py
"""
from grsuper import builtin, support, validate
from grsuper.algebra import GradedSuperalgebra

sl2 = builtin("EX1")
print(sl2, "valid:", validate(sl2).ok)

e, h, f = (sl2.unit(sl2.index(n)) for n in "ehf")
print("[e, f] =", sl2.describe(sl2.bracket(e, f)))
print("[h, e] =", sl2.describe(sl2.bracket(h, e)), "  [e, h] =", sl2.describe(sl2.bracket(e, h)))

# Change one structure constant: h now acts on e with weight 3.
table = {k: dict(v) for k, v in sl2.table.items()}
table[(0, 1)] = {0: -3}
broken = GradedSuperalgebra(sl2.group, [(b.name, b.degree, b.parity) for b in sl2.basis], table)
report = validate(broken)
print("\nperturbed table valid:", report.ok)
for kind, names in report.witnesses(broken)[:3]:
    print("  ", kind, names)

# Doubling [e, f] instead only rescales f, so the axioms still hold.
table = {k: dict(v) for k, v in sl2.table.items()}
table[(0, 2)] = {1: 2}
rescaled = GradedSuperalgebra(sl2.group, [(b.name, b.degree, b.parity) for b in sl2.basis], table)
print("[e, f] = 2h valid:", validate(rescaled).ok)

osp = builtin("EX2")
sup = support(osp)
print("\nosp(1|2) support:", [g.coords[0] for g in sup.sigma])
print("  even part:", [g.coords[0] for g in sup.sigma0], " odd part:", [g.coords[0] for g in sup.sigma1])
print("  symmetric:", sup.symmetric)
