"""From class ideals to the full structure report.

Run: python3 demos/04_decomposition.py
"""
from grsuper import builtin, co1_direct_sum, direct_sum, teo2_decompose, teo4_pipeline
from grsuper.errors import HypothesesNotMet
from grsuper.groups import GroupSpec

ex5 = builtin("EX5")
d = teo2_decompose(ex5)
print("EX5 = U + ideals with U =", [ex5.describe(v) for v in d.u_complement.vectors()],
      "and ideal dims", [I.dim for I in d.ideals])
try:
    co1_direct_sum(ex5)
except HypothesesNotMet as exc:
    print("direct sum refused:", exc.failed, exc.witnesses["center_zero"])

print("\nEX3 ideal dims:", [I.dim for I in co1_direct_sum(builtin("EX3"))])

report = teo4_pipeline(builtin("EX2+EX1"))
print()
print(report.to_text())

# A gr-simple sl(2) next to a small non gr-simple piece.
mixed = direct_sum(
    [builtin("SMALL2-1"), builtin("EX1")], GroupSpec(1, (2,)),
    homs=[lambda g: (0, g.coords[0]), lambda g: (g.coords[0], 0)],
    suffixes=["", ""], name="SMALL2-1+EX1")
print()
print(teo4_pipeline(mixed).to_text())
