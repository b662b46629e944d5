"""Class ideals, the center, the hypothesis report and gr-simplicity.

Run: python3 demos/03_ideals_and_simplicity.py
"""
from grsuper import builtin, center, class_ideal, hypothesis_report, is_gr_simple
from grsuper.connections import connection_classes, support_graph

ex3 = builtin("EX3")
for c in connection_classes(support_graph(ex3)):
    I = class_ideal(ex3, c)
    print(f"class {c.to_list()}: ideal of dim {I.dim},",
          "identity part", [ex3.describe(v) for v in I.one_part.vectors()])

ex5 = builtin("EX5")
print("\ncenter of EX5:", [ex5.describe(v) for v in center(ex5).vectors()])
rep = hypothesis_report(ex5)
print("failed hypotheses:", rep.failed())
for flag in rep.failed():
    print("  ", flag, rep.witnesses[flag])

for name in ("EX1", "EX2", "EX6", "EX3", "EX5"):
    r = is_gr_simple(builtin(name))
    print(f"\n{name}: {r.verdict.value} ({r.reason})")
    for t in r.traces[:2]:
        print(f"   closure of {t.generator}: dims {list(t.round_dims)}")
    if r.ideal is not None:
        print("   proper ideal:", [builtin(name).describe(v) for v in r.ideal.vectors()])
