"""Connection classes of a support, and the chain search that confirms them.

Run: python3 demos/02_connections.py
"""
from grsuper import builtin
from grsuper.connections import (
    SupportGraph,
    connection_classes,
    oracle_connected,
    oracle_partition,
    support_graph,
)
from grsuper.groups import GroupSpec

for name in ("EX2", "EX3", "EX6"):
    sg = support_graph(builtin(name))
    classes = connection_classes(sg)
    print(f"{name}: {len(sg)} degrees, {len(classes)} class(es)")
    for c in classes:
        print("   ", c.to_list())
    print("    chain search agrees:",
          sorted(c.members for c in classes) == sorted(oracle_partition(sg)))

sg = support_graph(builtin("EX2"))
one, two = (GroupSpec(1).element([k]) for k in (1, 2))
print("\nEX2 chain from 1 to 2:", [g.coords[0] for g in oracle_connected(sg, one, two)])

# Partial products have to stay in the support: 1 + 1 = 2 is missing
# here, so 1 and 3 end up in different classes.
Z = GroupSpec(1)
gaps = SupportGraph(Z, tuple(Z.element([k]) for k in (-3, -1, 1, 3)))
print("support {+-1, +-3}:", [c.to_list() for c in connection_classes(gaps)])
print("chain from 1 to 3:", oracle_connected(gaps, Z.element([1]), Z.element([3])))
