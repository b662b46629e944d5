"""Components with at most two support degrees.

The SMALL builtins were found by an exact search over structure constants
(scripts/realizability_search.py). No table with a single degree pair
x, y and [x, y] spanning L_1 survives the Jacobi identity with trivial
center, so that pattern only appears through ``match_small_case``.

Run: python3 demos/05_small_cases.py
"""
from grsuper import builtin, classify_small, hypothesis_report
from grsuper.decomposition import SmallShape, match_small_case

for name in ("EX1", "SMALL2-1", "SMALL2-2", "SMALL4-1", "SMALL4-2", "SMALL4-3"):
    v = classify_small(builtin(name))
    print(f"{name:9s} {v.kind.value:11s} n={v.n}  dim {builtin(name).dim}")

shape = SmallShape(support_size=2, self_inverse=False, dim_g=1, dim_ginv=1, total_dim=3,
                   bracket_dim=1, bracket_fills_identity=True, gg_zero=True, triple_zero=True)
print("\nthree-dimensional pattern:", match_small_case(shape))

# Over Z/3 the support {1, 2} has 1 + 1 = 2, and an even one-dimensional
# component brackets to zero with itself, so multiplicativity fails.
rep = hypothesis_report(builtin("SMALL4-1"))
print("\nSMALL4-1 multiplicative:", rep.sigma_multiplicative)
print("  ", rep.witnesses["sigma_multiplicative"][0])
