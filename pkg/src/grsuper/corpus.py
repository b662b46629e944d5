"""Builtin example algebras.

=========  ==================================================================
EX1        sl(2) graded over Z by root height (e: 1, h: 0, f: -1)
EX2        osp(1|2) over Z, odd part in degrees +-1, even root vectors at +-2
EX3        EX1 + EX1 over Z^2, one copy per axis
EX5        EX1 plus a central even element z of degree 0
EX6        sl(3) with its root grading over Z^2
EX7        sl(2) with the Pauli grading over Z/2 x Z/2 (no degree-0 part)
EX2+EX1    osp(1|2) on the first axis of Z^2, sl(2) on the second
SMALL2-1   non gr-simple, support {g = g^-1} over Z/2, dim L_1 = 1
SMALL2-2   non gr-simple, support {g = g^-1} over Z/2, dim L_1 = 2
SMALL4-1   non gr-simple, support {g, g^-1} over Z/3, dim L_1 = 1
SMALL4-2   sl(2) tensor a Grassmann algebra on one generator, over Z
SMALL4-3   non gr-simple, support {g, g^-1} over Z, dim L_1 = 3
=========  ==================================================================

The SMALL entries realize the small non gr-simple patterns; their constants
come from an exact search (``scripts/realizability_search.py``).

Every entry is validated on first access.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import linalg
from .algebra import GradedSuperalgebra, direct_sum
from .groups import GroupSpec

__all__ = ["builtin", "builtin_names", "from_matrices"]

Z = GroupSpec(1)
Z2 = GroupSpec(2)


def _ex1() -> GradedSuperalgebra:
    return GradedSuperalgebra(
        Z,
        [("e", [1], 0), ("h", [0], 0), ("f", [-1], 0)],
        {(0, 1): {0: -2}, (0, 2): {1: 1}, (1, 2): {2: -2}},
        name="EX1", description="sl(2), Z-graded by root height")


def _ex2() -> GradedSuperalgebra:
    H, E, F, x, y = range(5)
    return GradedSuperalgebra(
        Z,
        [("H", [0], 0), ("E", [2], 0), ("F", [-2], 0), ("x", [1], 1), ("y", [-1], 1)],
        {
            (H, E): {E: 2}, (H, F): {F: -2}, (E, F): {H: 1},
            (H, x): {x: 1}, (H, y): {y: -1},
            (E, y): {x: 1}, (F, x): {y: 1},
            (x, x): {E: 2}, (y, y): {F: -2}, (x, y): {H: -1},
        },
        name="EX2", description="osp(1|2), Z-graded")


def _ex3() -> GradedSuperalgebra:
    ex1 = _ex1()
    alg = direct_sum(
        [ex1, ex1], Z2,
        homs=[lambda g: (g.coords[0], 0), lambda g: (0, g.coords[0])],
        suffixes=["1", "2"])
    return GradedSuperalgebra(alg.group, alg.basis, alg.table,
                              name="EX3", description="sl(2) + sl(2) over Z^2")


def _ex5() -> GradedSuperalgebra:
    ex1 = _ex1()
    return GradedSuperalgebra(
        Z, [(b.name, b.degree, b.parity) for b in ex1.basis] + [("z", [0], 0)], ex1.table,
        name="EX5", description="sl(2) plus a central element z")


def from_matrices(group: GroupSpec, basis, name=None, description=None) -> GradedSuperalgebra:
    """Lie algebra spanned by matrices under the commutator.

    ``basis`` is a list of ``(name, degree, matrix)``; the span must be closed
    under commutators. Structure constants are solved exactly.
    """
    def flat(m):
        return [Fraction(x) for row in m for x in row]

    def mul(a, b):
        k = len(b)
        return [[sum(Fraction(a[i][t]) * b[t][j] for t in range(k)) for j in range(len(b[0]))]
                for i in range(len(a))]

    mats = [m for _, _, m in basis]
    cols = linalg.transpose([flat(m) for m in mats])
    table = {}
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            ab, ba = mul(mats[i], mats[j]), mul(mats[j], mats[i])
            target = [x - y for x, y in zip(flat(ab), flat(ba))]
            if not any(target):
                continue
            aug = [row + [t] for row, t in zip(cols, target)]
            reduced, piv, _ = linalg.rref(aug)
            if len(mats) in piv:
                raise ValueError("matrices are not closed under the commutator")
            coeffs = {p: reduced[r][-1] for r, p in enumerate(piv) if reduced[r][-1] != 0}
            table[(i, j)] = coeffs
    return GradedSuperalgebra(
        group, [(nm, deg, 0) for nm, deg, _ in basis], table, name=name, description=description)


def _unit(n, i, j):
    m = [[0] * n for _ in range(n)]
    m[i][j] = 1
    return m


def _ex6() -> GradedSuperalgebra:
    E = lambda i, j: _unit(3, i, j)  # noqa: E731
    h1 = [[1, 0, 0], [0, -1, 0], [0, 0, 0]]
    h2 = [[0, 0, 0], [0, 1, 0], [0, 0, -1]]
    return from_matrices(Z2, [
        ("e1", (1, 0), E(0, 1)), ("e2", (0, 1), E(1, 2)), ("e3", (1, 1), E(0, 2)),
        ("h1", (0, 0), h1), ("h2", (0, 0), h2),
        ("f1", (-1, 0), E(1, 0)), ("f2", (0, -1), E(2, 1)), ("f3", (-1, -1), E(2, 0)),
    ], name="EX6", description="sl(3) with its root grading over Z^2")


def _ex7() -> GradedSuperalgebra:
    return from_matrices(GroupSpec(0, (2, 2)), [
        ("Z", (1, 0), [[1, 0], [0, -1]]),
        ("X", (0, 1), [[0, 1], [1, 0]]),
        ("Y", (1, 1), [[0, 1], [-1, 0]]),
    ], name="EX7", description="sl(2) with the Pauli grading over Z/2 x Z/2")


def _ex2_ex1() -> GradedSuperalgebra:
    return direct_sum(
        [_ex2(), _ex1()], Z2,
        homs=[lambda g: (g.coords[0], 0), lambda g: (0, g.coords[0])],
        suffixes=["", ""], name="EX2+EX1")


Z_2 = GroupSpec(0, (2,))
Z_3 = GroupSpec(0, (3,))


def _small2_1() -> GradedSuperalgebra:
    # ad x0 rotates the odd pair x1 -> a -> x1; x1 and a span a proper ideal
    return GradedSuperalgebra(
        Z_2, [("x0", [1], 0), ("x1", [1], 1), ("a", [0], 1)],
        {(0, 1): {2: 1}, (0, 2): {1: 1}},
        name="SMALL2-1", description="non gr-simple, one self-inverse degree, dim L_1 = 1")


def _small2_2() -> GradedSuperalgebra:
    return GradedSuperalgebra(
        Z_2, [("x0", [1], 0), ("x1", [1], 1), ("b", [0], 0), ("a", [0], 1)],
        {(0, 1): {3: 1}, (1, 1): {2: 1}, (0, 2): {0: 2}, (1, 3): {0: 1}, (2, 3): {3: -2}},
        name="SMALL2-2", description="non gr-simple, one self-inverse degree, dim L_1 = 2")


def _small4_1() -> GradedSuperalgebra:
    x0, x1, y0, y1, o = range(5)
    return GradedSuperalgebra(
        Z_3, [("x0", [1], 0), ("x1", [1], 1), ("y0", [2], 0), ("y1", [2], 1), ("o", [0], 1)],
        {(x0, y1): {o: 1}, (x0, o): {x1: 1}, (x1, y0): {o: 1},
         (y0, y1): {x1: -1}, (x0, x1): {y1: 1}, (y0, o): {y1: -1}},
        name="SMALL4-1", description="non gr-simple, support {g, g^-1} over Z/3, dim L_1 = 1")


def _small4_2() -> GradedSuperalgebra:
    # basis e, e*t, f, f*t, h, h*t with t odd and t^2 = 0
    e, et, f, ft, h, ht = range(6)
    return GradedSuperalgebra(
        Z, [("e", [1], 0), ("et", [1], 1), ("f", [-1], 0), ("ft", [-1], 1), ("h", [0], 0), ("ht", [0], 1)],
        {(e, f): {h: 1}, (e, ft): {ht: 1}, (et, f): {ht: 1},
         (e, h): {e: -2}, (e, ht): {et: -2}, (et, h): {et: -2},
         (f, h): {f: 2}, (f, ht): {ft: 2}, (ft, h): {ft: 2}},
        name="SMALL4-2", description="sl(2) tensor a Grassmann algebra on one odd generator")


def _small4_3() -> GradedSuperalgebra:
    x0, x1, y0, y1, k, o0, o1 = range(7)
    return GradedSuperalgebra(
        Z, [("x0", [1], 0), ("x1", [1], 1), ("y0", [-1], 0), ("y1", [-1], 1),
            ("k", [0], 0), ("o0", [0], 1), ("o1", [0], 1)],
        {(x1, y1): {k: 1}, (x0, y1): {o0: 1}, (x1, y0): {o1: 1},
         (x0, k): {x0: 1}, (x1, o0): {x0: 1}, (y0, k): {y0: -1}, (y1, o1): {y0: 1},
         (k, o0): {o0: -1}, (k, o1): {o1: 1}},
        name="SMALL4-3", description="non gr-simple, support {g, g^-1} over Z, dim L_1 = 3")


_BUILDERS = {
    "EX1": _ex1,
    "EX2": _ex2,
    "EX3": _ex3,
    "EX5": _ex5,
    "EX6": _ex6,
    "EX7": _ex7,
    "EX2+EX1": _ex2_ex1,
    "SMALL2-1": _small2_1,
    "SMALL2-2": _small2_2,
    "SMALL4-1": _small4_1,
    "SMALL4-2": _small4_2,
    "SMALL4-3": _small4_3,
}


def builtin_names() -> list[str]:
    return list(_BUILDERS)


@lru_cache(maxsize=None)
def builtin(name: str) -> GradedSuperalgebra:
    """Look up a builtin by name (case-insensitive). Raises KeyError."""
    key = name.upper()
    if key not in _BUILDERS:
        raise KeyError(f"unknown builtin {name!r}; choose from {', '.join(_BUILDERS)}")
    alg = _BUILDERS[key]()
    alg.require_valid()
    return alg
