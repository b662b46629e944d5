"""Exact linear algebra over Q.

Vectors are sequences of :class:`fractions.Fraction` and matrices are lists
of rows. Nothing here ever rounds; all comparisons are exact.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

__all__ = [
    "Fraction",
    "as_fraction",
    "format_scalar",
    "parse_scalar",
    "rref",
    "rank",
    "echelon_basis",
    "span_contains",
    "kernel",
    "complement",
    "mat_vec",
    "transpose",
    "coordinates",
]

Vector = list
Matrix = list

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def parse_scalar(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``. Raises ValueError on anything else."""
    m = _SCALAR_RE.match(text)
    if m is None:
        raise ValueError(f"malformed scalar {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in scalar {text!r}")
    return Fraction(num, den)


def format_scalar(x: Fraction) -> str:
    return str(Fraction(x))


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)]


def mat_vec(m: Matrix, v: Sequence) -> Vector:
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in m]


def rref(m: Matrix, ncols: int | None = None):
    """Reduced row-echelon form.

    Returns ``(reduced, pivot_columns, rank)``. ``reduced`` keeps the input
    shape; zero rows sit at the bottom. Pivot choice is the first nonzero
    entry in each column.
    """
    rows = [[Fraction(x) for x in row] for row in m]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        lead = rows[r][c]
        if lead != 1:
            rows[r] = [x / lead for x in rows[r]]
        pivot_row = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], pivot_row)]
        pivots.append(c)
        r += 1
    return rows, pivots, len(pivots)


def rank(m: Matrix, ncols: int | None = None) -> int:
    return rref(m, ncols)[2]


def echelon_basis(vectors: Sequence[Sequence], n: int | None = None) -> list[Vector]:
    """Nonzero rows of the RREF of ``vectors``: a canonical basis of their span."""
    vectors = list(vectors)
    if not vectors:
        return []
    reduced, _, rk = rref(vectors, n)
    return reduced[:rk]


def _check_lengths(vectors, n):
    for v in vectors:
        if len(v) != n:
            raise ValueError(f"vector length {len(v)} does not match {n}")


def span_contains(basis: Sequence[Sequence], v: Sequence) -> bool:
    """True iff ``v`` is a rational combination of ``basis``."""
    n = len(v)
    _check_lengths(basis, n)
    if not any(v):
        return True
    if not basis:
        return False
    return rank(list(basis) + [list(v)]) == rank(list(basis))


def coordinates(echelon: Sequence[Sequence], pivots: Sequence[int], v: Sequence):
    """Coordinates of ``v`` in an RREF basis, or None if ``v`` is outside its span.

    ``echelon`` must be the nonzero rows of an RREF with the given pivots.
    """
    coeffs = [Fraction(v[p]) for p in pivots]
    for j in range(len(v)):
        s = sum((c * row[j] for c, row in zip(coeffs, echelon)), Fraction(0))
        if s != v[j]:
            return None
    return coeffs


def kernel(m: Matrix, ncols: int | None = None) -> list[Vector]:
    """Basis of the null space, one vector per free column."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    if not m:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    reduced, pivots, rk = rref(m, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, p in zip(reduced[:rk], pivots):
            v[p] = -row[free]
        basis.append(v)
    return basis


def complement(sub: Sequence[Sequence], ambient: Sequence[Sequence]) -> list[Vector]:
    """Greedy extension of ``sub`` to a basis of ``span(ambient)``.

    Vectors are taken from ``ambient`` in order, keeping each one that raises
    the rank. Raises ValueError if ``sub`` is not inside ``span(ambient)``.
    """
    sub = [list(v) for v in sub]
    ambient = [list(v) for v in ambient]
    if sub and ambient:
        _check_lengths(sub + ambient, len(ambient[0]))
    if sub and rank(ambient + sub) != rank(ambient):
        raise ValueError("subspace is not contained in the ambient span")
    current = echelon_basis(sub) if sub else []
    r = len(current)
    chosen = []
    for v in ambient:
        trial = current + [v]
        rk = rank(trial)
        if rk > r:
            chosen.append(v)
            current = echelon_basis(trial)
            r = rk
    return chosen
