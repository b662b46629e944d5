"""Independent reference computations used to cross-check the package.

Nothing here calls the package's bracket, validator or linear algebra: the
skew extension is rebuilt from the raw upper-triangular table and ranks come
from sympy.
"""
from fractions import Fraction
from itertools import product

import sympy


def parities(alg):
    return [b.parity for b in alg.basis]


def full_table(alg):
    """All ordered pairs from the stored ``i <= j`` entries."""
    par = parities(alg)
    full = {}
    for (i, j), coeffs in alg.table.items():
        full[(i, j)] = dict(coeffs)
        if i != j:
            s = -1 if par[i] * par[j] == 0 else 1
            full[(j, i)] = {k: s * c for k, c in coeffs.items()}
    return full


def bracket(full, x, y):
    out = {}
    for a, ca in x.items():
        for b, cb in y.items():
            for k, c in full.get((a, b), {}).items():
                out[k] = out.get(k, 0) + ca * cb * c
    return {k: v for k, v in out.items() if v != 0}


def jacobi_failures(alg):
    """Triples ``(x, y, z)`` of basis indices breaking super Jacobi."""
    par = parities(alg)
    full = full_table(alg)
    bad = []
    for x, y, z in product(range(alg.dim), repeat=3):
        lhs = bracket(full, {x: 1}, bracket(full, {y: 1}, {z: 1}))
        r1 = bracket(full, bracket(full, {x: 1}, {y: 1}), {z: 1})
        r2 = bracket(full, {y: 1}, bracket(full, {x: 1}, {z: 1}))
        s = -1 if par[x] * par[y] else 1
        keys = set(lhs) | set(r1) | set(r2)
        if any(lhs.get(k, 0) - r1.get(k, 0) - s * r2.get(k, 0) != 0 for k in keys):
            bad.append((x, y, z))
    return bad


def axiom_failures(alg):
    """Grading, parity and even-diagonal failures plus Jacobi triples."""
    grp = alg.group
    bad = []
    for (i, j), coeffs in alg.table.items():
        bi, bj = alg.basis[i], alg.basis[j]
        if i == j and bi.parity == 0 and coeffs:
            bad.append(("skew", (i, j)))
        for k, c in coeffs.items():
            if c == 0:
                continue
            bk = alg.basis[k]
            if bk.degree != grp.multiply(bi.degree, bj.degree):
                bad.append(("grading", (i, j)))
            if bk.parity != (bi.parity + bj.parity) % 2:
                bad.append(("parity", (i, j)))
    return bad + [("jacobi", t) for t in jacobi_failures(alg)]


def rank(vectors, n):
    if not vectors:
        return 0
    return sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else c
                          for c in v] for v in vectors]).rank()


def ad_matrix(alg):
    """Rows indexed by (partner j, output k), columns by basis i: [b_i, b_j]_k."""
    full = full_table(alg)
    n = alg.dim
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append([full.get((i, j), {}).get(k, 0) for i in range(n)])
    return rows


def center_dim(alg):
    n = alg.dim
    if n == 0:
        return 0
    return n - rank(ad_matrix(alg), n)


def closure_dim(alg, vectors):
    """Dimension of the (ungraded) ideal generated by ``vectors``, by
    repeated bracketing with the basis until the rank stabilises."""
    full = full_table(alg)
    n = alg.dim
    span = [list(v) for v in vectors]
    r = rank(span, n)
    while True:
        new = []
        for v in span:
            sv = {i: c for i, c in enumerate(v) if c}
            for j in range(n):
                w = bracket(full, sv, {j: 1})
                new.append([w.get(k, 0) for k in range(n)])
        span = span + new
        r2 = rank(span, n)
        if r2 == r:
            return r
        r = r2


def unit(n, i):
    return [1 if k == i else 0 for k in range(n)]


def brute_gr_simple(alg):
    """Gr-simple iff [L, L] != 0 and each nonzero homogeneous vector of each
    (degree, parity) component generates L. Enumerates small integer
    combinations inside each component."""
    if not alg.table or alg.dim == 0:
        return False
    n = alg.dim
    comps = {}
    for b in alg.basis:
        comps.setdefault((b.degree, b.parity), []).append(b.index)
    for idx in comps.values():
        for coeffs in product((-1, 0, 1, 2), repeat=len(idx)):
            if not any(coeffs):
                continue
            v = [0] * n
            for c, i in zip(coeffs, idx):
                v[i] = c
            if closure_dim(alg, [v]) < n:
                return False
    return True
