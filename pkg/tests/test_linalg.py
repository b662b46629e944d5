from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from grsuper import linalg

small = st.integers(-3, 3).map(Fraction)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_cols).flatmap(
        lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=0, max_size=max_rows)
        .map(lambda rows: (rows, n)))


def det(m):
    # Laplace expansion; an independent route to rank via minors
    if not m:
        return Fraction(1)
    return sum((-1) ** j * m[0][j] * det([r[:j] + r[j + 1:] for r in m[1:]]) for j in range(len(m)))


def rank_by_minors(rows, n):
    for k in range(min(len(rows), n), 0, -1):
        for rs in combinations(range(len(rows)), k):
            for cs in combinations(range(n), k):
                if det([[rows[r][c] for c in cs] for r in rs]) != 0:
                    return k
    return 0


def test_parse_and_format_scalars():
    assert linalg.parse_scalar("-3/6") == Fraction(-1, 2)
    assert linalg.format_scalar(Fraction(-3, 6)) == "-1/2"
    assert linalg.format_scalar(Fraction(4, 2)) == "2"
    assert linalg.parse_scalar(" 7 ") == 7
    for bad in ("1/0", "x", "1.5", "", "1//2"):
        with pytest.raises(ValueError):
            linalg.parse_scalar(bad)


def test_rref_example():
    rows, piv, r = linalg.rref([[2, 4], [1, 3]])
    assert (rows, piv, r) == ([[1, 0], [0, 1]], [0, 1], 2)


def test_kernel_example():
    ker = linalg.kernel([[1, 1, 0]], 3)
    assert len(ker) == 2
    assert all(linalg.mat_vec([[1, 1, 0]], v) == [0] for v in ker)
    assert len(linalg.kernel([], 2)) == 2


def test_complement_rejects_non_subspace():
    with pytest.raises(ValueError):
        linalg.complement([[1, 0]], [[0, 1]])


@settings(max_examples=60)
@given(matrices())
def test_rank_matches_minors(mn):
    rows, n = mn
    assert linalg.rank(rows, n) == rank_by_minors(rows, n)


@settings(max_examples=60)
@given(matrices())
def test_rref_idempotent_and_rank_transpose(mn):
    rows, n = mn
    red, piv, r = linalg.rref(rows, n)
    assert linalg.rref(red, n)[0] == red
    assert r == len(piv)
    if rows:
        assert r == linalg.rank(linalg.transpose(rows), len(rows))


@settings(max_examples=60)
@given(matrices())
def test_kernel_is_annihilated_and_has_right_dimension(mn):
    rows, n = mn
    ker = linalg.kernel(rows, n)
    zero = [Fraction(0)] * len(rows)
    for v in ker:
        assert linalg.mat_vec(rows, v) == zero
    assert len(ker) == n - linalg.rank(rows, n)
    assert linalg.rank(ker, n) == len(ker)


@settings(max_examples=60)
@given(matrices(4, 4), matrices(4, 4))
def test_complement_dimension_identity(a, b):
    (sub, n), (extra, m) = a, b
    if n != m:
        extra = []
    ambient = sub + extra
    comp = linalg.complement(linalg.echelon_basis(sub, n), ambient)
    assert len(comp) + linalg.rank(sub, n) == linalg.rank(ambient, n)
    assert linalg.rank(sub + comp, n) == linalg.rank(ambient, n)


@settings(max_examples=60)
@given(matrices(), st.lists(small, min_size=4, max_size=4))
def test_coordinates_reconstruct(mn, coeffs):
    rows, n = mn
    basis, piv, _ = linalg.rref(rows, n)
    v = [sum((c * row[j] for c, row in zip(coeffs, basis)), Fraction(0)) for j in range(n)]
    co = linalg.coordinates(basis, piv, v)
    assert co is not None
    assert [sum((c * row[j] for c, row in zip(co, basis)), Fraction(0)) for j in range(n)] == v
    assert linalg.span_contains(basis, v)


def test_listed_examples():
    assert linalg.rref([[1, 0], [0, 1]]) == ([[1, 0], [0, 1]], [0, 1], 2)
    assert linalg.rref([[0] * 3] * 3) == ([[0] * 3] * 3, [], 0)
    assert linalg.rref([[1, 2], [2, 4]]) == ([[1, 2], [0, 0]], [0], 1)
    assert linalg.span_contains([[1, 0]], [3, 0])
    assert not linalg.span_contains([[1, 0]], [0, 1])
    assert linalg.span_contains([], [0, 0])
    assert linalg.kernel([[1, 0], [0, 1]], 2) == []
    assert len(linalg.kernel([[0, 0, 0]], 3)) == 3
    (v,) = linalg.kernel([[1, 1]], 2)
    assert v[0] == -v[1] != 0
    assert linalg.complement([[1, 0]], [[1, 0], [0, 1]]) == [[0, 1]]
    assert linalg.complement([[1, 0], [0, 1]], [[1, 0], [0, 1]]) == []
    assert linalg.complement([], [[1, 1]]) == [[1, 1]]
