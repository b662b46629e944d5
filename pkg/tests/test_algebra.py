from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from grsuper import builtin, builtin_names, direct_sum, homogeneous_component, regrade, support, validate
from grsuper.algebra import GradedSubspace, GradedSuperalgebra
from grsuper.errors import StructureError, ValidationError
from grsuper.groups import GroupSpec

import oracles

Z = GroupSpec(1)


def with_entries(alg, entries):
    table = {k: dict(v) for k, v in alg.table.items()}
    table.update(entries)
    return GradedSuperalgebra(alg.group, [(b.name, b.degree, b.parity) for b in alg.basis], table)


def vec(alg, **coeffs):
    v = alg.zero()
    for name, c in coeffs.items():
        v[alg.index(name)] = Fraction(c)
    return v


def test_sl2_brackets():
    ex1 = builtin("EX1")
    e, h, f = (ex1.unit(ex1.index(x)) for x in "ehf")
    assert ex1.bracket(e, f) == h
    assert ex1.bracket(h, e) == vec(ex1, e=2)
    assert ex1.bracket(e, h) == vec(ex1, e=-2)
    assert ex1.bracket(e, ex1.zero()) == ex1.zero()


def test_odd_brackets_are_symmetric():
    ex2 = builtin("EX2")
    x, y = ex2.unit(ex2.index("x")), ex2.unit(ex2.index("y"))
    assert ex2.bracket(x, y) == ex2.bracket(y, x) == vec(ex2, H=-1)
    assert ex2.bracket(x, x) == vec(ex2, E=2)


@pytest.mark.parametrize("name", builtin_names())
def test_builtins_valid_and_agree_with_oracle(name):
    alg = builtin(name)
    assert validate(alg).ok
    assert oracles.axiom_failures(alg) == []


def test_rescaling_ef_is_still_valid():
    # [e, f] = 2h is sl2 again with f replaced by 2f
    alg = with_entries(builtin("EX1"), {(0, 2): {1: 2}})
    assert validate(alg).ok
    assert oracles.jacobi_failures(alg) == []


def test_perturbed_weight_breaks_jacobi_on_h_e_f():
    alg = with_entries(builtin("EX1"), {(0, 1): {0: -3}})
    rep = validate(alg)
    assert not rep.ok
    assert ("jacobi", ("h", "e", "f")) in rep.witnesses(alg)


def test_even_diagonal_entry_is_a_skew_violation():
    alg = with_entries(builtin("EX1"), {(1, 1): {1: 1}})
    rep = validate(alg)
    assert ("skew", ("h", "h")) in rep.witnesses(alg)
    with pytest.raises(ValidationError):
        alg.require_valid()


def test_grading_and_parity_violations():
    ex1 = builtin("EX1")
    rep = validate(with_entries(ex1, {(0, 2): {0: 1}}))
    assert rep.of_kind("grading")
    alg = GradedSuperalgebra(Z, [("a", [0], 0), ("x", [0], 1)], {(0, 0): {}, (1, 1): {1: 1}})
    assert validate(alg).of_kind("parity")


def test_inconsistent_mirror_entry_is_caught():
    ex1 = builtin("EX1")
    # [f, e] must be -h; storing -2h disagrees with [e, f] = h
    table = {k: dict(v) for k, v in ex1.table.items()}
    table[(2, 0)] = {1: -2}
    alg = GradedSuperalgebra(Z, [(b.name, b.degree, b.parity) for b in ex1.basis], table)
    assert validate(alg).of_kind("skew")
    table[(2, 0)] = {1: -1}
    ok = GradedSuperalgebra(Z, [(b.name, b.degree, b.parity) for b in ex1.basis], table)
    assert validate(ok).ok


def test_structural_errors():
    with pytest.raises(StructureError):
        GradedSuperalgebra(Z, [("a", [0], 0), ("a", [1], 0)])
    with pytest.raises(StructureError):
        GradedSuperalgebra(Z, [("a", [0], 0)], {(0, 1): {0: 1}})
    with pytest.raises(StructureError):
        GradedSuperalgebra(Z, [("a", [0], 0)], {(0, 0): {3: 1}})


def test_supports():
    s1 = support(builtin("EX1"))
    assert [g.coords for g in s1.sigma] == [(-1,), (1,)]
    assert s1.sigma0 == s1.sigma and not s1.sigma1 and s1.symmetric
    s2 = support(builtin("EX2"))
    assert [g.coords for g in s2.sigma] == [(-2,), (-1,), (1,), (2,)]
    assert [g.coords for g in s2.sigma0] == [(-2,), (2,)]
    assert [g.coords for g in s2.sigma1] == [(-1,), (1,)]
    flat = GradedSuperalgebra(Z, [("a", [0], 0), ("b", [0], 0)])
    s0 = support(flat)
    assert s0.sigma == () or list(s0.sigma) == []
    assert s0.symmetric


def test_non_symmetric_support_detected():
    alg = GradedSuperalgebra(Z, [("a", [0], 0), ("x", [1], 1)])
    assert not support(alg).symmetric


def test_homogeneous_component():
    ex1 = builtin("EX1")
    one = Z.element([1])
    c = homogeneous_component(ex1, one, 0)
    assert c.dim == 1 and c.contains(ex1.unit(ex1.index("e")))
    assert homogeneous_component(ex1, one, 1).dim == 0
    assert homogeneous_component(ex1, Z.element([7]), 0).dim == 0


@pytest.mark.parametrize("name", builtin_names())
def test_brackets_land_in_the_right_component(name):
    alg = builtin(name)
    grp = alg.group
    for i in range(alg.dim):
        for j in range(alg.dim):
            w = alg.basis_bracket(i, j)
            bi, bj = alg.basis[i], alg.basis[j]
            for k in w:
                assert alg.basis[k].degree == grp.multiply(bi.degree, bj.degree)
                assert alg.basis[k].parity == (bi.parity + bj.parity) % 2


def test_graded_subspace_operations():
    ex1 = builtin("EX1")
    e, h = ex1.unit(0), ex1.unit(1)
    a = GradedSubspace.from_vectors(ex1, [e])
    b = GradedSubspace.from_vectors(ex1, [h, e])
    assert a.is_subspace_of(b) and not b.is_subspace_of(a)
    assert (a + b) == b and (a + b).dim == 2
    assert GradedSubspace.whole(ex1).dim == 3 and GradedSubspace.zero(ex1).dim == 0
    # mixed-degree vector split into components on request
    mixed = GradedSubspace.from_vectors(ex1, [[1, 1, 0]], split=True)
    assert mixed.dim == 2


def test_regrade_and_direct_sum_stay_valid():
    ex2 = builtin("EX2")
    z3 = GroupSpec(0, (3,))
    r = regrade(ex2, z3, lambda g: (g.coords[0],))
    assert validate(r).ok
    assert len(support(r).sigma) == 2
    s = direct_sum([builtin("EX1"), ex2], GroupSpec(2),
                   homs=[lambda g: (g.coords[0], 0), lambda g: (0, g.coords[0])])
    assert s.dim == 8 and validate(s).ok and oracles.axiom_failures(s) == []


PERTURB_TARGETS = ["EX1", "EX2", "EX7"]


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(PERTURB_TARGETS), st.data())
def test_validator_agrees_with_oracle_on_perturbations(name, data):
    alg = builtin(name)
    keys = sorted(alg.table)
    i, j = data.draw(st.sampled_from(keys))
    k = data.draw(st.sampled_from(sorted(alg.table[(i, j)])))
    new = data.draw(st.integers(-4, 4).map(Fraction))
    entry = dict(alg.table[(i, j)])
    entry[k] = new
    pert = with_entries(alg, {(i, j): entry})
    assert validate(pert).ok == (oracles.axiom_failures(pert) == [])
