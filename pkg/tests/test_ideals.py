from fractions import Fraction

import pytest

from grsuper import builtin, builtin_names, support
from grsuper.algebra import GradedSubspace, GradedSuperalgebra
from grsuper.connections import connection_classes, support_graph
from grsuper.groups import GroupSpec
from grsuper.ideals import (
    GR_SIMPLE_FLAGS,
    Verdict,
    center,
    class_ideal,
    closure_with_trace,
    hypothesis_report,
    ideal_closure,
    is_gr_simple,
    is_graded_ideal,
)

import oracles

Z = GroupSpec(1)


def span(alg, *names):
    return GradedSubspace.from_vectors(alg, [alg.unit(alg.index(n)) for n in names])


def names_in(alg, s):
    return sorted(alg.basis[i].name for i in range(alg.dim) if s.contains(alg.unit(i), alg))


def test_class_ideal_of_sl2():
    ex1 = builtin("EX1")
    (c,) = connection_classes(support_graph(ex1))
    I = class_ideal(ex1, c)
    assert names_in(ex1, I.one_part) == ["h"]
    assert names_in(ex1, I.outer_part) == ["e", "f"]
    assert I.total.dim == 3


def test_class_ideal_of_first_summand():
    ex3 = builtin("EX3")
    c = connection_classes(support_graph(ex3))[0]
    assert names_in(ex3, class_ideal(ex3, c).total) == ["e1", "f1", "h1"]


def test_class_ideal_with_vanishing_opposite_brackets():
    alg = GradedSuperalgebra(Z, [("x", [1], 0), ("y", [-1], 0)])
    (c,) = connection_classes(support_graph(alg))
    I = class_ideal(alg, c)
    assert I.one_part.dim == 0 and I.total.dim == 2


def test_class_from_other_algebra_rejected():
    c = connection_classes(support_graph(builtin("EX3")))[0]
    with pytest.raises(ValueError):
        class_ideal(builtin("EX1"), c)


def test_is_graded_ideal_examples():
    ex1 = builtin("EX1")
    assert is_graded_ideal(ex1, GradedSubspace.whole(ex1))
    assert is_graded_ideal(ex1, GradedSubspace.zero(ex1))
    chk = is_graded_ideal(ex1, span(ex1, "e"))
    assert not chk.ok
    assert chk.witness["element"] == "e" and chk.witness["partner"] == "f"
    assert chk.witness["bracket"] == "h"


def test_closures():
    ex1 = builtin("EX1")
    assert ideal_closure(ex1, span(ex1, "e")).dim == 3
    assert ideal_closure(ex1, GradedSubspace.zero(ex1)).dim == 0
    ex5 = builtin("EX5")
    z = ideal_closure(ex5, span(ex5, "z"))
    assert names_in(ex5, z) == ["z"]
    _, trace = closure_with_trace(ex1, span(ex1, "e"), "e")
    assert trace.round_dims[0] == 1 and trace.final_dim == 3 and trace.rounds >= 1


def test_centers():
    assert center(builtin("EX1")).dim == 0
    ex5 = builtin("EX5")
    assert names_in(ex5, center(ex5)) == ["z"]
    line = GradedSuperalgebra(Z, [("a", [0], 0)])
    assert center(line).dim == 1


@pytest.mark.parametrize("name", builtin_names())
def test_center_matches_oracle(name):
    alg = builtin(name)
    assert center(alg).dim == oracles.center_dim(alg)


@pytest.mark.parametrize("name", builtin_names())
def test_class_ideals_are_graded_ideals_and_commute(name):
    alg = builtin(name)
    sg = support_graph(alg)
    ideals = [class_ideal(alg, c) for c in connection_classes(sg)]
    for I in ideals:
        assert is_graded_ideal(alg, I.total)
        assert oracles.closure_dim(alg, I.total.vectors()) == I.dim
    for a in range(len(ideals)):
        for b in range(a + 1, len(ideals)):
            for u in ideals[a].total.vectors():
                for v in ideals[b].total.vectors():
                    assert not any(alg.bracket(u, v))


def test_hypothesis_reports():
    rep = hypothesis_report(builtin("EX2"))
    assert rep.holds()
    rep5 = hypothesis_report(builtin("EX5"))
    assert not rep5.center_zero and rep5.witnesses["center_zero"] == ["z"]
    assert not rep5.identity_generated
    long = GradedSuperalgebra(Z, [("x", [1], 0), ("x'", [1], 0), ("y", [-1], 0)])
    rl = hypothesis_report(long)
    assert not rl.maximal_length
    assert rl.witnesses["maximal_length"] == ["degree [1] parity 0 has dimension 2"]


def test_multiplicativity_read_literally():
    # g = 1 and g^2 = 2 both in the support, but [L_1^0, L_1^0] vanishes
    # for any one-dimensional even component
    rep = hypothesis_report(builtin("SMALL4-1"))
    assert not rep.sigma_multiplicative
    # sl2 + sl2 on Z with degrees +-1 and +-2: 1 + 1 = 2 in the support
    # but the two copies commute
    alg = GradedSuperalgebra(
        Z, [("e", [1], 0), ("h", [0], 0), ("f", [-1], 0), ("E", [2], 0), ("H", [0], 0), ("F", [-2], 0)],
        {(0, 1): {0: -2}, (0, 2): {1: 1}, (1, 2): {2: -2},
         (3, 4): {3: -2}, (3, 5): {4: 1}, (4, 5): {5: -2}})
    assert not hypothesis_report(alg).sigma_multiplicative


@pytest.mark.parametrize("name,dim", [("EX1", 3), ("EX2", 5), ("EX6", 8), ("EX7", 3)])
def test_gr_simple_examples(name, dim):
    alg = builtin(name)
    r = is_gr_simple(alg)
    assert r.verdict is Verdict.SIMPLE and alg.dim == dim
    assert all(t.final_dim == dim for t in r.traces)


def test_sl2_sum_not_gr_simple():
    ex3 = builtin("EX3")
    r = is_gr_simple(ex3)
    assert r.verdict is Verdict.NOT_SIMPLE
    assert names_in(ex3, r.ideal) == ["e1", "f1", "h1"]
    assert is_graded_ideal(ex3, r.ideal)


def test_inapplicable_and_abelian():
    r = is_gr_simple(builtin("EX5"))
    assert r.verdict is Verdict.INAPPLICABLE and "center_zero" in r.reason
    empty = GradedSuperalgebra(Z, [])
    assert is_gr_simple(empty).verdict is Verdict.NOT_SIMPLE


@pytest.mark.parametrize("name", builtin_names())
def test_gr_simple_matches_brute_force(name):
    alg = builtin(name)
    r = is_gr_simple(alg)
    if r.verdict is Verdict.INAPPLICABLE:
        assert hypothesis_report(alg).failed(GR_SIMPLE_FLAGS)
        return
    assert (r.verdict is Verdict.SIMPLE) == oracles.brute_gr_simple(alg)


@pytest.mark.parametrize("name", ["EX1", "EX2", "EX3", "EX6", "EX2+EX1", "SMALL4-2"])
def test_component_dimensions_when_connected(name):
    # maximal length + multiplicative + one class: all L_g share a dimension in {1, 2}
    alg = builtin(name)
    rep = hypothesis_report(alg)
    sg = support_graph(alg)
    assert rep.maximal_length and rep.sigma_multiplicative
    for c in connection_classes(sg):
        dims = {len(alg.degree_indices(g)) for g in c.members}
        assert len(dims) == 1 and dims <= {1, 2}
