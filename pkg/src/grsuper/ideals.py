"""Graded ideals: class ideals, ideal closure, center and the hypothesis
predicates under which gr-simplicity can be decided.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from . import linalg
from .algebra import GradedSubspace, GradedSuperalgebra, support
from .connections import ConnectionClass, connection_class, support_graph
from .errors import VerificationFailure
from .groups import GroupElement

__all__ = [
    "ClassIdeal",
    "IdealCheck",
    "ClosureTrace",
    "HypothesisReport",
    "GrSimplicity",
    "Verdict",
    "class_ideal",
    "opposite_brackets",
    "is_graded_ideal",
    "ideal_closure",
    "closure_with_trace",
    "center",
    "hypothesis_report",
    "is_gr_simple",
]


@dataclass(frozen=True)
class ClassIdeal:
    cls: ConnectionClass
    one_part: GradedSubspace
    outer_part: GradedSubspace
    total: GradedSubspace

    @property
    def dim(self) -> int:
        return self.total.dim


def opposite_brackets(alg: GradedSuperalgebra, degrees) -> list[list[Fraction]]:
    """All ``[b, b']`` with ``b`` of degree ``g`` and ``b'`` of degree ``g^-1``,
    for ``g`` in ``degrees``."""
    grp = alg.group
    out = []
    for g in degrees:
        for i in alg.degree_indices(g):
            for j in alg.degree_indices(grp.inverse(g)):
                w = alg.bracket(alg.unit(i), alg.unit(j))
                if any(w):
                    out.append(w)
    return out


def class_ideal(alg: GradedSuperalgebra, c: ConnectionClass) -> ClassIdeal:
    """The graded ideal ``L_{C,1} + V_C`` attached to a connection class."""
    alg.require_valid()
    sg = support_graph(alg)
    if not c.members or c.representative not in sg:
        raise ValueError("connection class does not come from this algebra's support")
    if connection_class(sg, c.representative).members != tuple(sorted(c.members)):
        raise ValueError("connection class does not come from this algebra's support")

    one = GradedSubspace.from_vectors(alg, opposite_brackets(alg, c.members))
    outer = GradedSubspace.from_vectors(
        alg, [alg.unit(i) for g in c.members for i in alg.degree_indices(g)])
    return ClassIdeal(c, one, outer, one + outer)


class IdealCheck(NamedTuple):
    ok: bool
    witness: dict | None

    def __bool__(self):
        return self.ok


def is_graded_ideal(alg: GradedSuperalgebra, s: GradedSubspace) -> IdealCheck:
    """Whether ``s`` is closed under bracketing with every basis vector.

    On failure the witness names the first escaping pair: a stored vector of
    ``s`` and a basis vector whose bracket leaves ``s``.
    """
    alg.require_valid()
    for key, vecs in s.items():
        for u in vecs:
            if alg.key_of(u) != key:
                return IdealCheck(False, {
                    "element": alg.describe(u),
                    "reason": "vector is not homogeneous of its component's degree",
                })
            for j in range(alg.dim):
                w = alg.bracket(u, alg.unit(j))
                if not s.contains(w, alg):
                    return IdealCheck(False, {
                        "element": alg.describe(u),
                        "partner": alg.basis[j].name,
                        "bracket": alg.describe(w),
                    })
    return IdealCheck(True, None)


@dataclass(frozen=True)
class ClosureTrace:
    generator: str
    round_dims: tuple[int, ...]
    final_dim: int

    @property
    def rounds(self) -> int:
        return len(self.round_dims) - 1

    def to_dict(self) -> dict:
        return {
            "generator": self.generator,
            "rounds": self.rounds,
            "round_dims": list(self.round_dims),
            "final_dim": self.final_dim,
        }


def closure_with_trace(alg: GradedSuperalgebra, generators: GradedSubspace, label: str | None = None):
    """Graded ideal generated by ``generators``, plus a round-by-round trace.

    Each round brackets the vectors accepted in the previous round with every
    basis vector in order and keeps those that enlarge the span.
    """
    alg.require_valid()
    comps: dict = {k: list(v) for k, v in generators.items()}
    frontier = generators.vectors()
    dims = [generators.dim]
    while frontier:
        new = []
        for u in frontier:
            for j in range(alg.dim):
                w = alg.bracket(u, alg.unit(j))
                if not any(w):
                    continue
                key = alg.key_of(w)
                basis = comps.setdefault(key, [])
                if not linalg.span_contains(basis, w):
                    comps[key] = linalg.echelon_basis(basis + [w], alg.dim)
                    new.append(w)
        frontier = new
        if new:
            dims.append(dims[-1] + len(new))
    result = GradedSubspace(alg.dim, comps)
    if label is None:
        label = "span{" + ", ".join(alg.describe(v) for v in generators.vectors()) + "}"
    return result, ClosureTrace(label, tuple(dims), result.dim)


def ideal_closure(alg: GradedSuperalgebra, generators: GradedSubspace) -> GradedSubspace:
    return closure_with_trace(alg, generators)[0]


def _adjoint_rows(alg: GradedSuperalgebra, cols: Sequence[int]) -> list[list[Fraction]]:
    # row (j, k): coefficient of b_k in [b_i, b_j], one column per i in cols
    n = alg.dim
    rows = []
    for j in range(n):
        block = [[Fraction(0)] * len(cols) for _ in range(n)]
        for c, i in enumerate(cols):
            for k, v in alg.basis_bracket(i, j).items():
                block[k][c] = v
        rows.extend(r for r in block if any(r))
    return rows


def center(alg: GradedSuperalgebra) -> GradedSubspace:
    """``{v : [v, L] = 0}``, computed per homogeneous component.

    The ungraded kernel is computed too, and its dimension must match.
    """
    alg.require_valid()
    comps = {}
    for key, idx in alg.components().items():
        ker = linalg.kernel(_adjoint_rows(alg, idx), len(idx))
        vecs = []
        for k in ker:
            v = alg.zero()
            for c, i in enumerate(idx):
                v[i] = k[c]
            vecs.append(v)
        comps[key] = vecs
    z = GradedSubspace(alg.dim, comps)
    full = linalg.kernel(_adjoint_rows(alg, list(range(alg.dim))), alg.dim)
    if len(full) != z.dim:
        raise VerificationFailure(
            f"center is not graded: kernel dim {len(full)}, graded pieces give {z.dim}")
    return z


FLAGS = ("symmetric_support", "center_zero", "identity_generated", "maximal_length", "sigma_multiplicative")


@dataclass
class HypothesisReport:
    """The five predicates assumed by the structure theorems.

    ``witnesses`` maps each failed flag to a list of human-readable
    descriptions of what went wrong.
    """

    symmetric_support: bool
    center_zero: bool
    identity_generated: bool
    maximal_length: bool
    sigma_multiplicative: bool
    witnesses: dict[str, list[str]] = field(default_factory=dict)

    def failed(self, flags: Sequence[str] = FLAGS) -> list[str]:
        return [f for f in flags if not getattr(self, f)]

    def holds(self, flags: Sequence[str] = FLAGS) -> bool:
        return not self.failed(flags)

    def to_dict(self) -> dict:
        d = {f: getattr(self, f) for f in FLAGS}
        d["witnesses"] = {k: list(v) for k, v in sorted(self.witnesses.items())}
        return d


def _fmt_key(alg, g, p) -> str:
    return f"degree {list(g.coords)} parity {p}"


def hypothesis_report(alg: GradedSuperalgebra) -> HypothesisReport:
    alg.require_valid()
    grp = alg.group
    sup = support(alg)
    sigma = set(sup.sigma)
    comps = alg.components()
    w: dict[str, list[str]] = {}

    if not sup.symmetric:
        w["symmetric_support"] = [
            f"{_fmt_key(alg, g, p)} present but its inverse is not"
            for p, s in ((0, sup.sigma0), (1, sup.sigma1)) for g in s
            if grp.inverse(g) not in s
        ]

    z = center(alg)
    if z.dim:
        w["center_zero"] = [alg.describe(v) for v in z.vectors()]

    ident = grp.identity
    l1 = [alg.unit(i) for i in alg.degree_indices(ident)]
    spanned = opposite_brackets(alg, sup.sigma)
    missing = linalg.complement(linalg.echelon_basis(spanned, alg.dim), l1) if l1 else []
    if missing:
        w["identity_generated"] = [f"{alg.describe(v)} not in span of [L_g, L_g^-1]" for v in missing]

    long = [(g, p, len(idx)) for (g, p), idx in comps.items() if g in sigma and len(idx) > 1]
    if long:
        w["maximal_length"] = [f"{_fmt_key(alg, g, p)} has dimension {d}" for g, p, d in long]

    bad = []
    for (g, p), gi in comps.items():
        if g not in sigma:
            continue
        for (h, q), hi in comps.items():
            if h not in sigma or grp.multiply(g, h) not in sigma:
                continue
            if not any(alg.basis_bracket(i, j) for i in gi for j in hi):
                bad.append(f"[L_{list(g.coords)}^{p}, L_{list(h.coords)}^{q}] = 0 "
                           f"but {list(grp.multiply(g, h).coords)} is in the support")
    if bad:
        w["sigma_multiplicative"] = bad

    return HypothesisReport(
        symmetric_support=sup.symmetric,
        center_zero=z.dim == 0,
        identity_generated=not missing,
        maximal_length=not long,
        sigma_multiplicative=not bad,
        witnesses=w,
    )


class Verdict(enum.Enum):
    SIMPLE = "simple"
    NOT_SIMPLE = "not_simple"
    INAPPLICABLE = "inapplicable"


GR_SIMPLE_FLAGS = ("maximal_length", "center_zero", "identity_generated")


@dataclass
class GrSimplicity:
    verdict: Verdict
    ideal: GradedSubspace | None = None
    reason: str = ""
    traces: list[ClosureTrace] = field(default_factory=list)
    generator: tuple | None = None

    def __bool__(self):
        return self.verdict is Verdict.SIMPLE


def is_gr_simple(alg: GradedSuperalgebra, report: HypothesisReport | None = None) -> GrSimplicity:
    """Decide gr-simplicity under maximal length, trivial center and
    ``L_1 = sum [L_g, L_g^-1]``; otherwise return ``INAPPLICABLE``.

    Under those hypotheses a graded ideal inside ``L_1`` is zero, and any
    other nonzero graded ideal contains some one-dimensional ``L_g^i``. So it
    suffices to close each support component and see whether all of them
    generate ``L``.
    """
    alg.require_valid()
    if report is None:
        report = hypothesis_report(alg)
    failed = report.failed(GR_SIMPLE_FLAGS)
    if failed:
        return GrSimplicity(Verdict.INAPPLICABLE, reason="hypotheses fail: " + ", ".join(failed))
    if not alg.table:
        return GrSimplicity(Verdict.NOT_SIMPLE, reason="[L, L] = 0")

    traces = []
    grp = alg.group
    for (g, p), idx in alg.components().items():
        if grp.is_identity(g):
            continue
        gens = GradedSubspace(alg.dim, {(g, p): [alg.unit(i) for i in idx]})
        label = f"L_{list(g.coords)}^{p}"
        ideal, trace = closure_with_trace(alg, gens, label)
        traces.append(trace)
        if ideal.dim < alg.dim:
            return GrSimplicity(
                Verdict.NOT_SIMPLE, ideal,
                reason=f"{label} generates a proper graded ideal of dimension {ideal.dim}",
                traces=traces, generator=(g, p))
    return GrSimplicity(Verdict.SIMPLE, reason="every support component generates L", traces=traces)
