"""Structure decompositions of graded Lie superalgebras.

Every function here re-checks what the theory promises and raises
:class:`VerificationFailure` if a promised property does not hold, so a
returned result is always backed by exact computation.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .algebra import GradedSubspace, GradedSuperalgebra, support
from .connections import connection_classes, support_graph
from .errors import (
    DirectSumFailure,
    HypothesesNotMet,
    NonSymmetricSupport,
    StructureError,
    VerificationFailure,
)
from .ideals import (
    ClassIdeal,
    GrSimplicity,
    HypothesisReport,
    Verdict,
    class_ideal,
    hypothesis_report,
    is_gr_simple,
    is_graded_ideal,
    opposite_brackets,
)

__all__ = [
    "Teo2Decomposition",
    "Kind",
    "ComponentVerdict",
    "StructureReport",
    "SmallShape",
    "teo2_decompose",
    "co1_direct_sum",
    "restrict",
    "restrict_with_embedding",
    "split_component",
    "split_along",
    "split_invariants",
    "small_shape",
    "match_small_case",
    "classify_small",
    "teo4_pipeline",
]


def _vanishing_brackets(alg, a: GradedSubspace, b: GradedSubspace):
    """First pair ``(u, v)`` with ``[u, v] != 0``, or None."""
    for u in a.vectors():
        for v in b.vectors():
            if any(alg.bracket(u, v)):
                return u, v
    return None


@dataclass
class Teo2Decomposition:
    """``L = U + sum of class ideals`` with ``U`` complementing the span of
    opposite-degree brackets inside ``L_1``."""

    u_complement: GradedSubspace
    bracket_span: GradedSubspace
    ideals: list[ClassIdeal]


def _require_symmetric(alg):
    sup = support(alg)
    if not sup.symmetric:
        raise NonSymmetricSupport("the G-support is not symmetric")
    return sup


def teo2_decompose(alg: GradedSuperalgebra) -> Teo2Decomposition:
    alg.require_valid()
    sup = _require_symmetric(alg)
    grp = alg.group
    l1 = [alg.unit(i) for i in alg.degree_indices(grp.identity)]
    spanned = linalg.echelon_basis(opposite_brackets(alg, sup.sigma), alg.dim)
    u = linalg.complement(spanned, l1) if l1 else []
    u_space = GradedSubspace.from_vectors(alg, u)
    span_space = GradedSubspace.from_vectors(alg, spanned, split=True)

    ideals = [class_ideal(alg, c) for c in connection_classes(support_graph(alg))]
    for a in range(len(ideals)):
        for b in range(a + 1, len(ideals)):
            hit = _vanishing_brackets(alg, ideals[a].total, ideals[b].total)
            if hit is not None:
                raise VerificationFailure(
                    f"ideals of distinct classes do not commute: "
                    f"[{alg.describe(hit[0])}, {alg.describe(hit[1])}] != 0")
    total = u_space
    for I in ideals:
        total = total + I.total
    if total.dim != alg.dim:
        raise VerificationFailure(f"U + class ideals span dimension {total.dim}, not {alg.dim}")
    return Teo2Decomposition(u_space, span_space, ideals)


def _require(report: HypothesisReport, flags, what: str):
    failed = report.failed(flags)
    if failed:
        raise HypothesesNotMet(
            failed, {f: report.witnesses.get(f, []) for f in failed},
            f"{what}: hypotheses not met: {', '.join(failed)}")


def co1_direct_sum(alg: GradedSuperalgebra, report: HypothesisReport | None = None) -> list[ClassIdeal]:
    """Direct sum of class ideals, valid when the center vanishes and
    ``L_1`` is spanned by opposite-degree brackets."""
    alg.require_valid()
    if report is None:
        report = hypothesis_report(alg)
    _require(report, ("symmetric_support", "center_zero", "identity_generated"), "direct sum")
    dec = teo2_decompose(alg)
    if dec.u_complement.dim:
        raise DirectSumFailure("complement U is nonzero although L_1 is generated")
    dims = sum(I.dim for I in dec.ideals)
    span = GradedSubspace(alg.dim)
    for I in dec.ideals:
        span = span + I.total
    if dims != alg.dim or span.dim != alg.dim:
        raise DirectSumFailure(
            f"class ideals have dimensions summing to {dims} and span {span.dim}; expected {alg.dim}")
    return dec.ideals


def restrict_with_embedding(alg: GradedSuperalgebra, s: GradedSubspace, name: str | None = None):
    """Algebra structure on a bracket-closed graded subspace.

    Returns ``(sub, vectors)`` where ``vectors[a]`` is the ambient
    coordinate vector of ``sub``'s ``a``-th basis element.
    """
    alg.require_valid()
    basis, vectors, pivots = [], [], []
    used = set()
    for (g, p), vecs in s.items():
        _, piv, _ = linalg.rref(vecs, alg.dim)
        comp_start = len(vectors)
        for v in vecs:
            nz = [i for i, c in enumerate(v) if c != 0]
            if len(nz) == 1 and v[nz[0]] == 1:
                nm = alg.basis[nz[0]].name
            else:
                nm = "(" + alg.describe(v) + ")"
            while nm in used:
                nm += "'"
            used.add(nm)
            basis.append((nm, g, p))
            vectors.append(v)
        pivots.append(((g, p), comp_start, vecs, piv))

    index_of = {key: (start, vecs, piv) for key, start, vecs, piv in pivots}
    table = {}
    for a in range(len(vectors)):
        for b in range(a, len(vectors)):
            w = alg.bracket(vectors[a], vectors[b])
            if not any(w):
                continue
            key = alg.key_of(w)
            if key not in index_of:
                raise StructureError(
                    f"subspace is not closed: [{basis[a][0]}, {basis[b][0]}] = {alg.describe(w)}")
            start, vecs, piv = index_of[key]
            coords = linalg.coordinates(vecs, piv, w)
            if coords is None:
                raise StructureError(
                    f"subspace is not closed: [{basis[a][0]}, {basis[b][0]}] = {alg.describe(w)}")
            table[(a, b)] = {start + c: x for c, x in enumerate(coords) if x != 0}
    sub = GradedSuperalgebra(alg.group, basis, table, name=name)
    if not sub.is_valid:
        raise VerificationFailure("restricted structure constants fail validation")
    return sub, vectors


def restrict(alg: GradedSuperalgebra, s: GradedSubspace, name: str | None = None) -> GradedSuperalgebra:
    return restrict_with_embedding(alg, s, name)[0]


class Kind(enum.Enum):
    GR_SIMPLE = "GrSimple"
    SPLIT = "Split"
    SMALL_CASE2 = "SmallCase2"
    SMALL_CASE3 = "SmallCase3"
    SMALL_CASE4 = "SmallCase4"


@dataclass
class ComponentVerdict:
    """Outcome of analysing one connected component.

    ``pieces`` holds the two gr-simple halves of a split as graded subspaces
    of ``algebra``. ``n`` is the bracket dimension of a small case.
    """

    kind: Kind
    algebra: GradedSuperalgebra
    pieces: tuple[GradedSubspace, ...] = ()
    n: int | None = None
    evidence: dict = field(default_factory=dict)


def _simplicity_evidence(r: GrSimplicity) -> dict:
    return {
        "verdict": r.verdict.value,
        "reason": r.reason,
        "closures": [t.to_dict() for t in r.traces],
    }


def split_invariants(alg: GradedSuperalgebra, sigma_i) -> list[str]:
    """Properties every split ``L = I + J`` along ``Sigma_I`` must have.

    * no ``g`` with both ``g`` and ``g^-1`` in ``Sigma_I``;
    * ``[L_1, L_g] = 0`` for ``g`` outside ``Sigma_I``;
    * ``[L_g, L_g^-1] = 0`` when ``g`` is in ``Sigma_I`` and ``g^-1`` is not.
    """
    grp = alg.group
    sigma = support(alg).sigma
    sigma_i = set(sigma_i)
    out = []
    for g in sorted(sigma_i):
        if grp.inverse(g) in sigma_i:
            out.append(f"both {list(g.coords)} and its inverse lie in Sigma_I")
    ident = alg.degree_indices(grp.identity)
    for g in sigma:
        if g in sigma_i:
            continue
        if any(alg.basis_bracket(i, j) for i in ident for j in alg.degree_indices(g)):
            out.append(f"[L_1, L_{list(g.coords)}] != 0 outside Sigma_I")
    for g in sorted(sigma_i):
        h = grp.inverse(g)
        if h in sigma_i or h not in set(sigma):
            continue
        if any(alg.basis_bracket(i, j) for i in alg.degree_indices(g) for j in alg.degree_indices(h)):
            out.append(f"[L_{list(g.coords)}, L_{list(h.coords)}] != 0 with only the first in Sigma_I")
    return out


def split_along(alg: GradedSuperalgebra, ideal: GradedSubspace) -> ComponentVerdict:
    """Split ``L = I + J`` where ``J`` sums the support components outside ``I``.

    Every property the splitting must have is checked; any failure raises
    :class:`VerificationFailure` carrying the list of failures.
    """
    grp = alg.group
    sigma = support(alg).sigma
    sigma_i = [g for g in sigma if all(ideal.contains(alg.unit(i), alg) for i in alg.degree_indices(g))]
    problems = []
    for g in sigma:
        if g not in sigma_i and grp.inverse(g) not in sigma_i:
            problems.append(f"neither L_{list(g.coords)} nor its opposite lies in I")
    J = GradedSubspace.from_vectors(
        alg, [alg.unit(i) for g in sigma if g not in sigma_i for i in alg.degree_indices(g)])
    for i in alg.degree_indices(grp.identity):
        if not ideal.contains(alg.unit(i), alg):
            problems.append(f"{alg.basis[i].name} in L_1 is not in I")
    if ideal.dim + J.dim != alg.dim or (ideal + J).dim != alg.dim:
        problems.append(f"I + J is not direct onto L (dims {ideal.dim} + {J.dim} vs {alg.dim})")
    hit = _vanishing_brackets(alg, ideal, J)
    if hit is not None:
        problems.append(f"[I, J] != 0: [{alg.describe(hit[0])}, {alg.describe(hit[1])}]")
    for label, piece in (("I", ideal), ("J", J)):
        chk = is_graded_ideal(alg, piece)
        if not chk.ok:
            problems.append(f"{label} is not a graded ideal: {chk.witness}")
    problems += split_invariants(alg, sigma_i)

    evidence = {"sigma_I": [list(g.coords) for g in sigma_i], "pieces": []}
    if not problems:
        for label, piece in (("I", ideal), ("J", J)):
            sub = restrict(alg, piece, name=label)
            r = is_gr_simple(sub)
            evidence["pieces"].append({"piece": label, "dim": piece.dim, **_simplicity_evidence(r)})
            if r.verdict is not Verdict.SIMPLE:
                problems.append(f"piece {label} is not gr-simple ({r.reason})")
    if problems:
        raise VerificationFailure("split failed: " + "; ".join(problems))
    return ComponentVerdict(Kind.SPLIT, alg, (ideal, J), evidence=evidence)


BUNDLE = ("symmetric_support", "center_zero", "identity_generated", "maximal_length", "sigma_multiplicative")


def split_component(component: GradedSuperalgebra) -> ComponentVerdict:
    """Gr-simple, or a sum of two gr-simple ideals, for a connected
    component whose support has more than two elements."""
    component.require_valid()
    report = hypothesis_report(component)
    _require(report, BUNDLE, "split_component")
    sup = support(component)
    if len(sup.sigma) <= 2:
        raise HypothesesNotMet(["support_size"], {"support_size": [f"|Sigma| = {len(sup.sigma)}"]})
    if len(connection_classes(support_graph(component))) != 1:
        raise HypothesesNotMet(["connected"], {"connected": ["support has several connection classes"]})

    r = is_gr_simple(component, report)
    if r.verdict is Verdict.SIMPLE:
        return ComponentVerdict(Kind.GR_SIMPLE, component, evidence=_simplicity_evidence(r))
    if r.verdict is Verdict.INAPPLICABLE or r.ideal is None:
        raise VerificationFailure(f"gr-simplicity undecided under full hypotheses: {r.reason}")
    verdict = split_along(component, r.ideal)
    verdict.evidence["simplicity"] = _simplicity_evidence(r)
    return verdict


@dataclass(frozen=True)
class SmallShape:
    """Dimension data of a component with at most two support degrees.

    ``gg_zero`` / ``triple_zero`` record, for the chosen orientation ``g``,
    whether ``[L_g, L_g] = 0`` and ``[[L_g, L_g^-1], L_g^-1] = 0``.
    """

    support_size: int
    self_inverse: bool
    dim_g: int
    dim_ginv: int
    total_dim: int
    bracket_dim: int
    bracket_fills_identity: bool
    gg_zero: bool = False
    triple_zero: bool = False


def match_small_case(shape: SmallShape) -> tuple[Kind, int | None] | None:
    """Pattern-match a non gr-simple small component to cases 2-4."""
    n = shape.bracket_dim
    if (shape.support_size == 1 and shape.self_inverse and shape.dim_g == 2
            and shape.bracket_fills_identity and n in (1, 2, 3) and shape.total_dim == 2 + n):
        return Kind.SMALL_CASE2, n
    if shape.support_size == 2 and not shape.self_inverse:
        if (shape.dim_g == shape.dim_ginv == 1 and shape.total_dim == 3
                and shape.gg_zero and shape.triple_zero):
            return Kind.SMALL_CASE3, None
        if (shape.dim_g == shape.dim_ginv == 2 and shape.bracket_fills_identity
                and n in range(5) and shape.total_dim == 4 + n):
            return Kind.SMALL_CASE4, n
    return None


def small_shapes(alg: GradedSuperalgebra) -> list[SmallShape]:
    """One shape per orientation ``g`` of the support (one or two)."""
    grp = alg.group
    sigma = support(alg).sigma
    ident = alg.degree_indices(grp.identity)
    l1 = [alg.unit(i) for i in ident]
    shapes = []
    for g in sigma:
        h = grp.inverse(g)
        gi, hi = alg.degree_indices(g), alg.degree_indices(h)
        br = linalg.echelon_basis(opposite_brackets(alg, [g]), alg.dim)
        fills = len(br) == len(l1)
        gg_zero = not any(alg.basis_bracket(i, j) for i in gi for j in gi)
        triple = True
        for i in gi:
            for j in hi:
                w = alg.basis_bracket(i, j)
                if any(alg.sparse_bracket(w, {k: Fraction(1)}) for k in hi):
                    triple = False
        shapes.append(SmallShape(
            support_size=len(sigma), self_inverse=(g == h), dim_g=len(gi), dim_ginv=len(hi),
            total_dim=alg.dim, bracket_dim=len(br), bracket_fills_identity=fills,
            gg_zero=gg_zero, triple_zero=triple))
    return shapes


def small_shape(alg: GradedSuperalgebra) -> SmallShape:
    return small_shapes(alg)[0]


SMALL_FLAGS = ("maximal_length", "center_zero", "identity_generated")


def classify_small(component: GradedSuperalgebra) -> ComponentVerdict:
    """Gr-simple, or one of the three small non gr-simple patterns."""
    component.require_valid()
    report = hypothesis_report(component)
    _require(report, SMALL_FLAGS, "classify_small")
    sigma = support(component).sigma
    if len(sigma) > 2:
        raise HypothesesNotMet(["support_size"], {"support_size": [f"|Sigma| = {len(sigma)}"]})
    r = is_gr_simple(component, report)
    evidence = _simplicity_evidence(r)
    if r.verdict is Verdict.SIMPLE:
        evidence["case"] = 1
        return ComponentVerdict(Kind.GR_SIMPLE, component, evidence=evidence)
    for shape in small_shapes(component):
        m = match_small_case(shape)
        if m is not None:
            kind, n = m
            evidence["shape"] = shape.__dict__.copy()
            evidence["case"] = {Kind.SMALL_CASE2: 2, Kind.SMALL_CASE3: 3, Kind.SMALL_CASE4: 4}[kind]
            return ComponentVerdict(kind, component, n=n, evidence=evidence)
    raise VerificationFailure(
        f"non gr-simple small component matches no known case: {small_shapes(component)}")


# -- full pipeline -------------------------------------------------------


@dataclass
class Component:
    """One summand of the final decomposition, as a subspace of the input."""

    subspace: GradedSubspace
    algebra: GradedSuperalgebra
    kind: Kind
    n: int | None
    class_members: tuple
    evidence: dict

    @property
    def dim(self) -> int:
        return self.subspace.dim


@dataclass
class StructureReport:
    """Gr-simple components (K), small components (Q) and checks."""

    algebra: GradedSuperalgebra
    simple_components: list[Component]
    small_components: list[Component]
    hypothesis: HypothesisReport
    direct_sum_checked: bool

    def to_dict(self) -> dict:
        alg = self.algebra

        def comp(c: Component):
            return {
                "kind": c.kind.value,
                "dim": c.dim,
                "n": c.n,
                "class": [list(g.coords) for g in c.class_members],
                "basis": [b.name for b in c.algebra.basis],
                "degrees": sorted({tuple(b.degree.coords) for b in c.algebra.basis}),
                "subspace": c.subspace.to_dict(alg),
                "evidence": c.evidence,
            }

        return {
            "algebra": alg.name,
            "dim": alg.dim,
            "hypothesis": self.hypothesis.to_dict(),
            "simple_components": [comp(c) for c in self.simple_components],
            "small_components": [comp(c) for c in self.small_components],
            "direct_sum_checked": self.direct_sum_checked,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, default=list)

    def to_text(self) -> str:
        alg = self.algebra
        lines = [f"structure of {alg.name or 'algebra'} (dim {alg.dim})"]
        lines.append(f"gr-simple components K: {len(self.simple_components)}")
        for c in self.simple_components:
            lines.append(f"  [{c.kind.value}] dim {c.dim}: {', '.join(b.name for b in c.algebra.basis)}")
        lines.append(f"small components Q: {len(self.small_components)}")
        for c in self.small_components:
            lines.append(f"  [{c.kind.value} n={c.n}] dim {c.dim}: {', '.join(b.name for b in c.algebra.basis)}")
        lines.append(f"direct sum checked: {self.direct_sum_checked}")
        return "\n".join(lines)


def _lift(vectors, sub_space: GradedSubspace, alg: GradedSuperalgebra, sub: GradedSuperalgebra):
    """Image of a subspace of ``sub`` inside ``alg`` via the embedding."""
    out = []
    for v in sub_space.vectors():
        w = alg.zero()
        for a, c in enumerate(v):
            if c:
                w = [x + c * y for x, y in zip(w, vectors[a])]
        out.append(w)
    return GradedSubspace.from_vectors(alg, out)


def teo4_pipeline(alg: GradedSuperalgebra) -> StructureReport:
    """Decompose into gr-simple ideals plus small non gr-simple ones.

    Needs the full hypothesis bundle; otherwise raises HypothesesNotMet.
    """
    alg.require_valid()
    report = hypothesis_report(alg)
    _require(report, BUNDLE, "structure pipeline")
    ideals = co1_direct_sum(alg, report)

    simple, small = [], []
    for k, I in enumerate(ideals):
        label = f"I{k + 1}"
        sub, vectors = restrict_with_embedding(alg, I.total, name=label)
        if len(I.cls) > 2:
            verdict = split_component(sub)
        else:
            verdict = classify_small(sub)
        members = I.cls.members
        if verdict.kind is Kind.GR_SIMPLE:
            simple.append(Component(I.total, sub, verdict.kind, None, members, verdict.evidence))
        elif verdict.kind is Kind.SPLIT:
            for tag, piece in zip("IJ", verdict.pieces):
                lifted = _lift(vectors, piece, alg, sub)
                piece_alg = restrict(alg, lifted, name=f"{label}{tag}")
                simple.append(Component(lifted, piece_alg, Kind.GR_SIMPLE, None, members,
                                        {"split_of": label, **verdict.evidence}))
        else:
            small.append(Component(I.total, sub, verdict.kind, verdict.n, members, verdict.evidence))

    comps = simple + small
    if sum(c.dim for c in comps) != alg.dim:
        raise VerificationFailure("component dimensions do not add up to dim L")
    span = GradedSubspace(alg.dim)
    for c in comps:
        span = span + c.subspace
        chk = is_graded_ideal(alg, c.subspace)
        if not chk.ok:
            raise VerificationFailure(f"component {c.algebra.name} is not a graded ideal: {chk.witness}")
    if span.dim != alg.dim:
        raise VerificationFailure("components do not span L")
    for c in simple:
        if is_gr_simple(c.algebra).verdict is not Verdict.SIMPLE:
            raise VerificationFailure(f"component {c.algebra.name} is not gr-simple on re-check")
    for a in range(len(small)):
        for b in range(a + 1, len(small)):
            if _vanishing_brackets(alg, small[a].subspace, small[b].subspace) is not None:
                raise VerificationFailure("small components do not commute")
    return StructureReport(alg, simple, small, report, True)
