"""Group-graded Lie superalgebras given by structure constants.

An algebra is a basis ``b_0 .. b_{n-1}``, each basis vector carrying a
degree in an abelian group and a parity in Z/2, together with a table of
brackets ``[b_i, b_j]`` for ``i <= j``. The mirror entries ``i > j`` follow
from skew-supersymmetry ``[x, y] = -(-1)^{|x||y|} [y, x]``.

Vectors are dense lists of Fractions in basis coordinates.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

from . import linalg
from .errors import StructureError, ValidationError
from .groups import GroupElement, GroupSpec

__all__ = [
    "BasisVector",
    "GradedSuperalgebra",
    "GradedSubspace",
    "Violation",
    "ValidationReport",
    "Support",
    "bracket",
    "validate",
    "support",
    "homogeneous_component",
    "direct_sum",
    "regrade",
]

Key = tuple  # (GroupElement degree, parity)


@dataclass(frozen=True)
class BasisVector:
    index: int
    name: str
    degree: GroupElement
    parity: int

    @property
    def key(self) -> Key:
        return (self.degree, self.parity)


def _sign(p: int, q: int) -> int:
    return -1 if (p * q) % 2 else 1


def _clean(d: Mapping[int, Fraction]) -> dict[int, Fraction]:
    return {k: v for k, v in sorted(d.items()) if v != 0}


class GradedSuperalgebra:
    """Structure-constant model of a G-graded Lie superalgebra.

    ``basis`` is a sequence of ``(name, degree, parity)`` triples (or
    :class:`BasisVector`). ``table`` maps index pairs ``(i, j)`` to
    ``{k: coefficient}`` or to a list of ``(k, coefficient)``. Pairs with
    ``i > j`` are kept aside as redundant mirrors and only checked for
    consistency by :func:`validate`.

    Instances are immutable. Call :meth:`require_valid` (or :func:`validate`)
    before any analysis; analysis functions do this themselves.
    """

    def __init__(
        self,
        group: GroupSpec,
        basis: Sequence,
        table: Mapping | None = None,
        *,
        name: str | None = None,
        description: str | None = None,
    ):
        self.group = group
        self.name = name
        self.description = description
        self.basis: tuple[BasisVector, ...] = tuple(self._make_basis(basis))
        n = len(self.basis)

        names = [b.name for b in self.basis]
        dupes = sorted({x for x in names if names.count(x) > 1})
        if dupes:
            raise StructureError(f"duplicate basis names: {dupes}")

        upper: dict[tuple[int, int], dict[int, Fraction]] = {}
        mirror: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), result in (table or {}).items():
            i, j = int(i), int(j)
            if not (0 <= i < n and 0 <= j < n):
                raise StructureError(f"bracket pair ({i}, {j}) out of range for dimension {n}")
            items = result.items() if isinstance(result, Mapping) else result
            coeffs: dict[int, Fraction] = {}
            for k, c in items:
                k = int(k)
                if not 0 <= k < n:
                    raise StructureError(f"result index {k} of [{i}, {j}] out of range")
                coeffs[k] = coeffs.get(k, Fraction(0)) + linalg.as_fraction(c)
            coeffs = _clean(coeffs)
            target = upper if i <= j else mirror
            if (i, j) in target:
                raise StructureError(f"bracket pair ({i}, {j}) given twice")
            if coeffs or target is mirror:
                target[(i, j)] = coeffs
        self.table: dict[tuple[int, int], dict[int, Fraction]] = dict(sorted(upper.items()))
        self.redundant: dict[tuple[int, int], dict[int, Fraction]] = dict(sorted(mirror.items()))

        self._full: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), coeffs in self.table.items():
            self._full[(i, j)] = coeffs
            if i != j:
                s = -_sign(self.basis[i].parity, self.basis[j].parity)
                self._full[(j, i)] = {k: s * c for k, c in coeffs.items()}

        comps: dict[Key, list[int]] = {}
        for b in self.basis:
            comps.setdefault(b.key, []).append(b.index)
        self._components = dict(sorted(comps.items()))
        self._report: ValidationReport | None = None

    def _make_basis(self, basis):
        for idx, b in enumerate(basis):
            if isinstance(b, BasisVector):
                name, degree, parity = b.name, b.degree, b.parity
            else:
                name, degree, parity = b
            if parity not in (0, 1):
                raise StructureError(f"basis vector {name!r} has parity {parity!r}")
            try:
                degree = self.group.element(degree)
            except ValueError as exc:
                raise StructureError(f"basis vector {name!r}: {exc}") from None
            yield BasisVector(idx, str(name), degree, int(parity))

    # -- basic accessors -------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def identity(self) -> GroupElement:
        return self.group.identity

    def index(self, name: str) -> int:
        for b in self.basis:
            if b.name == name:
                return b.index
        raise KeyError(name)

    def components(self) -> dict[Key, list[int]]:
        """Basis indices of every nonzero ``L_g^i``, keyed canonically."""
        return dict(self._components)

    def component_indices(self, degree: GroupElement, parity: int) -> list[int]:
        return list(self._components.get((self.group.element(degree), parity), []))

    def degree_indices(self, degree: GroupElement) -> list[int]:
        degree = self.group.element(degree)
        return [i for (g, _), idx in self._components.items() if g == degree for i in idx]

    def unit(self, i: int) -> list[Fraction]:
        v = [Fraction(0)] * self.dim
        v[i] = Fraction(1)
        return v

    def zero(self) -> list[Fraction]:
        return [Fraction(0)] * self.dim

    def basis_bracket(self, i: int, j: int) -> dict[int, Fraction]:
        """Sparse ``[b_i, b_j]``."""
        return self._full.get((i, j), {})

    def sparse_bracket(self, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for i, a in x.items():
            if not a:
                continue
            for j, b in y.items():
                if not b:
                    continue
                for k, c in self._full.get((i, j), {}).items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: v for k, v in out.items() if v != 0}

    def bracket(self, x: Sequence, y: Sequence) -> list[Fraction]:
        n = self.dim
        if len(x) != n or len(y) != n:
            raise ValueError(f"vectors must have length {n}")
        out = self.sparse_bracket(_sparse(x), _sparse(y))
        return _dense(out, n)

    def key_of(self, v: Sequence) -> Key | None:
        """The ``(degree, parity)`` of a homogeneous nonzero vector, else None."""
        keys = {self.basis[i].key for i, c in enumerate(v) if c != 0}
        return keys.pop() if len(keys) == 1 else None

    def describe(self, v: Sequence) -> str:
        """Human-readable linear combination of basis names."""
        terms = []
        for i, c in enumerate(v):
            if c == 0:
                continue
            name = self.basis[i].name
            if c == 1:
                terms.append(name)
            elif c == -1:
                terms.append("-" + name)
            else:
                terms.append(f"{linalg.format_scalar(c)}*{name}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    # -- validation handle ----------------------------------------------

    def validation_report(self) -> "ValidationReport":
        if self._report is None:
            self._report = _validate(self)
        return self._report

    def require_valid(self) -> "GradedSuperalgebra":
        report = self.validation_report()
        if not report.ok:
            raise ValidationError(report)
        return self

    @property
    def is_valid(self) -> bool:
        return self.validation_report().ok

    def structurally_equal(self, other: "GradedSuperalgebra") -> bool:
        return (
            self.group == other.group
            and self.basis == other.basis
            and self.table == other.table
            and self.redundant == other.redundant
        )

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<GradedSuperalgebra{label} dim={self.dim} over {self.group}>"


def _sparse(v: Sequence) -> dict[int, Fraction]:
    return {i: Fraction(c) for i, c in enumerate(v) if c != 0}


def _dense(d: Mapping[int, Fraction], n: int) -> list[Fraction]:
    v = [Fraction(0)] * n
    for k, c in d.items():
        v[k] = Fraction(c)
    return v


def bracket(alg: GradedSuperalgebra, x: Sequence, y: Sequence) -> list[Fraction]:
    return alg.bracket(x, y)


# -- validation ------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    """One failed axiom, witnessed by basis indices.

    ``kind`` is one of ``"grading"``, ``"parity"``, ``"skew"``, ``"jacobi"``.
    """

    kind: str
    indices: tuple[int, ...]
    detail: str

    def names(self, alg: GradedSuperalgebra) -> tuple[str, ...]:
        return tuple(alg.basis[i].name for i in self.indices)


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        # truthy when something is wrong, mirroring "non-empty report"
        return bool(self.violations)

    def of_kind(self, kind: str) -> list[Violation]:
        return [v for v in self.violations if v.kind == kind]

    def witnesses(self, alg: GradedSuperalgebra) -> list[tuple[str, tuple[str, ...]]]:
        return [(v.kind, v.names(alg)) for v in self.violations]


def validate(alg: GradedSuperalgebra) -> ValidationReport:
    """Check grading, parity, skew-supersymmetry and super Jacobi.

    An empty report means the algebra is valid.
    """
    return alg.validation_report()


def _validate(alg: GradedSuperalgebra) -> ValidationReport:
    report = ValidationReport()
    B = alg.basis
    group = alg.group

    for (i, j), coeffs in itertools.chain(alg.table.items(), alg.redundant.items()):
        want_deg = group.multiply(B[i].degree, B[j].degree)
        want_par = (B[i].parity + B[j].parity) % 2
        for k in coeffs:
            if B[k].degree != want_deg:
                report.violations.append(Violation(
                    "grading", (i, j, k),
                    f"[{B[i].name}, {B[j].name}] has a {B[k].name} term of degree "
                    f"{B[k].degree}, expected {want_deg}"))
            if B[k].parity != want_par:
                report.violations.append(Violation(
                    "parity", (i, j, k),
                    f"[{B[i].name}, {B[j].name}] has a {B[k].name} term of parity "
                    f"{B[k].parity}, expected {want_par}"))

    for (i, j), coeffs in alg.table.items():
        if i == j and B[i].parity == 0:
            report.violations.append(Violation(
                "skew", (i, i),
                f"[{B[i].name}, {B[i].name}] = {alg.describe(_dense(coeffs, alg.dim))} "
                f"but even diagonal brackets must vanish"))
    for (i, j), coeffs in alg.redundant.items():
        derived = alg.basis_bracket(i, j)
        if derived != coeffs:
            report.violations.append(Violation(
                "skew", (i, j),
                f"[{B[i].name}, {B[j].name}] supplied as {alg.describe(_dense(coeffs, alg.dim))} "
                f"but skew-supersymmetry of [{B[j].name}, {B[i].name}] gives "
                f"{alg.describe(_dense(derived, alg.dim))}"))

    n = alg.dim
    units = [{i: Fraction(1)} for i in range(n)]
    br = alg.basis_bracket
    for x, y, z in itertools.product(range(n), repeat=3):
        yz = br(y, z)
        xy = br(x, y)
        xz = br(x, z)
        if not (yz or xy or xz):
            continue
        lhs = alg.sparse_bracket(units[x], yz)
        r1 = alg.sparse_bracket(xy, units[z])
        r2 = alg.sparse_bracket(units[y], xz)
        s = _sign(B[x].parity, B[y].parity)
        resid = dict(lhs)
        for k, c in r1.items():
            resid[k] = resid.get(k, 0) - c
        for k, c in r2.items():
            resid[k] = resid.get(k, 0) - s * c
        resid = {k: c for k, c in resid.items() if c != 0}
        if resid:
            report.violations.append(Violation(
                "jacobi", (x, y, z),
                f"super Jacobi fails on ({B[x].name}, {B[y].name}, {B[z].name}): "
                f"residual {alg.describe(_dense(resid, n))}"))
    return report


# -- support -------------------------------------------------------------


class Support(NamedTuple):
    sigma: tuple[GroupElement, ...]
    sigma0: tuple[GroupElement, ...]
    sigma1: tuple[GroupElement, ...]
    symmetric: bool


def support(alg: GradedSuperalgebra) -> Support:
    """The G-support, its parity refinements and whether it is symmetric."""
    alg.require_valid()
    group = alg.group
    by_parity: tuple[set, set] = (set(), set())
    for g, p in alg.components():
        if not group.is_identity(g):
            by_parity[p].add(g)
    symmetric = all(group.inverse(g) in s for s in by_parity for g in s)
    return Support(
        tuple(sorted(by_parity[0] | by_parity[1])),
        tuple(sorted(by_parity[0])),
        tuple(sorted(by_parity[1])),
        symmetric,
    )


# -- graded subspaces ----------------------------------------------------


class GradedSubspace:
    """A subspace that splits over the ``(degree, parity)`` components.

    Each component holds an RREF basis of vectors supported on the basis
    indices of that component.
    """

    def __init__(self, dim: int, components: Mapping[Key, Iterable[Sequence]] | None = None):
        self.ambient_dim = dim
        comps = {}
        for key, vecs in (components or {}).items():
            basis = linalg.echelon_basis([list(v) for v in vecs], dim)
            if basis:
                comps[key] = basis
        self._components: dict[Key, list[list[Fraction]]] = dict(sorted(comps.items()))

    @classmethod
    def zero(cls, alg: GradedSuperalgebra) -> "GradedSubspace":
        return cls(alg.dim)

    @classmethod
    def whole(cls, alg: GradedSuperalgebra) -> "GradedSubspace":
        return cls(alg.dim, {k: [alg.unit(i) for i in idx] for k, idx in alg.components().items()})

    @classmethod
    def from_vectors(cls, alg: GradedSuperalgebra, vectors: Iterable[Sequence], split: bool = False):
        """Group vectors by component.

        Non-homogeneous vectors raise ValueError unless ``split`` is set, in
        which case their homogeneous projections are used.
        """
        comps: dict[Key, list] = {}
        for v in vectors:
            v = [Fraction(c) for c in v]
            if not any(v):
                continue
            key = alg.key_of(v)
            if key is not None:
                comps.setdefault(key, []).append(v)
                continue
            if not split:
                raise ValueError(f"vector {alg.describe(v)} is not homogeneous")
            for k, idx in alg.components().items():
                proj = [c if i in idx else Fraction(0) for i, c in enumerate(v)]
                if any(proj):
                    comps.setdefault(k, []).append(proj)
        return cls(alg.dim, comps)

    @property
    def dim(self) -> int:
        return sum(len(b) for b in self._components.values())

    def keys(self) -> list[Key]:
        return list(self._components)

    def component(self, key: Key) -> list[list[Fraction]]:
        return [list(v) for v in self._components.get(key, [])]

    def items(self):
        return [(k, [list(v) for v in b]) for k, b in self._components.items()]

    def vectors(self) -> list[list[Fraction]]:
        return [list(v) for b in self._components.values() for v in b]

    def degrees(self) -> list[GroupElement]:
        return sorted({g for g, _ in self._components})

    def contains(self, v: Sequence, alg: GradedSuperalgebra | None = None) -> bool:
        """Membership test. Without ``alg`` the vector must be homogeneous
        with respect to the supports of the stored components."""
        v = [Fraction(c) for c in v]
        if not any(v):
            return True
        if alg is not None:
            for key, idx in alg.components().items():
                proj = [c if i in idx else Fraction(0) for i, c in enumerate(v)]
                if any(proj) and not linalg.span_contains(self._components.get(key, []), proj):
                    return False
            return True
        return linalg.span_contains(self.vectors(), v)

    def __add__(self, other: "GradedSubspace") -> "GradedSubspace":
        comps: dict[Key, list] = {}
        for s in (self, other):
            for k, b in s._components.items():
                comps.setdefault(k, []).extend(b)
        return GradedSubspace(self.ambient_dim, comps)

    def is_subspace_of(self, other: "GradedSubspace") -> bool:
        for k, b in self._components.items():
            theirs = other._components.get(k, [])
            if len(theirs) < len(b) or linalg.rank(theirs + b) != len(theirs):
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, GradedSubspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._components == other._components

    def __hash__(self):
        return hash((self.ambient_dim, tuple(
            (k, tuple(tuple(v) for v in b)) for k, b in self._components.items())))

    def __repr__(self):
        return f"<GradedSubspace dim={self.dim} components={len(self._components)}>"

    def to_dict(self, alg: GradedSuperalgebra) -> dict:
        return {
            "dim": self.dim,
            "components": [
                {
                    "degree": list(g.coords),
                    "parity": p,
                    "vectors": [alg.describe(v) for v in b],
                }
                for (g, p), b in self._components.items()
            ],
        }


def homogeneous_component(alg: GradedSuperalgebra, g: GroupElement, p: int) -> GradedSubspace:
    """``L_g^p`` as a graded subspace."""
    alg.require_valid()
    g = alg.group.element(g)
    idx = alg.component_indices(g, p)
    return GradedSubspace(alg.dim, {(g, p): [alg.unit(i) for i in idx]})


# -- constructions -------------------------------------------------------


def regrade(alg: GradedSuperalgebra, group: GroupSpec, hom, name: str | None = None) -> GradedSuperalgebra:
    """Push the grading forward along a group homomorphism.

    ``hom`` maps a degree (GroupElement) of ``alg.group`` to raw coordinates
    in ``group``. The caller is responsible for ``hom`` being a homomorphism.
    """
    basis = [(b.name, group.element(hom(b.degree)), b.parity) for b in alg.basis]
    return GradedSuperalgebra(
        group, basis, alg.table, name=name or alg.name, description=alg.description)


def direct_sum(
    algebras: Sequence[GradedSuperalgebra],
    group: GroupSpec,
    homs: Sequence | None = None,
    suffixes: Sequence[str] | None = None,
    name: str | None = None,
) -> GradedSuperalgebra:
    """Direct sum of algebras, each regraded into ``group`` by its ``hom``.

    Basis names get ``suffixes[i]`` appended (default ``"_1"``, ``"_2"``...)
    so they stay unique.
    """
    if homs is None:
        homs = [lambda g: g.coords] * len(algebras)
    if suffixes is None:
        suffixes = [f"_{i + 1}" for i in range(len(algebras))]
    basis = []
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    offset = 0
    for alg, hom, suf in zip(algebras, homs, suffixes):
        for b in alg.basis:
            basis.append((b.name + suf, group.element(hom(b.degree)), b.parity))
        for (i, j), coeffs in alg.table.items():
            table[(i + offset, j + offset)] = {k + offset: c for k, c in coeffs.items()}
        offset += alg.dim
    return GradedSuperalgebra(group, basis, table, name=name)
