"""Connection classes on a symmetric G-support.

Two support degrees are connected when a chain ``g_1, ..., g_n`` of support
elements starting at ``g`` keeps every proper partial product inside the
support and ends on ``g'`` or its inverse. The relation is an equivalence.

:func:`connection_classes` computes the classes as least fixed points of two
closure rules; :func:`oracle_connected` is a literal breadth-first chain
search used to cross-check them. Neither looks at structure constants.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .algebra import GradedSuperalgebra, support
from .errors import NonSymmetricSupport
from .groups import GroupElement, GroupSpec

__all__ = [
    "SupportGraph",
    "ConnectionClass",
    "support_graph",
    "connection_class",
    "connection_classes",
    "oracle_connected",
    "oracle_partition",
]


@dataclass(frozen=True)
class SupportGraph:
    group: GroupSpec
    elements: tuple[GroupElement, ...]

    def __post_init__(self):
        elems = tuple(sorted({self.group.element(g) for g in self.elements}))
        object.__setattr__(self, "elements", elems)

    @property
    def symmetric(self) -> bool:
        s = set(self.elements)
        return all(self.group.inverse(g) in s for g in s)

    def require_symmetric(self):
        s = set(self.elements)
        for g in self.elements:
            if self.group.inverse(g) not in s:
                raise NonSymmetricSupport(f"support is not symmetric: {g} in it, {self.group.inverse(g)} not")

    def __contains__(self, g):
        return self.group.element(g) in set(self.elements)

    def __len__(self):
        return len(self.elements)


@dataclass(frozen=True)
class ConnectionClass:
    representative: GroupElement
    members: tuple[GroupElement, ...]

    def __contains__(self, g):
        return g in self.members

    def __len__(self):
        return len(self.members)

    def to_list(self) -> list[list[int]]:
        return [list(g.coords) for g in self.members]


def support_graph(alg: GradedSuperalgebra) -> SupportGraph:
    return SupportGraph(alg.group, support(alg).sigma)


def _as_graph(sg) -> SupportGraph:
    if isinstance(sg, GradedSuperalgebra):
        return support_graph(sg)
    return sg


def connection_class(sg: SupportGraph, g: GroupElement) -> ConnectionClass:
    """Least set containing ``g`` closed under inverses and under
    ``h in C, s in Sigma, hs in Sigma  =>  hs, s in C``."""
    sg = _as_graph(sg)
    sg.require_symmetric()
    grp = sg.group
    g = grp.element(g)
    sigma = set(sg.elements)
    if g not in sigma:
        raise ValueError(f"{g} is not in the support")

    members = {g, grp.inverse(g)}
    queue = deque(sorted(members))
    while queue:
        h = queue.popleft()
        new = [grp.inverse(h)]
        for s in sg.elements:
            hs = grp.multiply(h, s)
            if hs in sigma:
                new += [hs, s]
        for x in new:
            if x not in members:
                members.add(x)
                queue.append(x)
    return ConnectionClass(g, tuple(sorted(members)))


def connection_classes(sg: SupportGraph) -> list[ConnectionClass]:
    """Partition of the support, ordered by smallest member.

    Each class's representative is its smallest member.
    """
    sg = _as_graph(sg)
    sg.require_symmetric()
    seen: set[GroupElement] = set()
    classes = []
    for g in sg.elements:
        if g in seen:
            continue
        c = connection_class(sg, g)
        seen.update(c.members)
        classes.append(c)
    return classes


def oracle_connected(
    sg: SupportGraph, g: GroupElement, g2: GroupElement, max_len: int | None = None
) -> list[GroupElement] | None:
    """Shortest chain connecting ``g`` to ``g2`` of length at most ``max_len``.

    Plain breadth-first search over chains; the search state is the running
    product, which must stay inside the support. Returns the chain
    ``[g_1, ..., g_n]`` or None. ``max_len`` defaults to ``|Sigma| + 1``,
    which makes the search complete.
    """
    sg = _as_graph(sg)
    grp = sg.group
    g, g2 = grp.element(g), grp.element(g2)
    sigma = set(sg.elements)
    for x in (g, g2):
        if x not in sigma:
            raise ValueError(f"{x} is not in the support")
    if max_len is None:
        max_len = len(sigma) + 1
    if max_len < 1:
        raise ValueError("max_len must be at least 1")

    targets = {g2, grp.inverse(g2)}
    if g in targets:
        return [g]
    parent: dict[GroupElement, tuple[GroupElement, GroupElement] | None] = {g: None}
    frontier = [g]
    for _length in range(2, max_len + 1):
        nxt = []
        for prod in frontier:
            for s in sg.elements:
                p = grp.multiply(prod, s)
                if p in targets:
                    return _unwind(parent, prod) + [s]
                if p in sigma and p not in parent:
                    parent[p] = (prod, s)
                    nxt.append(p)
        if not nxt:
            break
        frontier = nxt
    return None


def _unwind(parent, prod) -> list[GroupElement]:
    chain = []
    while parent[prod] is not None:
        prev, s = parent[prod]
        chain.append(s)
        prod = prev
    chain.append(prod)
    return chain[::-1]


def oracle_partition(sg: SupportGraph, max_len: int | None = None) -> list[tuple[GroupElement, ...]]:
    """Partition of the support induced by :func:`oracle_connected` alone."""
    sg = _as_graph(sg)
    remaining = list(sg.elements)
    blocks = []
    while remaining:
        g = remaining[0]
        block = tuple(h for h in sg.elements if oracle_connected(sg, g, h, max_len) is not None)
        blocks.append(block)
        remaining = [h for h in remaining if h not in block]
    return blocks


def check_closed(sg: SupportGraph, members: Iterable[GroupElement]) -> list[tuple]:
    """Pairs breaking inverse-closure or the product/factor closure rule."""
    sg = _as_graph(sg)
    grp = sg.group
    members = set(members)
    sigma = set(sg.elements)
    bad = []
    for h in sorted(members):
        if grp.inverse(h) not in members:
            bad.append(("inverse", h))
        for s in sg.elements:
            hs = grp.multiply(h, s)
            if hs in sigma and not (hs in members and s in members):
                bad.append(("product", h, s))
    return bad
