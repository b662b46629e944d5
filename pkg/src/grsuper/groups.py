"""Finitely generated abelian groups ``Z^r x Z/m_1 x ... x Z/m_t``.

The public vocabulary is multiplicative (``multiply``, ``inverse``,
identity ``1``) while elements are stored as additive integer vectors.
Torsion coordinates are always kept reduced into ``[0, m_i)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GroupError

__all__ = ["GroupSpec", "GroupElement", "multiply", "inverse", "is_identity"]


@dataclass(frozen=True, order=True)
class GroupElement:
    """A group element; ordering is lexicographic on reduced coordinates."""

    coords: tuple[int, ...]

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __repr__(self):
        return "G(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class GroupSpec:
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(m) for m in self.torsion))
        if self.free_rank < 0:
            raise GroupError(f"free rank must be non-negative, got {self.free_rank}")
        for m in self.torsion:
            if m < 2:
                raise GroupError(f"torsion moduli must be >= 2, got {m}")

    @property
    def ncoords(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def identity(self) -> GroupElement:
        return GroupElement((0,) * self.ncoords)

    def element(self, coords: Iterable[int] | GroupElement) -> GroupElement:
        """Build a reduced element from raw integer coordinates."""
        if isinstance(coords, GroupElement):
            coords = coords.coords
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.ncoords:
            raise GroupError(
                f"element has {len(coords)} coordinates, group needs {self.ncoords}"
            )
        return GroupElement(self._reduce(coords))

    def _reduce(self, coords: Sequence[int]) -> tuple[int, ...]:
        r = self.free_rank
        return tuple(coords[:r]) + tuple(c % m for c, m in zip(coords[r:], self.torsion))

    def _check(self, a: GroupElement) -> GroupElement:
        if not isinstance(a, GroupElement):
            return self.element(a)
        if len(a.coords) != self.ncoords:
            raise GroupError(
                f"element {a!r} has {len(a.coords)} coordinates, group needs {self.ncoords}"
            )
        return a

    def multiply(self, a: GroupElement, b: GroupElement) -> GroupElement:
        a, b = self._check(a), self._check(b)
        return GroupElement(self._reduce([x + y for x, y in zip(a.coords, b.coords)]))

    def inverse(self, a: GroupElement) -> GroupElement:
        a = self._check(a)
        return GroupElement(self._reduce([-x for x in a.coords]))

    def power(self, a: GroupElement, k: int) -> GroupElement:
        a = self._check(a)
        return GroupElement(self._reduce([k * x for x in a.coords]))

    def is_identity(self, a: GroupElement) -> bool:
        return not any(self._reduce(self._check(a).coords))

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_dict(cls, d: dict) -> "GroupSpec":
        return cls(int(d.get("free_rank", 0)), tuple(d.get("torsion", ())))

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{m}" for m in self.torsion]
        return " x ".join(parts) if parts else "1"


def multiply(spec: GroupSpec, a: GroupElement, b: GroupElement) -> GroupElement:
    return spec.multiply(a, b)


def inverse(spec: GroupSpec, a: GroupElement) -> GroupElement:
    return spec.inverse(a)


def is_identity(spec: GroupSpec, a: GroupElement) -> bool:
    return spec.is_identity(a)
