"""Finite and cofinite subsets of the natural numbers."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class RepresentableSet:
    """A finite set of indices, or the complement in N of one.

    ``points`` holds the members when ``cofinite`` is false and the excluded
    indices when it is true.
    """

    points: frozenset = frozenset()
    cofinite: bool = False

    def __post_init__(self):
        pts = frozenset(self.points)
        for t in pts:
            if not isinstance(t, int) or isinstance(t, bool) or t < 0:
                raise ValueError(f"set members must be natural numbers, got {t!r}")
        object.__setattr__(self, "points", pts)

    @classmethod
    def finite(cls, members: Iterable[int] = ()) -> RepresentableSet:
        return cls(frozenset(members), False)

    @classmethod
    def cofinite_of(cls, excluded: Iterable[int] = ()) -> RepresentableSet:
        return cls(frozenset(excluded), True)

    @classmethod
    def interval(cls, start: int, stop: int) -> RepresentableSet:
        """The half-open range [start, stop)."""
        return cls.finite(range(start, stop))

    @classmethod
    def from_index(cls, start: int) -> RepresentableSet:
        """The ray [start, oo)."""
        return cls.cofinite_of(range(start))

    def __contains__(self, t: int) -> bool:
        return (t in self.points) != self.cofinite

    @property
    def is_finite(self) -> bool:
        return not self.cofinite

    @property
    def is_empty(self) -> bool:
        return not self.cofinite and not self.points

    @property
    def bound(self) -> int:
        """Smallest n such that the set is constant on [n, oo)."""
        return max(self.points) + 1 if self.points else 0

    def elements(self) -> list[int]:
        if self.cofinite:
            raise ValueError("cannot list the elements of a cofinite set")
        return sorted(self.points)

    def members_below(self, n: int) -> Iterator[int]:
        return (t for t in range(n) if t in self)

    def complement(self) -> RepresentableSet:
        return RepresentableSet(self.points, not self.cofinite)

    def __or__(self, other: RepresentableSet) -> RepresentableSet:
        if not self.cofinite and not other.cofinite:
            return RepresentableSet(self.points | other.points, False)
        if self.cofinite and other.cofinite:
            return RepresentableSet(self.points & other.points, True)
        fin, cof = (self, other) if other.cofinite else (other, self)
        return RepresentableSet(cof.points - fin.points, True)

    def __and__(self, other: RepresentableSet) -> RepresentableSet:
        return (self.complement() | other.complement()).complement()

    def __sub__(self, other: RepresentableSet) -> RepresentableSet:
        return self & other.complement()

    def __le__(self, other: RepresentableSet) -> bool:
        return (self - other).is_empty

    def isdisjoint(self, other: RepresentableSet) -> bool:
        return (self & other).is_empty

    def truncate(self, n: int) -> RepresentableSet:
        """A intersected with [0, n)."""
        return RepresentableSet.finite(self.members_below(n))

    def to_json(self) -> dict:
        return {"cofinite" if self.cofinite else "finite": sorted(self.points)}

    def __repr__(self) -> str:
        body = ", ".join(map(str, sorted(self.points)))
        return f"N\\{{{body}}}" if self.cofinite else f"{{{body}}}"


EMPTY = RepresentableSet.finite()
NATURALS = RepresentableSet.cofinite_of()
