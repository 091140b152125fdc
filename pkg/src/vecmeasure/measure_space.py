"""Purely atomic measure spaces on N.

Atom t carries mass ``weights(t)``; optionally some atoms carry mass +oo
(only constructible with ``allow_infinite_atoms``, to exercise the rejection
path of the locally-determined check).  Sigma is the full power set, of which
the finite/cofinite sets are the decidable fragment; Sigma^f is the delta-ring
of sets of finite measure.
"""
from __future__ import annotations

from dataclasses import dataclass

from .scalars import INF, ExtendedRational, GeometricSequence, constant, geometric, seq_sum
from .sets import EMPTY, NATURALS, RepresentableSet

__all__ = [
    "AtomicMeasureSpace",
    "RepresentableSet",
    "EMPTY",
    "NATURALS",
    "counting",
    "measure",
    "in_sigma_f",
    "validate_locally_determined",
    "is_mu_null",
]


@dataclass(frozen=True)
class AtomicMeasureSpace:
    weights: GeometricSequence
    infinite_atoms: frozenset = frozenset()
    allow_infinite_atoms: bool = False

    def __post_init__(self):
        if not self.weights.is_nonnegative():
            raise ValueError(f"atom weights must be nonnegative: {self.weights!r}")
        atoms = frozenset(self.infinite_atoms)
        if atoms and not self.allow_infinite_atoms:
            raise ValueError("infinite atoms require allow_infinite_atoms=True")
        object.__setattr__(self, "infinite_atoms", atoms)

    def weight(self, t: int) -> ExtendedRational:
        return INF if t in self.infinite_atoms else self.weights(t)

    @property
    def total_mass(self) -> ExtendedRational:
        return measure(self, NATURALS)

    def to_json(self) -> dict:
        out = {"weights": self.weights.to_json()}
        if self.infinite_atoms:
            out["infinite_atoms"] = sorted(self.infinite_atoms)
        return out


def counting() -> AtomicMeasureSpace:
    return AtomicMeasureSpace(constant(1))


def geometric_space(coeff=1, ratio=1, start: int = 0) -> AtomicMeasureSpace:
    return AtomicMeasureSpace(geometric(coeff, ratio, start))


def measure(space: AtomicMeasureSpace, A: RepresentableSet) -> ExtendedRational:
    if any(t in A for t in space.infinite_atoms):
        return INF
    return seq_sum(space.weights, A)


def in_sigma_f(space: AtomicMeasureSpace, A: RepresentableSet) -> bool:
    return measure(space, A) is not INF


def validate_locally_determined(space: AtomicMeasureSpace) -> bool:
    # An atomic measure is semi-finite iff no atom is infinite, and Sigma = P(N)
    # satisfies the locality condition automatically.
    return not space.infinite_atoms


def is_mu_null(space: AtomicMeasureSpace, A: RepresentableSet) -> bool:
    if any(t in A for t in space.infinite_atoms):
        return False
    return space.weights.restrict(A).is_zero


def finite_measure_sets_are_finite(space: AtomicMeasureSpace) -> bool:
    """True when every member of Sigma^f (not only representable ones) is finite.

    Holds exactly when the weights do not tend to zero along any infinite set,
    i.e. the geometric tail is nonzero with ratio >= 1.
    """
    w = space.weights
    return not w.tail_is_zero and w.tail_ratio >= 1
