"""Target spaces: R^n with a p-norm, and diagonal vectors of c0.

The central routine is :func:`dual_ball_argmax`, which evaluates

    sup_{x* in B_{X*}}  sum_i c_i |<v_i, x*>|

exactly.  Writing the sum of absolute values as a maximum over sign patterns
and exchanging the two suprema gives ``max_eps || sum_i eps_i c_i v_i ||``,
so the supremum is attained at one of 2**(m-1) candidate vectors.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import DimensionMismatchError, MixedSpaceError, TooManyTermsError
from .scalars import INF, GeometricSequence, fmt, seq_argmax, seq_sum, seq_sup, signed_sum, to_fraction
from .surd import Surd, sqrt_rational

MAX_TERMS = 20

Norm = Union[Fraction, Surd, float]


def _parse_p(p):
    if p in ("inf", "oo", math.inf):
        return math.inf
    if p in (1, 2, "1", "2"):
        return int(p)
    raise ValueError(f"norm exponent must be 1, 2 or inf, got {p!r}")


@dataclass(frozen=True)
class FiniteDimSpace:
    """R^dim with the l^p norm, p in {1, 2, inf}.

    ``approx`` switches p=2 norms to floats (comparisons then use a 1e-9
    tolerance); otherwise they are exact surds.
    """

    dim: int
    p: object = math.inf
    approx: bool = False

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        object.__setattr__(self, "p", _parse_p(self.p))

    @property
    def q(self):
        return {1: math.inf, 2: 2, math.inf: 1}[self.p]

    def dual(self) -> FiniteDimSpace:
        return FiniteDimSpace(self.dim, self.q, self.approx)

    def vector(self, coords) -> FiniteDimVector:
        return FiniteDimVector(tuple(coords), self)

    def zero(self) -> FiniteDimVector:
        return FiniteDimVector((0,) * self.dim, self)

    def basis(self, j: int) -> FiniteDimVector:
        return FiniteDimVector(tuple(int(i == j) for i in range(self.dim)), self)

    def to_json(self) -> dict:
        return {"kind": "finite", "dim": self.dim, "p": "inf" if self.p == math.inf else self.p}


@dataclass(frozen=True)
class FiniteDimVector:
    coords: tuple
    space: FiniteDimSpace

    def __post_init__(self):
        coords = tuple(to_fraction(c) for c in self.coords)
        if len(coords) != self.space.dim:
            raise DimensionMismatchError(f"{len(coords)} coordinates for a {self.space.dim}-dimensional space")
        object.__setattr__(self, "coords", coords)

    def _check(self, other: FiniteDimVector) -> None:
        if other.space.dim != self.space.dim:
            raise DimensionMismatchError(f"dimensions {self.space.dim} and {other.space.dim}")
        if other.space != self.space:
            raise MixedSpaceError(f"{self.space} vs {other.space}")

    def __add__(self, other: FiniteDimVector) -> FiniteDimVector:
        self._check(other)
        return FiniteDimVector(tuple(a + b for a, b in zip(self.coords, other.coords)), self.space)

    def __sub__(self, other: FiniteDimVector) -> FiniteDimVector:
        return self + (-other)

    def __neg__(self) -> FiniteDimVector:
        return self.scale(-1)

    def scale(self, a) -> FiniteDimVector:
        a = to_fraction(a)
        return FiniteDimVector(tuple(a * c for c in self.coords), self.space)

    __rmul__ = scale

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __getitem__(self, j: int) -> Fraction:
        return self.coords[j]

    def to_json(self) -> list:
        return [fmt(c) for c in self.coords]

    def __repr__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def norm_squared(v: FiniteDimVector) -> Fraction:
    return sum((c * c for c in v.coords), Fraction(0))


def _norm_key(coords: Sequence, p):
    """Rational key monotone in the p-norm (the squared norm for p=2)."""
    if p == 1:
        return sum(abs(c) for c in coords)
    if p == 2:
        return sum(c * c for c in coords)
    return max((abs(c) for c in coords), default=0)


def _key_to_norm(key, space: FiniteDimSpace) -> Norm:
    if space.p != 2:
        return Fraction(key)
    if space.approx:
        return math.sqrt(key)
    return sqrt_rational(key)


def norm(v: FiniteDimVector) -> Norm:
    """l^p norm: exact rational for p in {1, inf}; for p=2 an exact
    ``Fraction`` when the squared norm is a rational square, else a ``Surd``
    (whose ``enclosure()`` gives certified bounds), or a float in approx mode."""
    return _key_to_norm(_norm_key(v.coords, v.space.p), v.space)


def pairing(v: FiniteDimVector, xstar: FiniteDimVector) -> Fraction:
    """<v, x*> for x* in the dual space."""
    if v.space.dim != xstar.space.dim:
        raise DimensionMismatchError(f"pairing a {v.space.dim}-vector with a {xstar.space.dim}-functional")
    if xstar.space.p != v.space.q:
        raise MixedSpaceError(f"functional lives in l^{xstar.space.p}, expected l^{v.space.q}")
    return sum((a * b for a, b in zip(v.coords, xstar.coords)), Fraction(0))


def in_dual_ball(xstar: FiniteDimVector) -> bool:
    return _norm_key(xstar.coords, xstar.space.p) <= 1


@dataclass(frozen=True)
class DualMax:
    """Result of the dual-ball maximization.

    ``signs`` is the first maximizing sign pattern in lexicographic order
    (+1 before -1), one entry per input term.  ``direction`` is
    ``sum_i signs_i c_i v_i``.  ``xstar`` is a rational norming functional
    for ``direction`` when one exists (p in {1, inf}); for p=2 the norming
    functional is ``direction / ||direction||``.
    """

    value: object
    signs: tuple = ()
    direction: FiniteDimVector | None = None
    xstar: FiniteDimVector | None = None


def _norming_functional(u: FiniteDimVector) -> FiniteDimVector | None:
    dual = u.space.dual()
    if u.space.p == math.inf:
        top = max(abs(c) for c in u.coords)
        j = next(i for i, c in enumerate(u.coords) if abs(c) == top)
        coords = [0] * u.space.dim
        coords[j] = 1 if u.coords[j] >= 0 else -1
        return dual.vector(coords)
    if u.space.p == 1:
        return dual.vector([1 if c >= 0 else -1 for c in u.coords])
    return None


def dual_ball_argmax(terms: Sequence[tuple]) -> DualMax:
    """Exact sup over the dual unit ball of sum_i c_i |<v_i, x*>|, with witness.

    ``terms`` is a sequence of (coefficient >= 0 or INF, FiniteDimVector).
    """
    terms = list(terms)
    if not terms:
        return DualMax(Fraction(0))
    space = terms[0][1].space
    for c, v in terms:
        if v.space != space:
            raise MixedSpaceError(f"terms live in {space} and {v.space}")
        if c is not INF and c < 0:
            raise ValueError(f"coefficients must be nonnegative, got {c}")
    live = [i for i, (c, v) in enumerate(terms) if c != 0 and not v.is_zero]
    if any(terms[i][0] is INF for i in live):
        return DualMax(INF)
    if not live:
        return DualMax(Fraction(0), (1,) * len(terms), space.zero())
    m = len(live)
    if m > MAX_TERMS:
        raise TooManyTermsError(f"{m} nonzero terms exceed the sign-enumeration cap {MAX_TERMS}")

    # Integer arithmetic after clearing denominators.
    scaled = [[terms[i][0] * c for c in terms[i][1].coords] for i in live]
    denom = math.lcm(*(x.denominator for row in scaled for x in row))
    rows = [[int(x * denom) for x in row] for row in scaled]

    best_key, best_eps = None, None
    for tail in itertools.product((1, -1), repeat=m - 1):
        eps = (1,) + tail
        u = [sum(e * row[j] for e, row in zip(eps, rows)) for j in range(space.dim)]
        key = _norm_key(u, space.p)
        if best_key is None or key > best_key:
            best_key, best_eps = key, eps

    signs = [1] * len(terms)
    for i, e in zip(live, best_eps):
        signs[i] = e
    u = space.zero()
    for e, (c, v) in zip(signs, terms):
        if c != 0:
            u = u + v.scale(e * c)
    value = norm(u)
    return DualMax(value, tuple(signs), u, _norming_functional(u))


def dual_ball_abs_max(terms: Sequence[tuple]):
    return dual_ball_argmax(terms).value


# -- c0 ---------------------------------------------------------------------


@dataclass(frozen=True)
class C0DiagonalVector:
    """The sequence (entries(t))_t, viewed in l^oo; a member of c0 iff it tends to 0."""

    entries: GeometricSequence

    @property
    def in_c0(self) -> bool:
        return self.entries.tends_to_zero()

    def sup_norm(self):
        return seq_sup(abs(self.entries))

    def pair(self, xstar: GeometricSequence) -> Fraction:
        """<v, x*> for x* in l^1 given as a summable sequence."""
        return signed_sum(self.entries * xstar)

    def norming_index(self) -> int | None:
        return seq_argmax(abs(self.entries))

    def __add__(self, other: C0DiagonalVector) -> C0DiagonalVector:
        return C0DiagonalVector(self.entries + other.entries)

    def to_json(self) -> dict:
        return {"c0": self.entries.to_json()}


def l1_norm(xstar: GeometricSequence):
    return seq_sum(abs(xstar))
