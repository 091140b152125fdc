"""Extended rationals and scalar sequences with geometric tails.

Every measure, norm and integral in the package is a series over N.  The
sequences that occur are eventually geometric, ``s(t) = c * r**t`` from some
index on, so sums have exact closed forms.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import DivergentSeriesError, NegativeTermError
from .sets import NATURALS, RepresentableSet
from .surd import Surd


class _Infinity:
    """The value +oo.  ``0 * oo == 0`` by the usual measure-theoretic convention."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __reduce__(self):
        return (_Infinity, ())

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __float__(self):
        return math.inf

    def __hash__(self):
        return hash(math.inf)

    def __eq__(self, other):
        return other is self or (isinstance(other, float) and other == math.inf)

    def __lt__(self, other):
        return False if _is_real(other) else NotImplemented

    def __le__(self, other):
        return (other is self) if _is_real(other) else NotImplemented

    def __gt__(self, other):
        return (other is not self) if _is_real(other) else NotImplemented

    def __ge__(self, other):
        return True if _is_real(other) else NotImplemented

    def __add__(self, other):
        return self if _is_real(other) else NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArithmeticError("oo - oo is undefined")
        return self if _is_real(other) else NotImplemented

    def __rsub__(self, other):
        if _is_real(other):
            raise ArithmeticError("finite - oo is not an extended rational")
        return NotImplemented

    def __mul__(self, other):
        if not _is_real(other):
            return NotImplemented
        if other is self or other > 0:
            return self
        if other == 0:
            return Fraction(0)
        raise ArithmeticError("negative multiple of oo")

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_real(other) and other is not self and other > 0:
            return self
        return NotImplemented

    def __abs__(self):
        return self


INF = _Infinity()

ExtendedRational = Union[Fraction, _Infinity]


def _is_real(x) -> bool:
    return isinstance(x, (int, Fraction, float, Surd, _Infinity)) and not isinstance(x, bool)


def is_finite(x) -> bool:
    return x is not INF and x != math.inf


def to_fraction(x) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings.  Floats are refused."""
    if type(x) is Fraction:
        return x
    if isinstance(x, float) or isinstance(x, bool):
        raise TypeError(f"exact rational expected, got {x!r}")
    return Fraction(x)


def fmt(x) -> str:
    """Serialize an extended value: 'p/q', 'inf', or the surd expression."""
    if x is INF:
        return "inf"
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, int):
        return f"{x}/1"
    if isinstance(x, float):
        return "inf" if x == math.inf else repr(x)
    return str(x)


def parse_extended(text) -> ExtendedRational:
    if isinstance(text, str) and text.strip().lower() in ("inf", "+inf"):
        return INF
    return to_fraction(text)


@dataclass(frozen=True)
class GeometricSequence:
    """s(t) = exceptional[t] for t < tail_start (default 0), c * r**t afterwards.

    Instances are kept in a canonical form (zero tail means ``tail_coeff ==
    tail_ratio == 0``, no zero entries, minimal ``tail_start``), so equality
    of instances is pointwise equality of sequences.
    """

    exceptional: tuple = ()
    tail_start: int = 0
    tail_coeff: Fraction = Fraction(0)
    tail_ratio: Fraction = Fraction(0)
    _lookup: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        exc = dict(self.exceptional)
        T = int(self.tail_start)
        c = to_fraction(self.tail_coeff)
        r = to_fraction(self.tail_ratio)
        if T < 0:
            raise ValueError("tail_start must be >= 0")
        if r < 0:
            raise ValueError("tail_ratio must be >= 0")
        vals = {}
        for t, v in exc.items():
            t = int(t)
            if t < 0 or t >= T:
                raise ValueError(f"exceptional index {t} outside [0, {T})")
            vals[t] = to_fraction(v)
        if c != 0 and r == 0:
            if T == 0:
                vals[0] = c
                T = 1
            c = Fraction(0)
        if c == 0:
            r = Fraction(0)
        vals = {t: v for t, v in vals.items() if v != 0}
        while T > 0 and vals.get(T - 1, 0) == (c * r ** (T - 1) if c else 0):
            vals.pop(T - 1, None)
            T -= 1
        object.__setattr__(self, "exceptional", tuple(sorted(vals.items())))
        object.__setattr__(self, "tail_start", T)
        object.__setattr__(self, "tail_coeff", c)
        object.__setattr__(self, "tail_ratio", r)
        object.__setattr__(self, "_lookup", dict(self.exceptional))

    def __call__(self, t: int) -> Fraction:
        if t < self.tail_start:
            return self._lookup.get(t, Fraction(0))
        if self.tail_coeff == 0:
            return Fraction(0)
        return self.tail_coeff * self.tail_ratio ** t

    value = __call__

    @property
    def tail_is_zero(self) -> bool:
        return self.tail_coeff == 0

    @property
    def is_zero(self) -> bool:
        return self.tail_coeff == 0 and not self.exceptional

    def head(self) -> list[Fraction]:
        return self.values(self.tail_start)

    def values(self, n: int) -> list[Fraction]:
        """[s(0), ..., s(n-1)], stepping through the tail by repeated multiplication."""
        out = [self._lookup.get(t, Fraction(0)) for t in range(min(n, self.tail_start))]
        if n > self.tail_start:
            if self.tail_coeff == 0:
                out.extend([Fraction(0)] * (n - self.tail_start))
            else:
                v = self(self.tail_start)
                for _ in range(self.tail_start, n):
                    out.append(v)
                    v = v * self.tail_ratio
        return out

    def is_nonnegative(self) -> bool:
        return self.tail_coeff >= 0 and all(v >= 0 for _, v in self.exceptional)

    def tends_to_zero(self) -> bool:
        return self.tail_coeff == 0 or self.tail_ratio < 1

    def is_bounded(self) -> bool:
        return self.tail_coeff == 0 or self.tail_ratio <= 1

    # -- algebra ----------------------------------------------------------

    def scale(self, a) -> GeometricSequence:
        a = to_fraction(a)
        return GeometricSequence(
            {t: a * v for t, v in self.exceptional}, self.tail_start, a * self.tail_coeff, self.tail_ratio
        )

    def __neg__(self) -> GeometricSequence:
        return self.scale(-1)

    def __add__(self, other: GeometricSequence) -> GeometricSequence:
        if not isinstance(other, GeometricSequence):
            return NotImplemented
        if not (self.tail_is_zero or other.tail_is_zero) and self.tail_ratio != other.tail_ratio:
            raise ValueError(
                f"cannot add sequences with tail ratios {self.tail_ratio} and {other.tail_ratio}"
            )
        T = max(self.tail_start, other.tail_start)
        ratio = other.tail_ratio if self.tail_is_zero else self.tail_ratio
        values = {t: a + b for t, (a, b) in enumerate(zip(self.values(T), other.values(T)))}
        return GeometricSequence(values, T, self.tail_coeff + other.tail_coeff, ratio)

    def __sub__(self, other: GeometricSequence) -> GeometricSequence:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GeometricSequence):
            return seq_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __abs__(self) -> GeometricSequence:
        return GeometricSequence(
            {t: abs(v) for t, v in self.exceptional}, self.tail_start, abs(self.tail_coeff), self.tail_ratio
        )

    def positive_part(self) -> GeometricSequence:
        return GeometricSequence(
            {t: max(v, Fraction(0)) for t, v in self.exceptional},
            self.tail_start,
            max(self.tail_coeff, Fraction(0)),
            self.tail_ratio,
        )

    def negative_part(self) -> GeometricSequence:
        return (-self).positive_part()

    def restrict(self, A: RepresentableSet) -> GeometricSequence:
        """chi_A * s."""
        if A.is_finite:
            return GeometricSequence({t: self(t) for t in A.points}, A.bound)
        T = max(self.tail_start, A.bound)
        values = {t: self(t) for t in range(T) if t in A}
        return GeometricSequence(values, T, self.tail_coeff, self.tail_ratio)

    def zero_set(self) -> RepresentableSet:
        zeros = [t for t in range(self.tail_start) if self(t) == 0]
        if self.tail_is_zero:
            return RepresentableSet.finite(zeros) | RepresentableSet.from_index(self.tail_start)
        return RepresentableSet.finite(zeros)

    def support(self) -> RepresentableSet:
        return self.zero_set().complement()

    def to_json(self) -> dict:
        return {
            "exceptional": {str(t): fmt(v) for t, v in self.exceptional},
            "tail": {"start": self.tail_start, "coeff": fmt(self.tail_coeff), "ratio": fmt(self.tail_ratio)},
        }

    def __repr__(self) -> str:
        exc = ", ".join(f"{t}: {v}" for t, v in self.exceptional)
        return f"Seq({{{exc}}}, t>={self.tail_start}: {self.tail_coeff}*{self.tail_ratio}^t)"


def geometric(coeff=1, ratio=1, start: int = 0) -> GeometricSequence:
    """c * r**t for t >= start, zero before."""
    return GeometricSequence((), start, coeff, ratio)


def constant(c) -> GeometricSequence:
    return GeometricSequence((), 0, c, 1)


def delta(t: int, value=1) -> GeometricSequence:
    return GeometricSequence({t: value}, t + 1)


def indicator(A: RepresentableSet) -> GeometricSequence:
    return constant(1).restrict(A)


ZERO = GeometricSequence()
ONE = constant(1)


def seq_mul(s1: GeometricSequence, s2: GeometricSequence) -> GeometricSequence:
    """Pointwise product; the tail ratio multiplies."""
    T = max(s1.tail_start, s2.tail_start)
    return GeometricSequence(
        {t: a * b for t, (a, b) in enumerate(zip(s1.values(T), s2.values(T)))},
        T,
        s1.tail_coeff * s2.tail_coeff,
        s1.tail_ratio * s2.tail_ratio,
    )


def seq_sum(s: GeometricSequence, A: RepresentableSet = NATURALS) -> ExtendedRational:
    """Sum of a nonnegative sequence over A, possibly +oo."""
    part = s.restrict(A)
    if not part.is_nonnegative():
        bad = next((t for t, v in part.exceptional if v < 0), part.tail_start)
        raise NegativeTermError(f"negative term at t={bad} in {s!r}")
    total = sum((v for _, v in part.exceptional), Fraction(0))
    if part.tail_is_zero:
        return total
    c, r, T = part.tail_coeff, part.tail_ratio, part.tail_start
    if r >= 1:
        return INF
    return total + c * r ** T / (1 - r)


def signed_sum(s: GeometricSequence, A: RepresentableSet = NATURALS) -> Fraction:
    """Sum over A of an absolutely summable sequence."""
    pos = seq_sum(s.positive_part(), A)
    neg = seq_sum(s.negative_part(), A)
    if pos is INF or neg is INF:
        raise DivergentSeriesError(f"{s!r} is not absolutely summable over {A!r}")
    return pos - neg


def seq_sup(s: GeometricSequence, A: RepresentableSet = NATURALS) -> ExtendedRational:
    """Supremum of a nonnegative sequence over A (0 for empty A)."""
    part = s.restrict(A)
    if not part.is_nonnegative():
        raise NegativeTermError(f"seq_sup expects a nonnegative sequence, got {s!r}")
    best = max((v for _, v in part.exceptional), default=Fraction(0))
    if part.tail_is_zero:
        return best
    if part.tail_ratio > 1:
        return INF
    return max(best, part.tail_coeff * part.tail_ratio ** part.tail_start)


def seq_argmax(s: GeometricSequence, A: RepresentableSet = NATURALS) -> int | None:
    """First index attaining seq_sup, or None if the sup is 0 or not attained."""
    part = s.restrict(A)
    top = seq_sup(s, A)
    if top is INF or top == 0:
        return None
    for t in range(part.tail_start + 1):
        if part(t) == top:
            return t
    return None


def partial_sums(s: GeometricSequence, A: RepresentableSet, upto: int) -> list[Fraction]:
    """[sum over A & [0, n) for n in 0..upto]; direct summation, no closed forms."""
    out, acc = [Fraction(0)], Fraction(0)
    for t in range(upto):
        if t in A:
            acc += s(t)
        out.append(acc)
    return out


def sequence_from_values(values: Mapping[int, object] | Iterable) -> GeometricSequence:
    """Finitely supported sequence from a mapping or a list of head values."""
    if not isinstance(values, Mapping):
        values = dict(enumerate(values))
    n = max(values, default=-1) + 1
    return GeometricSequence(dict(values), n)
