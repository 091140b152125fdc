"""Exact sums of square roots of rationals.

Euclidean norms of rational vectors are square roots of rationals, and
variations of measures are sums of such norms.  A ``Surd`` stores

    c_1*sqrt(n_1) + ... + c_k*sqrt(n_k)

with rational ``c_i`` and integer radicands ``n_i > 1`` such that no product
``n_i*n_j`` (i != j) is a perfect square.  Distinct square-free parts have
square roots that are linearly independent over Q, so a nonempty ``Surd`` is
never zero and never rational.  Equality is therefore decided exactly by
subtraction, and ordering by refining integer enclosures until the sign of the
difference is certain (which terminates because the difference is nonzero).

Arithmetic that cancels every irrational term returns a plain ``Fraction``.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)

Exact = Union[Fraction, "Surd"]


def _is_square(n: int) -> bool:
    r = math.isqrt(n)
    return r * r == n


def sqrt_rational(q) -> Exact:
    """Exact square root of a nonnegative rational."""
    q = Fraction(q)
    if q < 0:
        raise ValueError(f"square root of negative rational {q}")
    rad = q.numerator * q.denominator
    coeff = Fraction(1, q.denominator)
    root = math.isqrt(rad)
    if root * root == rad:
        return coeff * root
    for p in _SMALL_PRIMES:
        pp = p * p
        while rad % pp == 0:
            rad //= pp
            coeff *= p
    return Surd._from_terms({rad: coeff})


class Surd:
    __slots__ = ("_terms",)

    def __init__(self):
        raise TypeError("use sqrt_rational() or arithmetic to build a Surd")

    @classmethod
    def _from_terms(cls, terms: dict) -> Exact:
        terms = {n: c for n, c in terms.items() if c != 0}
        if not terms:
            return Fraction(0)
        if list(terms) == [1]:
            return terms[1]
        obj = object.__new__(cls)
        obj._terms = tuple(sorted(terms.items()))
        return obj

    @property
    def terms(self) -> tuple[tuple[int, Fraction], ...]:
        return self._terms

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _merge(acc: dict, rad: int, coeff: Fraction) -> None:
        if rad in acc:
            acc[rad] += coeff
            return
        if rad != 1:
            for key in acc:
                if key != 1 and _is_square(rad * key):
                    acc[key] += coeff * Fraction(math.isqrt(rad * key), key)
                    return
        acc[rad] = coeff

    def _add(self, other) -> Exact:
        acc = dict(self._terms)
        if isinstance(other, Surd):
            for rad, c in other._terms:
                self._merge(acc, rad, c)
        else:
            self._merge(acc, 1, Fraction(other))
        return Surd._from_terms(acc)

    def __add__(self, other):
        if isinstance(other, (Surd, int, Fraction)):
            return self._add(other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> Exact:
        return Surd._from_terms({n: -c for n, c in self._terms})

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, (Surd, int, Fraction)):
            return self._add(-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return (-self)._add(other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Surd._from_terms({n: c * other for n, c in self._terms})
        if isinstance(other, Surd):
            total: Exact = Fraction(0)
            for n1, c1 in self._terms:
                for n2, c2 in other._terms:
                    total = total + c1 * c2 * sqrt_rational(n1 * n2)
            return total
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __abs__(self) -> Exact:
        return -self if self.sign() < 0 else self

    # -- ordering ---------------------------------------------------------

    def __float__(self) -> float:
        return math.fsum(float(c) * math.sqrt(n) for n, c in self._terms)

    def enclosure(self, bits: int = 64) -> tuple[Fraction, Fraction]:
        """Rational interval of width <= k * 2**-bits * max|c| containing the value."""
        lo = hi = Fraction(0)
        scale = 1 << bits
        for n, c in self._terms:
            r = math.isqrt(n << (2 * bits))
            a, b = Fraction(r, scale), Fraction(r + 1, scale)
            if n == 1:
                a = b = Fraction(1)
            if c >= 0:
                lo += c * a
                hi += c * b
            else:
                lo += c * b
                hi += c * a
        return lo, hi

    def sign(self) -> int:
        approx = float(self)
        magnitude = math.fsum(abs(float(c)) * math.sqrt(n) for n, c in self._terms)
        if abs(approx) > 1e-9 * magnitude:
            return 1 if approx > 0 else -1
        bits = 96
        while True:
            lo, hi = self.enclosure(bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2

    def _cmp(self, other) -> int | None:
        if not isinstance(other, (Surd, int, Fraction)):
            return None
        diff = self - other
        if isinstance(diff, Surd):
            return diff.sign()
        return (diff > 0) - (diff < 0)

    def __eq__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s == 0

    def __lt__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s < 0

    def __le__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s <= 0

    def __gt__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s > 0

    def __ge__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s >= 0

    # representatives of a radical class are not unique, so no stable hash
    __hash__ = None

    def __repr__(self) -> str:
        return f"Surd({self})"

    def __str__(self) -> str:
        parts = []
        for n, c in self._terms:
            text = f"{c.numerator}/{c.denominator}"
            parts.append(text if n == 1 else f"{text}*sqrt({n})")
        return " + ".join(parts)
