"""Brute-force oracles that share no code with the closed forms they check.

* set partitions in restricted-growth-string order, for the partition
  definition of the variation;
* random rational functionals in the dual unit ball, for lower bounds on
  semivariations and dual norms.
"""
from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Iterator, Sequence

from .banach import FiniteDimSpace, FiniteDimVector
from .scalars import GeometricSequence, seq_sum


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """All a in N^n with a_0 = 0 and a_i <= 1 + max(a_0..a_{i-1}), lexicographically."""
    if n == 0:
        yield ()
        return
    a = [0] * n
    m = [0] * n  # m[i] = max(a[0..i])
    while True:
        yield tuple(a)
        i = n - 1
        while i > 0 and a[i] > m[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        m[i] = max(m[i - 1], a[i])
        for k in range(i + 1, n):
            a[k] = 0
            m[k] = m[i]


def set_partitions(elements: Sequence) -> Iterator[list[list]]:
    elements = list(elements)
    for rgs in restricted_growth_strings(len(elements)):
        blocks: list[list] = [[] for _ in range(max(rgs, default=-1) + 1)]
        for x, b in zip(elements, rgs):
            blocks[b].append(x)
        yield blocks


def bell_number(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def _small_rational(rng: random.Random, den: int = 12) -> Fraction:
    return Fraction(rng.randint(-den, den), rng.randint(1, den))


def _upper_sqrt(q: Fraction) -> Fraction:
    """A rational >= sqrt(q)."""
    n, d = q.numerator, q.denominator
    return Fraction(math.isqrt(n * d) + 1, d)


def sample_dual_ball(space: FiniteDimSpace, rng: random.Random, count: int) -> list[FiniteDimVector]:
    """``count`` rational functionals in the closed unit ball of the dual of ``space``.

    The first few are extreme points (signed basis vectors or sign vectors);
    the rest are random, pushed to the sphere about half of the time.
    """
    dual = space.dual()
    n = space.dim
    out: list[FiniteDimVector] = []
    if dual.p == 1:
        for j in range(n):
            out.append(dual.basis(j))
            out.append(-dual.basis(j))
    elif dual.p == math.inf and n <= 6:
        for k in range(2 ** n):
            out.append(dual.vector([1 if (k >> j) & 1 else -1 for j in range(n)]))
    while len(out) < count:
        y = [_small_rational(rng) for _ in range(n)]
        if not any(y):
            continue
        if dual.p == 1:
            size = sum(abs(c) for c in y)
        elif dual.p == math.inf:
            size = max(abs(c) for c in y)
        else:
            size = _upper_sqrt(sum(c * c for c in y))
        shrink = Fraction(1) if rng.random() < 0.5 else Fraction(rng.randint(1, 8), 8)
        out.append(dual.vector([c / size * shrink for c in y]))
    return out[:count]


def sample_l1_ball(rng: random.Random, count: int, span: int = 10) -> list[GeometricSequence]:
    """``count`` functionals on c0, as sequences with sum |x*(t)| <= 1."""
    out = [GeometricSequence({k: 1 if rng.random() < 0.5 else -1}, k + 1) for k in range(min(span, count))]
    while len(out) < count:
        head = {t: _small_rational(rng) for t in range(rng.randint(0, span))}
        ratio = Fraction(rng.randint(0, 4), 5)
        x = GeometricSequence(head, len(head), _small_rational(rng, 4), ratio)
        size = seq_sum(abs(x))
        if size == 0:
            continue
        shrink = Fraction(1) if rng.random() < 0.5 else Fraction(rng.randint(1, 8), 8)
        out.append(x.scale(shrink / size))
    return out
