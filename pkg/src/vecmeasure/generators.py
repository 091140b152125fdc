"""Seeded random scenarios for the fuzzer and the property suites.

Sizes stay small so that every exact computation is fast: targets of
dimension at most 4, at most 6 exceptional indices (all below 8), tail
ratios drawn from a fixed rational pool.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable

from .banach import FiniteDimSpace
from .functions import DiagonalFunction, RankDecomposedFunction
from .measure_space import AtomicMeasureSpace
from .scalars import GeometricSequence
from .serialize import Scenario
from .sets import RepresentableSet

RATIO_POOL = tuple(Fraction(x) for x in ("0", "1/4", "1/3", "1/2", "2/3", "1", "3/2", "2", "3"))
MAX_EXCEPTIONAL = 6
INDEX_BOUND = 8
MAX_DIM = 4


def small_rational(rng: random.Random, span: int = 4, signed: bool = True) -> Fraction:
    num = rng.randint(-span if signed else 0, span)
    return Fraction(num, rng.choice((1, 1, 2, 3, 4)))


def random_sequence(rng: random.Random, ratio: Fraction | None = None, signed: bool = True,
                    zero_tail: float = 0.15) -> GeometricSequence:
    k = rng.randint(0, MAX_EXCEPTIONAL)
    idx = rng.sample(range(INDEX_BOUND), k)
    head = {t: small_rational(rng, signed=signed) for t in idx}
    start = rng.randint(max(idx, default=-1) + 1, INDEX_BOUND)
    if ratio is None:
        ratio = rng.choice(RATIO_POOL)
    coeff = Fraction(0) if rng.random() < zero_tail else small_rational(rng, signed=signed)
    if coeff == 0 and rng.random() < 0.5:
        coeff = Fraction(1)
    return GeometricSequence(head, start, coeff, ratio)


def random_space(rng: random.Random) -> AtomicMeasureSpace:
    kind = rng.random()
    if kind < 0.2:
        weights = GeometricSequence({}, 0, 1, 1)
    elif kind < 0.3:
        weights = random_sequence(rng, Fraction(0), signed=False, zero_tail=1.0)
    else:
        weights = random_sequence(rng, signed=False)
    return AtomicMeasureSpace(abs(weights))


def random_target(rng: random.Random, c0_share: float = 0.2) -> FiniteDimSpace | None:
    if rng.random() < c0_share:
        return None
    return FiniteDimSpace(rng.randint(1, MAX_DIM), rng.choice((1, 2, "inf")))


def random_function(rng: random.Random, target: FiniteDimSpace | None):
    if target is None:
        return DiagonalFunction(random_sequence(rng))
    ratio = rng.choice(RATIO_POOL)
    terms = []
    for _ in range(rng.randint(1, 3)):
        vec = target.vector([small_rational(rng, 3) if rng.random() < 0.8 else 0 for _ in range(target.dim)])
        terms.append((random_sequence(rng, ratio), vec))
    return RankDecomposedFunction(target, tuple(terms))


def random_set(rng: random.Random) -> RepresentableSet:
    kind = rng.random()
    if kind < 0.55:
        return RepresentableSet.finite(rng.sample(range(12), rng.randint(0, 8)))
    if kind < 0.7:
        a = rng.randint(0, 6)
        return RepresentableSet.interval(a, a + rng.randint(0, 6))
    if kind < 0.85:
        return RepresentableSet.from_index(rng.randint(0, 10))
    return RepresentableSet.cofinite_of(rng.sample(range(12), rng.randint(0, 4)))


def random_scenario(rng: random.Random, checks: tuple = (), name: str = "fuzz",
                    accept: Callable[[Scenario], bool] | None = None) -> Scenario:
    """A scenario drawn from ``rng``; redrawn until ``accept`` holds."""
    while True:
        target = random_target(rng)
        scenario = Scenario(
            name=name,
            space=random_space(rng),
            target=target,
            F=random_function(rng, target),
            multipliers=tuple(random_sequence(rng) for _ in range(rng.randint(1, 3))),
            sets=tuple(random_set(rng) for _ in range(rng.randint(2, 4))),
            checks=tuple(checks),
        )
        if accept is None or accept(scenario):
            return scenario
