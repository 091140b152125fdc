from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from vecmeasure.banach import FiniteDimSpace
from vecmeasure.functions import DiagonalFunction, RankDecomposedFunction
from vecmeasure.generators import RATIO_POOL
from vecmeasure.measure_space import AtomicMeasureSpace
from vecmeasure.scalars import GeometricSequence
from vecmeasure.sets import RepresentableSet

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=6)
nonneg_rationals = st.fractions(min_value=0, max_value=4, max_denominator=6)
ratios = st.sampled_from(RATIO_POOL)
small_ratios = st.sampled_from([r for r in RATIO_POOL if r < 1])


@st.composite
def sequences(draw, values=rationals, ratio=ratios, max_start: int = 8):
    start = draw(st.integers(0, max_start))
    head = draw(st.dictionaries(st.integers(0, max(start - 1, 0)), values, max_size=6)) if start else {}
    return GeometricSequence(head, start, draw(values), draw(ratio))


@st.composite
def rep_sets(draw, bound: int = 14):
    points = draw(st.lists(st.integers(0, bound), max_size=8))
    if draw(st.booleans()):
        return RepresentableSet.finite(points)
    return RepresentableSet.cofinite_of(points)


finite_sets = st.lists(st.integers(0, 12), max_size=8).map(RepresentableSet.finite)
spaces = sequences(values=nonneg_rationals).map(AtomicMeasureSpace)
targets = st.builds(FiniteDimSpace, st.integers(1, 3), st.sampled_from([1, 2, "inf"]))


@st.composite
def vectors(draw, space: FiniteDimSpace):
    return space.vector(draw(st.lists(rationals, min_size=space.dim, max_size=space.dim)))


@st.composite
def rank_functions(draw, target=None, ratio=ratios):
    X = target if target is not None else draw(targets)
    r = draw(ratio)
    terms = tuple(
        (draw(sequences(ratio=st.just(r))), draw(vectors(X)))
        for _ in range(draw(st.integers(1, 3)))
    )
    return RankDecomposedFunction(X, terms)


diagonal_functions = sequences().map(DiagonalFunction)


def frac(text: str) -> Fraction:
    return Fraction(text)


# -- acceptance summary ------------------------------------------------------

ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        ACCEPTANCE[name] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda n: int(n.split("_")[2])):
        number, label = name.split("_")[2], " ".join(name.split("_")[3:])
        terminalreporter.write_line(f"criterion {number} ({label}): {ACCEPTANCE[name]}")


@pytest.fixture
def rng():
    import random

    return random.Random(20261016)
