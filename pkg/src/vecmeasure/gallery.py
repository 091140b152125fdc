"""Built-in counterexamples and worked instances, each with expected verdicts."""
from __future__ import annotations

from fractions import Fraction

from .banach import FiniteDimSpace
from .checks import INVARIANT_SUITE
from .functions import DiagonalFunction, one_term
from .measure_space import AtomicMeasureSpace, counting
from .scalars import ONE, constant, delta, geometric
from .serialize import Scenario
from .sets import RepresentableSet

HALF = Fraction(1, 2)
ALL = INVARIANT_SUITE + ("expectations",)


def _sets(*extra: RepresentableSet) -> tuple:
    base = (
        RepresentableSet.finite([0, 1, 2]),
        RepresentableSet.finite([1, 3, 4, 6]),
        RepresentableSet.from_index(3),
    )
    return base + extra


def _constant_line() -> Scenario:
    """f = 1 against counting measure: every finite piece is Bochner, the whole is not."""
    X = FiniteDimSpace(2, "inf")
    return Scenario(
        name="example5",
        space=counting(),
        target=X,
        F=one_term(constant(1), X.vector([1, 1])),
        multipliers=(geometric(1, HALF), ONE),
        sets=_sets(),
        checks=ALL,
        expect={
            "locally_bochner": True,
            "locally_pettis": True,
            "bochner": False,
            "pettis": False,
            "dunford": False,
            "bounded": False,
            "strongly_additive": False,
            "semivariation": "inf",
            "variation": "inf",
            "in_L1_of_variation": [True, False],
        },
    )


def _rank_one() -> Scenario:
    X = FiniteDimSpace(2, 2)
    return Scenario(
        name="example10-rank-one",
        space=counting(),
        target=X,
        F=one_term(geometric(1, HALF), X.vector([3, 4])),
        multipliers=(ONE, constant(3), geometric(2, 2), delta(0, 5)),
        sets=_sets(RepresentableSet.finite(range(8))),
        checks=ALL,
        expect={
            "rank_one": True,
            "bochner": True,
            "semivariation": "10/1",
            "variation": "10/1",
            "nu_norm": ["10/1", "30/1", "inf", "25/1"],
        },
    )


def _c0_ones() -> Scenario:
    """e_t against counting measure: Dunford, bounded, not Pettis, not strongly additive."""
    return Scenario(
        name="c0-diagonal-ones",
        space=counting(),
        target=None,
        F=DiagonalFunction(constant(1)),
        multipliers=(ONE, geometric(1, HALF), geometric(1, 2)),
        sets=_sets(RepresentableSet.finite(range(8))),
        checks=ALL,
        expect={
            "locally_pettis": True,
            "dunford": True,
            "pettis": False,
            "bochner": False,
            "bounded": True,
            "strongly_additive": False,
            "semivariation": "1/1",
            "in_L1w": [True, True, False],
            "in_L1": [False, True, False],
            "in_L1_of_variation": [False, True, False],
        },
    )


def _c0_geometric() -> Scenario:
    return Scenario(
        name="c0-diagonal-geometric",
        space=AtomicMeasureSpace(geometric(1, HALF)),
        target=None,
        F=DiagonalFunction(geometric(1, Fraction(3, 2))),
        multipliers=(ONE, constant(2), geometric(1, Fraction(4, 3))),
        sets=_sets(RepresentableSet.finite(range(8))),
        checks=ALL,
        expect={
            "locally_pettis": True,
            "dunford": True,
            "pettis": True,
            "bochner": True,
            "bounded": True,
            "strongly_additive": True,
            "semivariation": "1/1",
            "variation": "4/1",
            "in_L1w": [True, True, True],
            "in_L1": [True, True, False],
            "in_L1_of_variation": [True, True, False],
        },
    )


def _bochner_pair() -> list[Scenario]:
    """One density whose variation converges, one whose variation diverges on a finite measure."""
    X = FiniteDimSpace(3, 1)
    converging = Scenario(
        name="remark8-equivalence/bounded-variation",
        space=AtomicMeasureSpace(geometric(1, Fraction(1, 3))),
        target=X,
        F=one_term(geometric(1, 2), X.vector([1, -1, 2])),
        multipliers=(ONE, geometric(1, Fraction(3, 2))),
        sets=_sets(),
        checks=("bochner-criterion", "integrability-chain", "variation-oracle", "bochner-isometry", "expectations"),
        expect={"locally_bochner": True, "bochner": True, "variation": "12/1",
                "in_L1_of_variation": [True, False]},
    )
    growing = Scenario(
        name="remark8-equivalence/unbounded-variation",
        space=AtomicMeasureSpace(constant(1)),
        target=X,
        F=one_term(geometric(1, 1), X.vector([1, 0, 1])),
        multipliers=(ONE, geometric(1, HALF)),
        sets=_sets(),
        checks=("bochner-criterion", "integrability-chain", "variation-oracle", "bochner-isometry", "expectations"),
        expect={"locally_bochner": True, "bochner": False, "variation": "inf",
                "in_L1_of_variation": [False, True]},
    )
    return [converging, growing]


def _pettis_pair() -> list[Scenario]:
    """Pettis with a strongly additive measure, and locally Pettis with a measure that is not."""
    strong = Scenario(
        name="corollary13-both-directions/strongly-additive",
        space=AtomicMeasureSpace(geometric(1, HALF)),
        target=None,
        F=DiagonalFunction(geometric(1, Fraction(3, 2))),
        sets=_sets(),
        checks=("pettis-criterion", "integrability-chain", "dunford-bounded", "expectations"),
        expect={"locally_pettis": True, "strongly_additive": True, "pettis": True},
    )
    weak = Scenario(
        name="corollary13-both-directions/not-strongly-additive",
        space=AtomicMeasureSpace(geometric(1, HALF)),
        target=None,
        F=DiagonalFunction(geometric(1, 2)),
        sets=_sets(),
        checks=("pettis-criterion", "integrability-chain", "dunford-bounded", "expectations"),
        expect={"locally_pettis": False, "pettis": False, "dunford": True},
    )
    local_only = Scenario(
        name="corollary13-both-directions/locally-pettis-only",
        space=counting(),
        target=None,
        F=DiagonalFunction(constant(1)),
        sets=_sets(),
        checks=("pettis-criterion", "integrability-chain", "dunford-bounded", "expectations"),
        expect={"locally_pettis": True, "strongly_additive": False, "pettis": False},
    )
    return [strong, weak, local_only]


def _rank_one_equality() -> Scenario:
    X = FiniteDimSpace(3, "inf")
    return Scenario(
        name="example16-equality",
        space=AtomicMeasureSpace(geometric(2, Fraction(2, 3))),
        target=X,
        F=one_term(geometric(1, 1).restrict(RepresentableSet.from_index(1)) + delta(0, -3), X.vector([2, -1, 1])),
        multipliers=(ONE, geometric(1, Fraction(3, 2)), geometric(5, Fraction(4, 3)), delta(2, 7)),
        sets=_sets(RepresentableSet.finite(range(6))),
        checks=ALL,
        expect={
            "rank_one": True,
            "in_L1w": [True, False, True, True],
            "in_L1": [True, False, True, True],
            "in_L1_of_variation": [True, False, True, True],
        },
    )


GALLERY: dict[str, list[Scenario]] = {
    "example5": [_constant_line()],
    "example10-rank-one": [_rank_one()],
    "c0-diagonal-ones": [_c0_ones()],
    "c0-diagonal-geometric": [_c0_geometric()],
    "remark8-equivalence": _bochner_pair(),
    "corollary13-both-directions": _pettis_pair(),
    "example16-equality": [_rank_one_equality()],
}
