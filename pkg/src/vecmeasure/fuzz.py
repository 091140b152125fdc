"""Seeded fuzzing of the invariant suite with greedy witness shrinking."""
from __future__ import annotations

import random
from dataclasses import dataclass, replace

from .checks import INVARIANT_SUITE, CHECKS, CheckResult, run_scenario
from .errors import VecMeasureError
from .functions import DiagonalFunction, RankDecomposedFunction
from .generators import random_scenario
from .measure_space import AtomicMeasureSpace
from .scalars import GeometricSequence
from .serialize import Scenario, decode_scenario


@dataclass
class FuzzReport:
    seed: int
    cases: int
    executed: int
    failure: dict | None = None

    @property
    def passed(self) -> bool:
        return self.failure is None

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "cases": self.cases,
            "executed": self.executed,
            "verdict": "PASS" if self.passed else "FAIL",
            "failure": self.failure,
        }


def case_rng(seed: int, index: int) -> random.Random:
    return random.Random(f"fuzz:{seed}:{index}")


def _failing(scenario: Scenario, check: str) -> CheckResult | None:
    try:
        result = run_scenario(scenario, (check,)).results[0]
    except (VecMeasureError, ValueError):
        return None
    return None if result.passed else result


def _drop_entries(s: GeometricSequence):
    for t, _ in s.exceptional:
        values = dict(s.exceptional)
        del values[t]
        yield GeometricSequence(values, s.tail_start, s.tail_coeff, s.tail_ratio)
    if not s.tail_is_zero:
        yield GeometricSequence(dict(s.exceptional), s.tail_start)


def _smaller(scenario: Scenario):
    """Candidate scenarios one simplification away."""
    for i in range(len(scenario.multipliers)):
        yield replace(scenario, multipliers=scenario.multipliers[:i] + scenario.multipliers[i + 1:])
    for i in range(len(scenario.sets)):
        yield replace(scenario, sets=scenario.sets[:i] + scenario.sets[i + 1:])
    F = scenario.F
    if isinstance(F, RankDecomposedFunction):
        for i in range(len(F.terms)):
            if len(F.terms) > 1:
                yield replace(scenario, F=RankDecomposedFunction(F.space, F.terms[:i] + F.terms[i + 1:]))
            s, v = F.terms[i]
            for smaller in _drop_entries(s):
                terms = F.terms[:i] + ((smaller, v),) + F.terms[i + 1:]
                try:
                    yield replace(scenario, F=RankDecomposedFunction(F.space, terms))
                except ValueError:
                    continue
    else:
        for smaller in _drop_entries(F.s):
            yield replace(scenario, F=DiagonalFunction(smaller))
    for smaller in _drop_entries(scenario.space.weights):
        yield replace(scenario, space=AtomicMeasureSpace(smaller))
    for i, g in enumerate(scenario.multipliers):
        for smaller in _drop_entries(g):
            yield replace(scenario, multipliers=scenario.multipliers[:i] + (smaller,) + scenario.multipliers[i + 1:])


def minimize(scenario: Scenario, check: str, budget: int = 400) -> tuple[Scenario, CheckResult]:
    """Greedily simplify while ``check`` keeps failing."""
    scenario = replace(scenario, checks=(check,))
    current = _failing(scenario, check)
    if current is None:
        raise ValueError(f"{check} does not fail on the given scenario")
    improved = True
    while improved and budget > 0:
        improved = False
        for candidate in _smaller(scenario):
            budget -= 1
            result = _failing(candidate, check)
            if result is not None:
                scenario, current, improved = candidate, result, True
                break
            if budget <= 0:
                break
    return scenario, current


def run_fuzz(seed: int, cases: int, approx: bool = False, checks=INVARIANT_SUITE) -> FuzzReport:
    for index in range(cases):
        scenario = random_scenario(case_rng(seed, index), tuple(checks), name=f"fuzz-{seed}-{index}")
        if approx:
            scenario = decode_scenario(scenario.to_json(), CHECKS, approx=True)
        report = run_scenario(scenario)
        failed = report.first_failure()
        if failed is None:
            continue
        small, result = minimize(scenario, failed.name)
        return FuzzReport(seed, cases, index + 1, {
            "case": index,
            "check": failed.name,
            "witness": result.witness,
            "scenario": small.to_json(),
        })
    return FuzzReport(seed, cases, cases)
