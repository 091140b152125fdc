"""JSON codec for scenarios and results.

Rationals travel as "p/q" strings (plain integers are accepted on input),
+oo as "inf".  Floats are rejected on input so that nothing inexact leaks
into a computation.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .banach import FiniteDimSpace, FiniteDimVector
from .errors import ParseError, ValidationError
from .functions import DiagonalFunction, RankDecomposedFunction, VectorFunction
from .measure_space import AtomicMeasureSpace
from .scalars import INF, GeometricSequence, fmt
from .sets import RepresentableSet
from .surd import Surd


def rational(value: Any, where: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ValidationError(f"{where}: expected a rational string like '1/2', got {value!r}", where)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise ValidationError(f"{where}: cannot read {value!r} as a rational", where)


def _mapping(value: Any, where: str, allowed: set[str]) -> dict:
    if not isinstance(value, dict):
        raise ValidationError(f"{where}: expected an object", where)
    extra = set(value) - allowed
    if extra:
        raise ValidationError(f"{where}: unknown field(s) {sorted(extra)}", where)
    return value


def _index(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ValidationError(f"{where}: expected a natural number, got {value!r}", where)
    return value


def decode_sequence(obj: Any, where: str = "seq") -> GeometricSequence:
    obj = _mapping(obj, where, {"exceptional", "tail"})
    exc_raw = obj.get("exceptional", {})
    if not isinstance(exc_raw, dict):
        raise ValidationError(f"{where}.exceptional: expected an object", f"{where}.exceptional")
    exceptional = {}
    for key, v in exc_raw.items():
        try:
            t = int(key)
        except ValueError:
            raise ValidationError(f"{where}.exceptional: index {key!r} is not an integer", f"{where}.exceptional") from None
        exceptional[_index(t, f"{where}.exceptional")] = rational(v, f"{where}.exceptional.{key}")
    tail = _mapping(obj.get("tail", {}), f"{where}.tail", {"start", "coeff", "ratio"})
    start = _index(tail.get("start", 0), f"{where}.tail.start")
    coeff = rational(tail.get("coeff", 0), f"{where}.tail.coeff")
    ratio = rational(tail.get("ratio", 0), f"{where}.tail.ratio")
    start = max(start, max(exceptional, default=-1) + 1)
    try:
        return GeometricSequence(exceptional, start, coeff, ratio)
    except ValueError as exc:
        raise ValidationError(f"{where}: {exc}", where) from None


def decode_set(obj: Any, where: str = "set") -> RepresentableSet:
    if not isinstance(obj, dict) or len(obj) != 1 or next(iter(obj)) not in ("finite", "cofinite"):
        raise ValidationError(f"{where}: expected {{\"finite\": [...]}} or {{\"cofinite\": [...]}}", where)
    kind, pts = next(iter(obj.items()))
    if not isinstance(pts, list):
        raise ValidationError(f"{where}.{kind}: expected a list of indices", where)
    members = [_index(t, f"{where}.{kind}") for t in pts]
    return RepresentableSet.finite(members) if kind == "finite" else RepresentableSet.cofinite_of(members)


def decode_space(obj: Any, where: str = "space") -> AtomicMeasureSpace:
    obj = _mapping(obj, where, {"weights", "infinite_atoms"})
    if "weights" not in obj:
        raise ValidationError(f"{where}: missing 'weights'", where)
    weights = decode_sequence(obj["weights"], f"{where}.weights")
    atoms = obj.get("infinite_atoms", [])
    if not isinstance(atoms, list):
        raise ValidationError(f"{where}.infinite_atoms: expected a list", where)
    atoms = frozenset(_index(t, f"{where}.infinite_atoms") for t in atoms)
    try:
        return AtomicMeasureSpace(weights, atoms, allow_infinite_atoms=bool(atoms))
    except ValueError as exc:
        raise ValidationError(f"{where}: {exc}", where) from None


def decode_target(obj: Any, approx: bool = False, where: str = "target"):
    """A FiniteDimSpace, or None for the c0 diagonal family."""
    obj = _mapping(obj, where, {"kind", "dim", "p"})
    kind = obj.get("kind")
    if kind == "c0":
        return None
    if kind != "finite":
        raise ValidationError(f"{where}.kind: expected 'finite' or 'c0', got {kind!r}", f"{where}.kind")
    dim = obj.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise ValidationError(f"{where}.dim: expected a positive integer", f"{where}.dim")
    try:
        return FiniteDimSpace(dim, obj.get("p", "inf"), approx)
    except ValueError as exc:
        raise ValidationError(f"{where}.p: {exc}", f"{where}.p") from None


def decode_vector(obj: Any, space: FiniteDimSpace, where: str = "vec") -> FiniteDimVector:
    if not isinstance(obj, list) or len(obj) != space.dim:
        raise ValidationError(f"{where}: expected a list of {space.dim} rationals", where)
    return space.vector([rational(c, f"{where}[{i}]") for i, c in enumerate(obj)])


def decode_function(obj: Any, target, where: str = "F") -> VectorFunction:
    obj = _mapping(obj, where, {"kind", "terms", "seq"})
    kind = obj.get("kind")
    if kind == "diagonal":
        if target is not None:
            raise ValidationError(f"{where}: a diagonal density needs a c0 target", f"{where}.kind")
        return DiagonalFunction(decode_sequence(obj.get("seq"), f"{where}.seq"))
    if kind != "rank":
        raise ValidationError(f"{where}.kind: expected 'rank' or 'diagonal', got {kind!r}", f"{where}.kind")
    if target is None:
        raise ValidationError(f"{where}: a rank density needs a finite-dimensional target", f"{where}.kind")
    terms = obj.get("terms", [])
    if not isinstance(terms, list):
        raise ValidationError(f"{where}.terms: expected a list", f"{where}.terms")
    decoded = []
    for i, term in enumerate(terms):
        term = _mapping(term, f"{where}.terms[{i}]", {"seq", "vec"})
        decoded.append((decode_sequence(term.get("seq"), f"{where}.terms[{i}].seq"),
                        decode_vector(term.get("vec"), target, f"{where}.terms[{i}].vec")))
    try:
        return RankDecomposedFunction(target, tuple(decoded))
    except ValueError as exc:
        raise ValidationError(f"{where}.terms: {exc}", f"{where}.terms") from None


def encode(value: Any) -> Any:
    """JSON-ready form of any library value."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if value is INF or isinstance(value, (Fraction, Surd)):
        return fmt(value)
    if isinstance(value, float):
        return "inf" if value == math.inf else value
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if hasattr(value, "to_json"):
        return value.to_json()
    raise TypeError(f"cannot encode {type(value).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(encode(obj), sort_keys=True, indent=2)


def load_json(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


@dataclass(frozen=True)
class Scenario:
    name: str
    space: AtomicMeasureSpace
    target: FiniteDimSpace | None
    F: VectorFunction
    multipliers: tuple = ()
    sets: tuple = ()
    checks: tuple = ()
    expect: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        target = {"kind": "c0"} if self.target is None else self.target.to_json()
        out = {
            "name": self.name,
            "space": self.space.to_json(),
            "target": target,
            "F": self.F.to_json(),
            "multipliers": [g.to_json() for g in self.multipliers],
            "sets": [A.to_json() for A in self.sets],
            "checks": list(self.checks),
        }
        if self.expect:
            out["expect"] = encode(self.expect)
        return out


SCENARIO_FIELDS = {"name", "space", "target", "F", "multipliers", "sets", "checks", "expect"}


def decode_scenario(obj: Any, known_checks, approx: bool = False) -> Scenario:
    obj = _mapping(obj, "scenario", SCENARIO_FIELDS)
    for key in ("space", "target", "F"):
        if key not in obj:
            raise ValidationError(f"scenario: missing '{key}'", key)
    target = decode_target(obj["target"], approx)
    checks = obj.get("checks", [])
    if not isinstance(checks, list) or not all(isinstance(c, str) for c in checks):
        raise ValidationError("checks: expected a list of names", "checks")
    unknown = [c for c in checks if c not in known_checks]
    if unknown:
        raise ValidationError(f"checks: unknown check(s) {unknown}; known: {sorted(known_checks)}", "checks")
    multipliers = obj.get("multipliers", [])
    sets = obj.get("sets", [])
    if not isinstance(multipliers, list):
        raise ValidationError("multipliers: expected a list", "multipliers")
    if not isinstance(sets, list):
        raise ValidationError("sets: expected a list", "sets")
    expect = obj.get("expect", {})
    if not isinstance(expect, dict):
        raise ValidationError("expect: expected an object", "expect")
    return Scenario(
        name=str(obj.get("name", "scenario")),
        space=decode_space(obj["space"]),
        target=target,
        F=decode_function(obj["F"], target),
        multipliers=tuple(decode_sequence(g, f"multipliers[{i}]") for i, g in enumerate(multipliers)),
        sets=tuple(decode_set(A, f"sets[{i}]") for i, A in enumerate(sets)),
        checks=tuple(checks),
        expect=dict(expect),
    )
