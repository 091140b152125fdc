from __future__ import annotations

import json
import random
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import rep_sets, sequences
from vecmeasure.checks import CHECKS
from vecmeasure.errors import ParseError, ValidationError
from vecmeasure.gallery import GALLERY
from vecmeasure.generators import random_scenario
from vecmeasure.scalars import INF
from vecmeasure.serialize import (
    decode_scenario,
    decode_sequence,
    decode_set,
    decode_target,
    dumps,
    encode,
    load_json,
    rational,
)
from vecmeasure.surd import sqrt_rational


def minimal(**overrides) -> dict:
    doc = {
        "name": "tiny",
        "space": {"weights": {"tail": {"start": 0, "coeff": "1/1", "ratio": "1/2"}}},
        "target": {"kind": "finite", "dim": 2, "p": "inf"},
        "F": {"kind": "rank", "terms": [{"seq": {"exceptional": {"0": "1/1"}}, "vec": ["1/1", "-1/2"]}]},
        "checks": ["integrability-chain"],
    }
    doc.update(overrides)
    return doc


@given(sequences())
def test_sequence_round_trip(s):
    assert decode_sequence(json.loads(json.dumps(s.to_json()))) == s


@given(rep_sets())
def test_set_round_trip(A):
    assert decode_set(A.to_json()) == A


def test_scenario_round_trip_is_lossless():
    rng = random.Random(0)
    for i in range(30):
        scenario = random_scenario(rng, tuple(CHECKS)[:3], name=f"s{i}")
        again = decode_scenario(json.loads(dumps(scenario.to_json())), CHECKS)
        assert again == scenario


def test_gallery_round_trips():
    for scenarios in GALLERY.values():
        for scenario in scenarios:
            assert decode_scenario(scenario.to_json(), CHECKS) == scenario


def test_rationals_are_strings_and_canonical():
    assert rational("6/4", "x") == Fraction(3, 2)
    assert rational(3, "x") == 3
    assert encode(Fraction(6, 4)) == "3/2"
    assert encode(INF) == "inf"
    assert encode(sqrt_rational(8)) == "2/1*sqrt(2)"


def test_floats_and_booleans_rejected():
    with pytest.raises(ValidationError):
        rational(0.5, "x")
    with pytest.raises(ValidationError):
        rational(True, "x")
    with pytest.raises(ValidationError):
        decode_sequence({"tail": {"coeff": 0.5}})


def test_unknown_fields_rejected_with_location():
    with pytest.raises(ValidationError) as info:
        decode_sequence({"tail": {"start": 0, "speed": "1/1"}}, "F.seq")
    assert info.value.field == "F.seq.tail"
    with pytest.raises(ValidationError):
        decode_scenario(minimal(colour="red"), CHECKS)


def test_unknown_check_rejected():
    with pytest.raises(ValidationError) as info:
        decode_scenario(minimal(checks=["no-such-check"]), CHECKS)
    assert "no-such-check" in str(info.value)


def test_family_mismatch_rejected():
    with pytest.raises(ValidationError):
        decode_scenario(minimal(target={"kind": "c0"}), CHECKS)
    with pytest.raises(ValidationError):
        decode_target({"kind": "finite", "dim": 2, "p": 3})


def test_bad_sets_rejected():
    with pytest.raises(ValidationError):
        decode_set({"finite": [-1]})
    with pytest.raises(ValidationError):
        decode_set({"some": [1]})


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as info:
        load_json('{"a": 1,\n  oops}', "bad.json")
    assert str(info.value).startswith("bad.json:2:")


def test_dumps_is_deterministic():
    scenario = GALLERY["example5"][0]
    assert dumps(scenario.to_json()) == dumps(scenario.to_json())


def test_minimal_document_decodes():
    scenario = decode_scenario(minimal(), CHECKS)
    assert scenario.name == "tiny"
    assert scenario.F(0).coords == (1, Fraction(-1, 2))
