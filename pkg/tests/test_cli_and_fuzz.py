from __future__ import annotations

import json
from dataclasses import replace

import pytest

from vecmeasure import density
from vecmeasure.checks import CHECKS, INVARIANT_SUITE, run_scenario
from vecmeasure.cli import main
from vecmeasure.fuzz import minimize, run_fuzz
from vecmeasure.gallery import GALLERY

from test_serialize import minimal


def write(tmp_path, doc) -> str:
    path = tmp_path / "scenario.json"
    path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return str(path)


class TestVerify:
    def test_passing_scenario(self, tmp_path, capsys):
        assert main(["verify", write(tmp_path, minimal())]) == 0
        assert "PASS" in capsys.readouterr().out

    def test_json_report(self, tmp_path, capsys):
        assert main(["verify", write(tmp_path, minimal()), "--format", "json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["verdict"] == "PASS"
        assert report["scenarios"][0]["checks"][0]["name"] == "integrability-chain"

    def test_empty_check_list_passes(self, tmp_path, capsys):
        assert main(["verify", write(tmp_path, minimal(checks=[])), "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out)["scenarios"][0]["checks"] == []

    def test_failed_expectation_exits_one(self, tmp_path, capsys):
        doc = minimal(checks=["expectations"], expect={"bochner": False})
        assert main(["verify", write(tmp_path, doc)]) == 1
        assert "witness" in capsys.readouterr().out

    def test_input_errors_exit_two(self, tmp_path, capsys):
        assert main(["verify", str(tmp_path / "missing.json")]) == 2
        assert main(["verify", write(tmp_path, "{not json")]) == 2
        assert main(["verify", write(tmp_path, minimal(checks=["bogus"]))]) == 2
        assert main(["verify", write(tmp_path, minimal(expect={"colour": True}))]) == 2
        err = capsys.readouterr().err
        assert "scenario.json:1:" in err and "bogus" in err

    def test_infinite_atom_exits_two(self, tmp_path):
        doc = minimal()
        doc["space"]["infinite_atoms"] = [3]
        assert main(["verify", write(tmp_path, doc)]) == 2

    def test_usage_error_exits_two(self):
        assert main(["frobnicate"]) == 2

    def test_approx_mode(self, tmp_path):
        doc = minimal(target={"kind": "finite", "dim": 2, "p": 2}, checks=list(INVARIANT_SUITE))
        assert main(["--approx", "verify", write(tmp_path, doc)]) == 0


class TestGallery:
    def test_list(self, capsys):
        assert main(["gallery", "--list"]) == 0
        out = capsys.readouterr().out
        for name in GALLERY:
            assert name in out

    def test_every_entry_passes(self):
        for scenarios in GALLERY.values():
            for scenario in scenarios:
                report = run_scenario(scenario)
                assert report.passed, (scenario.name, report.first_failure())

    def test_named_entry_in_approx_mode(self):
        assert main(["--approx", "gallery", "example10-rank-one"]) == 0

    def test_unknown_entry(self):
        assert main(["gallery", "nope"]) == 2

    def test_constant_line_report(self, capsys):
        assert main(["gallery", "example5", "--format", "json"]) == 0
        report = json.loads(capsys.readouterr().out)
        rows = {r["name"]: r for r in report["scenarios"][0]["checks"]}
        assert rows["expectations"]["verdict"] == "PASS"

    def test_diagonal_ones_report(self):
        scenario = GALLERY["c0-diagonal-ones"][0]
        assert scenario.expect["dunford"] and not scenario.expect["pettis"]
        assert scenario.expect["bounded"] and not scenario.expect["strongly_additive"]
        assert run_scenario(scenario).passed


class TestFuzz:
    def test_zero_cases(self, capsys):
        assert main(["fuzz", "--seed", "1", "--cases", "0"]) == 0
        assert "PASS" in capsys.readouterr().out

    def test_negative_cases_rejected(self):
        assert main(["fuzz", "--seed", "1", "--cases", "-1"]) == 2

    def test_deterministic(self):
        a, b = run_fuzz(3, 4), run_fuzz(3, 4)
        assert a.passed and a.to_json() == b.to_json()

    def test_cli_output_is_stable(self, capsys):
        main(["fuzz", "--seed", "5", "--cases", "2", "--format", "json"])
        first = capsys.readouterr().out
        main(["fuzz", "--seed", "5", "--cases", "2", "--format", "json"])
        assert capsys.readouterr().out == first

    def test_dropped_tail_term_is_caught(self, monkeypatch):
        original = density.atom_terms

        def without_tail(nu, g, A):
            terms = original(nu, g, A)
            return terms[:-1] if not nu.tail_vector.is_zero else terms

        monkeypatch.setattr(density, "atom_terms", without_tail)
        report = run_fuzz(42, 20)
        assert not report.passed
        failure = report.failure
        assert failure["witness"] is not None and not failure["witness"]["ok"]
        assert failure["check"] in CHECKS
        # the minimized scenario still fails the same check under the mutant
        from vecmeasure.serialize import decode_scenario

        small = decode_scenario(failure["scenario"], CHECKS)
        assert not run_scenario(small).passed

    def test_minimize_requires_a_failure(self):
        scenario = replace(GALLERY["example5"][0], checks=("integrability-chain",))
        with pytest.raises(ValueError):
            minimize(scenario, "integrability-chain")
