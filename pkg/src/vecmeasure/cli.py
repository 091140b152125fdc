"""Command line: verify scenario files, run the gallery, fuzz the invariants.

Exit codes: 0 when every check passes, 1 on any failure, 2 on unreadable or
invalid input.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .checks import CHECKS, ScenarioReport, run_scenario, validate_expectations
from .errors import NotLocallyDeterminedError, ScenarioError
from .fuzz import run_fuzz
from .gallery import GALLERY
from .serialize import Scenario, decode_scenario, dumps, load_json

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def load_scenario(path: str, approx: bool = False) -> Scenario:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ScenarioError(f"{path}: {exc.strerror}") from None
    scenario = decode_scenario(load_json(text, path), CHECKS, approx)
    validate_expectations(scenario)
    return scenario


def _with_approx(scenario: Scenario) -> Scenario:
    return decode_scenario(scenario.to_json(), CHECKS, approx=True)


def format_text(reports: list[ScenarioReport]) -> str:
    lines = []
    for report in reports:
        lines.append(f"scenario {report.name}: {'PASS' if report.passed else 'FAIL'}")
        for r in report.results:
            lines.append(f"  {r.name:<22} {'PASS' if r.passed else 'FAIL'}  ({len(r.rows)} rows)")
            if not r.passed:
                lines.append(f"    witness: {dumps(r.witness).replace(chr(10), ' ')}")
    if not reports:
        lines.append("no scenarios")
    return "\n".join(lines)


def _emit(reports: list[ScenarioReport], fmt: str) -> int:
    if fmt == "json":
        passed = all(r.passed for r in reports)
        print(dumps({"verdict": "PASS" if passed else "FAIL", "scenarios": [r.to_json() for r in reports]}))
    else:
        print(format_text(reports))
    return EXIT_PASS if all(r.passed for r in reports) else EXIT_FAIL


def cmd_verify(args) -> int:
    scenario = load_scenario(args.file, args.approx)
    return _emit([run_scenario(scenario)], args.format)


def cmd_gallery(args) -> int:
    if args.list:
        for name, scenarios in GALLERY.items():
            print(f"{name} ({len(scenarios)} scenario{'s' if len(scenarios) > 1 else ''})")
        return EXIT_PASS
    if args.name is not None and args.name not in GALLERY:
        print(f"unknown gallery entry {args.name!r}; try --list", file=sys.stderr)
        return EXIT_INPUT
    names = [args.name] if args.name else list(GALLERY)
    reports = []
    for name in names:
        for scenario in GALLERY[name]:
            reports.append(run_scenario(_with_approx(scenario) if args.approx else scenario))
    return _emit(reports, args.format)


def cmd_fuzz(args) -> int:
    if args.cases < 0:
        print("--cases must be >= 0", file=sys.stderr)
        return EXIT_INPUT
    report = run_fuzz(args.seed, args.cases, args.approx)
    if args.format == "json":
        print(dumps(report.to_json()))
    else:
        print(f"fuzz seed={report.seed} cases={report.cases} executed={report.executed}: "
              f"{'PASS' if report.passed else 'FAIL'}")
        if report.failure:
            print(f"  case {report.failure['case']} failed {report.failure['check']}")
            print(f"  witness: {dumps(report.failure['witness']).replace(chr(10), ' ')}")
            print("  minimized scenario:")
            print("    " + dumps(report.failure["scenario"]).replace("\n", "\n    "))
    return EXIT_PASS if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vecmeasure", description=__doc__.splitlines()[0])
    parser.add_argument("--approx", action="store_true", help="float p=2 norms, compared with tolerance 1e-9")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the checks listed in a scenario file")
    verify.add_argument("file")
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.set_defaults(func=cmd_verify)

    gallery = sub.add_parser("gallery", help="run the built-in scenarios")
    gallery.add_argument("name", nargs="?")
    gallery.add_argument("--list", action="store_true")
    gallery.add_argument("--format", choices=("text", "json"), default="text")
    gallery.set_defaults(func=cmd_gallery)

    fuzz = sub.add_parser("fuzz", help="run the invariant suite on seeded random scenarios")
    fuzz.add_argument("--seed", type=int, required=True)
    fuzz.add_argument("--cases", type=int, required=True)
    fuzz.add_argument("--format", choices=("text", "json"), default="text")
    fuzz.set_defaults(func=cmd_fuzz)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_PASS
    try:
        return args.func(args)
    except (ScenarioError, NotLocallyDeterminedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
