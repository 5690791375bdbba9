"""Command-line front end.

Exit codes: 0 when a certificate is granted or every check passes, 2 when
the verdict is any NotCovered variant or a check fails, 1 on errors of any
kind (bad input, rank cap, corrupted report).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, Optional, Sequence

from .registry import list_examples, run_example
from .reporting import (
    SCHEMA_VERSION,
    TOOL_VERSION,
    build_check_report,
    build_ehm_report,
    build_grading_report,
    build_orbits_report,
    build_saturate_report,
    enforce_rank_cap,
    parse_spec,
    render_text,
    verify_check_report,
    _envelope,
)


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with code 1; code 2 is reserved for verdicts."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.exit(1, f"{self.prog}: error: {message}\n")


def _load_spec(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        spec = parse_spec(fh.read())
    enforce_rank_cap(spec)
    return spec


def _emit(report: dict[str, Any], fmt: str, elapsed_ms: float) -> None:
    report["timing_ms"] = round(elapsed_ms, 3)
    if fmt == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print(render_text(report))


def _verdict_code(report: dict[str, Any]) -> int:
    if "verdict" in report:
        return 0 if report["verdict"]["status"] == "CertifiedFlexible" else 2
    if "all_ok" in report:
        return 0 if report["all_ok"] else 2
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    report = build_check_report(_load_spec(args.file))
    verify_check_report(report)
    _emit(report, args.format, (time.perf_counter() - start) * 1000)
    return _verdict_code(report)


def _cmd_saturate(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    report = build_saturate_report(_load_spec(args.file))
    _emit(report, args.format, (time.perf_counter() - start) * 1000)
    return 0


def _cmd_orbits(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    report = build_orbits_report(_load_spec(args.file))
    _emit(report, args.format, (time.perf_counter() - start) * 1000)
    return 0


def _cmd_grading(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    report = build_grading_report(_load_spec(args.file), args.face)
    verify_check_report(report)
    _emit(report, args.format, (time.perf_counter() - start) * 1000)
    return 0


def _cmd_ehm(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    report = build_ehm_report(args.p, args.q, args.m, args.bound)
    _emit(report, args.format, (time.perf_counter() - start) * 1000)
    return _verdict_code(report)


def _cmd_examples(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    if args.examples_command == "list":
        report = _envelope("examples list", {"examples": list_examples()})
        _emit(report, args.format, (time.perf_counter() - start) * 1000)
        return 0
    report = run_example(args.name)
    verify_check_report(report)
    _emit(report, args.format, (time.perf_counter() - start) * 1000)
    return _verdict_code(report)


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )


def build_parser() -> _Parser:
    parser = _Parser(
        prog="horoflex",
        description=(
            "Flexibility certificates for affine varieties given by finitely"
            " generated weight semigroups."
        ),
    )
    parser.add_argument("--version", action="version", version=TOOL_VERSION)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="full verdict with per-orbit grading witnesses")
    p.add_argument("file", help="JSON datum file")
    _add_format(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("saturate", help="close the semigroup inside its cone")
    p.add_argument("file", help="JSON datum file")
    _add_format(p)
    p.set_defaults(func=_cmd_saturate)

    p = sub.add_parser("orbits", help="face lattice with off-face generators")
    p.add_argument("file", help="JSON datum file")
    _add_format(p)
    p.set_defaults(func=_cmd_orbits)

    p = sub.add_parser("grading", help="grading witness for one face")
    p.add_argument("file", help="JSON datum file")
    p.add_argument("--face", type=int, required=True, help="face index")
    _add_format(p)
    p.set_defaults(func=_cmd_grading)

    p = sub.add_parser("ehm", help="hypersurface family identity checks")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--bound", type=int, default=8, help="monomial degree bound")
    _add_format(p)
    p.set_defaults(func=_cmd_ehm)

    p = sub.add_parser("examples", help="bundled example suite")
    esub = p.add_subparsers(dest="examples_command", required=True)
    e = esub.add_parser("list", help="list example names")
    _add_format(e)
    e.set_defaults(func=_cmd_examples, examples_command="list")
    e = esub.add_parser("run", help="run one example")
    e.add_argument("name")
    _add_format(e)
    e.set_defaults(func=_cmd_examples, examples_command="run")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BrokenPipeError:
        return 1
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
