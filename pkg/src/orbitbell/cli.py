"""Command-line front end.

Subcommands: ``analyze`` one instance (text report or JSON
certificate), ``table`` the two-setting survey over a range of outcome
counts, ``game`` the induced nonlocal game, ``verify`` the structural
cross-check sweep. Exit codes: 0 success, 1 verification failure,
2 usage error, 3 instance over the enumeration guard.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .bounds import InstanceTooLarge
from .certificate import build_certificate, certificate_json
from .games import AnalysisReport, analyze
from .orbit import ProblemSpec
from .verify import run_verification

__all__ = ["main", "build_parser"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitbell",
        description=(
            "Bell inequalities, quantum/classical bounds, and nonlocal "
            "games generated by cyclic orbits of two-party product states."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze one instance")
    p.add_argument("--outcomes", type=int, required=True, help="outcomes per setting (>= 2)")
    p.add_argument("--settings", type=int, required=True, help="settings per party (>= 1)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", default=None, help="write the report to this file instead of stdout")
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser("table", help="two-setting survey over a range of outcome counts")
    p.add_argument("--outcomes-from", type=int, required=True)
    p.add_argument("--outcomes-to", type=int, required=True)
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("game", help="print the induced nonlocal game")
    p.add_argument("--outcomes", type=int, required=True)
    p.add_argument("--settings", type=int, required=True)
    p.set_defaults(handler=cmd_game)

    p = sub.add_parser("verify", help="run the structural cross-check sweep")
    p.add_argument("--outcomes-max", type=int, default=6)
    p.add_argument("--settings-max", type=int, default=6)
    p.set_defaults(handler=cmd_verify)

    return parser


def _spec_or_usage(parser: argparse.ArgumentParser, outcomes: int, settings: int) -> ProblemSpec:
    try:
        return ProblemSpec(outcomes, settings)
    except ValueError as exc:
        parser.error(str(exc))
        raise AssertionError("unreachable")


def _fmt(x: float) -> str:
    return f"{x:.4f}"


def render_text_report(report: AnalysisReport) -> str:
    ineq = report.inequality
    spec = report.spec
    lines = [
        "Bell inequality from the cyclic step orbit",
        f"  outcomes per setting: {spec.outcomes}",
        f"  settings per party:   {spec.settings}",
        f"  orbit length:         {spec.orbit_length}",
        "",
        "bounds",
        f"  quantum bound  Q_s = {_fmt(ineq.quantum_bound)}",
        f"  classical bound C_s = {ineq.classical_bound}",
        f"  per-term probability at the optimum = "
        f"{_fmt(ineq.quantum_bound / spec.orbit_length)}",
        "",
        f"nonlocal game (uniform over {len(report.game.questions)} questions)",
        f"  quantum win   = {_fmt(report.quantum_win)}",
        f"  classical win = {_fmt(report.classical_win)}",
    ]
    if report.prediction_prob is not None:
        lines += [
            "",
            "two-setting statistics",
            f"  prediction probability p = {_fmt(report.prediction_prob)}",
            f"  mutual information = {_fmt(report.mutual_info_bits)} bits",
        ]
    lines += ["", "terms (alice setting,outcome | bob setting,outcome | probability)"]
    for (a, b), prob in zip(ineq.terms, ineq.per_term_probs):
        lines.append(
            f"  ({a.setting},{a.outcome} | {b.setting},{b.outcome})  {_fmt(prob)}"
        )
    lines += [
        "",
        "classical witness",
        f"  alice outcomes by setting: {list(ineq.witness.alice_map)}",
        f"  bob outcomes by setting:   {list(ineq.witness.bob_map)}",
        "",
    ]
    return "\n".join(lines)


def render_game(report: AnalysisReport) -> str:
    lines = ["questions (alice_setting, bob_setting) and winning outcome pairs"]
    for (s, t), win in zip(report.game.questions, report.game.winning):
        answers = " ".join(f"({a},{b})" for a, b in sorted(win))
        lines.append(f"  ({s}, {t}): {answers}")
    lines += [
        f"classical_win = {_fmt(report.classical_win)}",
        f"quantum_win = {_fmt(report.quantum_win)}",
        "",
    ]
    return "\n".join(lines)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_analyze(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    spec = _spec_or_usage(parser, args.outcomes, args.settings)
    report = analyze(spec)
    if args.format == "json":
        text = certificate_json(build_certificate(report)) + "\n"
    else:
        text = render_text_report(report)
    _emit(text, args.out)
    return 0


def cmd_table(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    lo, hi = args.outcomes_from, args.outcomes_to
    if lo < 2:
        parser.error("--outcomes-from must be at least 2")
    if hi < lo:
        parser.error("--outcomes-to must not be smaller than --outcomes-from")
    rows = ["   d     Q_s  C_s       p    I_ab"]
    for d in range(lo, hi + 1):
        report = analyze(ProblemSpec(d, 2))
        rows.append(
            f"{d:4d}  {report.quantum_bound:.4f}  {report.classical_bound:3d}"
            f"  {report.prediction_prob:.4f}  {report.mutual_info_bits:.4f}"
        )
    sys.stdout.write("\n".join(rows) + "\n")
    return 0


def cmd_game(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    spec = _spec_or_usage(parser, args.outcomes, args.settings)
    sys.stdout.write(render_game(analyze(spec)))
    return 0


def cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.outcomes_max < 2:
        parser.error("--outcomes-max must be at least 2")
    if args.settings_max < 1:
        parser.error("--settings-max must be at least 1")
    report = run_verification(args.outcomes_max, args.settings_max)
    sys.stdout.write("\n".join(report.lines()) + "\n")
    return 0 if report.passed else 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, parser)
    except InstanceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
