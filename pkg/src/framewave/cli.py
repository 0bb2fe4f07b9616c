"""Command-line interface.

    framewave verify bas        eigenphase-identity sweeps, all four kinds
    framewave verify classical  generating functions, transport, bridge
    framewave run covariance    covariance scenarios (built in or --config)
    framewave run momentum      momentum-route duality scenarios
    framewave report            full suite; writes reports and figures

Common flags: --config <path>, --out <dir>, --format {json,csv}, --seed <int>,
--quiet.  Exit code 0 when every check passes, 1 when any check fails, 2 on a
configuration error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import ConfigError, load_scenarios
from .harness import (
    default_scenarios,
    run_bas_sweep,
    run_classical_suite,
    run_full_suite,
    run_scenario,
)
from .reporting import Report, format_number
from .transforms import TRANSFORM_KINDS

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, default=None,
                        help="scenario YAML file (defaults to built-in scenarios)")
    parser.add_argument("--out", type=Path, default=None,
                        help="directory for report files (created if missing)")
    parser.add_argument("--format", choices=("json", "csv"), default="csv",
                        help="report file format (default: csv)")
    parser.add_argument("--seed", type=int, default=0,
                        help="base seed for random sweeps (default: 0)")
    parser.add_argument("--quiet", action="store_true",
                        help="suppress per-check output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framewave",
        description="Frame-change verification laboratory for 1D wavefunctions.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="identity and suite checks")
    verify_kinds = verify.add_subparsers(dest="suite", required=True)
    bas = verify_kinds.add_parser("bas", help="eigenphase-identity sweeps")
    bas.add_argument("--samples", type=int, default=10_000,
                     help="draws per transform kind (default: 10000)")
    _add_common_flags(bas)
    classical = verify_kinds.add_parser("classical",
                                        help="generating-function suite")
    _add_common_flags(classical)

    run = commands.add_parser("run", help="scenario experiments")
    run_kinds = run.add_subparsers(dest="experiment", required=True)
    for name, description in (
        ("covariance", "transform/propagate route comparison"),
        ("momentum", "position-route vs momentum-route duality"),
    ):
        sub = run_kinds.add_parser(name, help=description)
        _add_common_flags(sub)

    report = commands.add_parser(
        "report", help="full suite with report files and figures"
    )
    _add_common_flags(report)
    return parser


def _emit(report: Report, args, render_figure: bool) -> None:
    if not args.quiet:
        for check in report.checks:
            line = (
                f"[{check.status.upper():4s}] {report.name}: {check.name}"
                f" {check.metric}={format_number(check.value)}"
            )
            if check.tolerance is not None:
                line += f" tolerance={format_number(check.tolerance)}"
            if check.failed and check.detail:
                line += f"  <- {check.detail}"
            print(line)
    if args.out is None:
        return
    args.out.mkdir(parents=True, exist_ok=True)
    stem = report.name.replace("/", "-")
    if args.format == "json":
        (args.out / f"{stem}.json").write_text(report.to_json())
    else:
        (args.out / f"{stem}.csv").write_text(report.to_csv())
    if render_figure:
        from .plots import render_report_figure

        render_report_figure(report, args.out / f"{stem}.png")


def _scenarios(args, wanted_check: str | None = None) -> list:
    scenarios = (
        load_scenarios(args.config) if args.config else default_scenarios()
    )
    if wanted_check is None:
        return scenarios
    selected = [s for s in scenarios if wanted_check in s.checks]
    if not selected:
        raise ConfigError(f"no scenario requests the {wanted_check!r} check")
    for scenario in selected:
        scenario.checks = (wanted_check,)
    return selected


def _run(args) -> list:
    if args.command == "verify" and args.suite == "bas":
        return [
            run_bas_sweep(kind, n_samples=args.samples, seed=args.seed + index)
            for index, kind in enumerate(TRANSFORM_KINDS)
        ]
    if args.command == "verify" and args.suite == "classical":
        return [run_classical_suite(seed=args.seed)]
    if args.command == "run":
        wanted = "covariance" if args.experiment == "covariance" else "momentum"
        return [run_scenario(s) for s in _scenarios(args, wanted)]
    if args.command == "report":
        if args.out is None:
            args.out = Path("reports")
        return run_full_suite(seed=args.seed, scenarios=_scenarios(args))
    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        reports = _run(args)
    except ConfigError as err:
        print(f"configuration error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    render_figures = args.command == "report"
    failed = False
    for report in reports:
        _emit(report, args, render_figures)
        failed = failed or report.failed
    if not args.quiet:
        verdict = "FAIL" if failed else "PASS"
        total = sum(len(r.checks) for r in reports)
        print(f"{verdict}: {total} checks across {len(reports)} reports")
    return EXIT_FAIL if failed else EXIT_PASS


if __name__ == "__main__":
    sys.exit(main())
