"""Command-line front end.

Subcommands:

- ``fit``: run the full pipeline on the bundled series or a CSV file, print a
  JSON or text report, optionally export figure data.
- ``predict``: evaluate Y = A * L^exp_labor * K^exp_capital once.

Exit codes: 0 success, 1 input error, 2 numeric degeneracy.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .dataset import parse_csv, reference_series
from .errors import DegeneracyError, InputError
from .export import export_report
from .report import run_pipeline, to_json, to_text

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DEGENERATE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cdgrowth",
        description="Fit Cobb-Douglas production functions from exponential growth structure.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fit = sub.add_parser("fit", help="run the full estimation pipeline")
    source = fit.add_mutually_exclusive_group(required=True)
    source.add_argument("--embedded", action="store_true", help="use the bundled 1899-1922 series")
    source.add_argument("--input", metavar="PATH", help="CSV file with header year,output,capital,labor")
    fit.add_argument(
        "--raw-levels",
        action="store_true",
        help="input columns are index levels; natural logs are applied (default: columns are logs)",
    )
    fit.add_argument("--format", choices=("json", "text"), default="text", help="report format")
    fit.add_argument("--export", metavar="DIR", help="write figure-data CSVs to this directory")
    fit.add_argument("--svg", action="store_true", help="also render SVG charts when exporting")
    fit.add_argument(
        "--time-origin",
        choices=("zero", "one"),
        default="zero",
        help="whether the first observation sits at t=0 or t=1",
    )

    predict = sub.add_parser("predict", help="evaluate a production function once")
    predict.add_argument("--tfp", type=float, required=True, help="total factor productivity A")
    predict.add_argument("--exp-labor", type=float, required=True, help="exponent on labor")
    predict.add_argument("--exp-capital", type=float, required=True, help="exponent on capital")
    predict.add_argument("--labor", type=float, required=True, help="labor input L > 0")
    predict.add_argument("--capital", type=float, required=True, help="capital input K > 0")
    return parser


def _cmd_fit(args: argparse.Namespace) -> int:
    if args.embedded:
        table = reference_series()
    else:
        try:
            text = Path(args.input).read_text(encoding="utf-8")
        except OSError as exc:
            print(f"error [dataset]: cannot read {args.input}: {exc}", file=sys.stderr)
            return EXIT_INPUT
        table = parse_csv(text, values_are_logs=not args.raw_levels)

    report = run_pipeline(table, time_origin=0 if args.time_origin == "zero" else 1)
    sys.stdout.write(to_json(report) if args.format == "json" else to_text(report))

    if args.export:
        export_report(report, table, args.export, svg=args.svg)
    return EXIT_OK


def _cmd_predict(args: argparse.Namespace) -> int:
    if args.labor <= 0 or args.capital <= 0:
        print("error [predict]: labor and capital must be positive", file=sys.stderr)
        return EXIT_INPUT
    if args.tfp <= 0:
        print("error [predict]: tfp must be positive", file=sys.stderr)
        return EXIT_INPUT
    exponent_sum = args.exp_labor + args.exp_capital
    if abs(exponent_sum - 1.0) > 1e-9:
        print(
            f"warning [predict]: exponents sum to {exponent_sum!r}, not 1; "
            "the model does not have constant returns to scale",
            file=sys.stderr,
        )
    value = args.tfp * args.labor**args.exp_labor * args.capital**args.exp_capital
    print(f"{value:.12g}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "fit":
            return _cmd_fit(args)
        return _cmd_predict(args)
    except InputError as exc:
        print(f"error [dataset]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DegeneracyError as exc:
        print(f"error [degeneracy]: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except OSError as exc:
        print(f"error [io]: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
