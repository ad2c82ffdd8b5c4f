"""Command-line front end: generate, verify, table, eval, bench.

Exit codes: 0 success / all identities pass, 1 a verification failed,
2 usage or input error, 3 internal generation failure.  Data goes to
stdout (or ``--output``); diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .algebra import render_xpoly
from .blowup import (
    GenerationError,
    build_series_set,
    golden_diff,
    golden_table_hash,
    series_set,
)
from .pairing import (
    InsufficientMomentsError,
    MomentFunctional,
    eval_even,
    eval_even_main_prime,
    eval_odd,
)
from .series import SeriesError, TSeries
from .verify import golden_check, run_catalog

SELECTORS = {
    "B": "b",
    "S": "s",
    "B2": "b2",
    "S2": "s2",
    "BS": "bs",
    "WS0": "ws0",
    "WS1": "ws1",
    "BPLUS": "b_plus",
    "BMINUS": "b_minus",
}

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_GENERATION = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blowup-series",
        description="Exact universal blow-up series: generation, identity "
        "verification, golden-table comparison, and moment evaluation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate one series and print it")
    gen.add_argument("--series", required=True, choices=sorted(SELECTORS))
    gen.add_argument("--order", type=int, default=28)
    gen.add_argument("--format", choices=("json", "latex", "table"), default="table")
    gen.add_argument("--normalization", choices=("plain", "factorial"), default="factorial")
    gen.add_argument("--output", type=Path, default=None)

    ver = sub.add_parser("verify", help="run the identity catalog, one JSON report per line")
    ver.add_argument("--order", type=int, default=28)
    ver.add_argument("--bivariate-order", type=int, default=16)
    ver.add_argument("--jobs", type=int, default=1)
    ver.add_argument(
        "--identity",
        action="append",
        default=None,
        help="run only this identity id (repeatable)",
    )
    ver.add_argument("--output", type=Path, default=None)

    tab = sub.add_parser("table", help="regenerate and diff against the golden table")
    tab.add_argument("--order", type=int, default=28)
    tab.add_argument("--output", type=Path, default=None)

    ev = sub.add_parser("eval", help="evaluate moment data through the pairing formulas")
    ev.add_argument("request", type=Path, help="JSON evaluation request")
    ev.add_argument("--output", type=Path, default=None)

    bench = sub.add_parser("bench", help="time generation and every catalog identity")
    bench.add_argument("--order", type=int, default=28)
    bench.add_argument("--bivariate-order", type=int, default=16)
    bench.add_argument("--output", type=Path, default=None)

    return parser


def _emit(text: str, output: "Path | None") -> None:
    if output is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        output.write_text(text if text.endswith("\n") else text + "\n")


def _latex_lines(name: str, series: TSeries, normalization: str) -> list[str]:
    lines = [f"{name}(t) ="]
    first = True
    for n, c in series.terms():
        poly = series.coeff(n, normalized=(normalization == "factorial"))
        body = render_xpoly(poly)
        if n == 0:
            tpart = ""
        elif n == 1:
            tpart = "t"
        elif normalization == "factorial":
            tpart = f"\\frac{{t^{{{n}}}}}{{{n}!}}"
        else:
            tpart = f"t^{{{n}}}"
        if poly == 1 and n >= 1:
            piece = tpart
        elif n == 0 and poly.degree == 0 and not body.startswith("-"):
            piece = body
        else:
            piece = f"({body})" + (f" {tpart}" if tpart else "")
        prefix = "  " if first else "  + "
        lines.append(prefix + piece)
        first = False
    if first:
        lines.append("  0")
    return lines


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.order < 0:
        print("gen: --order must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    # the recurrence needs at least order 4, plus one guard order so that
    # derivative-based series still reach the requested order
    internal = max(args.order, 4) + 1
    try:
        st = series_set(internal)
    except GenerationError as exc:
        print(f"gen: generation failed: {exc}", file=sys.stderr)
        return EXIT_GENERATION
    series = getattr(st, SELECTORS[args.series]).truncate(args.order)

    if args.format == "json":
        text = json.dumps(series.to_json(args.normalization), indent=2, sort_keys=True)
    elif args.format == "latex":
        text = "\n".join(_latex_lines(args.series, series, args.normalization))
    else:
        rows = [f"# series {args.series} order {args.order} normalization {args.normalization}"]
        for n, _ in series.terms():
            poly = series.coeff(n, normalized=(args.normalization == "factorial"))
            rows.append(f"{n}\t{render_xpoly(poly)}")
        text = "\n".join(rows)
    _emit(text, args.output)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.order < 8:
        print("verify: --order must be >= 8", file=sys.stderr)
        return EXIT_USAGE
    if args.jobs < 1:
        print("verify: --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        series = build_series_set(args.order + 1)
        reports = run_catalog(
            series,
            args.order,
            bivariate_order=args.bivariate_order,
            jobs=args.jobs,
            identities=args.identity,
        )
    except GenerationError as exc:
        print(f"verify: generation failed: {exc}", file=sys.stderr)
        return EXIT_GENERATION
    except ValueError as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = "\n".join(json.dumps(r.to_json(), sort_keys=True) for r in reports)
    _emit(text, args.output)
    failed = [r.identity for r in reports if not r.passed]
    if failed:
        print(f"verify: FAILED: {', '.join(failed)}", file=sys.stderr)
        return EXIT_FAIL
    print(f"verify: all {len(reports)} identities pass through the requested orders", file=sys.stderr)
    return EXIT_OK


def _cmd_table(args: argparse.Namespace) -> int:
    if args.order < 16:
        print("table: --order must be >= 16 to cover the golden table", file=sys.stderr)
        return EXIT_USAGE
    try:
        series = build_series_set(args.order + 1)
    except GenerationError as exc:
        print(f"table: generation failed: {exc}", file=sys.stderr)
        return EXIT_GENERATION
    report = golden_check(series)
    lines = [json.dumps({**report.to_json(), "golden_hash": golden_table_hash()}, sort_keys=True)]
    diffs = golden_diff(series)
    for diff in diffs:
        lines.append(json.dumps(diff.to_json(), sort_keys=True))
    _emit("\n".join(lines), args.output)
    if diffs:
        print(f"table: {len(diffs)} coefficient slots differ from the golden table", file=sys.stderr)
        return EXIT_FAIL
    print("table: exact match with the golden table", file=sys.stderr)
    return EXIT_OK


def _load_functional(value, base: Path, field: str) -> MomentFunctional:
    if isinstance(value, str):
        payload = json.loads((base / value).read_text())
        return MomentFunctional.from_json(payload)
    if isinstance(value, dict):
        return MomentFunctional.from_json(value)
    raise ValueError(f"functional {field!r} must be an object or a file path string")


def _cmd_eval(args: argparse.Namespace) -> int:
    try:
        request = json.loads(args.request.read_text())
        parity = request.get("parity")
        if parity not in ("even", "odd"):
            raise ValueError("request needs parity 'even' or 'odd'")
        order = request.get("order")
        if not isinstance(order, int) or order < 0:
            raise ValueError("request needs a non-negative integer 'order'")
        functionals = request.get("functionals")
        if not isinstance(functionals, dict):
            raise ValueError("request needs a 'functionals' object")
        base = args.request.parent
        formula = request.get("formula", "maina" if parity == "even" else "mainb")

        def need(field: str) -> MomentFunctional:
            if field not in functionals:
                raise ValueError(f"{parity} parity ({formula}) requires functional {field!r}")
            return _load_functional(functionals[field], base, field)

        if parity == "even" and formula == "maina":
            result = eval_even(need("mu_c"), need("mu_ctau"), order)
        elif parity == "even" and formula == "main-prime":
            result = eval_even_main_prime(need("mu_c"), need("nu_c"), order)
        elif parity == "odd" and formula == "mainb":
            result = eval_odd(need("mu_c"), need("nu_c"), order)
        else:
            raise ValueError(f"unknown formula {formula!r} for parity {parity!r}")
    except GenerationError as exc:
        print(f"eval: generation failed: {exc}", file=sys.stderr)
        return EXIT_GENERATION
    except (
        OSError,
        json.JSONDecodeError,
        ValueError,
        InsufficientMomentsError,
        SeriesError,
    ) as exc:
        print(f"eval: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(json.dumps(result.to_json(), indent=2, sort_keys=True), args.output)
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    if args.order < 4:
        print("bench: --order must be >= 4", file=sys.stderr)
        return EXIT_USAGE
    import time

    start = time.perf_counter()
    try:
        series = build_series_set(args.order + 1)
    except GenerationError as exc:
        print(f"bench: generation failed: {exc}", file=sys.stderr)
        return EXIT_GENERATION
    gen_ms = (time.perf_counter() - start) * 1000.0
    rows = [{"row": "generate", "order": args.order, "ms": gen_ms}]
    reports = run_catalog(series, args.order, bivariate_order=args.bivariate_order)
    for report in reports:
        rows.append({"row": report.identity, "order": report.order, "ms": report.ms})
    _emit("\n".join(json.dumps(r, sort_keys=True) for r in rows), args.output)
    return EXIT_OK


_COMMANDS = {
    "gen": _cmd_gen,
    "verify": _cmd_verify,
    "table": _cmd_table,
    "eval": _cmd_eval,
    "bench": _cmd_bench,
}


def main(argv: "Sequence[str] | None" = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return _COMMANDS[args.command](args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
