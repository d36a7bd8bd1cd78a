"""Command-line interface.

Subcommands: expand, instanton, gw, yukawa, jfunction, verify.
Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.

The JSON output (and the series cache file) is a single canonical document
with sorted keys and no timestamps, so identical invocations are
byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .enumerative import gw_from_instanton
from .errors import CacheFormatError, MirrorQuinticError
from .odesolve import SeriesSolution
from .pipeline import (
    SUITES,
    instanton_table,
    j_series,
    quintic_solution,
    ramanujan_solution,
    run_suites,
    yukawa_series,
)
from .rational import parse_rat, rat_str
from .series import TruncatedSeries

SYSTEMS = ("quintic", "ramanujan")
FORMATS = ("text", "json", "csv")


def _json_dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)


# ---------------------------------------------------------------------------
# series cache


def solution_to_document(solution: SeriesSolution) -> dict:
    return {
        "system": solution.instance_name,
        "order": solution.order,
        "series": {
            name: [rat_str(c) for c in s.coeffs]
            for name, s in zip(solution.names, solution.series)
        },
    }


def solution_from_document(doc: dict) -> SeriesSolution:
    try:
        system = doc["system"]
        order = doc["order"]
        series = doc["series"]
        names = sorted(series)
        parsed = {}
        for name in names:
            coeffs = [parse_rat(v) for v in series[name]]
            if len(coeffs) != order + 1:
                raise CacheFormatError(
                    f"series {name} has {len(coeffs)} coefficients, expected {order + 1}"
                )
            parsed[name] = TruncatedSeries(coeffs)
    except CacheFormatError:
        raise
    except Exception as exc:
        raise CacheFormatError(f"malformed cache document: {exc}") from exc
    return SeriesSolution(system, tuple(names), tuple(parsed[n] for n in names))


def load_cache(path: Path) -> SeriesSolution:
    try:
        text = path.read_text()
    except OSError as exc:
        raise CacheFormatError(f"cannot read cache {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CacheFormatError(f"cache {path} is not valid JSON: {exc}") from exc
    return solution_from_document(doc)


def save_cache(path: Path, solution: SeriesSolution) -> None:
    path.write_text(_json_dump(solution_to_document(solution)) + "\n")


# ---------------------------------------------------------------------------
# output helpers


def _emit_series(rows, fmt: str, out) -> None:
    """rows: list of (name, coefficient list)."""
    if fmt == "json":
        doc = {name: [rat_str(c) for c in coeffs] for name, coeffs in rows}
        print(_json_dump(doc), file=out)
    elif fmt == "csv":
        for name, coeffs in rows:
            print(",".join([name] + [rat_str(c) for c in coeffs]), file=out)
    else:
        width = max(len(name) for name, _ in rows)
        for name, coeffs in rows:
            body = ", ".join(rat_str(c) for c in coeffs)
            print(f"{name:<{width}}  {body}", file=out)


def _emit_degree_table(label, values, fmt, out, constant=None, route=None):
    if fmt == "json":
        doc = {"values": {str(d): rat_str(v) for d, v in values.items()}}
        if constant is not None:
            doc["constant"] = rat_str(constant)
        if route:
            doc["route"] = route
        print(_json_dump(doc), file=out)
    elif fmt == "csv":
        print(f"d,{label}", file=out)
        for d in sorted(values):
            print(f"{d},{rat_str(values[d])}", file=out)
    else:
        if constant is not None:
            print(f"constant: {rat_str(constant)}", file=out)
        for d in sorted(values):
            print(f"{label}_{d} = {rat_str(values[d])}", file=out)


# ---------------------------------------------------------------------------
# subcommands


def cmd_expand(args, out=None) -> int:
    out = out or sys.stdout
    min_order = 2 if args.system == "quintic" else 1
    if args.order < min_order:
        raise CliUsageError(
            f"--order must be >= {min_order} for the {args.system} system"
        )
    solution = None
    cache_path = Path(args.cache) if args.cache else None
    if cache_path and cache_path.exists():
        cached = load_cache(cache_path)
        if cached.instance_name != args.system:
            raise CacheFormatError(
                f"cache {cache_path} holds the {cached.instance_name} system, "
                f"not {args.system}"
            )
        if cached.order >= args.order:
            solution = cached.truncate(args.order)
    if solution is None:
        solver = quintic_solution if args.system == "quintic" else ramanujan_solution
        solution = solver(args.order)
        if cache_path:
            save_cache(cache_path, solution)
    rows = [(name, solution[name].coeffs) for name in solution.names]
    _emit_series(rows, args.format, out)
    return 0


def cmd_instanton(args, out=None) -> int:
    out = out or sys.stdout
    table = instanton_table(args.max_degree, route=args.route)
    _emit_degree_table(
        "n", table.n, args.format, out, constant=table.constant, route=args.route
    )
    return 0


def cmd_gw(args, out=None) -> int:
    out = out or sys.stdout
    table = gw_from_instanton(instanton_table(args.max_degree, route=args.route))
    _emit_degree_table("N", table.N, args.format, out, route=args.route)
    return 0


def cmd_yukawa(args, out=None) -> int:
    out = out or sys.stdout
    if args.route == "both":
        y_ode = yukawa_series(args.order, "ode")
        y_per = yukawa_series(args.order, "periods")
        agree = y_ode.coeffs == y_per.coeffs
        if args.format == "json":
            doc = {
                "ode": [rat_str(c) for c in y_ode.coeffs],
                "periods": [rat_str(c) for c in y_per.coeffs],
                "routes_agree": agree,
            }
            print(_json_dump(doc), file=out)
        else:
            _emit_series(
                [("yukawa[ode]", y_ode.coeffs), ("yukawa[periods]", y_per.coeffs)],
                args.format,
                out,
            )
            if args.format == "text":
                print(f"routes agree: {agree}", file=out)
        return 0 if agree else 1
    y = yukawa_series(args.order, args.route)
    _emit_series([("yukawa", y.coeffs)], args.format, out)
    return 0


def cmd_jfunction(args, out=None) -> int:
    out = out or sys.stdout
    routes = ("ode", "periods") if args.route == "both" else (args.route,)
    results = {route: j_series(args.order, route) for route in routes}
    agree = True
    if len(results) == 2:
        (p1, r1), (p2, r2) = results["ode"], results["periods"]
        agree = p1 == p2 and r1.coeffs == r2.coeffs
    if args.format == "json":
        doc = {
            route: {
                "pole": rat_str(pole),
                "regular": [rat_str(c) for c in reg.coeffs],
            }
            for route, (pole, reg) in results.items()
        }
        if len(results) == 2:
            doc["routes_agree"] = agree
        print(_json_dump(doc), file=out)
    else:
        for route, (pole, reg) in results.items():
            tag = f"3125j[{route}]" if len(results) == 2 else "3125j"
            if args.format == "csv":
                print(f"{tag}.pole,{rat_str(pole)}", file=out)
                print(
                    ",".join([f"{tag}.regular"] + [rat_str(c) for c in reg.coeffs]),
                    file=out,
                )
            else:
                print(f"{tag}: pole {rat_str(pole)}", file=out)
                print(
                    f"{tag}: regular "
                    + ", ".join(rat_str(c) for c in reg.coeffs),
                    file=out,
                )
        if args.format == "text" and len(results) == 2:
            print(f"routes agree: {agree}", file=out)
    return 0 if agree else 1


def cmd_verify(args, out=None) -> int:
    out = out or sys.stdout
    solution = None
    if args.cache:
        solution = load_cache(Path(args.cache))
        if solution.instance_name != "quintic":
            raise CacheFormatError("verify --cache expects a quintic series cache")
        if solution.order < args.order:
            raise CacheFormatError(
                f"cache order {solution.order} is below the requested order {args.order}"
            )
    suites = [x.strip() for x in args.suite.split(",") if x.strip()]
    bad = [x for x in suites if x not in SUITES]
    if bad or not suites:
        raise CliUsageError(
            "unknown suite(s) %s; choose from %s" % (bad or ["<empty>"], ", ".join(SUITES))
        )
    report = run_suites(suites, args.order, solution=solution)
    if args.format == "json":
        print(_json_dump(report.to_json_dict()), file=out)
    else:
        print(report.to_text(), file=out)
    return 0 if report.overall else 1


class CliUsageError(MirrorQuinticError):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mirrorquintic",
        description=(
            "Exact q-expansions of the mirror-quintic differential system, "
            "instanton numbers, the j-expansion, and verification suites."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, order_default=20):
        p.add_argument("--order", type=int, default=order_default,
                       help="truncation order (default %(default)s)")
        p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("expand", help="emit the series solution of a system")
    p.add_argument("--system", choices=SYSTEMS, default="quintic")
    add_common(p)
    p.add_argument("--cache", help="JSON cache file to reuse or create")
    p.set_defaults(fn=cmd_expand)

    p = sub.add_parser("instanton", help="instanton numbers n_d")
    p.add_argument("--max-degree", type=int, default=10)
    p.add_argument("--route", choices=("ode", "periods"), default="ode")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(fn=cmd_instanton)

    p = sub.add_parser("gw", help="Gromov-Witten invariants N_d")
    p.add_argument("--max-degree", type=int, default=10)
    p.add_argument("--route", choices=("ode", "periods"), default="ode")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(fn=cmd_gw)

    p = sub.add_parser("yukawa", help="the Yukawa coupling q-expansion")
    p.add_argument("--route", choices=("ode", "periods", "both"), default="ode")
    add_common(p)
    p.set_defaults(fn=cmd_yukawa)

    p = sub.add_parser("jfunction", help="the expansion of 3125 j")
    p.add_argument("--route", choices=("ode", "periods", "both"), default="ode")
    add_common(p, order_default=9)
    p.set_defaults(fn=cmd_jfunction)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument(
        "--suite",
        default="all",
        help="comma-separated subset of %s (default all)" % ", ".join(SUITES),
    )
    add_common(p)
    p.add_argument("--cache", help="verify against a cached quintic expansion")
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "order", 1) < 1 or getattr(args, "max_degree", 1) < 1:
            raise CliUsageError("order/degree arguments must be positive")
        return args.fn(args)
    except (CliUsageError, CacheFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MirrorQuinticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
