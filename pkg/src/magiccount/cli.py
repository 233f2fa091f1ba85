"""Command-line front end.

Subcommands: count, verify, table, fit, series, polytope.  Output is
text (aligned columns), csv, or json; every numeric value is rendered as
a decimal string, rationals as "p/q", so nothing is ever squeezed
through a 64-bit float.

Exit codes: 0 success, 1 mathematical failure (an identity breaks, a
table fails to stabilize, a fitted constant misses its prediction),
2 usage error, 3 brute-force resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import genfun, labelings, polytope, recurrences
from .poly import coeff_to_str

EXIT_OK = 0
EXIT_MATH_FAILURE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _json_dump(payload: object) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def _emit_table(headers: list[str], rows: list[list[str]], fmt: str) -> str:
    if fmt == "csv":
        return "\n".join([",".join(headers)] + [",".join(r) for r in rows]) + "\n"
    if fmt == "json":
        return _json_dump({"columns": headers, "rows": rows}) + "\n"
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers))]
    lines += ["  ".join(r[i].ljust(widths[i]) for i in range(len(headers))) for r in rows]
    return "\n".join(lines) + "\n"


def _parse_loops(text: str, n: int) -> tuple[int, ...]:
    parts = [p for p in text.split(",") if p != ""]
    values = tuple(int(p) for p in parts)
    if len(values) == 1 and n > 1:
        values = values * n
    if len(values) != n:
        raise ValueError(f"loop vector length {len(values)} does not match n={n}")
    if any(v < 0 for v in values):
        raise ValueError("loop counts must be nonnegative")
    return values


# -- subcommand handlers -------------------------------------------------------


def _cmd_count(args: argparse.Namespace) -> int:
    if args.line:
        spec = labelings.GraphSpec.line(args.n, args.m)
    else:
        spec = labelings.GraphSpec.cycle(args.n, _parse_loops(args.loops, args.n))
    s_values = range(args.s_max + 1)
    if args.brute:
        counts = {
            s: labelings.brute_force_count(spec, s, var_cap=args.brute_cap, s_cap=args.brute_s_cap)
            for s in s_values
        }
        table = labelings.CountTable(spec, counts)
    else:
        table = labelings.CountTable.compute(spec, s_values)
    if args.format == "json":
        sys.stdout.write(_json_dump(table.to_json_obj()) + "\n")
    else:
        rows = [[str(s), str(c)] for s, c in table.rows()]
        sys.stdout.write(_emit_table(["s", "count"], rows, args.format))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    ids = args.id if args.id else list(recurrences.CATALOG)
    reports = [recurrences.verify_identity(identity_id, stop=args.n_max) for identity_id in ids]
    if args.format == "json":
        payload = {
            "all_hold": all(r.all_hold for r in reports),
            "reports": [r.to_json_obj() for r in reports],
        }
        sys.stdout.write(_json_dump(payload) + "\n")
    else:
        rows = []
        for r in reports:
            failure = r.first_failure
            rows.append(
                [
                    r.identity_id,
                    f"{r.start}..{r.stop}",
                    str(len(r.checks)),
                    "pass" if r.all_hold else "FAIL",
                    "" if failure is None else f"n={failure.index}: {failure.diff.to_text()}",
                ]
            )
        sys.stdout.write(_emit_table(["identity", "range", "checked", "status", "first failure"], rows, args.format))
    return EXIT_OK if all(r.all_hold for r in reports) else EXIT_MATH_FAILURE


def _cmd_table(args: argparse.Namespace) -> int:
    kind = "line" if args.el else "cycle"
    ns = [args.n] if args.n is not None else list(range(args.n_max + 1))
    reports = [genfun.ehrhart_numerator(kind, n, args.order) for n in ns]
    if args.format == "json":
        sys.stdout.write(_json_dump([r.to_json_obj() for r in reports]) + "\n")
    elif args.format == "csv":
        lines = ["n,coefficients"]
        lines += [f"{r.n}," + ";".join(str(c) for c in r.coefficients()) for r in reports]
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        rows = [[str(r.n), ", ".join(str(c) for c in r.coefficients())] for r in reports]
        sys.stdout.write(_emit_table(["n", "numerator coefficients"], rows, args.format))
    return EXIT_OK


def _cmd_fit(args: argparse.Namespace) -> int:
    loops = _parse_loops(args.loops, args.n)
    if any(k < 1 for k in loops):
        raise ValueError("fit requires at least one loop on every vertex")
    fit = genfun.fit_cycle(args.n, loops, holdout=args.holdout)
    predicted = genfun.psi_formula(args.n, loops)
    match = fit.psi == predicted
    if args.format == "json":
        payload = fit.to_json_obj()
        payload["predicted_psi"] = coeff_to_str(predicted)
        payload["match"] = match
        sys.stdout.write(_json_dump(payload) + "\n")
    else:
        joiner = ";" if args.format == "csv" else ", "
        rows = [
            ["degree", str(fit.degree)],
            ["phi", joiner.join(coeff_to_str(c) for c in fit.phi)],
            ["psi", coeff_to_str(fit.psi)],
            ["predicted psi", coeff_to_str(predicted)],
            ["verdict", "MATCH" if match else "MISMATCH"],
        ]
        sys.stdout.write(_emit_table(["field", "value"], rows, args.format))
    return EXIT_OK if match else EXIT_MATH_FAILURE


def _cmd_series(args: argparse.Namespace) -> int:
    if args.s is not None:
        if args.line:
            coeffs = genfun.line_series_in_y(args.s, args.order)
            label = "line counts by vertex count"
        else:
            coeffs = genfun.cycle_series_in_y(args.s, args.order)
            label = "cycle counts by vertex count"
        meta = {"magic_sum": args.s, "series": label}
    else:
        if args.line:
            raise ValueError("line series in the magic-sum variable: use the table command")
        if args.n is None or args.loops is None:
            raise ValueError("cycle series in the magic-sum variable needs -n and -k")
        loops = _parse_loops(args.loops, args.n)
        coeffs = genfun.cycle_series(args.n, loops, args.order)
        meta = {"n": args.n, "loops": list(loops), "series": "cycle counts by magic sum"}
    if args.format == "json":
        payload = dict(meta)
        payload["coefficients"] = [coeff_to_str(c) for c in coeffs]
        sys.stdout.write(_json_dump(payload) + "\n")
    else:
        rows = [[str(i), coeff_to_str(c)] for i, c in enumerate(coeffs)]
        sys.stdout.write(_emit_table(["index", "coefficient"], rows, args.format))
    return EXIT_OK


def _cmd_polytope(args: argparse.Namespace) -> int:
    if args.stable:
        sets = polytope.stable_sets(args.n)
        if args.format == "json":
            sys.stdout.write(_json_dump({"n": args.n, "stable_sets": [list(s) for s in sets]}) + "\n")
        else:
            rows = [[str(i), "{" + ", ".join(map(str, s)) + "}"] for i, s in enumerate(sets)]
            sys.stdout.write(_emit_table(["index", "stable set"], rows, args.format))
        return EXIT_OK
    if args.series is not None:
        coeffs = polytope.simplex_series(args.n, args.series)
        if args.format == "json":
            payload = {"n": args.n, "coefficients": [coeff_to_str(c) for c in coeffs]}
            sys.stdout.write(_json_dump(payload) + "\n")
        else:
            rows = [[str(i), coeff_to_str(c)] for i, c in enumerate(coeffs)]
            sys.stdout.write(_emit_table(["s", "count"], rows, args.format))
        return EXIT_OK
    verts = polytope.hyperplane_vertices(args.n) if args.hyperplane else polytope.vertices(args.n)
    if args.format == "json":
        sys.stdout.write(_json_dump({"n": args.n, "vertices": [v.to_json_obj() for v in verts]}) + "\n")
    else:
        rows = []
        for v in verts:
            rows.append(
                [
                    "fractional" if v.is_fractional else "{" + ", ".join(map(str, v.support)) + "}",
                    " ".join(coeff_to_str(c) for c in v.alpha),
                    " ".join(coeff_to_str(c) for c in v.beta),
                ]
            )
        sys.stdout.write(_emit_table(["stable set", "alpha", "beta"], rows, args.format))
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="magiccount",
        description="Exact counting of magic labelings of pseudo-line and pseudo-cycle graphs.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", parents=[common], help="tabulate h(s) for one graph")
    shape = p_count.add_mutually_exclusive_group(required=True)
    shape.add_argument("--line", action="store_true")
    shape.add_argument("--cycle", action="store_true")
    p_count.add_argument("-n", type=int, required=True, help="number of vertices")
    p_count.add_argument("-m", type=int, default=2, help="loops per vertex (line)")
    p_count.add_argument("-k", dest="loops", default="2", help="loop vector, e.g. 1,2,1 (cycle)")
    p_count.add_argument("--s-max", type=int, default=8)
    p_count.add_argument("--brute", action="store_true", help="use the enumeration oracle")
    p_count.add_argument("--brute-cap", type=int, default=10, help="max edge variables for --brute")
    p_count.add_argument("--brute-s-cap", type=int, default=8, help="max magic sum for --brute")
    p_count.set_defaults(handler=_cmd_count)

    p_verify = sub.add_parser("verify", parents=[common], help="certify the identity catalog")
    p_verify.add_argument("--all", action="store_true", help="check every identity (default)")
    p_verify.add_argument("--id", action="append", choices=sorted(recurrences.CATALOG), help="check one identity")
    p_verify.add_argument("--n-max", type=int, default=12)
    p_verify.set_defaults(handler=_cmd_verify)

    p_table = sub.add_parser("table", parents=[common], help="numerators of magic-sum series")
    which = p_table.add_mutually_exclusive_group(required=True)
    which.add_argument("--el", action="store_true", help="pseudo-line rows")
    which.add_argument("--ec", action="store_true", help="pseudo-cycle rows")
    p_table.add_argument("-n", type=int, default=None)
    p_table.add_argument("--n-max", type=int, default=4)
    p_table.add_argument("--order", type=int, default=None)
    p_table.set_defaults(handler=_cmd_table)

    p_fit = sub.add_parser("fit", parents=[common], help="fit phi(s) + (-1)^s psi to cycle counts")
    p_fit.add_argument("--cycle", action="store_true", help="accepted for symmetry; fits are cycles")
    p_fit.add_argument("-n", type=int, required=True)
    p_fit.add_argument("-k", dest="loops", required=True)
    p_fit.add_argument("--holdout", type=int, default=10)
    p_fit.set_defaults(handler=_cmd_fit)

    p_series = sub.add_parser("series", parents=[common], help="series expansions")
    shape = p_series.add_mutually_exclusive_group(required=True)
    shape.add_argument("--line", action="store_true")
    shape.add_argument("--cycle", action="store_true")
    p_series.add_argument("-s", type=int, default=None, help="magic sum (series in the vertex count)")
    p_series.add_argument("-n", type=int, default=None, help="vertices (series in the magic sum)")
    p_series.add_argument("-k", dest="loops", default=None)
    p_series.add_argument("--order", type=int, default=8)
    p_series.set_defaults(handler=_cmd_series)

    p_poly = sub.add_parser("polytope", parents=[common], help="vertices and stable sets")
    p_poly.add_argument("-n", type=int, required=True)
    p_poly.add_argument("--stable", action="store_true", help="list stable sets instead")
    p_poly.add_argument("--hyperplane", action="store_true", help="only the slice vertices")
    p_poly.add_argument("--series", type=int, default=None, help="simplex series to this order")
    p_poly.set_defaults(handler=_cmd_polytope)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.handler(args)
    except labelings.InstanceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (genfun.NotStabilized, genfun.InconsistentSamples) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH_FAILURE
    except (recurrences.UnknownIdentity, labelings.LengthMismatch, polytope.EvenN, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
