"""Command-line surface: weyl, normal-order, coeffs, quantize, check.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 cap exceeded.  Results go to stdout; the human-format header lines go to
stderr so that stdout bytes are identical across equivalent methods.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .altroutes import blasiak_normal_order, blockify, weyl_via_cg
from .closedform import h_coeff, lambda_factor, weyl_normal_form, xi_factor, zeta_poly
from .enumeration import CapExceededError, weyl_bruteforce, weyl_forced
from .poly import normal_order_word
from .quantize import quantize_system
from .textio import (ParseError, SystemFormatError, load_system, parse_boson_word,
                     render, scalar_fields, structured_terms)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylorder",
        description="Exact normal-ordered Weyl orderings of q^j p^k and friends.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=["plain", "latex", "structured"],
                       default="plain")

    p = sub.add_parser("weyl", help="Weyl ordering of q^j p^k in normal order")
    p.add_argument("j", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--method", choices=["closed", "brute", "forced", "cg"],
                   default="closed")
    p.add_argument("--forced-cap", type=int, default=8)
    add_format(p)

    p = sub.add_parser("normal-order", help="normal-order a boson word")
    p.add_argument("expr")
    p.add_argument("--route", choices=["rewrite", "blasiak"], default="rewrite")
    add_format(p)

    p = sub.add_parser("coeffs", help="coefficient tables for one (j, k)")
    p.add_argument("j", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--which", choices=["h", "zeta", "lambda", "xi"], default="h")
    add_format(p)

    p = sub.add_parser("quantize", help="Weyl-quantize a polynomial system file")
    p.add_argument("path")
    add_format(p)

    p = sub.add_parser("check", help="cross-method verification sweep")
    p.add_argument("--max", type=int, default=6, dest="max_degree")
    p.add_argument("--forced-cap", type=int, default=8)
    p.add_argument("--eta-cap", type=int, default=6)
    p.add_argument("--parallel", action="store_true")

    return parser


def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def cmd_weyl(args) -> int:
    if args.j < 0 or args.k < 0:
        print("error: j and k must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    route = {
        "closed": lambda: weyl_normal_form(args.j, args.k),
        "brute": lambda: weyl_bruteforce(args.j, args.k),
        "forced": lambda: weyl_forced(args.j, args.k, cap=args.forced_cap),
        "cg": lambda: weyl_via_cg(args.j, args.k),
    }[args.method]
    poly = route()
    if args.format == "structured":
        print(json.dumps({"j": args.j, "k": args.k,
                          "hbar_exponent_times_2": args.j + args.k,
                          "terms": structured_terms(poly)}))
    else:
        print(f"# weyl j={args.j} k={args.k} method={args.method} "
              f"hbar_exponent_times_2={args.j + args.k}", file=sys.stderr)
        print(render(poly, args.format))
    return EXIT_OK


def cmd_normal_order(args) -> int:
    word = parse_boson_word(args.expr)
    rewrite = normal_order_word(word)
    blasiak = blasiak_normal_order(blockify(word))
    if rewrite != blasiak:
        print(f"error: rewrite and blasiak routes disagree on {args.expr!r}",
              file=sys.stderr)
        return EXIT_VERIFY
    poly = rewrite if args.route == "rewrite" else blasiak
    print(render(poly, args.format))
    return EXIT_OK


def _coeff_rows(args):
    j, k = args.j, args.k
    if args.which == "zeta":
        return [{"t": t, "value": zeta_poly(j, k, t)} for t in range(j + k + 1)]
    rows = []
    for u in range((j + k) // 2 + 1):
        for v in range(j + k - 2 * u + 1):
            if args.which == "h":
                rows.append({"u": u, "v": v, **scalar_fields(h_coeff(j, k, u, v))})
            elif args.which == "lambda":
                rows.append({"u": u, "v": v, "value": lambda_factor(j, k, u, v)})
            else:
                rows.append({"u": u, "v": v,
                             "value": _frac_str(xi_factor(j, k, u, v))})
    return rows


def cmd_coeffs(args) -> int:
    if args.j < 0 or args.k < 0:
        print("error: j and k must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    rows = _coeff_rows(args)
    if args.format == "structured":
        print(json.dumps({"j": args.j, "k": args.k, "which": args.which,
                          "rows": rows}))
        return EXIT_OK
    print(f"# coeffs j={args.j} k={args.k} which={args.which}", file=sys.stderr)
    sep = " & " if args.format == "latex" else "  "
    eol = r" \\" if args.format == "latex" else ""
    for row in rows:
        if "x_re" in row:
            from .scalar import Scalar
            value = render(_const_poly(row), args.format)
            keys = f"u={row['u']}{sep}v={row['v']}"
        elif "t" in row:
            value = str(row["value"])
            keys = f"t={row['t']}"
        else:
            value = str(row["value"])
            keys = f"u={row['u']}{sep}v={row['v']}"
        print(f"{keys}{sep}{value}{eol}")
    return EXIT_OK


def _const_poly(row):
    from .poly import NormalPoly
    from .scalar import Scalar
    return NormalPoly({(0, 0): Scalar(Fraction(row["x_re"]), Fraction(row["x_im"]),
                                      Fraction(row["y_re"]), Fraction(row["y_im"]))})


def cmd_quantize(args) -> int:
    system = load_system(args.path)
    dyn = quantize_system(system)
    if args.format == "structured":
        print(json.dumps({
            "qdot": {"terms": structured_terms(dyn.qdot_op)},
            "pdot": {"terms": structured_terms(dyn.pdot_op)},
            "hbar_note": list(dyn.hbar_note),
        }))
        return EXIT_OK
    print(f"# quantize {args.path}", file=sys.stderr)
    print(f"<q>' = {render(dyn.qdot_op, args.format)}")
    print(f"<p>' = {render(dyn.pdot_op, args.format)}")
    for note in dyn.hbar_note:
        print(f"# hbar_note side={note['side']} j={note['j']} k={note['k']} "
              f"exponent_times_2={note['hbar_exponent_times_2']}", file=sys.stderr)
    return EXIT_OK


def cmd_check(args) -> int:
    from .verify import run_checks
    report = run_checks(max_degree=args.max_degree, forced_cap=args.forced_cap,
                        eta_cap=args.eta_cap, parallel=args.parallel)
    for result in report.results:
        status = "ok" if result.passed else "FAIL"
        print(f"{result.name}: {result.cases} cases {status}")
        if not result.passed:
            print(f"  witness: {result.witness}")
    print("all checks passed" if report.ok else "verification FAILED")
    return EXIT_OK if report.ok else EXIT_VERIFY


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    handler = {
        "weyl": cmd_weyl,
        "normal-order": cmd_normal_order,
        "coeffs": cmd_coeffs,
        "quantize": cmd_quantize,
        "check": cmd_check,
    }[args.command]
    try:
        return handler(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, SystemFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
