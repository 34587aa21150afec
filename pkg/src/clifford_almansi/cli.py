"""Command-line interface.

Exit codes: 0 success, 1 a verification verdict failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import closed_form as cf
from .almansi import (
    FAIL,
    NotPolyharmonic,
    biharmonic_report,
    classical_almansi,
    decomposition_report,
)
from .clifford_core import DimensionError, format_multivector
from .diffops import laplacian
from .generators import random_multivector
from .mvpoly import MvPolynomial, poly_evaluate
from .slice_poly import NotSlice, SlicePolynomial, slice_from_polynomial, zonal, zonal_axial
from .textio import (
    MAX_TEXT_DIMENSION,
    ParseError,
    PolynomialDocument,
    format_axial,
    format_polynomial,
    parse_polynomial,
    polynomial_to_records,
)
from .verify import SUITES, run_verification


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {text!r}")


def _render(p: MvPolynomial) -> str:
    if p.n <= MAX_TEXT_DIMENSION:
        return format_polynomial(p)
    return json.dumps(polynomial_to_records(p))


def _serialize(p: MvPolynomial):
    return format_polynomial(p) if p.n <= MAX_TEXT_DIMENSION else polynomial_to_records(p)


def _load_slice(args) -> SlicePolynomial:
    if args.slice is not None:
        f = parse_polynomial(args.slice, args.n, kind="slice")
    else:
        doc = PolynomialDocument.load(args.input, args.n)
        f = doc.polynomial
        if isinstance(f, MvPolynomial):
            f = slice_from_polynomial(f)
    return f


def _print_verdicts(verdicts: dict, out) -> None:
    for name, v in verdicts.items():
        print(f"check {name}: {v}", file=out)


# -- subcommands -------------------------------------------------------------------


def cmd_zonal(args, out) -> int:
    if args.axial:
        print(format_axial(zonal_axial(args.n, args.k)), file=out)
    else:
        print(_render(zonal(args.n, args.k)), file=out)
    return 0


def cmd_decompose(args, out) -> int:
    f = _load_slice(args)
    rep = decomposition_report(f, args.route)
    d = rep.decomposition
    print(f"A = {_render(d.A)}", file=out)
    print(f"B = {_render(d.B)}", file=out)
    print(f"A (axial) = {format_axial(d.A_axial)}", file=out)
    print(f"B (axial) = {format_axial(d.B_axial)}", file=out)
    _print_verdicts(rep.verdicts, out)
    if args.report:
        payload = {
            "n": rep.n,
            "route": args.route,
            "source": _serialize(rep.source),
            "A": _serialize(d.A),
            "B": _serialize(d.B),
            "A_axial": format_axial(d.A_axial),
            "B_axial": format_axial(d.B_axial),
            "verdicts": rep.verdicts,
        }
        with open(args.report, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    return 0 if rep.ok else 1


def cmd_almansi(args, out) -> int:
    p = PolynomialDocument.load(args.input, args.n).polynomial
    if isinstance(p, SlicePolynomial):
        from .slice_poly import expand

        p = expand(p)
    try:
        layers = classical_almansi(p, args.order)
    except NotPolyharmonic as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for k, u in enumerate(layers.layers):
        print(f"u{k} = {_render(u)}", file=out)
    ok_rec = layers.reconstruct() == p
    ok_harm = all(not laplacian(u) for u in layers.layers)
    verdicts = {"reconstruction": "pass" if ok_rec else FAIL, "harmonic_layers": "pass" if ok_harm else FAIL}
    _print_verdicts(verdicts, out)
    return 0 if ok_rec and ok_harm else 1


def cmd_biharmonic(args, out) -> int:
    f = parse_polynomial(args.slice, args.n, kind="slice")
    rep = biharmonic_report(f)
    for k, g in enumerate(rep.layers):
        print(f"g{k} = {_render(g)}", file=out)
    _print_verdicts(rep.verdicts, out)
    return 0 if rep.ok else 1


def cmd_eval(args, out) -> int:
    try:
        point = [Fraction(c.strip()) for c in args.point.split(",")]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad point {args.point!r}")
    doc = PolynomialDocument.load(args.input, args.n if args.n is not None else len(point) - 1)
    p = doc.polynomial
    if isinstance(p, SlicePolynomial):
        print(format_multivector(p.evaluate(point)), file=out)
    else:
        print(format_multivector(poly_evaluate(p, point)), file=out)
    return 0


def cmd_verify(args, out) -> int:
    start = time.perf_counter()
    report = run_verification(args.suite, args.n, args.max_degree, args.seed, args.jobs)
    print(report.text(), file=out)
    print(f"# wall time {time.perf_counter() - start:.1f}s", file=out)
    if args.records:
        with open(args.records, "w") as fh:
            fh.write("\n".join(report.records()) + "\n")
    if args.csv and args.suite in ("numeric", "all"):
        _write_numeric_csv(Path(args.csv), args.seed)
    return report.exit_status


def _write_numeric_csv(directory: Path, seed: int) -> None:
    # same sample points as the numeric suite
    directory.mkdir(parents=True, exist_ok=True)
    pts = cf.random_exp_points(100, seed)
    shell = cf.random_shell_points(100, 3, seed)
    tables = {
        "exp_identity.csv": (pts, cf.exp_identity_errors(pts)),
        "exp_laplacian.csv": (pts, [max(pair) for pair in cf.exp_laplacian_errors(pts, 1e-3)]),
        "inverse.csv": (shell, cf.inverse_errors(shell)),
    }
    for name, (points, errors) in tables.items():
        with open(directory / name, "w", newline="") as fh:
            cf.write_error_csv(fh, points, errors)


def cmd_bench(args, out) -> int:
    import random

    rng = random.Random(0)
    print("n\tk\tzonal_s\tproduct_us", file=out)
    for n in args.n:
        t0 = time.perf_counter()
        zonal(n, args.k)
        t_zonal = time.perf_counter() - t0
        pairs = [(random_multivector(rng, n, None), random_multivector(rng, n, None)) for _ in range(20)]
        t0 = time.perf_counter()
        for x, y in pairs:
            x * y
        t_prod = (time.perf_counter() - t0) / len(pairs) * 1e6
        print(f"{n}\t{args.k}\t{t_zonal:.4f}\t{t_prod:.1f}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clifford-almansi",
        description="Almansi-type decompositions of Clifford polynomials, computed exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zonal", help="print the zonal polyharmonic of degree K in R^(N+1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--axial", action="store_true", help="print in (a, t) variables")
    p.set_defaults(func=cmd_zonal)

    p = sub.add_parser("decompose", help="write a slice polynomial as A - x^c B")
    p.add_argument("--n", type=int, required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--slice", metavar="EXPR")
    src.add_argument("--input", metavar="FILE")
    p.add_argument("--route", choices=("zonal", "cr", "both"), default="both")
    p.add_argument("--report", metavar="FILE", help="write a JSON report")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("almansi", help="harmonic layers of a polyharmonic polynomial")
    p.add_argument("--input", metavar="FILE", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_almansi)

    p = sub.add_parser("biharmonic", help="zonal biharmonic layers (odd n > 3)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--slice", metavar="EXPR", required=True)
    p.set_defaults(func=cmd_biharmonic)

    p = sub.add_parser("eval", help="evaluate a polynomial file at a rational point")
    p.add_argument("--input", metavar="FILE", required=True)
    p.add_argument("--point", required=True, help='comma-separated rationals "x0,x1,..."')
    p.add_argument("--n", type=int, default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--n", type=_int_list, default=[3, 5])
    p.add_argument("--max-degree", type=int, default=6)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--records", metavar="FILE", help="write one JSON record per case")
    p.add_argument("--csv", metavar="DIR", help="write per-point errors of the numeric examples")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time zonal generation and multivector products")
    p.add_argument("--n", type=_int_list, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (ParseError, DimensionError, UsageError, NotSlice, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
