"""Command-line frontend for series arithmetic, matrix windows and products,
and the Dehn-Sommerville checker.

Exit codes: 0 success, 1 mathematically undefined operation, 2 parse or
usage error, 3 Dehn-Sommerville residuals nonzero.  Inexact series are
displayed truncated to exponents of magnitude below --prec (the JSON output
always carries the full computed window).
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from .errors import ComputationError, ParseError
from .field import format_scalar
from .riordan import apply, classify, format_class_set, inverse, matmul, riordan
from .series import (
    LaurentSeries,
    Side,
    compose,
    compositional_inverse,
    format_series,
    mul,
    parse,
    power,
    recip,
)
from .window import extract, render
from .simplicial import (
    FVector,
    dehn_sommerville_residuals,
    f_to_h,
    is_palindromic,
    verify_theorem_chain,
)

_SIDES = {"below": Side.BELOW, "above": Side.ABOVE}
_SIDE_TAGS = {
    Side.BELOW: "bounded-below",
    Side.ABOVE: "bounded-above",
    Side.FINITE: "finite",
}
_MAX_SPAN = 64


def _precision(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"precision must be an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("precision must be at least 1")
    return value


def _index_range(text: str) -> tuple:
    """Parse an inclusive index range written LO..HI (at most 64 indices)."""
    lo_text, sep, hi_text = text.partition("..")
    try:
        if not sep:
            raise ValueError
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"range must look like LO..HI, got {text!r}")
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    if hi - lo + 1 > _MAX_SPAN:
        raise argparse.ArgumentTypeError(
            f"range {text!r} spans more than {_MAX_SPAN} indices")
    return lo, hi


def _display_text(chi: LaurentSeries, prec: int) -> str:
    """Canonical text, truncating an inexact window to |exponent| < prec."""
    if chi.exact:
        return format_series(chi)
    if chi.side is Side.BELOW:
        hi = min(chi.hi, prec - 1)
        if hi < chi.lo:
            return format_series(chi)
        trimmed = LaurentSeries.truncated(
            {e: c for e, c in chi.coeffs.items() if e <= hi},
            Side.BELOW, chi.lo, hi)
    else:
        lo = max(chi.lo, 1 - prec)
        if lo > chi.hi:
            return format_series(chi)
        trimmed = LaurentSeries.truncated(
            {e: c for e, c in chi.coeffs.items() if e >= lo},
            Side.ABOVE, lo, chi.hi)
    return format_series(trimmed)


def _print_series(chi: LaurentSeries, args) -> int:
    if args.format == "json":
        print(json.dumps(chi.to_json_dict()))
    else:
        print(_display_text(chi, args.prec))
        print(f"side: {_SIDE_TAGS[chi.side]}")
    return 0


def _series_args(p: argparse.ArgumentParser):
    p.add_argument("--side", choices=sorted(_SIDES), default="below",
                   help="side expressions are expanded on (default below)")
    p.add_argument("--prec", type=_precision, default=16,
                   help="known coefficients per expansion (default 16)")
    p.add_argument("--format", choices=["text", "json"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biriordan",
        description="Exact bilateral-series and Riordan-matrix calculator.")
    sub = parser.add_subparsers(dest="command", required=True)

    series_p = sub.add_parser("series", help="series arithmetic")
    series_sub = series_p.add_subparsers(dest="op", required=True)

    p = series_sub.add_parser("eval", help="parse and normalize an expression")
    p.add_argument("--expr", required=True)
    _series_args(p)

    p = series_sub.add_parser("mul", help="product of two series")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    _series_args(p)

    p = series_sub.add_parser("recip", help="multiplicative inverse")
    p.add_argument("--a", required=True)
    _series_args(p)

    p = series_sub.add_parser("pow", help="integer power")
    p.add_argument("--a", required=True)
    p.add_argument("--n", type=int, required=True)
    _series_args(p)

    p = series_sub.add_parser("compose", help="substitute omega into chi")
    p.add_argument("--chi", required=True)
    p.add_argument("--omega", required=True)
    p.add_argument("--other-side", choices=sorted(_SIDES),
                   help="side omega is expanded on (default: --side)")
    _series_args(p)

    p = series_sub.add_parser("invert", help="compositional inverse of omega")
    p.add_argument("--omega", required=True)
    _series_args(p)

    matrix_p = sub.add_parser("matrix", help="Riordan matrix operations")
    matrix_sub = matrix_p.add_subparsers(dest="op", required=True)

    def matrix_args(p, rows_required=False):
        p.add_argument("--alpha", default="1",
                       help="multiplier series (default 1)")
        p.add_argument("--omega", required=True,
                       help="composition series (column generator)")
        if rows_required:
            p.add_argument("--rows", type=_index_range, required=True)
            p.add_argument("--cols", type=_index_range, required=True)
        else:
            p.add_argument("--rows", type=_index_range,
                           help="also print the window on these rows")
            p.add_argument("--cols", type=_index_range,
                           help="also print the window on these columns")
        _series_args(p)

    p = matrix_sub.add_parser("window", help="entries on a finite block")
    matrix_args(p, rows_required=True)

    p = matrix_sub.add_parser("classify", help="echelon classes of the matrix")
    matrix_args(p)

    p = matrix_sub.add_parser("mul", help="product with a second matrix")
    p.add_argument("--beta", default="1",
                   help="multiplier series of the right factor (default 1)")
    p.add_argument("--chi", required=True,
                   help="composition series of the right factor")
    p.add_argument("--other-side", choices=sorted(_SIDES),
                   help="side the right factor is expanded on (default: --side)")
    matrix_args(p)

    p = matrix_sub.add_parser("inv", help="matrix inverse")
    matrix_args(p)

    p = matrix_sub.add_parser("apply", help="apply the matrix to a series")
    p.add_argument("--chi", required=True, help="series to act on")
    p.add_argument("--other-side", choices=sorted(_SIDES),
                   help="side chi is expanded on (default: --side)")
    matrix_args(p)

    ds_p = sub.add_parser(
        "ds", help="Dehn-Sommerville residual check of an f-vector")
    ds_p.add_argument("--f", required=True,
                      help='comma-separated rationals "f_-1,f_0,...,f_d"')
    ds_p.add_argument("--json", action="store_true")
    ds_p.add_argument("--trace", action="store_true",
                      help="include the matrix-identity proof trace")

    return parser


def _run_series(args) -> int:
    side = _SIDES[args.side]
    if args.op == "eval":
        return _print_series(parse(args.expr, side, args.prec), args)
    if args.op == "mul":
        a = parse(args.a, side, args.prec)
        b = parse(args.b, side, args.prec)
        return _print_series(mul(a, b), args)
    if args.op == "recip":
        a = parse(args.a, side, args.prec)
        return _print_series(recip(a, side, args.prec), args)
    if args.op == "pow":
        a = parse(args.a, side, args.prec)
        return _print_series(power(a, args.n, side, args.prec), args)
    if args.op == "compose":
        other = _SIDES[args.other_side] if args.other_side else side
        chi = parse(args.chi, side, args.prec)
        omega = parse(args.omega, other, args.prec)
        return _print_series(compose(chi, omega, args.prec, side), args)
    omega = parse(args.omega, side, args.prec)
    return _print_series(compositional_inverse(omega, args.prec), args)


def _print_matrix(m, args) -> int:
    window = extract(m, args.rows, args.cols) if args.rows and args.cols else None
    if args.format == "json":
        payload = {
            "alpha": m.alpha.to_json_dict(),
            "omega": m.omega.to_json_dict(),
        }
        if window is not None:
            payload["window"] = json.loads(render(window, "json"))
        print(json.dumps(payload))
    else:
        print(f"alpha: {_display_text(m.alpha, args.prec)}")
        print(f"omega: {_display_text(m.omega, args.prec)}")
        if window is not None:
            print(render(window))
    return 0


def _run_matrix(args) -> int:
    side = _SIDES[args.side]
    alpha = parse(args.alpha, side, args.prec)
    omega = parse(args.omega, side, args.prec)
    m = riordan(alpha, omega, precision=args.prec)
    if args.op == "window":
        w = extract(m, args.rows, args.cols)
        print(render(w, args.format))
        return 0
    if args.op == "classify":
        print(format_class_set(classify(m)))
        return 0
    if args.op == "mul":
        other = _SIDES[args.other_side] if args.other_side else side
        n = riordan(parse(args.beta, other, args.prec),
                    parse(args.chi, other, args.prec), precision=args.prec)
        return _print_matrix(matmul(m, n), args)
    if args.op == "inv":
        return _print_matrix(inverse(m), args)
    other = _SIDES[args.other_side] if args.other_side else side
    chi = parse(args.chi, other, args.prec)
    return _print_series(apply(m, chi), args)


def _run_ds(args) -> int:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        fv = FVector.from_text(args.f)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    hv = f_to_h(fv)
    residuals = dehn_sommerville_residuals(fv)
    palindromic = is_palindromic(hv)
    trace = None
    if args.trace:
        if not 0 <= fv.d <= 8:
            raise ValueError("--trace requires 0 <= d <= 8")
        trace = verify_theorem_chain(fv.d)
    if args.json:
        payload = {
            "d": fv.d,
            "f": [format_scalar(c) for c in fv.f],
            "h": [format_scalar(c) for c in hv.h],
            "palindromic": palindromic,
            "residuals": [format_scalar(r) for r in residuals],
        }
        if trace is not None:
            payload["trace"] = trace.as_dict()
        print(json.dumps(payload))
    else:
        print(f"d: {fv.d}")
        print("f: " + ", ".join(format_scalar(c) for c in fv.f))
        print("h: " + ", ".join(format_scalar(c) for c in hv.h))
        print("palindromic: " + ("yes" if palindromic else "no"))
        print("residuals: " + ", ".join(format_scalar(r) for r in residuals))
        if trace is not None:
            for step in trace.steps:
                print(f"== {step.name}")
                print(step.detail)
    return 0 if all(r == 0 for r in residuals) else 3


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.command == "series":
            return _run_series(args)
        if args.command == "matrix":
            return _run_matrix(args)
        return _run_ds(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ComputationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()
