"""Command-line interface.

Every subcommand writes one JSON envelope to stdout:

    {"command": ..., "parameters": ..., "result": ..., "diagnostics": ...}

with reals rendered to 17 significant digits as strings, so output is
byte-identical across runs. --format csv swaps the envelope for a flat
table. Exit status: 0 success, 1 a verification check failed (or a
quadrature refused to converge), 2 bad arguments or domain errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from .bessel import bessel_egf_check, bessel_poly
from .delta import (
    AbTriple,
    DeltaOperator,
    basic_sequence_closed,
    basic_sequence_generic,
    f_series,
)
from .distributions import (
    BesselMeasure,
    GammaHalf,
    InverseGaussian,
    Report,
    convolution_factorization_check,
    kolmogorov_check,
    moment_quadrature,
    semigroup_check,
)
from .fuss import fuss_series
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, QuadratureError
from .sequences import SEQUENCE_IDS, generate
from .series import format_rational, parse_rational, poly_to_strings
from .verify import (
    TOL_FACTORIZATION_ABS,
    TOL_NORMALIZATION_ABS,
    run_all,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # single diagnostic line, no usage dump
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _float_list(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of reals: {text!r}") from exc


def _fmt_real(x: float) -> str:
    return format(float(x), ".17g")


def _fmt_value(v):
    if isinstance(v, complex):
        return {"re": _fmt_real(v.real), "im": _fmt_real(v.imag)}
    return _fmt_real(v)


def _report_dict(r: Report) -> dict:
    return {
        "label": r.label,
        "value_lhs": _fmt_value(r.value_lhs),
        "value_rhs": _fmt_value(r.value_rhs),
        "abs_dev": _fmt_real(r.abs_dev),
        "rel_dev": _fmt_real(r.rel_dev),
        "quad_error": _fmt_real(r.quad_error),
    }


def _config(args) -> QuadratureConfig:
    if getattr(args, "quad_tol", None) is None:
        return DEFAULT_CONFIG
    return QuadratureConfig(rel_tol=args.quad_tol)


_DISTS = {"ig": InverseGaussian, "gamma": GammaHalf, "bessel": BesselMeasure}


def _cmd_basic_poly(args):
    abp = AbTriple(args.a, args.b, args.p)
    if args.method == "closed":
        seq = basic_sequence_closed(abp, args.n)
    else:
        seq = basic_sequence_generic(DeltaOperator.from_ab(abp, order=max(args.n, 1)), args.n)
    params = {"a": str(abp.a), "b": str(abp.b), "p": abp.p, "n": args.n,
              "method": args.method}
    return params, {"n": args.n, "coeffs": poly_to_strings(seq[args.n])}, None, 0


def _cmd_f_series(args):
    abp = AbTriple(args.a, args.b, args.p)
    f = f_series(abp, args.order)
    params = {"a": str(abp.a), "b": str(abp.b), "p": abp.p, "order": args.order}
    return params, {"order": args.order,
                    "coeffs": [format_rational(c) for c in f.coeffs]}, None, 0


def _cmd_fuss(args):
    fs = fuss_series(args.p, args.order)
    params = {"p": args.p, "order": args.order}
    return params, {"p": args.p, "order": args.order,
                    "coeffs": [format_rational(c) for c in fs.series.coeffs]}, None, 0


def _cmd_bessel_poly(args):
    ys = bessel_poly(args.n)
    params = {"n": args.n}
    return params, {"n": args.n, "coeffs": poly_to_strings(ys[args.n])}, None, 0


def _cmd_egf_check(args):
    holds = bessel_egf_check(args.t, args.order)
    params = {"t": str(args.t), "order": args.order}
    return params, {"holds": holds}, None, 0 if holds else 1


def _cmd_moments(args):
    dist = _DISTS[args.dist](args.t)
    q = moment_quadrature(dist, args.n, _config(args))
    params = {"dist": args.dist, "t": _fmt_real(args.t), "n": args.n}
    return params, {"value": _fmt_real(q.value)}, {"quad_error": _fmt_real(q.error)}, 0


def _cmd_semigroup_check(args):
    reports = semigroup_check(args.s, args.t, args.points, _config(args))
    worst = max(r.abs_dev for r in reports)
    passed = worst < args.tol
    params = {"s": _fmt_real(args.s), "t": _fmt_real(args.t),
              "points": [_fmt_real(u) for u in args.points], "tol": _fmt_real(args.tol)}
    result = {"passed": passed, "max_abs_dev": _fmt_real(worst)}
    return params, result, {"reports": [_report_dict(r) for r in reports]}, 0 if passed else 1


def _cmd_kolmogorov_check(args):
    reports = kolmogorov_check(args.x, _config(args))
    dev_identity = max(r.abs_dev for r in reports if r.label.startswith("identity"))
    dev_norm = max(r.abs_dev for r in reports if r.label.startswith("normalization"))
    passed = dev_identity < args.tol and dev_norm < TOL_NORMALIZATION_ABS
    params = {"x": _fmt_real(args.x), "tol": _fmt_real(args.tol)}
    result = {"passed": passed, "identity_abs_dev": _fmt_real(dev_identity),
              "normalization_abs_dev": _fmt_real(dev_norm)}
    return params, result, {"reports": [_report_dict(r) for r in reports]}, 0 if passed else 1


def _cmd_factorization_check(args):
    reports = convolution_factorization_check(args.t, args.x_points, args.u_points,
                                              _config(args))
    dev_char = max(r.abs_dev for r in reports if r.label.startswith("char"))
    dev_dens = max(r.abs_dev for r in reports if r.label.startswith("density"))
    passed = dev_char < TOL_FACTORIZATION_ABS and dev_dens < args.tol
    params = {"t": _fmt_real(args.t),
              "x_points": [_fmt_real(x) for x in args.x_points],
              "u_points": [_fmt_real(u) for u in args.u_points],
              "tol": _fmt_real(args.tol)}
    result = {"passed": passed, "char_abs_dev": _fmt_real(dev_char),
              "density_abs_dev": _fmt_real(dev_dens)}
    return params, result, {"reports": [_report_dict(r) for r in reports]}, 0 if passed else 1


def _cmd_oeis(args):
    terms = generate(args.id, args.count, method=args.method)
    params = {"id": args.id, "count": args.count, "method": args.method}
    return params, {"id": args.id, "terms": [str(v) for v in terms]}, None, 0


def _cmd_verify_all(args):
    results = run_all()
    color = sys.stderr.isatty() and "NO_COLOR" not in os.environ
    for r in results:
        tag = "PASS" if r.passed else "FAIL"
        if color:
            tag = f"\x1b[32m{tag}\x1b[0m" if r.passed else f"\x1b[31m{tag}\x1b[0m"
        print(f"{tag} {r.name}: {r.detail}", file=sys.stderr)
    all_passed = all(r.passed for r in results)
    result = {"all_passed": all_passed,
              "criteria": [{"name": r.name, "passed": r.passed, "detail": r.detail}
                           for r in results]}
    return {}, result, None, 0 if all_passed else 1


def _build_parser() -> _Parser:
    parser = _Parser(prog="deltapoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        return p

    p = add("basic-poly", _cmd_basic_poly,
            "basic polynomial w_n of a*D - b*D^(p+1)")
    p.add_argument("--a", type=_rational, required=True)
    p.add_argument("--b", type=_rational, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("closed", "generic"), default="closed")

    p = add("f-series", _cmd_f_series,
            "compositional inverse of a*x - b*x^(p+1)")
    p.add_argument("--a", type=_rational, required=True)
    p.add_argument("--b", type=_rational, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--order", type=int, default=32)

    p = add("fuss", _cmd_fuss, "Fuss-Catalan generating function of order p")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--order", type=int, default=16)

    p = add("bessel-poly", _cmd_bessel_poly, "Bessel polynomial y_n")
    p.add_argument("--n", type=int, required=True)

    p = add("egf-check", _cmd_egf_check,
            "Bessel EGF identity at a rational point, exact")
    p.add_argument("--t", type=_rational, required=True)
    p.add_argument("--order", type=int, default=12)

    p = add("moments", _cmd_moments, "n-th moment of a distribution by quadrature")
    p.add_argument("--dist", choices=sorted(_DISTS), required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--quad-tol", type=float, default=None)

    p = add("semigroup-check", _cmd_semigroup_check,
            "inverse-Gaussian convolution semigroup at given points")
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--points", type=_float_list, default="0.5,1,2,4")
    p.add_argument("--tol", type=float, default=1e-7)
    p.add_argument("--quad-tol", type=float, default=None)

    p = add("kolmogorov-check", _cmd_kolmogorov_check,
            "Kolmogorov representation of 1 - sqrt(1-2ix)")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--quad-tol", type=float, default=None)

    p = add("factorization-check", _cmd_factorization_check,
            "Bessel measure = gamma * dilated inverse-Gaussian")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--x-points", type=_float_list, default="-1,-0.3,0.2,0.7,1")
    p.add_argument("--u-points", type=_float_list, default="0.5,1,2")
    p.add_argument("--tol", type=float, default=1e-7)
    p.add_argument("--quad-tol", type=float, default=None)

    p = add("oeis", _cmd_oeis, "terms of one of the eight labeled sequences")
    p.add_argument("--id", choices=SEQUENCE_IDS, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--method", choices=("closed", "generic"), default="closed")

    add("verify-all", _cmd_verify_all, "run every acceptance criterion")

    return parser


def _csv_cell(v) -> str:
    if isinstance(v, dict):  # complex, {"re": ..., "im": ...}
        sign = "" if v["im"].startswith("-") else "+"
        return f"{v['re']}{sign}{v['im']}j"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _emit_csv(result, diagnostics) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    if diagnostics and "reports" in diagnostics:
        header = ("label", "value_lhs", "value_rhs", "abs_dev", "rel_dev", "quad_error")
        writer.writerow(header)
        for row in diagnostics["reports"]:
            writer.writerow([_csv_cell(row[k]) for k in header])
    elif "coeffs" in result:
        writer.writerow(("power", "coefficient"))
        for k, c in enumerate(result["coeffs"]):
            writer.writerow((k, c))
    elif "terms" in result:
        writer.writerow(("n", "term"))
        for n, v in enumerate(result["terms"]):
            writer.writerow((n, v))
    elif "criteria" in result:
        writer.writerow(("criterion", "passed", "detail"))
        for row in result["criteria"]:
            writer.writerow((row["name"], _csv_cell(row["passed"]), row["detail"]))
    else:
        writer.writerow(("field", "value"))
        for key, value in result.items():
            writer.writerow((key, _csv_cell(value)))
        if diagnostics:
            for key, value in diagnostics.items():
                writer.writerow((key, _csv_cell(value)))


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        params, result, diagnostics, code = args.handler(args)
    except QuadratureError as exc:
        print(f"deltapoly {args.command}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ArithmeticError) as exc:
        print(f"deltapoly {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.format == "csv":
        _emit_csv(result, diagnostics)
    else:
        envelope = {"command": args.command, "parameters": params, "result": result}
        if diagnostics is not None:
            envelope["diagnostics"] = diagnostics
        json.dump(envelope, sys.stdout, indent=2)
        sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
