"""Command-line front end.

Subcommands:
    eval      print LHS, RHS and their difference for one identity at a point
    check     run a seeded identity suite and emit a csv/json/text report
    coeffs    recurrence vs closed-form coefficient table in exact rationals
    residual  ODE residual of a recurrence-generated series at a point
    fit       least-squares connection constants A, B

Exit status: 0 = all pass, 1 = mathematical mismatch, 2 = usage/domain error.
Parameters accept rational strings like "1/2" as well as decimals; exact-mode
subcommands (coeffs, residual) never pass them through floats.
The environment variable HYPQ_SEED overrides --seed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .core import DomainError, InvalidParams, SeriesControl
from .frobenius import (
    Branch,
    ClosedFormCase,
    PoleInCoefficients,
    ResonantExponent,
    closed_form_coeffs,
    indicial_roots,
    ode_from_case,
    ode_residual,
    recurrence_coeffs,
    series_max_term,
    TransformCase,
)
from .transforms import (
    IllConditioned,
    check_identity,
    fit_connection_constants,
    lhs_eval,
    rhs_eval,
    sample_grid,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

_CASES = {c.value: c for c in TransformCase}


class CliError(Exception):
    """Usage or domain problem; maps to exit status 2."""


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"not a rational number: {text!r} ({exc})")


def _case(text: str) -> TransformCase:
    try:
        return _CASES[text]
    except KeyError:
        raise CliError(f"unknown case {text!r}; expected one of {sorted(_CASES)}")


def _control(args) -> SeriesControl:
    return SeriesControl(max_terms=args.max_terms, rel_tol=args.rel_tol)


def _out_stream(args):
    if args.out:
        return open(args.out, "w", newline="")
    return sys.stdout


def cmd_eval(args) -> int:
    case = _case(args.case)
    a, b, x = float(args.a), float(args.b), float(args.x)
    ctl = _control(args)
    try:
        lhs = lhs_eval(case, a, b, x, ctl)
        rhs = rhs_eval(case, a, b, x, ctl)
    except (DomainError, InvalidParams) as exc:
        raise CliError(str(exc))
    print(f"lhs = {lhs!r}")
    print(f"rhs = {rhs!r}")
    print(f"diff = {lhs - rhs!r}")
    return EXIT_OK


def _report_json(report, seed: int) -> str:
    payload = {
        "case": report.case.value,
        "tol": report.tol,
        "seed": seed,
        "samples": [
            {
                "a": s.a,
                "b": s.b,
                "x": s.x,
                "lhs": s.lhs,
                "rhs": s.rhs,
                "abs_err": s.abs_err,
                "rel_err": s.rel_err,
                "pass": s.ok,
            }
            for s in report.samples
        ],
        "skipped": [
            {"a": a, "b": b, "x": x, "reason": reason}
            for a, b, x, reason in report.skipped
        ],
        "n_pass": report.n_pass,
        "n_fail": report.n_fail,
    }
    return json.dumps(payload, indent=2)


def _report_csv(report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(["a", "b", "x", "lhs", "rhs", "abs_err", "rel_err", "pass"])
    for s in report.samples:
        writer.writerow(
            [repr(s.a), repr(s.b), repr(s.x), repr(s.lhs), repr(s.rhs),
             repr(s.abs_err), repr(s.rel_err), s.ok]
        )
    return buf.getvalue()


def _report_text(report, seed: int) -> str:
    lines = [
        f"case={report.case.value} seed={seed} tol={report.tol!r} "
        f"samples={len(report.samples)} pass={report.n_pass} fail={report.n_fail}"
    ]
    worst = max(report.samples, key=lambda s: s.rel_err, default=None)
    if worst is not None:
        lines.append(
            f"worst rel_err={worst.rel_err!r} at a={worst.a!r} b={worst.b!r} x={worst.x!r}"
        )
    for s in report.samples:
        if not s.ok:
            lines.append(
                f"FAIL a={s.a!r} b={s.b!r} x={s.x!r} rel_err={s.rel_err!r}"
            )
    return "\n".join(lines) + "\n"


def cmd_check(args) -> int:
    case = _case(args.case)
    if args.samples < 1:
        raise CliError("--samples must be >= 1")
    seed = args.seed
    grid = sample_grid(case, args.samples, seed, x_max=args.x_max)
    report = check_identity(case, grid, tol=args.tol, ctl=_control(args))
    if args.format == "json":
        text = _report_json(report, seed)
        if not text.endswith("\n"):
            text += "\n"
    elif args.format == "csv":
        text = _report_csv(report)
    else:
        text = _report_text(report, seed)
    stream = _out_stream(args)
    try:
        stream.write(text)
    finally:
        if stream is not sys.stdout:
            stream.close()
    return EXIT_OK if report.n_fail == 0 else EXIT_MISMATCH


def cmd_coeffs(args) -> int:
    case = _case(args.case)
    a, b = _fraction(args.a), _fraction(args.b)
    lam = _fraction(getattr(args, "lambda"))
    ode = ode_from_case(case, a, b)
    roots = indicial_roots(ode)
    if roots.lambda1 == roots.lambda2:
        raise CliError(
            f"resonant exponents: double indicial root {roots.lambda1} "
            "(second solution is logarithmic)"
        )
    if lam == roots.lambda1:
        branch = Branch.ANALYTIC
    elif lam == roots.lambda2:
        branch = Branch.SINGULAR
    else:
        raise CliError(
            f"lambda={lam} is not an indicial root "
            f"(roots are {roots.lambda1} and {roots.lambda2})"
        )
    try:
        rec = recurrence_coeffs(ode, lam, args.N)
        closed = closed_form_coeffs(ClosedFormCase(case, branch), a, b, args.N)
    except (ResonantExponent, PoleInCoefficients) as exc:
        raise CliError(str(exc))
    mismatches = 0
    print(f"{'n':>4}  {'recurrence':>24}  {'closed_form':>24}  equal")
    for n, (u, v) in enumerate(zip(rec.coeffs, closed.coeffs)):
        equal = u == v
        mismatches += not equal
        print(f"{n:>4}  {str(u):>24}  {str(v):>24}  {equal}")
    return EXIT_OK if mismatches == 0 else EXIT_MISMATCH


def cmd_residual(args) -> int:
    case = _case(args.case)
    a, b = _fraction(args.a), _fraction(args.b)
    lam = _fraction(getattr(args, "lambda"))
    ode = ode_from_case(case, a, b)
    try:
        cs = recurrence_coeffs(ode, lam, args.N)
        value = ode_residual(ode, cs, float(args.x))
        scale = series_max_term(cs, float(args.x))
    except (ResonantExponent, DomainError) as exc:
        raise CliError(str(exc))
    print(f"residual = {float(value)!r}")
    print(f"max_term = {scale!r}")
    print(f"relative = {abs(float(value)) / scale!r}")
    return EXIT_OK


def cmd_fit(args) -> int:
    case = _case(args.case)
    xs = [float(Fraction(part)) for part in args.xs.split(",") if part.strip()]
    try:
        fit = fit_connection_constants(
            case, float(args.a), float(args.b), xs, _control(args)
        )
    except (DomainError, IllConditioned, ResonantExponent, PoleInCoefficients,
            ValueError) as exc:
        raise CliError(str(exc))
    print(f"A = {fit.A!r}")
    print(f"B = {fit.B!r}")
    print(f"residual = {fit.residual!r}")
    print(f"cond = {fit.cond!r}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypquad", description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_x=True):
        p.add_argument("--case", required=True, help="gauss | plus1 | minus1")
        p.add_argument("--a", required=True)
        p.add_argument("--b", required=True)
        if with_x:
            p.add_argument("--x", required=True)
        p.add_argument("--max-terms", type=int, default=500)
        p.add_argument("--rel-tol", type=float, default=1e-15)

    p_eval = sub.add_parser("eval", help="evaluate LHS and RHS at one point")
    add_common(p_eval)
    p_eval.set_defaults(func=cmd_eval)

    p_check = sub.add_parser("check", help="seeded identity suite with report")
    p_check.add_argument("--case", required=True)
    p_check.add_argument("--samples", type=int, default=200)
    p_check.add_argument("--tol", type=float, default=1e-10)
    p_check.add_argument("--seed", type=int, default=42)
    p_check.add_argument("--x-max", type=float, default=0.6)
    p_check.add_argument("--format", choices=["csv", "json", "text"], default="text")
    p_check.add_argument("--out", default=None)
    p_check.add_argument("--max-terms", type=int, default=500)
    p_check.add_argument("--rel-tol", type=float, default=1e-15)
    p_check.set_defaults(func=cmd_check)

    p_coeffs = sub.add_parser(
        "coeffs", help="recurrence vs closed-form coefficients, exact"
    )
    p_coeffs.add_argument("--case", required=True)
    p_coeffs.add_argument("--a", required=True)
    p_coeffs.add_argument("--b", required=True)
    p_coeffs.add_argument("--lambda", required=True, help="indicial exponent")
    p_coeffs.add_argument("--N", type=int, default=20)
    p_coeffs.set_defaults(func=cmd_coeffs)

    p_res = sub.add_parser("residual", help="ODE residual of a series solution")
    p_res.add_argument("--case", required=True)
    p_res.add_argument("--a", required=True)
    p_res.add_argument("--b", required=True)
    p_res.add_argument("--lambda", required=True)
    p_res.add_argument("--x", required=True)
    p_res.add_argument("--N", type=int, default=60)
    p_res.set_defaults(func=cmd_residual)

    p_fit = sub.add_parser("fit", help="connection constants A, B")
    add_common(p_fit, with_x=False)
    p_fit.add_argument("--xs", default="0.1,0.2,0.3,0.4", help="comma-separated")
    p_fit.set_defaults(func=cmd_fit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", None) is not None and "HYPQ_SEED" in os.environ:
        args.seed = int(os.environ["HYPQ_SEED"])
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, InvalidParams) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
