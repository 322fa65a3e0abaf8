"""Quadratic-transformation identities: argument maps, LHS/RHS evaluation,
grid checking, and numerical determination of connection constants.

Each identity equates (1+x)^{-2a} 2F1(a,b; c; 4x/(1+x)^2), with
c in {2b, 2b+1, 2b-1}, to a combination of hypergeometric series in x^2:

    GAUSS      F(a, a-b+1/2; b+1/2; x^2)
    PLUS_ONE   F(a, a-b+1/2; b+1/2; x^2) - 2ax/(2b+1) F(a+1, a-b+1/2; b+3/2; x^2)
    MINUS_ONE  F(a, a-b+3/2; b-1/2; x^2) + 2ax/(2b-1) F(a+1, a-b+3/2; b+1/2; x^2)

valid for |x| < 1 and |4x/(1+x)^2| < 1.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

import numpy as np

from .core import (
    DomainError,
    HypParams,
    SeriesControl,
    gauss_2f1,
    is_exact,
    is_nonpositive_integer,
)
from .frobenius import (
    Branch,
    ClosedFormCase,
    TransformCase,
    closed_form_coeffs,
    series_eval,
)

__all__ = [
    "ConnectionConstants",
    "IdentityReport",
    "IllConditioned",
    "Sample",
    "check_identity",
    "fit_connection_constants",
    "lhs_eval",
    "map_x_to_z",
    "map_z_to_x",
    "rhs_eval",
    "rhs_parameter_sets",
    "sample_grid",
    "valid_point",
]

# margin used by the samplers to stay clear of parameter poles
POLE_MARGIN = 1e-2


class IllConditioned(ArithmeticError):
    """The two basis columns of the connection-constant fit are numerically
    collinear; the fit is reported unreliable rather than silently accepted."""


@dataclass(frozen=True)
class ConnectionConstants:
    A: float
    B: float
    residual: float
    cond: float


@dataclass(frozen=True)
class Sample:
    a: float
    b: float
    x: float
    lhs: float
    rhs: float
    abs_err: float
    rel_err: float
    ok: bool


@dataclass(frozen=True)
class IdentityReport:
    case: TransformCase
    tol: float
    samples: tuple = field(default_factory=tuple)
    skipped: tuple = field(default_factory=tuple)  # (a, b, x, reason)

    @property
    def n_pass(self) -> int:
        return sum(1 for s in self.samples if s.ok)

    @property
    def n_fail(self) -> int:
        return sum(1 for s in self.samples if not s.ok)


def map_x_to_z(x):
    """z = 4x/(1+x)^2; exact for rational x."""
    if x == -1:
        raise DomainError("x = -1 is a pole of the argument map")
    return 4 * x / ((1 + x) * (1 + x))


def map_z_to_x(z):
    """Inverse branch with |x| < 1: x = (1 - sqrt(1-z)) / (1 + sqrt(1-z)).

    Defined for z < 1; the reciprocal root 1/x is deliberately not offered.
    Returns an exact rational when 1-z is a perfect rational square.
    """
    if z >= 1:
        raise DomainError(f"z = {z} >= 1 has no real preimage with |x| < 1")
    if isinstance(z, Rational):
        num, den = (1 - Fraction(z)).as_integer_ratio()
        rn, rd = math.isqrt(num * den), den
        if rn * rn == num * den:
            s = Fraction(rn, rd)
            return (1 - s) / (1 + s)
    s = math.sqrt(1 - z)
    return (1 - s) / (1 + s)


def _case_c(case: TransformCase, b):
    if case is TransformCase.GAUSS:
        return 2 * b
    if case is TransformCase.PLUS_ONE:
        return 2 * b + 1
    return 2 * b - 1


def _half(*values):
    return Fraction(1, 2) if is_exact(*values) else 0.5


def rhs_parameter_sets(case: TransformCase, a, b):
    """((a1,b1,c1), coeff, (a2,b2,c2)) of the RHS combination
    F1(x^2) + coeff * x * F2(x^2); the second entry is None for GAUSS."""
    h = _half(a, b)
    if case is TransformCase.GAUSS:
        return (a, a - b + h, b + h), None, None
    if case is TransformCase.PLUS_ONE:
        return (
            (a, a - b + h, b + h),
            -2 * a / (2 * b + 1),
            (a + 1, a - b + h, b + 3 * h),
        )
    return (
        (a, a - b + 3 * h, b - h),
        2 * a / (2 * b - 1),
        (a + 1, a - b + 3 * h, b + h),
    )


def lhs_eval(case: TransformCase, a, b, x, ctl: SeriesControl = SeriesControl()):
    """(1+x)^{-2a} 2F1(a, b; c; 4x/(1+x)^2) with c per case.

    The plain Gauss series misbehaves near the edges of its disk: for
    z -> -1 the alternating sum cancels catastrophically, and for z -> 1
    with a+b-c > 0 the terms decay too slowly for the truncation budget.
    Both are classical and are handled by summing an equivalent series:
    the Pfaff map F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)) for z < 0
    (argument lands in [0, 1/2)), and the Euler map
    F(a,b;c;z) = (1-z)^{c-a-b} F(c-a, c-b; c; z) when a+b-c > 1/2.
    Terminating series are always summed directly.
    """
    if abs(x) >= 1:
        raise DomainError(f"|x| = {abs(x)} >= 1")
    z = float(map_x_to_z(x))
    if abs(z) >= 1:
        raise DomainError(f"|4x/(1+x)^2| = {abs(z)} >= 1")
    a_f, b_f = float(a), float(b)
    c = float(_case_c(case, b))
    terminating = is_nonpositive_integer(a_f) or is_nonpositive_integer(b_f)
    if terminating or (0 <= z and a_f + b_f - c <= 0.5):
        value = float(gauss_2f1(HypParams(a_f, b_f, c), z, ctl).value)
    elif z < 0:
        f = gauss_2f1(HypParams(a_f, c - b_f, c), z / (z - 1), ctl)
        value = math.exp(-a_f * math.log1p(-z)) * float(f.value)
    else:
        f = gauss_2f1(HypParams(c - a_f, c - b_f, c), z, ctl)
        value = math.exp((c - a_f - b_f) * math.log1p(-z)) * float(f.value)
    return math.exp(-2 * a_f * math.log1p(float(x))) * value


def rhs_eval(case: TransformCase, a, b, x, ctl: SeriesControl = SeriesControl()):
    """The series-in-x^2 side of the case's identity."""
    if abs(x) >= 1:
        raise DomainError(f"|x| = {abs(x)} >= 1")
    first, coeff, second = rhs_parameter_sets(case, a, b)
    v = float(x) * float(x)
    total = float(gauss_2f1(HypParams(*first), v, ctl).value)
    if coeff is not None:
        total += float(coeff) * float(x) * float(gauss_2f1(HypParams(*second), v, ctl).value)
    return total


def valid_point(case: TransformCase, a, b, x, margin: float = 0.0) -> str | None:
    """None when (a, b, x) satisfies the identity's preconditions, else a
    short reason.  margin > 0 additionally keeps parameters away from poles."""
    if abs(x) >= 1:
        return "|x| >= 1"
    if abs(map_x_to_z(x)) >= 1:
        return "|4x/(1+x)^2| >= 1"
    def near_pole(p):
        return is_nonpositive_integer(p) or (
            margin > 0 and abs(float(p) - round(float(p))) <= margin and round(float(p)) <= 0
        )
    if near_pole(_case_c(case, b)):
        return "c is (near) a nonpositive integer"
    first, _, second = rhs_parameter_sets(case, a, b)
    for params in filter(None, (first, second)):
        if near_pole(params[2]):
            return "an x^2-side denominator parameter is (near) a nonpositive integer"
    return None


def check_identity(
    case: TransformCase,
    grid,
    tol: float = 1e-10,
    ctl: SeriesControl = SeriesControl(),
) -> IdentityReport:
    """Evaluate both sides on a grid of (a, b, x) and report per-point verdicts.

    Invalid points (domain bound or parameter pole) are recorded as skipped,
    not failed.  A point passes when rel_err <= tol, or abs_err <= tol when
    |rhs| < tol.
    """
    samples = []
    skipped = []
    for a, b, x in grid:
        reason = valid_point(case, a, b, x)
        if reason is not None:
            skipped.append((float(a), float(b), float(x), reason))
            continue
        lhs = lhs_eval(case, a, b, x, ctl)
        rhs = rhs_eval(case, a, b, x, ctl)
        abs_err = abs(lhs - rhs)
        rel_err = abs_err / abs(rhs) if rhs != 0 else math.inf
        ok = abs_err <= tol if abs(rhs) < tol else rel_err <= tol
        samples.append(
            Sample(float(a), float(b), float(x), lhs, rhs, abs_err, rel_err, ok)
        )
    return IdentityReport(case, tol, tuple(samples), tuple(skipped))


def sample_grid(
    case: TransformCase,
    n: int,
    seed: int,
    param_range=(-3.0, 3.0),
    x_max: float = 0.6,
    margin: float = POLE_MARGIN,
):
    """n seeded (a, b, x) draws satisfying the case's preconditions with the
    given pole margin.  Deterministic for a fixed seed."""
    rng = random.Random(seed)
    lo, hi = param_range
    out = []
    while len(out) < n:
        a = rng.uniform(lo, hi)
        b = rng.uniform(lo, hi)
        x = rng.uniform(-x_max, x_max)
        if valid_point(case, a, b, x, margin=margin) is None:
            out.append((a, b, x))
    return out


def fit_connection_constants(
    case: TransformCase,
    a,
    b,
    sample_xs,
    ctl: SeriesControl = SeriesControl(),
    n_coeffs: int = 120,
    cond_limit: float = 1e10,
) -> ConnectionConstants:
    """Least-squares fit lhs(x) = A y1(x) + B y2(x) over sample_xs in (0, 1).

    y1 and y2 are the two Frobenius solutions built from the closed forms
    with c0 = 1.  The analyticity argument predicts A = 1, B = 0 whenever
    the identity holds; the fit is its numerical re-enactment.
    """
    xs = list(sample_xs)
    if len(xs) < 2:
        raise ValueError("need at least two sample points")
    if any(not 0 < x < 1 for x in xs):
        raise DomainError("sample points must lie in (0, 1)")
    y1 = closed_form_coeffs(ClosedFormCase(case, Branch.ANALYTIC), a, b, n_coeffs)
    y2 = closed_form_coeffs(ClosedFormCase(case, Branch.SINGULAR), a, b, n_coeffs)
    design = np.array(
        [[float(series_eval(y1, x)), float(series_eval(y2, x))] for x in xs]
    )
    target = np.array([lhs_eval(case, a, b, x, ctl) for x in xs])
    cond = float(np.linalg.cond(design))
    if not np.isfinite(cond) or cond > cond_limit:
        raise IllConditioned(f"basis condition number {cond:.3g} exceeds {cond_limit:.3g}")
    coef, _, _, _ = np.linalg.lstsq(design, target, rcond=None)
    residual = float(np.linalg.norm(design @ coef - target))
    return ConnectionConstants(float(coef[0]), float(coef[1]), residual, cond)
