"""Frobenius-method machinery for the ODE family x(1-x^2) y'' + P(x) y' + Q(x) y = 0.

The family is parametrized by five polynomial coefficients,
P(x) = p0 + p1 x + p2 x^2 and Q(x) = q0 + q1 x, and x = 0 is a regular
singular point of every member.  Three named members arise from the
hypergeometric equation with c = 2b, 2b+1, 2b-1 after the substitutions
z = 4x/(1+x)^2 and w = (1+x)^{2a} y.

Solutions are power series y = x^lam * sum c_n x^n.  Coefficients come
either from the general three-term recurrence (derived once for the whole
family) or from per-case closed-form rising-factorial expressions; exact
rational agreement of the two routes is the point of the package.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

from .core import DomainError, is_exact, pochhammer

__all__ = [
    "Branch",
    "ClosedFormCase",
    "CoeffSeq",
    "IndicialRoots",
    "OdeSpec",
    "PoleInCoefficients",
    "ResonantExponent",
    "TransformCase",
    "closed_form_coeffs",
    "indicial_roots",
    "ode_from_case",
    "ode_residual",
    "recurrence_coeffs",
    "series_eval",
    "series_max_term",
    "split_even_odd",
]


class ResonantExponent(ArithmeticError):
    """Indicial roots differ by an integer: a recurrence denominator vanishes
    (or the second solution is logarithmic).  Not silently patched."""


class PoleInCoefficients(ArithmeticError):
    """A rising-factorial denominator of a closed form hits zero."""


class TransformCase(enum.Enum):
    """Which denominator parameter the source hypergeometric series carries."""

    GAUSS = "gauss"        # c = 2b
    PLUS_ONE = "plus1"     # c = 2b + 1
    MINUS_ONE = "minus1"   # c = 2b - 1


class Branch(enum.Enum):
    ANALYTIC = "analytic"  # lam = 0
    SINGULAR = "singular"  # lam = 1 - p0


@dataclass(frozen=True)
class ClosedFormCase:
    case: TransformCase
    branch: Branch


@dataclass(frozen=True)
class OdeSpec:
    """x(1-x^2) y'' + (p0 + p1 x + p2 x^2) y' + (q0 + q1 x) y = 0."""

    p0: object
    p1: object
    p2: object
    q0: object
    q1: object


@dataclass(frozen=True)
class IndicialRoots:
    """Roots of lam (lam + p0 - 1) = 0, ordered (0, 1 - p0)."""

    lambda1: object
    lambda2: object


@dataclass(frozen=True)
class CoeffSeq:
    """Truncated Frobenius solution x^lam * (c_0 + c_1 x + ... + c_N x^N)."""

    lam: object
    coeffs: tuple = field(default_factory=tuple)

    @property
    def c0(self):
        return self.coeffs[0]

    def __len__(self):
        return len(self.coeffs)


def _half(*values):
    """1/2 in whichever arithmetic the values live in."""
    return Fraction(1, 2) if is_exact(*values) else 0.5


def ode_from_case(case: TransformCase, a, b) -> OdeSpec:
    """The ODE satisfied by (1+x)^{-2a} 2F1(a,b; c; 4x/(1+x)^2) for the
    case's denominator parameter c."""
    if case is TransformCase.GAUSS:
        return OdeSpec(2 * b, 0, -2 * (2 * a - b + 1), 0, -2 * a * (1 + 2 * a - 2 * b))
    if case is TransformCase.PLUS_ONE:
        return OdeSpec(2 * b + 1, 2, -(4 * a - 2 * b + 1), 2 * a, 4 * a * (b - a))
    if case is TransformCase.MINUS_ONE:
        return OdeSpec(2 * b - 1, -2, -(4 * a - 2 * b + 3), -2 * a, -4 * a * (a - b + 1))
    raise ValueError(f"unknown case {case!r}")


def indicial_roots(ode: OdeSpec) -> IndicialRoots:
    """Exponents at the regular singular point x = 0."""
    return IndicialRoots(0 * ode.p0, 1 - ode.p0)


def _is_resonant_denominator(value) -> bool:
    if isinstance(value, Rational):
        return value == 0
    return abs(value) < 1e-12


def recurrence_coeffs(ode: OdeSpec, lam, N: int, c0=Fraction(1)) -> CoeffSeq:
    """Generate c_0..c_N from the family's three-term recurrence.

    c_n (n+lam)(n+lam+p0-1) = -c_{n-1} [p1 (n-1+lam) + q0]
                              + c_{n-2} [(n-2+lam)(n-3+lam) - p2 (n-2+lam) - q1]

    (the c_{n-2} term is absent at n = 1).  Exact when all inputs are exact.
    Raises ResonantExponent when a denominator vanishes.
    """
    if c0 == 0:
        raise ValueError("c0 must be nonzero")
    p0, p1, p2, q1 = ode.p0, ode.p1, ode.p2, ode.q1
    q0 = ode.q0
    coeffs = [c0]
    for n in range(1, N + 1):
        den = (n + lam) * (n + lam + p0 - 1)
        if _is_resonant_denominator(den):
            raise ResonantExponent(
                f"recurrence denominator vanishes at n={n} for lam={lam}"
            )
        rhs = -coeffs[n - 1] * (p1 * (n - 1 + lam) + q0)
        if n >= 2:
            m = n - 2 + lam
            rhs += coeffs[n - 2] * (m * (m - 1) - p2 * m - q1)
        coeffs.append(rhs / den)
    return CoeffSeq(lam, tuple(coeffs))


# Rising-factorial parameter triples (alpha, beta, gamma) per case and branch:
# c_{2n} = (alpha)_n (beta)_n / (n! (gamma)_n) * c0 for the even family,
# likewise times c1 for the odd family.  Offsets are in units of 1/2 so the
# table stays exact: parameter = u*a + v*b + w/2.
_EVEN_FAMILY = {
    (TransformCase.GAUSS, Branch.ANALYTIC): ((1, 0, 0), (1, -1, 1), (0, 1, 1)),
    (TransformCase.GAUSS, Branch.SINGULAR): ((1, -1, 1), (1, -2, 2), (0, -1, 3)),
    (TransformCase.PLUS_ONE, Branch.ANALYTIC): ((1, 0, 0), (1, -1, 1), (0, 1, 1)),
    (TransformCase.PLUS_ONE, Branch.SINGULAR): ((1, -2, 0), (1, -1, 1), (0, -1, 1)),
    (TransformCase.MINUS_ONE, Branch.ANALYTIC): ((1, 0, 0), (1, -1, 3), (0, 1, -1)),
    (TransformCase.MINUS_ONE, Branch.SINGULAR): ((1, -2, 4), (1, -1, 3), (0, -1, 3)),
}
_ODD_FAMILY = {
    (TransformCase.GAUSS, Branch.ANALYTIC): None,
    (TransformCase.GAUSS, Branch.SINGULAR): None,
    (TransformCase.PLUS_ONE, Branch.ANALYTIC): ((1, 0, 2), (1, -1, 1), (0, 1, 3)),
    (TransformCase.PLUS_ONE, Branch.SINGULAR): ((1, -2, 2), (1, -1, 1), (0, -1, 3)),
    (TransformCase.MINUS_ONE, Branch.ANALYTIC): ((1, 0, 2), (1, -1, 3), (0, 1, 1)),
    (TransformCase.MINUS_ONE, Branch.SINGULAR): ((1, -2, 6), (1, -1, 3), (0, -1, 5)),
}


def _param(spec, a, b, half):
    u, v, w = spec
    return u * a + v * b + w * half


def closed_form_coeffs(cf: ClosedFormCase, a, b, N: int, c0=Fraction(1)) -> CoeffSeq:
    """Coefficients c_0..c_N from the closed rising-factorial expressions.

    c1 is always taken from the recurrence's own n = 1 relation,
    c1 = -(p1 lam + q0) / ((1+lam)(lam+p0)) c0, never from a transcribed
    formula; the exact-rational comparison against recurrence_coeffs is
    the arbiter for every printed form.
    """
    if c0 == 0:
        raise ValueError("c0 must be nonzero")
    half = _half(a, b, c0)
    ode = ode_from_case(cf.case, a, b)
    lam = 0 * ode.p0 if cf.branch is Branch.ANALYTIC else 1 - ode.p0

    even = _EVEN_FAMILY[(cf.case, cf.branch)]
    odd = _ODD_FAMILY[(cf.case, cf.branch)]

    den1 = (1 + lam) * (lam + ode.p0)
    if _is_resonant_denominator(den1):
        raise ResonantExponent(f"n=1 relation degenerate for lam={lam}")
    c1 = -(ode.p1 * lam + ode.q0) * c0 / den1

    coeffs = []
    for k in range(N + 1):
        n = k // 2
        fam = even if k % 2 == 0 else odd
        if fam is None:
            coeffs.append(0 * c0)
            continue
        alpha, beta, gamma = (_param(s, a, b, half) for s in fam)
        den = pochhammer(gamma, n)
        if den == 0:
            raise PoleInCoefficients(
                f"({gamma})_{n} = 0 in closed form for {cf.case.value}/{cf.branch.value}"
            )
        scale = c0 if k % 2 == 0 else c1
        coeffs.append(
            scale * pochhammer(alpha, n) * pochhammer(beta, n)
            / (math.factorial(n) * den)
        )
    return CoeffSeq(lam, tuple(coeffs))


def _power(x, e):
    """x**e on the real principal branch; integer exponents allow x <= 0."""
    if isinstance(e, Rational) and e.denominator == 1:
        e = int(e)
    elif isinstance(e, float) and e.is_integer():
        e = int(e)
    if isinstance(e, int):
        if x == 0 and e < 0:
            raise DomainError("x = 0 with negative integer exponent")
        return x ** e
    if x <= 0:
        raise DomainError(f"x = {x} <= 0 with fractional exponent {e}")
    return float(x) ** float(e)


def series_eval(cs: CoeffSeq, x):
    """Evaluate x^lam * sum c_n x^n, truncated at the stored order."""
    if abs(x) >= 1:
        raise DomainError(f"|x| = {abs(x)} >= 1")
    acc = 0 * x
    for c in reversed(cs.coeffs):
        acc = acc * x + c
    if cs.lam == 0:
        return acc
    return _power(x, cs.lam) * acc


def series_max_term(cs: CoeffSeq, x) -> float:
    """max_n |c_n x^{lam+n}|, the natural scale for residual checks."""
    best = 0.0
    for n, c in enumerate(cs.coeffs):
        if c == 0:
            continue
        t = abs(float(c)) * abs(_power(float(abs(x)), cs.lam + n))
        best = max(best, t)
    return best


def ode_residual(ode: OdeSpec, cs: CoeffSeq, x):
    """Residual of the truncated series in the ODE at the point x.

    Derivatives are term-wise analytic derivatives of x^{lam+n}; no finite
    differences.  For an exact recurrence solution only the truncation tail
    contributes.
    """
    if abs(x) >= 1:
        raise DomainError(f"|x| = {abs(x)} >= 1")
    lam = cs.lam
    y = 0 * x
    yp = 0 * x
    ypp = 0 * x
    for n, c in enumerate(cs.coeffs):
        if c == 0:
            continue
        e = lam + n
        t = c * _power(x, e)
        y += t
        if x != 0:
            yp += t * e / x
            ypp += t * e * (e - 1) / (x * x)
        else:
            if e == 1:
                yp += c
            if e == 2:
                ypp += 2 * c
    return (
        x * (1 - x * x) * ypp
        + (ode.p0 + ode.p1 * x + ode.p2 * x * x) * yp
        + (ode.q0 + ode.q1 * x) * y
    )


def split_even_odd(cs: CoeffSeq) -> tuple[CoeffSeq, CoeffSeq]:
    """Split into even/odd parts: cs(x) = x^lam [E(x^2) + x O(x^2)].

    Both returned sequences keep lam and are coefficient lists in v = x^2.
    Interleaving them reproduces cs exactly.
    """
    return (
        CoeffSeq(cs.lam, tuple(cs.coeffs[0::2])),
        CoeffSeq(cs.lam, tuple(cs.coeffs[1::2])),
    )
