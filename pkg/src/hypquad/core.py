"""Exact and floating-point hypergeometric primitives.

Numbers are plain Python scalars: ``fractions.Fraction`` (or ``int``) for
exact-rational mode, ``float`` for floating mode.  Every routine preserves
exactness when all of its inputs are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

__all__ = [
    "DomainError",
    "HypParams",
    "InvalidParams",
    "SeriesControl",
    "SeriesResult",
    "gauss_2f1",
    "is_exact",
    "is_nonpositive_integer",
    "pochhammer",
]

# Float-mode tolerance for deciding that a parameter sits on a pole of the
# series (distance to the nearest integer); exact mode needs none.
INTEGER_TOL = 1e-12


class InvalidParams(ValueError):
    """Parameter triple hits a pole (c a nonpositive integer)."""


class DomainError(ValueError):
    """Argument outside the domain of validity of the requested operation."""


def is_exact(*values) -> bool:
    """True when every value is an int or Fraction (exact-rational mode)."""
    return all(isinstance(v, Rational) for v in values)


def is_nonpositive_integer(x, tol: float = INTEGER_TOL) -> bool:
    """Whether x is 0, -1, -2, ... (exactly for rationals, within tol for floats)."""
    if isinstance(x, Rational):
        return x <= 0 and x.denominator == 1
    return x < 0.5 and abs(x - round(x)) <= tol


def as_nonpositive_integer(x, tol: float = INTEGER_TOL) -> int | None:
    """The nonpositive integer equal (or tol-close) to x, or None."""
    if is_nonpositive_integer(x, tol):
        return int(round(x)) if not isinstance(x, Rational) else int(x)
    return None


@dataclass(frozen=True)
class HypParams:
    """The (a, b, c) parameter triple of the Gauss series."""

    a: object
    b: object
    c: object

    def is_valid(self) -> bool:
        """False iff c is zero or a negative integer."""
        return not is_nonpositive_integer(self.c)


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for power-series summation.

    The sum stops once `consecutive_small` successive terms are each below
    rel_tol times the current partial sum.  Two consecutive terms are
    required by default because series in x**2, re-expanded in x, have every
    other coefficient equal to zero.
    """

    max_terms: int = 500
    rel_tol: float = 1e-15
    consecutive_small: int = 2

    def __post_init__(self):
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be > 0")
        if self.consecutive_small < 1:
            raise ValueError("consecutive_small must be >= 1")


@dataclass(frozen=True)
class SeriesResult:
    """Outcome of a truncated series summation."""

    value: object
    terms_used: int
    converged: bool
    last_term_ratio: float


def pochhammer(a, n: int):
    """Rising factorial a (a+1) ... (a+n-1); exact for rational a."""
    if n < 0:
        raise ValueError("pochhammer order must be nonnegative")
    result = Fraction(1) if isinstance(a, Rational) else 1.0
    for k in range(n):
        result *= a + k
    return result


def gauss_2f1(p: HypParams, z, ctl: SeriesControl = SeriesControl()) -> SeriesResult:
    """Sum the Gauss series sum_n (a)_n (b)_n / ((c)_n n!) z^n.

    Terminating series (a or b a nonpositive integer) are summed completely
    as polynomials, for any z.  Otherwise |z| < 1 is required.  When
    max_terms is exhausted the partial sum is still returned, flagged
    converged=False.
    """
    if not p.is_valid():
        raise InvalidParams(f"c={p.c} is zero or a negative integer")
    a, b, c = p.a, p.b, p.c

    stop_at = None  # inclusive last index of a terminating series
    for numerator in (a, b):
        m = as_nonpositive_integer(numerator)
        if m is not None:
            stop_at = -m if stop_at is None else min(stop_at, -m)
    if stop_at is None and abs(z) >= 1:
        raise DomainError(f"|z| = {abs(z)} >= 1 and the series does not terminate")

    exact = is_exact(a, b, c, z)
    term = Fraction(1) if exact else 1.0
    total = term
    small_run = 0
    ratio = 0.0
    n_used = 1
    # a terminating series has nonzero terms only up to index stop_at
    limit = ctl.max_terms if stop_at is None else min(ctl.max_terms, stop_at)

    for n in range(limit):
        term = term * (a + n) * (b + n) * z / ((c + n) * (n + 1))
        total += term
        n_used = n + 2
        ratio = abs(term) / abs(total) if total != 0 else 0.0
        if stop_at is not None:
            continue
        if ratio < ctl.rel_tol:
            small_run += 1
            if small_run >= ctl.consecutive_small:
                return SeriesResult(total, n_used, True, float(ratio))
        else:
            small_run = 0

    # a fully-summed terminating series is exact by construction
    converged = stop_at is not None and stop_at <= ctl.max_terms
    return SeriesResult(total, n_used, converged, float(ratio))
