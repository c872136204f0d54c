"""Zeta values, main terms, and the theoretical error-exponent tables.

The zeta function of the field is evaluated as a truncated Euler
product over rational primes, with the local factor at p read off the
splitting type.  The truncation tail is certified by

    log(tail) <= n * sum_{p > P} p^-s / (1 - p^-s)
              <= n * P^(1-s) / ((s - 1) * (1 - P^-s))

(n local factors per prime, each at most (1 - p^-s)^-1, then an
integral comparison), and P grows until the certified absolute error
drops below the requested tolerance.

Exponent tables are exact rationals so tests compare them by equality.
Bounds of the form x^(e + eps) are returned at eps = 0 with an epsilon
flag; comparisons treat a flagged exponent as the open endpoint it is.
"""

from __future__ import annotations

import functools
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ToleranceError
from .fields import FieldSpec, ideal_density_constant, splitting_type
from .sieve import prime_flags

DEFAULT_PRIME_CAP = 10**7


@functools.lru_cache(maxsize=None)
def _zeta_cached(
    field: FieldSpec, s: float, tol: float, prime_cap: int, strict: bool
) -> tuple[float, int, float]:
    n = field.degree
    product = 1.0
    P = 0
    lo = 2
    hi = 4096
    while True:
        flags = prime_flags(min(hi, prime_cap))
        for p in np.flatnonzero(flags[lo:]) + lo:
            p = int(p)
            for _, f in splitting_type(field, p).parts:
                product /= 1.0 - p ** (-f * s)
        P = min(hi, prime_cap)
        tail_log = n * P ** (1.0 - s) / ((s - 1.0) * (1.0 - P ** (-s)))
        err = product * math.expm1(tail_log)
        if err <= tol:
            return product, P, err
        if P >= prime_cap:
            if strict:
                raise ToleranceError(
                    f"zeta tolerance {tol} unreachable: primes up to {prime_cap} "
                    f"certify only {err:.3e}"
                )
            return product, P, err  # best effort; callers check the bound
        lo, hi = hi + 1, hi * 4


def dedekind_zeta_with_cutoff(
    field: FieldSpec,
    s: float,
    tol: float,
    prime_cap: int = DEFAULT_PRIME_CAP,
    strict: bool = True,
) -> tuple[float, int, float]:
    """Zeta value plus the Euler cutoff P used and the certified error.

    Raises when s <= 1 (divergence) or, in strict mode, when no P under
    the cap certifies the tolerance; non-strict mode returns the best
    value with a warning instead.
    """
    if s <= 1:
        raise ValueError(f"zeta diverges for s <= 1, got s={s}")
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    return _zeta_cached(field, float(s), float(tol), int(prime_cap), bool(strict))


def dedekind_zeta(
    field: FieldSpec, s: float, tol: float, prime_cap: int = DEFAULT_PRIME_CAP
) -> float:
    """Zeta value of the field at real s > 1, within tol."""
    return dedekind_zeta_with_cutoff(field, s, tol, prime_cap)[0]


def main_term(
    field: FieldSpec,
    x: float,
    m: int,
    r: int,
    tol: float = 1e-9,
    prime_cap: int = DEFAULT_PRIME_CAP,
) -> float:
    """Leading asymptotic (c*x)^m / zeta_K(rm) of the r-prime count.

    The zeta tolerance is tightened from `tol` toward whatever makes
    the absolute main-term error less than 0.5 so integer-vs-real
    comparisons stay meaningful; when the Euler product cannot certify
    that under the prime cap (huge (c*x)^m), the best certified value
    is used and a warning is emitted.
    """
    if m < 1 or r < 1:
        raise ValueError(f"need m >= 1 and r >= 1, got m={m}, r={r}")
    if r * m < 2:
        raise ValueError("main term undefined for r*m < 2 (zeta pole at 1)")
    c = ideal_density_constant(field)
    numerator = (c * x) ** m
    zeta_tol = min(tol, 0.5 / max(numerator, 1.0))
    value, _, certified = dedekind_zeta_with_cutoff(
        field, float(r * m), zeta_tol, prime_cap, strict=False
    )
    # |d main| <= numerator * |d zeta| / zeta^2
    main_bound = numerator * certified / (value * value)
    if main_bound > 0.5:
        warnings.warn(
            f"{field.name}: main term at x={x}, m={m}, r={r} certified only to "
            f"+-{main_bound:.3g} absolute under the prime cap {prime_cap}; "
            f"its integer part is not trustworthy",
            stacklevel=2,
        )
    return numerator / value


def error_term(
    field: FieldSpec,
    table,
    x: float,
    m: int,
    r: int,
    tol: float = 1e-9,
    prime_cap: int = DEFAULT_PRIME_CAP,
) -> float:
    """Exact tuple count minus the main term."""
    from .sieve import count_rprime_mobius

    exact = count_rprime_mobius(table, x, m, r)
    return exact - main_term(field, x, m, r, tol=tol, prime_cap=prime_cap)


@dataclass(frozen=True)
class ExponentResult:
    """One growth bound x^exponent * (log x)^log_power, with a flag for
    bounds that hold with an extra +eps/-eps for every eps > 0."""

    exponent: Fraction
    log_power: Fraction
    epsilon_flag: bool = False

    def __post_init__(self) -> None:
        if self.log_power < 0:
            raise ValueError("log power must be nonnegative")


def ideal_remainder_exponent(n: int) -> ExponentResult:
    """Saving in the ideal-count remainder: I_K(x) = c*x + O(x^(1-a) log^b x).

    Returns exponent = a(n) and log_power = b(n) as exact rationals for
    degree n >= 3; the n >= 10 branch carries an epsilon flag (the
    stated saving holds with -eps for every eps > 0).
    """
    if n < 3:
        raise ValueError(f"remainder exponents are tabulated for degree n >= 3, got {n}")
    if n <= 6:
        return ExponentResult(
            exponent=Fraction(2, n) - Fraction(8, n * (5 * n + 2)),
            log_power=Fraction(10, 5 * n + 2),
        )
    if n <= 9:
        return ExponentResult(
            exponent=Fraction(2, n) - Fraction(3, 2 * n * n),
            log_power=Fraction(2, n),
        )
    return ExponentResult(exponent=Fraction(3, n + 6), log_power=Fraction(0), epsilon_flag=True)


def error_term_exponent(n: int, m: int, r: int) -> ExponentResult:
    """Sharpened error bound for the r-prime m-tuple count, degree n >= 3.

    Three cases: rm >= 3 gives x^(m-a) log^b; r=1, m=2 gives
    x^(2-a) log^(2b+1); r=2, m=1 gives x^(1-a/2) log^(2b), where (a, b)
    are the ideal-count remainder exponents.
    """
    if n < 3:
        raise ValueError(f"bound is tabulated for degree n >= 3, got {n}")
    ab = ideal_remainder_exponent(n)
    a, b = ab.exponent, ab.log_power
    if r * m >= 3:
        return ExponentResult(m - a, b, ab.epsilon_flag)
    if r == 1 and m == 2:
        return ExponentResult(2 - a, 2 * b + 1, ab.epsilon_flag)
    if r == 2 and m == 1:
        return ExponentResult(1 - a / 2, 2 * b, ab.epsilon_flag)
    raise ValueError(f"no bound for (m, r) = ({m}, {r})")


def sittinger_exponent(n: int, m: int, r: int) -> ExponentResult:
    """Classical error bound (Sittinger), valid for every degree n >= 1."""
    if n < 1 or m < 1 or r < 1:
        raise ValueError("need n, m, r >= 1")
    if m >= 3 or (m == 2 and r >= 2):
        return ExponentResult(m - Fraction(1, n), Fraction(0))
    if m == 2 and r == 1:
        return ExponentResult(2 - Fraction(1, n), Fraction(1))
    if m == 1:
        if r == 1:
            raise ValueError("no bound for (m, r) = (1, 1)")
        pivot = Fraction(n * (r - 2), r - 1)
        if pivot == 1:
            return ExponentResult(1 - Fraction(1, n), Fraction(1))
        if pivot > 1:
            return ExponentResult(1 - Fraction(1, n), Fraction(0))
        return ExponentResult((2 - Fraction(1, n)) / r, Fraction(0))
    raise ValueError(f"no bound for (m, r) = ({m}, {r})")


def abelian_exponent(n: int, m: int, r: int) -> ExponentResult:
    """Sharper bound available when the field is abelian, degree n >= 4."""
    if n < 4:
        raise ValueError(f"abelian bound is tabulated for degree n >= 4, got {n}")
    if m < 1 or r < 1:
        raise ValueError("need m, r >= 1")
    if r == 2 and m == 1:
        return ExponentResult(1 - Fraction(3, 2 * (n + 2)), Fraction(0), epsilon_flag=True)
    return ExponentResult(m - Fraction(3, n + 2), Fraction(0), epsilon_flag=True)


def is_sharper(a: ExponentResult, b: ExponentResult) -> bool:
    """Whether bound a is strictly smaller than bound b, ordering by
    (exponent, log_power) lexicographically.

    A flagged exponent is an open endpoint (the true bound is e + eps
    for arbitrarily small eps > 0), so on equal exponents a flagged `a`
    never wins: every eps pushes it above any log power.
    """
    if a.exponent != b.exponent:
        return a.exponent < b.exponent
    if a.epsilon_flag:
        return False
    if b.epsilon_flag:
        return True
    return a.log_power < b.log_power
