"""Exact Bernoulli numbers and polynomials, their sign structure on [0,1],
and the roots b_n^- in [0,1/2) and b_n^+ in [1/2,1).

Convention: the generating function is t*e^t/(e^t - 1), so B_1 = +1/2 and
B_n(1) = B_n for every n.  Odd-index numbers vanish for n >= 3.  All numbers
and polynomial coefficients are exact `fractions.Fraction` values up to
`RATIONAL_CAP`; beyond the cap the library refuses instead of degrading.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence, Tuple, Union

__all__ = [
    "RATIONAL_CAP",
    "IndeterminateSign",
    "BernoulliPolynomial",
    "EvenRootPair",
    "bernoulli_number",
    "bernoulli_polynomial",
    "eval_poly",
    "derivative_coefficients",
    "sign_on_unit_interval",
    "even_roots",
]

#: Largest index for which exact rational values are produced.
RATIONAL_CAP = 64

Number = Union[int, Fraction, float]


class IndeterminateSign(ValueError):
    """Raised when a sign query falls inside the numeric uncertainty band of
    a polynomial root, where the strict-inequality criteria do not apply."""


@dataclass(frozen=True)
class BernoulliPolynomial:
    """Power-basis coefficients of B_n(x); coefficients[k] multiplies x^k."""

    degree: int
    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coefficients) != self.degree + 1:
            raise ValueError("coefficient vector must have degree+1 entries")

    @property
    def float_coefficients(self) -> Tuple[float, ...]:
        return tuple(float(c) for c in self.coefficients)


@dataclass(frozen=True)
class EvenRootPair:
    """The two roots of an even-index Bernoulli polynomial in (0,1)."""

    n: int
    b_minus: float
    b_plus: float
    residual_bound: float


@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Fraction:
    """Exact Bernoulli number B_n (B_1 = +1/2)."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n > RATIONAL_CAP:
        raise ValueError(
            f"exact Bernoulli values are capped at index {RATIONAL_CAP}"
        )
    if n == 0:
        return Fraction(1)
    if n % 2 == 1 and n >= 3:
        return Fraction(0)
    # sum_{k=0}^{n} C(n+1,k) B_k = n+1 under the B_1 = +1/2 convention
    acc = sum(comb(n + 1, k) * bernoulli_number(k) for k in range(n))
    return Fraction(n + 1 - acc, n + 1)


@lru_cache(maxsize=None)
def bernoulli_polynomial(n: int) -> BernoulliPolynomial:
    """Exact B_n(x) as a monic power-basis polynomial.

    B_n(x) = sum_k C(n,k) B_k(0) x^(n-k), where B_k(0) equals B_k except
    B_1(0) = -1/2 (the polynomial generating function t*e^(xt)/(e^t-1) pins
    the constant terms at x = 0, not at x = 1).
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        bk = Fraction(-1, 2) if k == 1 else bernoulli_number(k)
        coeffs[n - k] = comb(n, k) * bk
    return BernoulliPolynomial(n, tuple(coeffs))


def eval_poly(p: BernoulliPolynomial, x: Number):
    """Evaluate p at x: exact when x is rational, float Horner otherwise.

    The floating path runs nested multiplication from the highest degree
    down, so results are reproducible bit-for-bit on a given platform.
    """
    if isinstance(x, numbers.Rational):
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(p.coefficients):
            acc = acc * x + c
        return acc
    xf = float(x)
    accf = 0.0
    for c in reversed(p.float_coefficients):
        accf = accf * xf + c
    return accf


def derivative_coefficients(p: BernoulliPolynomial) -> Tuple[Fraction, ...]:
    """Coefficients of p'; equals n * B_(n-1) coefficient-by-coefficient."""
    return tuple(k * c for k, c in enumerate(p.coefficients) if k > 0)


def _float_horner(coeffs: Sequence[float], x: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _refine_root(coeffs, dcoeffs, lo, hi, tol):
    """Bracketed root refinement: alternate bisection and Newton steps.

    The bracket [lo, hi] must have opposite signs at its endpoints.  A Newton
    step leaving the bracket falls back to the midpoint, and every other
    iteration is a plain bisection step, so the bracket provably halves at
    least every two iterations.
    """
    flo = _float_horner(coeffs, lo)
    fhi = _float_horner(coeffs, hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    assert (flo < 0.0) != (fhi < 0.0), "initial sign bracket failed"
    use_newton = False
    while (hi - lo) / 2.0 > tol:
        mid = 0.5 * (lo + hi)
        x_new = mid
        if use_newton:
            d = _float_horner(dcoeffs, mid)
            if d != 0.0:
                cand = mid - _float_horner(coeffs, mid) / d
                if lo < cand < hi:
                    x_new = cand
        use_newton = not use_newton
        fx = _float_horner(coeffs, x_new)
        if fx == 0.0:
            return x_new
        if (fx < 0.0) == (flo < 0.0):
            lo, flo = x_new, fx
        else:
            hi, fhi = x_new, fx
    return 0.5 * (lo + hi)


@lru_cache(maxsize=None)
def even_roots(n: int, tol: float = 1e-13) -> EvenRootPair:
    """Locate b_n^- and b_n^+ for even n >= 2 to bracket half-width <= tol.

    The initial brackets [0,1/2] and [1/2,1] are guaranteed: B_n(0) = B_n and
    B_n(1/2) = (2^(1-n)-1) B_n carry opposite signs for even n.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if n < 2 or n % 2 != 0:
        raise ValueError("even index >= 2 required")
    p = bernoulli_polynomial(n)
    coeffs = p.float_coefficients
    dcoeffs = tuple(float(c) for c in derivative_coefficients(p))
    b_minus = _refine_root(coeffs, dcoeffs, 0.0, 0.5, tol)
    b_plus = _refine_root(coeffs, dcoeffs, 0.5, 1.0, tol)
    return EvenRootPair(n, b_minus, b_plus, tol)


def sign_on_unit_interval(n: int, x: Number, root_tol: float = 1e-13) -> int:
    """Sign of B_n(x) on [0,1] from the root structure, not from evaluation.

    Serves as an independent oracle against `eval_poly`.  For even n = 2k the
    sign of (-1)^(k-1) B_2k(x) is positive outside (b^-, b^+) and negative
    inside; for odd n = 2k+1 it is positive on (0,1/2), negative on (1/2,1),
    and zero at 0, 1/2, 1.  Queries inside the root uncertainty band raise
    `IndeterminateSign`.
    """
    if n < 2:
        raise ValueError("index must be >= 2")
    xf = float(x)
    if not 0.0 <= xf <= 1.0:
        raise ValueError("x must lie in [0,1]")
    if n % 2 == 0:
        k = n // 2
        base = 1 if (k - 1) % 2 == 0 else -1
        pair = even_roots(n, root_tol)
        band = pair.residual_bound
        if abs(xf - pair.b_minus) <= band or abs(xf - pair.b_plus) <= band:
            raise IndeterminateSign(
                f"x={xf} within {band} of a root of B_{n}"
            )
        if pair.b_minus < xf < pair.b_plus:
            return -base
        return base
    k = (n - 1) // 2
    base = 1 if (k - 1) % 2 == 0 else -1
    if xf == 0.0 or xf == 0.5 or xf == 1.0:
        return 0
    return base if xf < 0.5 else -base
