"""Real-line Hurwitz zeta evaluation and the strip-wise integral cross-check.

The evaluator is Euler-Maclaurin: head sum, integral term, half term, then
even-Bernoulli corrections with the first-omitted-term remainder bound.  When
cancellation in the head sum would eat the error budget (deeply negative
sigma), the same algorithm runs on `mpmath` floats with guard precision; the
returned value is always an ordinary float.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from mpmath import mp, mpf
from scipy.integrate import quad

from .bernoulli import (
    RATIONAL_CAP,
    bernoulli_number,
    bernoulli_polynomial,
    eval_poly,
)

__all__ = [
    "PoleError",
    "AccuracyError",
    "StripError",
    "EvalParams",
    "EvalResult",
    "check_shift",
    "hurwitz_zeta",
    "hurwitz_zeta_detailed",
    "hurwitz_zeta_exact_at_nonpositive_integer",
    "riemann_zeta",
    "gamma_real",
    "gamma_sign",
    "integrand_G",
    "integral_representation",
]

_EPS = 2.220446049250313e-16

#: x below this uses the Laurent-tail form of the integrand (validity radius
#: of the expansion is 2*pi, comfortably above it).
SMALL_X_THRESHOLD = 0.5


class PoleError(ValueError):
    """zeta(s, a) has a simple pole at s = 1; values there are rejected."""


class AccuracyError(RuntimeError):
    """Requested accuracy could not be reached within the truncation caps."""

    def __init__(self, message: str, achieved_bound: float):
        super().__init__(message)
        self.achieved_bound = achieved_bound


class StripError(ValueError):
    """The integral representation only holds for -N-1 < sigma < -N."""


@dataclass(frozen=True)
class EvalParams:
    """Accuracy and truncation configuration for the evaluator."""

    target_abs_error: float = 1e-10
    max_cutoff: int = 10_000
    max_correction_order: int = 30

    def __post_init__(self):
        if self.target_abs_error <= 0:
            raise ValueError("target_abs_error must be positive")
        if self.max_cutoff <= 0 or self.max_correction_order <= 0:
            raise ValueError("truncation caps must be positive")


@dataclass(frozen=True)
class EvalResult:
    value: float
    error_bound: float
    cutoff: int
    correction_order: int


def check_shift(a: float) -> float:
    a = float(a)
    if not 0.0 < a <= 1.0:
        raise ValueError("shift parameter must satisfy 0 < a <= 1")
    return a


def _check_strip(N: int, sigma: float) -> None:
    if N < -1:
        raise ValueError("strip index must be >= -1")
    if not (-N - 1 < sigma < -N):
        raise StripError(
            f"sigma={sigma} is not strictly inside (-{N + 1}, {-N})"
        )


def _default_cutoff(sigma: float, params: EvalParams) -> int:
    return min(params.max_cutoff, max(20, math.ceil(abs(sigma)) + 10))


def _correction_loop(s, q, total, kmax, kmin, target, to_float):
    """Shared Euler-Maclaurin correction loop (float or mpf arithmetic).

    Adds T_k = B_2k/(2k)! * (s)(s+1)...(s+2k-2) * q^(-s-2k+1) for k = 1..,
    bounding the remainder after K terms by |T_(K+1)| (valid once
    sigma + 2K + 1 > 0).  Returns the partial sum at the best bound seen,
    so the reported bound is monotone in the order cap.
    """
    poch = s
    tpow = q ** (-s - 1)
    qm2 = q ** -2
    best_bound = math.inf
    best_val = total
    best_k = 0
    val = total
    for k in range(1, kmax + 1):
        bk = bernoulli_number(2 * k)
        val = val + (type(q)(bk.numerator) / bk.denominator
                     / math.factorial(2 * k)) * poch * tpow
        poch = poch * (s + 2 * k - 1) * (s + 2 * k)
        tpow = tpow * qm2
        if 2 * k + 2 > RATIONAL_CAP:
            break
        bn = bernoulli_number(2 * k + 2)
        nxt = abs((type(q)(bn.numerator) / bn.denominator
                   / math.factorial(2 * k + 2)) * poch * tpow)
        bound = to_float(nxt)
        if k >= kmin and bound < best_bound:
            best_bound = bound
            best_val = val
            best_k = k
            if bound <= target:
                break
    return best_val, best_bound, best_k


def _em_float(sigma: float, a: float, M: int, kmax: int, target: float):
    q = M + a
    head = math.fsum((n + a) ** -sigma for n in range(M))
    total = head + q ** (1.0 - sigma) / (sigma - 1.0) + 0.5 * q ** -sigma
    kmin = max(1, math.floor((-sigma - 1.0) / 2.0) + 1)
    val, bound, k = _correction_loop(
        sigma, q, total, kmax, kmin, target, float
    )
    return val, bound, k


def _em_mpf(sigma: float, a: float, M: int, kmax: int, target: float):
    q0 = M + a
    guard = max(0.0, -sigma) * math.log10(q0 + 2.0)
    dps = 18 + int(guard) + max(0, int(-math.log10(target)) - 10)
    with mp.workdps(dps):
        s = mpf(sigma)
        af = mpf(a)
        q = mpf(M) + af
        head = mpf(0)
        for n in range(M):
            head += (mpf(n) + af) ** -s
        total = head + q ** (1 - s) / (s - 1) + q ** -s / 2
        kmin = max(1, math.floor((-sigma - 1.0) / 2.0) + 1)
        val, bound, k = _correction_loop(
            s, q, total, kmax, kmin, target, float
        )
        return float(val), bound, k


def _needs_guard_precision(sigma: float, a: float, M: int,
                           target: float) -> bool:
    # Largest intermediate magnitude: head terms for sigma < 0, the leading
    # term a^-sigma for sigma > 0.  Rounding ~ eps * magnitude * sqrt(M)
    # must stay well under the absolute target.
    if sigma < 0.0:
        peak = (M + a) ** -sigma
    else:
        peak = a ** -sigma
    return _EPS * peak * math.sqrt(M + 4) > target / 2.0


def hurwitz_zeta_detailed(
    sigma: float,
    a: float,
    params: EvalParams = EvalParams(),
    cutoff: Optional[int] = None,
    correction_order: Optional[int] = None,
) -> EvalResult:
    """Evaluate zeta(sigma, a) with an explicit achieved error bound.

    `cutoff` and `correction_order` override the adaptive policy (used by the
    parameter-sanity tests); normally the head length is
    max(20, ceil(|sigma|) + 10) and the correction order grows from 5 until
    the first-omitted-term bound clears the target.
    """
    a = check_shift(a)
    sigma = float(sigma)
    if sigma == 1.0:
        raise PoleError("zeta(s, a) has a pole at s = 1")
    M = cutoff if cutoff is not None else _default_cutoff(sigma, params)
    if M <= 0:
        raise ValueError("cutoff must be positive")
    kmax = (correction_order if correction_order is not None
            else params.max_correction_order)
    target = params.target_abs_error
    if _needs_guard_precision(sigma, a, M, target):
        val, bound, k = _em_mpf(sigma, a, M, kmax, target)
    else:
        val, bound, k = _em_float(sigma, a, M, kmax, target)
    if bound > target and correction_order is None:
        raise AccuracyError(
            f"achieved bound {bound:.3e} exceeds target {target:.3e} "
            f"at sigma={sigma}, a={a}",
            achieved_bound=bound,
        )
    return EvalResult(value=val, error_bound=bound, cutoff=M,
                      correction_order=k)


def hurwitz_zeta(sigma: float, a: float,
                 params: EvalParams = EvalParams()) -> float:
    """zeta(sigma, a) on the real line, absolute error <= the params target."""
    return hurwitz_zeta_detailed(sigma, a, params).value


def riemann_zeta(sigma: float, params: EvalParams = EvalParams()) -> float:
    """zeta(sigma) = zeta(sigma, 1)."""
    return hurwitz_zeta(sigma, 1.0, params)


def hurwitz_zeta_exact_at_nonpositive_integer(n: int, a) -> Fraction:
    """Exact zeta(1-n, a) = -B_n(a)/n for integer n >= 1 and rational a."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not isinstance(a, numbers.Rational):
        raise TypeError("a must be rational for the exact value")
    a = Fraction(a)
    if not 0 < a <= 1:
        raise ValueError("shift parameter must satisfy 0 < a <= 1")
    return -eval_poly(bernoulli_polynomial(n), a) / n


def gamma_real(x: float) -> float:
    """Gamma on the real line; plumbing for the integral cross-check."""
    x = float(x)
    if x <= 0.0 and x.is_integer():
        raise ValueError("gamma pole at nonpositive integer")
    return math.gamma(x)


def gamma_sign(sigma: float) -> int:
    """Sign of Gamma(sigma) for negative non-integer sigma.

    On (-k-1, -k) the sign is (-1)^(k-1): negative on (-1,0), positive on
    (-2,-1), and alternating onward.
    """
    sigma = float(sigma)
    if sigma >= 0.0 or sigma.is_integer():
        raise ValueError("sigma must be negative and non-integer")
    k = math.floor(-sigma)
    return 1 if (k - 1) % 2 == 0 else -1


@lru_cache(maxsize=256)
def _laurent_coeffs(a: float, nmax: int = RATIONAL_CAP):
    """Float coefficients B_n(1-a)/n! of the expansion of e^((1-a)x)/(e^x-1)."""
    out = []
    fact = 1.0
    for n in range(nmax + 1):
        if n > 0:
            fact *= n
        out.append(eval_poly(bernoulli_polynomial(n), 1.0 - a) / fact)
    return tuple(out)


def _integrand_G_scaled(N: int, a: float, x: float) -> float:
    """G_N(a,x) / x^(N+1); finite and smooth down to x = 0."""
    c = _laurent_coeffs(a)
    if x < SMALL_X_THRESHOLD:
        acc = 0.0
        xp = 1.0
        small_run = 0
        for n in range(N + 2, len(c)):
            term = c[n] * xp
            acc += term
            if abs(term) < 1e-18 * (abs(acc) + 1.0):
                # odd-index coefficients can be exactly zero (a = 1/2, 1);
                # stop only on two negligible terms in a row
                small_run += 1
                if small_run >= 2:
                    break
            else:
                small_run = 0
            xp *= x
        return acc
    return _integrand_G_direct(N, a, x) / x ** (N + 1)


def _integrand_G_direct(N: int, a: float, x: float) -> float:
    c = _laurent_coeffs(a)
    # e^((1-a)x)/(e^x - 1) written as e^(-ax)/(1 - e^(-x)) to avoid overflow
    kernel = math.exp(-a * x) / (-math.expm1(-x))
    partial = math.fsum(c[n] * x ** (n - 1) for n in range(N + 2))
    return kernel - partial


def integrand_G(N: int, a: float, x: float) -> float:
    """The subtracted kernel G_N(a,x) of the strip integral representation.

    For x below `SMALL_X_THRESHOLD` the convergent Laurent tail is summed
    instead of the direct difference, which loses all digits as x -> 0
    because the subtracted partial sum matches the leading terms.
    """
    a = check_shift(a)
    if N < -1:
        raise ValueError("strip index must be >= -1")
    if x <= 0.0:
        raise ValueError("x must be positive")
    if x < SMALL_X_THRESHOLD:
        return _integrand_G_scaled(N, a, x) * x ** (N + 1)
    return _integrand_G_direct(N, a, x)


def integral_representation(
    sigma: float,
    a: float,
    N: int,
    quad_params: EvalParams = EvalParams(),
) -> float:
    """Gamma(sigma)*zeta(sigma,a) via the strip integral, for sigma in
    (-N-1, -N).

    Split at x = 1 mirroring the proof decomposition P + Q_N + R_N: the tail
    piece P integrates the exponential kernel out to where its envelope
    clears the budget, Q_N is the closed-form rational part, and R_N handles
    (0,1] with the algebraic endpoint weight x^(N+sigma) factored out.
    """
    a = check_shift(a)
    sigma = float(sigma)
    _check_strip(N, sigma)
    tol = max(quad_params.target_abs_error / 2.0, 1e-11)
    c = _laurent_coeffs(a)

    # R_N: (0,1], integrand (G_N/x^(N+1)) * x^(N+sigma), weight exponent
    # in (-1,0) handled by the QUADPACK algebraic-weight rule.
    r_val, _ = quad(
        lambda x: _integrand_G_scaled(N, a, x),
        0.0,
        1.0,
        weight="alg",
        wvar=(N + sigma, 0.0),
        epsabs=tol,
        epsrel=1e-10,
        limit=200,
    )

    # Q_N: the continued rational part sum_n c_n/(n+sigma-1); all
    # denominators are strictly negative inside the strip.
    q_val = math.fsum(c[n] / (n + sigma - 1.0) for n in range(N + 2))

    # P: [1, X], envelope e^(-a x) bounds the tail beyond X.
    x_max = max(50.0, -math.log(tol * a) / a + 20.0)
    p_val, _ = quad(
        lambda x: math.exp(-a * x) / (-math.expm1(-x)) * x ** (sigma - 1.0),
        1.0,
        x_max,
        epsabs=tol,
        epsrel=1e-10,
        limit=200,
    )
    return p_val + q_val + r_val
