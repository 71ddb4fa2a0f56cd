"""Executable predicates for real-zero existence of zeta(sigma, a) in the
intervals (-N-1, -N), an independent numeric zero-location harness, and the
exactly-one-zero check for the deep intervals [-2M-2, -2M).

The existence criterion is the sign of B_(N+1)(a) * B_(N+2)(a), evaluated in
exact rational arithmetic; the harness scans the evaluator for sign changes
and refines them by bisection, with neither side trusting the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .bernoulli import (
    IndeterminateSign,
    bernoulli_polynomial,
    eval_poly,
    even_roots,
)
from .hurwitz import (
    AccuracyError,
    EvalParams,
    check_shift,
    hurwitz_zeta,
    hurwitz_zeta_exact_at_nonpositive_integer,
)

__all__ = [
    "YES",
    "NO",
    "BOUNDARY",
    "ZeroPrediction",
    "LocatedZero",
    "ZeroReport",
    "CaseResult",
    "VerificationReport",
    "predict_zero",
    "predict_zero_explicit",
    "locate_zeros",
    "spira_region_bound",
    "uniqueness_check",
    "verify_theorem",
    "polynomial_roots_in_unit",
]

YES = "yes"
NO = "no"
BOUNDARY = "boundary"


@dataclass(frozen=True)
class ZeroPrediction:
    N: int
    a: float
    b_left: Fraction      # B_(N+1)(a), exact for the a actually used
    b_right: Fraction     # B_(N+2)(a)
    exists: str           # YES / NO / BOUNDARY


@dataclass(frozen=True)
class LocatedZero:
    sigma: float
    bracket_halfwidth: float
    residual: float


@dataclass(frozen=True)
class ZeroReport:
    prediction: ZeroPrediction
    zeros: Tuple[LocatedZero, ...]
    agrees: Optional[bool]
    notes: str = ""


@dataclass(frozen=True)
class CaseResult:
    N: int
    a: float
    b_left: Fraction
    b_right: Fraction
    predicted: str
    zeros: Tuple[LocatedZero, ...]
    agrees: Optional[bool]
    note: str = ""


@dataclass(frozen=True)
class VerificationReport:
    cases: Tuple[CaseResult, ...]
    n_agree: int
    n_disagree: int
    n_skipped: int


def _check_interval_index(N: int) -> int:
    N = int(N)
    if N < -1:
        raise ValueError("interval index must be >= -1")
    return N


def predict_zero(N: int, a: float) -> ZeroPrediction:
    """Theorem-side existence prediction for the interval (-N-1, -N).

    Both Bernoulli polynomial values are computed exactly at the rational
    number the float a represents, so boundary means the product is exactly
    zero, not merely small.
    """
    N = _check_interval_index(N)
    check_shift(a)
    ar = Fraction(a)
    b_left = eval_poly(bernoulli_polynomial(N + 1), ar)
    b_right = eval_poly(bernoulli_polynomial(N + 2), ar)
    prod = b_left * b_right
    if prod < 0:
        exists = YES
    elif prod == 0:
        exists = BOUNDARY
    else:
        exists = NO
    return ZeroPrediction(N=N, a=float(a), b_left=b_left, b_right=b_right,
                          exists=exists)


def predict_zero_explicit(N: int, a: float, root_tol: float = 1e-13) -> bool:
    """Existence via the explicit a-ranges in terms of b_n^- and b_n^+.

    Even N uses the roots of B_(N+2): zeros exist iff 0 < a < b^- or
    1/2 < a < b^+.  Odd N uses the roots of B_(N+1): zeros exist iff
    b^- < a < 1/2 or b^+ < a < 1.  Queries at 1/2 or inside the root
    uncertainty band raise IndeterminateSign.
    """
    N = int(N)
    if N < 0:
        raise ValueError("explicit form requires N >= 0")
    a = float(a)
    if not 0.0 < a < 1.0:
        raise ValueError("a must lie in (0,1) for the explicit form")
    m = N + 2 if N % 2 == 0 else N + 1
    pair = even_roots(m, root_tol)
    band = pair.residual_bound
    if abs(a - pair.b_minus) <= band or abs(a - pair.b_plus) <= band:
        raise IndeterminateSign(f"a={a} within {band} of a root of B_{m}")
    if a == 0.5:
        raise IndeterminateSign("a = 1/2 is a degenerate boundary")
    if N % 2 == 0:
        return (0.0 < a < pair.b_minus) or (0.5 < a < pair.b_plus)
    return (pair.b_minus < a < 0.5) or (pair.b_plus < a < 1.0)


def _scan_margins(N: int, refine_tol: float) -> Tuple[float, float]:
    margin = min(1e-4, refine_tol * 10.0)
    right = 1e-2 if N == -1 else margin  # pole at sigma = 1
    return margin, right


def _refine_sign_change(f, lo, hi, flo, fhi, tol) -> LocatedZero:
    if (flo < 0.0) == (fhi < 0.0):
        raise RuntimeError("bracket endpoints must have opposite signs")
    while (hi - lo) / 2.0 > tol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            lo = hi = mid
            break
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    sigma = 0.5 * (lo + hi)
    return LocatedZero(sigma=sigma, bracket_halfwidth=(hi - lo) / 2.0,
                       residual=abs(f(sigma)))


def locate_zeros(
    N: int,
    a: float,
    grid_points: int = 512,
    refine_tol: float = 1e-10,
    params: EvalParams = EvalParams(),
) -> List[LocatedZero]:
    """Numeric witness: scan zeta(., a) over (-N-1, -N) and refine each sign
    change by bisection to bracket half-width <= refine_tol."""
    N = _check_interval_index(N)
    a = check_shift(a)
    if grid_points < 16:
        raise ValueError("grid_points must be >= 16")
    if refine_tol <= 0:
        raise ValueError("refine_tol must be positive")
    left_m, right_m = _scan_margins(N, refine_tol)
    lo = -N - 1 + left_m
    hi = -N - right_m
    f = lambda s: hurwitz_zeta(s, a, params)
    step = (hi - lo) / (grid_points - 1)
    zeros: List[LocatedZero] = []
    prev_x = lo
    prev_f = f(lo)
    for i in range(1, grid_points):
        x = lo + i * step
        fx = f(x)
        if fx == 0.0:
            zeros.append(LocatedZero(sigma=x, bracket_halfwidth=0.0,
                                     residual=0.0))
        elif prev_f != 0.0 and (fx < 0.0) != (prev_f < 0.0):
            zeros.append(_refine_sign_change(f, prev_x, x, prev_f, fx,
                                             refine_tol))
        prev_x, prev_f = x, fx
    zeros.sort(key=lambda z: z.sigma)
    return zeros


def spira_region_bound(a: float) -> float:
    """Below this sigma all zeros with |t| <= 1 are real, one per interval."""
    a = check_shift(a)
    return -(4.0 * a + 1.0 + 2.0 * math.floor(1.0 - 2.0 * a))


def uniqueness_check(
    M: int,
    a: float,
    grid_points: int = 512,
    refine_tol: float = 1e-10,
    params: EvalParams = EvalParams(),
) -> int:
    """Count zeros of zeta(., a) in [-2M-2, -2M): closed left endpoint
    (tested exactly through the Bernoulli value) plus interior sign changes.
    The corollary predicts exactly 1 for every M >= 2."""
    M = int(M)
    if M < 2:
        raise ValueError("M must be >= 2")
    a = check_shift(a)
    left = -2 * M - 2
    right = -2 * M
    endpoint = hurwitz_zeta_exact_at_nonpositive_integer(2 * M + 3,
                                                         Fraction(a))
    endpoint_zero = endpoint == 0 or abs(float(endpoint)) < 1e-12
    count = 1 if endpoint_zero else 0
    # interior scan; 1e-3 margins keep clear of the (simple) endpoint zeros
    margin = 1e-3
    lo = left + margin
    hi = right - margin
    f = lambda s: hurwitz_zeta(s, a, params)
    step = (hi - lo) / (grid_points - 1)
    prev = f(lo)
    for i in range(1, grid_points):
        cur = f(lo + i * step)
        if cur == 0.0 or (prev < 0.0) != (cur < 0.0):
            count += 1
        prev = cur
    return count


def polynomial_roots_in_unit(m: int, root_tol: float = 1e-13):
    """Roots of B_m(x) in (0, 1] (float approximations; exact for odd m)."""
    if m < 0:
        raise ValueError("index must be nonnegative")
    if m == 0:
        return ()
    if m == 1:
        return (0.5,)
    if m % 2 == 0:
        pair = even_roots(m, root_tol)
        return (pair.b_minus, pair.b_plus)
    return (0.5, 1.0)


def _case_boundary_distance(N: int, a: float) -> float:
    roots = (polynomial_roots_in_unit(N + 1)
             + polynomial_roots_in_unit(N + 2))
    return min(abs(a - r) for r in roots) if roots else math.inf


def verify_case(
    N: int,
    a: float,
    exclusion_delta: float = 1e-3,
    grid_points: int = 512,
    refine_tol: float = 1e-10,
    params: EvalParams = EvalParams(),
) -> CaseResult:
    """One (N, a) cell of the theorem sweep."""
    pred = predict_zero(N, a)
    if _case_boundary_distance(N, a) <= exclusion_delta:
        return CaseResult(N=N, a=float(a), b_left=pred.b_left,
                          b_right=pred.b_right, predicted=pred.exists,
                          zeros=(), agrees=None,
                          note="skipped: a within delta of a polynomial root")
    try:
        zeros = tuple(locate_zeros(N, a, grid_points, refine_tol, params))
    except AccuracyError as exc:
        return CaseResult(N=N, a=float(a), b_left=pred.b_left,
                          b_right=pred.b_right, predicted=pred.exists,
                          zeros=(), agrees=None,
                          note=f"skipped: evaluator accuracy failure ({exc})")
    if pred.exists == BOUNDARY:
        agrees = None
        note = "boundary: product exactly zero, excluded from statistics"
    else:
        agrees = (pred.exists == YES) == (len(zeros) > 0)
        note = "" if agrees else "DISAGREEMENT"
    return CaseResult(N=N, a=float(a), b_left=pred.b_left,
                      b_right=pred.b_right, predicted=pred.exists,
                      zeros=zeros, agrees=agrees, note=note)


def verify_theorem(
    a_grid: Sequence[float],
    N_min: int,
    N_max: int,
    exclusion_delta: float = 1e-3,
    grid_points: int = 512,
    refine_tol: float = 1e-10,
    params: EvalParams = EvalParams(),
) -> VerificationReport:
    """Sweep predict_zero against locate_zeros over the (N, a) grid.

    Disagreements are recorded, never raised; cases near polynomial roots
    (and boundary predictions) are excluded from the agreement statistics.
    Cases run in deterministic (N, a) order.
    """
    if exclusion_delta <= 0:
        raise ValueError("exclusion_delta must be positive")
    if N_min < -1 or N_max < N_min:
        raise ValueError("need -1 <= N_min <= N_max")
    for a in a_grid:
        check_shift(a)
    cases = []
    for N in range(N_min, N_max + 1):
        for a in sorted(a_grid):
            cases.append(verify_case(N, a, exclusion_delta, grid_points,
                                     refine_tol, params))
    n_agree = sum(1 for c in cases if c.agrees is True)
    n_disagree = sum(1 for c in cases if c.agrees is False)
    n_skipped = sum(1 for c in cases if c.agrees is None)
    return VerificationReport(cases=tuple(cases), n_agree=n_agree,
                              n_disagree=n_disagree, n_skipped=n_skipped)
