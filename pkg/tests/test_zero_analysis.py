import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hurwitz_real_zeros.bernoulli import IndeterminateSign, even_roots
from hurwitz_real_zeros.hurwitz import (
    EvalParams,
    gamma_sign,
    hurwitz_zeta,
    hurwitz_zeta_exact_at_nonpositive_integer,
    integral_representation,
)
from hurwitz_real_zeros.zero_analysis import (
    BOUNDARY,
    NO,
    YES,
    locate_zeros,
    polynomial_roots_in_unit,
    predict_zero,
    predict_zero_explicit,
    spira_region_bound,
    uniqueness_check,
    verify_case,
    verify_theorem,
)

F = Fraction


def _far_from_boundaries(N, a, delta=1e-6):
    roots = (polynomial_roots_in_unit(N + 1)
             + polynomial_roots_in_unit(N + 2) + (0.5,))
    return min(abs(a - r) for r in roots) > delta


# ------------------------------------------------------------- predicates

def test_predict_examples():
    assert predict_zero(0, 0.1).exists == YES
    assert predict_zero(0, 0.3).exists == NO
    assert predict_zero(5, 1.0).exists == BOUNDARY


def test_predict_exact_values():
    pred = predict_zero(1, 0.4)
    # a = 0.4 is not exactly 2/5 in binary; evaluate at the true rational
    a = F(0.4)
    assert pred.b_left * pred.b_right < 0
    assert pred.b_left == (a * a - a + F(1, 6))


def test_predict_boundary_cases_exact():
    for a in (0.5, 1.0):
        for N in range(1, 7):
            assert predict_zero(N, a).exists == BOUNDARY


def test_predict_domain():
    with pytest.raises(ValueError):
        predict_zero(-2, 0.3)
    with pytest.raises(ValueError):
        predict_zero(0, 0.0)


def test_explicit_examples():
    assert predict_zero_explicit(1, 0.4) is True
    assert predict_zero_explicit(2, 0.3) is False
    assert predict_zero_explicit(0, 0.1) is True


def test_explicit_boundary_raises():
    with pytest.raises(IndeterminateSign):
        predict_zero_explicit(1, 0.5)
    pair = even_roots(4)
    with pytest.raises(IndeterminateSign):
        predict_zero_explicit(2, pair.b_minus)
    with pytest.raises(ValueError):
        predict_zero_explicit(-1, 0.3)
    with pytest.raises(ValueError):
        predict_zero_explicit(1, 1.0)


def test_theorem_forms_equivalent_on_grid():
    for N in range(0, 7):
        for i in range(1, 200):
            a = i / 200
            if not _far_from_boundaries(N, a):
                continue
            assert predict_zero_explicit(N, a) == \
                (predict_zero(N, a).exists == YES)


@settings(max_examples=200, deadline=None)
@given(
    N=st.integers(min_value=0, max_value=8),
    a=st.floats(min_value=1e-3, max_value=1 - 1e-3),
)
def test_theorem_forms_equivalent_random(N, a):
    assume(_far_from_boundaries(N, a))
    assert predict_zero_explicit(N, a) == (predict_zero(N, a).exists == YES)


def test_endpoint_sign_opposition_when_zero_predicted():
    # when existence is predicted, the exact interval-endpoint values of
    # zeta carry opposite signs (Bernoulli values via the exact formula)
    for N in range(-1, 7):
        for i in range(1, 20):
            a = F(i, 20)
            pred = predict_zero(N, float(i / 20))
            left = hurwitz_zeta_exact_at_nonpositive_integer(N + 2, a)
            right = hurwitz_zeta_exact_at_nonpositive_integer(N + 1, a) \
                if N + 1 >= 1 else None
            if pred.exists == YES and right is not None:
                assert left * right < 0


# ----------------------------------------------------------------- harness

def test_locate_zeros_examples():
    zeros = locate_zeros(1, 0.4, 512, 1e-10)
    assert len(zeros) == 1
    assert -2 < zeros[0].sigma < -1
    assert zeros[0].residual < 1e-9
    assert zeros[0].bracket_halfwidth <= 1e-10
    assert locate_zeros(1, 1.0, 512, 1e-10) == []


def test_locate_zeros_unit_interval():
    zeros = locate_zeros(-1, 0.25, 512, 1e-10)
    assert len(zeros) == 1
    assert 0 < zeros[0].sigma < 1
    assert locate_zeros(-1, 0.75, 512, 1e-10) == []


def test_locate_zeros_validation():
    with pytest.raises(ValueError):
        locate_zeros(1, 0.4, grid_points=8)
    with pytest.raises(ValueError):
        locate_zeros(1, 0.4, refine_tol=-1e-10)


def test_zero_count_parity_matches_prediction():
    for N in range(0, 5):
        for a in (0.1, 0.3, 0.45, 0.7, 0.9):
            pred = predict_zero(N, a)
            if pred.exists != YES:
                continue
            zeros = locate_zeros(N, a, 256, 1e-9)
            assert len(zeros) % 2 == 1


def test_sign_via_integral_consistency():
    # on intervals with no predicted zero, the zeta sign must equal
    # sign(integral) * sign(Gamma)
    cases = {0: 0.3, 1: 0.1, 2: 0.35, 3: 0.2}
    for N, a in cases.items():
        assert predict_zero(N, a).exists == NO
        for frac in (0.25, 0.5, 0.75):
            sigma = -N - 1 + frac
            z = hurwitz_zeta(sigma, a)
            integral = integral_representation(sigma, a, N)
            assert math.copysign(1, z) == \
                math.copysign(1, integral) * gamma_sign(sigma)


# -------------------------------------------------------------- uniqueness

def test_spira_bound_examples():
    assert spira_region_bound(0.5) == -3.0
    assert spira_region_bound(1.0) == -3.0
    assert spira_region_bound(0.25) == -2.0


def test_uniqueness_spot_checks():
    assert uniqueness_check(2, 0.5) == 1   # zero at sigma = -6 exactly
    assert uniqueness_check(2, 1.0) == 1   # trivial zero at -6
    assert uniqueness_check(2, 0.3) == 1


def test_uniqueness_validation():
    with pytest.raises(ValueError):
        uniqueness_check(1, 0.5)


# ------------------------------------------------------------------ sweep

def test_verify_small_sweep_agrees():
    grid = [0.05 + 0.1 * k for k in range(10)]
    report = verify_theorem(grid, -1, 2)
    assert report.n_disagree == 0
    assert report.n_agree > 0


def test_verify_boundary_a_values():
    report = verify_theorem([1.0], 1, 4)
    for case in report.cases:
        assert case.predicted in (BOUNDARY, NO)
        assert case.agrees in (None, True)
        if case.agrees is True:
            assert case.zeros == ()


def test_verify_case_just_outside_existence_range():
    delta = 1e-3
    a = even_roots(2).b_minus + 10 * delta
    case = verify_case(0, a, exclusion_delta=delta)
    assert case.predicted == NO
    assert case.agrees is True
    assert case.zeros == ()


def test_verify_skips_near_roots():
    case = verify_case(0, 0.5)
    assert case.agrees is None
    assert "skipped" in case.note


def test_verify_validation():
    with pytest.raises(ValueError):
        verify_theorem([0.3], 0, 1, exclusion_delta=0.0)
    with pytest.raises(ValueError):
        verify_theorem([0.3], 2, 1)
    with pytest.raises(ValueError):
        verify_theorem([1.5], 0, 1)
