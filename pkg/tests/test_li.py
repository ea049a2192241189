from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lilab.constants import EULER_GAMMA
from lilab.descriptors import GammaFactor, build_descriptor
from lilab.errors import LaurentError, UnsupportedOperationError
from lilab.li import (
    LiEvaluation,
    asymptotic_residual,
    concavity_threshold,
    growth_model,
    li_arithmetic,
    li_decomposition,
    li_general_sum,
    li_zero_sum,
    pair_profile,
    tail_correction,
)
from lilab.stieltjes import make_laurent
from lilab.zeros import OffLineZero, OffLineZeroSet

CLOSED_FORM_N1 = 1.0 + EULER_GAMMA / 2.0 - 0.5 * math.log(4.0 * math.pi)


def test_zero_sum_first_coefficient(zeta, table):
    ev = li_zero_sum(zeta, table, 1)
    assert ev.route == "zero_sum"
    assert ev.n == 1
    assert ev.value == pytest.approx(CLOSED_FORM_N1, abs=1e-5)
    assert 0.0 < ev.tail_bound < 1e-4
    assert ev.truncation_height == table.coverage_height


def test_zero_sum_without_tail_is_biased_low(zeta, table):
    with_tail = li_zero_sum(zeta, table, 1)
    without = li_zero_sum(zeta, table, 1, include_tail=False)
    assert without.value < with_tail.value
    assert with_tail.value - without.value == pytest.approx(2.2e-5, rel=0.3)


def test_arithmetic_first_coefficient(zeta, laurent):
    ev = li_arithmetic(zeta, laurent, 1)
    assert ev.route == "arithmetic"
    assert ev.value == pytest.approx(CLOSED_FORM_N1, abs=1e-9)
    assert ev.tail_bound == 0.0
    # real-coefficient function: imaginary part vanishes
    assert abs(ev.complex_value.imag) < 1e-9


def test_decomposition_first_coefficient(zeta, table, laurent):
    ev = li_decomposition(zeta, table, 1)
    assert ev.route == "decomposition"
    assert ev.value == pytest.approx(CLOSED_FORM_N1, abs=1e-6)


def test_routes_agree_midrange(zeta, table, laurent):
    for n in (5, 12, 25):
        zs = li_zero_sum(zeta, table, n)
        ar = li_arithmetic(zeta, laurent, n)
        dc = li_decomposition(zeta, table, n)
        assert abs(zs.value - ar.value) <= zs.tail_bound + 1e-4
        assert abs(zs.value - dc.value) <= zs.tail_bound + dc.tail_bound + 1e-3


def test_arithmetic_needs_matching_pole_order(zeta):
    wrong_pole = make_laurent(0, [1.0, 0.5])
    with pytest.raises(LaurentError):
        li_arithmetic(zeta, wrong_pole, 1)


def test_arithmetic_needs_enough_coefficients(zeta):
    short = make_laurent(1, [1.0, 0.5, 0.25])
    with pytest.raises(LaurentError):
        li_arithmetic(zeta, short, 10)


def test_evaluation_rejects_bad_fields():
    with pytest.raises(ValueError):
        LiEvaluation(n=1, route="psychic", value=0.0)
    with pytest.raises(ValueError):
        LiEvaluation(n=1, route="zero_sum", value=0.0, tail_bound=-1.0)


def test_tail_correction_positive_and_shrinking(zeta):
    c1, b1 = tail_correction(zeta, 1000.0, 1)
    c2, b2 = tail_correction(zeta, 10000.0, 1)
    assert c1 > c2 > 0.0
    assert b1 > 0.0 and b2 > 0.0
    assert b1 < c1  # the bound is a fraction of the correction itself


def test_tail_correction_grows_with_order(zeta):
    c_small, _ = tail_correction(zeta, 5000.0, 1)
    c_big, _ = tail_correction(zeta, 5000.0, 6)
    assert c_big > c_small


def test_growth_model_shape(zeta):
    n = 100
    expected = 0.5 * n * math.log(n) + zeta.li_linear_coeff * n
    assert growth_model(zeta, n) == pytest.approx(expected, rel=1e-15)


def test_asymptotic_residual_errors(zeta, table):
    ev = li_zero_sum(zeta, table, 1)
    with pytest.raises(ValueError):
        asymptotic_residual(zeta, ev)
    degree_zero = build_descriptor(
        name="degenerate",
        gamma_factors=[],
        q_scale=1.0,
        polar_order=0,
        real_coefficients=True,
        siegel_zero_count=0,
    )
    ev2 = LiEvaluation(n=5, route="zero_sum", value=1.0)
    with pytest.raises(UnsupportedOperationError):
        asymptotic_residual(degree_zero, ev2)


def test_pair_profile_closed_form_n1():
    # first-order profile: 1 - g = sigma / (sigma^2 + gamma^2)
    for sigma in (0.1, 0.25, 0.5, 0.9):
        for gamma in (0.5, 3.0, 20.0):
            expect = 1.0 - sigma / (sigma * sigma + gamma * gamma)
            assert pair_profile(1, sigma, gamma) == pytest.approx(expect, abs=1e-13)


@given(n=st.integers(1, 12), gamma=st.floats(0.05, 200.0))
@settings(max_examples=200, deadline=None)
def test_pair_profile_on_line_matches_oscillator(n, gamma):
    # on the critical line the profile defect is exactly the mapped oscillator
    from lilab.special import g_oscillator

    lhs = 1.0 - pair_profile(n, 0.5, gamma)
    assert lhs == pytest.approx(g_oscillator(n, gamma), rel=1e-10, abs=1e-13)


@given(
    n=st.integers(1, 12),
    sigma=st.floats(0.51, 0.99),
    gamma=st.floats(0.05, 100.0),
)
@settings(max_examples=200, deadline=None)
def test_pair_profile_right_of_line_contributes_positively(n, sigma, gamma):
    # right of the line the base shrinks, so the defect stays in (0, 2)
    val = 1.0 - pair_profile(n, sigma, gamma)
    assert 0.0 < val < 2.0


def test_general_sum_detects_off_line_pair():
    on_line = OffLineZeroSet([OffLineZero(0.5, 20.0, 2)])
    split = OffLineZeroSet([OffLineZero(0.75, 20.0, 1), OffLineZero(0.25, 20.0, 1)])
    gap = li_general_sum(on_line, 1) - li_general_sum(split, 1)
    assert gap > 1e-9
    assert gap == pytest.approx(1.17e-6, rel=0.05)


def test_general_sum_scales_with_multiplicity():
    single = OffLineZeroSet([OffLineZero(0.5, 14.13, 1)])
    double = OffLineZeroSet([OffLineZero(0.5, 14.13, 2)])
    assert li_general_sum(double, 3) == pytest.approx(2.0 * li_general_sum(single, 3), rel=1e-13)


def test_concavity_threshold_below_advertised_cutoffs():
    assert concavity_threshold(1) <= 1.0 / math.sqrt(3.0)
    assert concavity_threshold(2) <= math.sqrt(6.0)


def test_concavity_equality_only_at_center():
    def pair_sum(n, sigma, gamma):
        return (1.0 - pair_profile(n, sigma, gamma)) + (
            1.0 - pair_profile(n, 1.0 - sigma, gamma)
        )

    for n, gamma in ((1, 1.0), (2, 3.0)):
        center = 2.0 * (1.0 - pair_profile(n, 0.5, gamma))
        # approaching the critical line the defect closes to rounding level
        assert pair_sum(n, 0.5 + 1e-9, gamma) == pytest.approx(center, abs=1e-12)
        assert pair_sum(n, 0.5 + 1e-9, gamma) <= center + 1e-12
        for sigma in (0.1, 0.3, 0.45):
            assert pair_sum(n, sigma, gamma) < center
