from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lilab.constants import EULER_GAMMA
from lilab.descriptors import GammaFactor, build_descriptor
from lilab.special import g_oscillator
from lilab.volchkov import (
    asymptotic_scan,
    gamma_shift_sum,
    i2,
    i3,
    oscillation_knots,
    tail_variation,
    volchkov_integral,
)


def test_i2_first_order_closed_form(zeta):
    # for the zeta gamma factor the n=1 shifted-digamma sum collapses
    assert i2(zeta, 1) == pytest.approx(-EULER_GAMMA / 2.0 - math.log(2.0), abs=1e-12)


def test_gamma_shift_sum_additive_over_factors():
    base = dict(q_scale=1.0, polar_order=0, real_coefficients=True, siegel_zero_count=0)
    one = build_descriptor(name="a", gamma_factors=[GammaFactor(0.5, 0.25)], **base)
    two = build_descriptor(name="b", gamma_factors=[GammaFactor(1.0, complex(0.5, 1.0))], **base)
    both = build_descriptor(
        name="ab",
        gamma_factors=[GammaFactor(0.5, 0.25), GammaFactor(1.0, complex(0.5, 1.0))],
        **base,
    )
    for n in (1, 2, 7):
        merged = gamma_shift_sum(both, n)
        split = gamma_shift_sum(one, n) + gamma_shift_sum(two, n)
        assert merged.real == pytest.approx(split.real, rel=1e-12, abs=1e-12)
        assert merged.imag == pytest.approx(split.imag, rel=1e-12, abs=1e-12)


def test_oscillation_knots_structure():
    n, upper = 6, 100.0
    knots = np.asarray(oscillation_knots(n, upper))
    assert np.all(knots > 0.0)
    assert np.all(knots < upper)
    assert np.all(np.diff(knots) > 0.0)
    # every quarter-period point of the phase 2 n arctan(1/(2x)) is present
    for k in range(1, 2 * n):
        x_k = 1.0 / (2.0 * math.tan(k * math.pi / (4.0 * n)))
        if 0.0 < x_k < upper:
            assert np.min(np.abs(knots - x_k)) < 1e-12


@given(n=st.integers(1, 20), t=st.floats(5.0, 5000.0))
@settings(max_examples=100, deadline=None)
def test_tail_variation_matches_endpoint_when_monotone(n, t):
    # beyond the last oscillation the envelope is just the endpoint value
    k_crit = int(math.floor((2.0 * n / math.pi) * math.atan(1.0 / (2.0 * t))))
    tv = tail_variation(n, t)
    if k_crit == 0:
        assert tv == pytest.approx(g_oscillator(n, t), rel=1e-12)
    else:
        assert tv >= g_oscillator(n, t) - 1e-12


def test_tail_variation_counts_remaining_swings():
    # a tiny truncation height keeps every extremum of the oscillator ahead
    n = 9
    tv = tail_variation(n, 1e-9)
    # total variation of the oscillator over (0, inf) is close to 2n
    assert tv == pytest.approx(2.0 * n, rel=0.15)


def test_i3_first_order_volchkov_value(zeta, table):
    rep = i3(zeta, table, 1)
    assert rep.n == 1
    assert rep.value == pytest.approx(EULER_GAMMA - 3.0, abs=1e-3)
    assert rep.tail_bound > 0.0
    assert rep.truncation_height == table.coverage_height
    assert rep.step_part - rep.smooth_part == pytest.approx(rep.value, abs=1e-12)


def test_volchkov_report_consistency(zeta, table, laurent):
    rep = volchkov_integral(zeta, table, laurent)
    assert rep.value == pytest.approx(EULER_GAMMA - 3.0, abs=1e-3)
    assert rep.reference_value is not None
    assert rep.value == pytest.approx(rep.reference_value, abs=2e-3)


def test_volchkov_without_laurent_has_no_reference(zeta, table):
    rep = volchkov_integral(zeta, table)
    assert rep.reference_value is None
    assert rep.value == pytest.approx(EULER_GAMMA - 3.0, abs=1e-3)


def test_euler_constant_recovery(zeta, table):
    # polar order contributes 3 m; for the zeta shape 3 + (gamma - 3) = gamma
    rep = i3(zeta, table, 1)
    assert 3.0 * zeta.polar_order + rep.value == pytest.approx(EULER_GAMMA, abs=1e-3)


def test_asymptotic_scan_rows(zeta, table):
    rows = asymptotic_scan(zeta, table, (2, 4, 8))
    assert [r[0] for r in rows] == [2, 4, 8]
    for n, scaled, normalized in rows:
        assert math.isfinite(scaled)
        assert math.isfinite(normalized)


def test_scan_normalized_stays_bounded_small(zeta, table):
    rows = asymptotic_scan(zeta, table, (2, 16, 64))
    assert max(abs(r[2]) for r in rows) < 10.0


def test_i3_s_cap_enters_tail_bound(zeta, table):
    lo = i3(zeta, table, 3, s_cap=1.0)
    hi = i3(zeta, table, 3, s_cap=8.0)
    assert hi.tail_bound > lo.tail_bound
    assert lo.value == pytest.approx(hi.value, abs=1e-12)
    assert lo.s_cap == 1.0 and hi.s_cap == 8.0
