from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lilab.descriptors import GammaFactor, build_descriptor
from lilab.errors import TableError, UnsupportedOperationError
from lilab.zeros import (
    OffLineZero,
    OffLineZeroSet,
    check_table,
    count_zeros,
    make_zero_table,
    pair_weight,
    s_function,
    smooth_count,
    smooth_count_many,
    tail_density,
)

FIRST_ZERO = 14.134725141734695


def test_bundled_table_shape(table):
    assert table.ordinates.shape == (100000,)
    assert table.ordinates[0] == pytest.approx(FIRST_ZERO, abs=1e-9)
    assert table.coverage_height == pytest.approx(74920.827498992, abs=1e-6)
    assert table.total_multiplicity() == 100000
    assert table.symmetric


def test_make_table_validation():
    with pytest.raises(TableError):
        make_zero_table(label="bad", ordinates=[-1.0], multiplicities=[1], symmetric=True, coverage_height=5.0)
    with pytest.raises(TableError):
        make_zero_table(label="bad", ordinates=[2.0, 2.0], multiplicities=[1, 1], symmetric=True, coverage_height=5.0)
    with pytest.raises(TableError):
        make_zero_table(label="bad", ordinates=[2.0], multiplicities=[0], symmetric=True, coverage_height=5.0)
    with pytest.raises(TableError):
        make_zero_table(label="bad", ordinates=[2.0, 7.0], multiplicities=[1, 1], symmetric=True, coverage_height=6.0)


def test_symmetric_table_needs_real_coefficients(table):
    complex_desc = build_descriptor(
        name="complex-coeffs",
        gamma_factors=[GammaFactor(0.5, 0.0)],
        q_scale=1.0,
        polar_order=0,
        real_coefficients=False,
        siegel_zero_count=0,
    )
    with pytest.raises(TableError):
        check_table(complex_desc, table)


def test_pair_weight(table):
    assert pair_weight(table) == 2.0


def test_count_zeros_low_heights(zeta, table):
    assert count_zeros(table, zeta, 10.0) == 0
    # 29 ordinates below 100, counting both half-planes
    assert count_zeros(table, zeta, 100.0) == 58
    # right-continuity: the jump is included at the ordinate itself
    g1 = float(table.ordinates[0])
    assert count_zeros(table, zeta, g1) == 2
    assert count_zeros(table, zeta, math.nextafter(g1, 0.0)) == 0


def test_count_zeros_domain_errors(zeta, table):
    with pytest.raises(TableError):
        count_zeros(table, zeta, -1.0)
    with pytest.raises(TableError):
        count_zeros(table, zeta, table.coverage_height + 1.0)


def test_count_zeros_adds_siegel_zeros(table):
    desc = build_descriptor(
        name="with-exceptional-zero",
        gamma_factors=[GammaFactor(0.5, 0.0)],
        q_scale=1.0,
        polar_order=0,
        real_coefficients=True,
        siegel_zero_count=2,
    )
    assert count_zeros(table, desc, 10.0) == 2


@given(
    gaps=st.lists(st.floats(0.1, 5.0), min_size=1, max_size=12),
    mults=st.lists(st.integers(1, 3), min_size=12, max_size=12),
)
@settings(max_examples=80, deadline=None)
def test_count_is_monotone_with_exact_jumps(zeta, gaps, mults):
    ords = np.cumsum(np.array(gaps)) + 1.0
    ms = mults[: len(ords)]
    tab = make_zero_table(
        label="synthetic",
        ordinates=ords,
        multiplicities=ms,
        symmetric=True,
        coverage_height=float(ords[-1]) + 1.0,
    )
    prev = count_zeros(tab, zeta, 0.0)
    assert prev == 0
    for g, m in zip(ords, ms):
        before = count_zeros(tab, zeta, math.nextafter(float(g), 0.0))
        after = count_zeros(tab, zeta, float(g))
        assert after - before == 2 * m
        assert before >= prev
        prev = after


def test_smooth_count_at_zero_is_twice_polar_order(zeta):
    assert smooth_count(zeta, 0.0) == pytest.approx(2.0, abs=1e-12)


def test_smooth_count_tracks_actual_count(zeta, table):
    # the smooth term alone stays within a few units of the jump count
    for t in (50.0, 500.0, 5000.0, 50000.0):
        n_exact = count_zeros(table, zeta, t)
        assert abs(smooth_count(zeta, t) - n_exact) < 4.0


def test_smooth_count_many_matches_scalar(zeta):
    ts = np.array([0.0, 14.2, 100.0, 1234.5])
    vec = smooth_count_many(zeta, ts)
    for i, t in enumerate(ts):
        assert vec[i] == pytest.approx(smooth_count(zeta, float(t)), rel=1e-14, abs=1e-12)


def test_s_function_reference_point(zeta, table):
    # two-sided fluctuation just past the first ordinate
    assert s_function(table, zeta, 14.2) == pytest.approx(1.0836164525, abs=1e-9)


def test_s_function_stays_modest(zeta, table):
    rng = np.random.default_rng(7)
    ts = rng.uniform(20.0, 74000.0, 60)
    vals = [abs(s_function(table, zeta, float(t))) for t in ts]
    assert max(vals) < 4.0


def test_tail_density_positive_and_decaying_slope(zeta):
    lo = tail_density(zeta, 100.0)
    hi = tail_density(zeta, 10000.0)
    assert lo > 0.0
    assert hi > lo  # density grows like log T
    # near-linear growth of the smooth count: density ~ d/dT smooth
    t = 5000.0
    h = 1e-3
    fd = (smooth_count(zeta, t + h) - smooth_count(zeta, t - h)) / (2.0 * h)
    assert tail_density(zeta, t) == pytest.approx(fd, rel=1e-5)


def test_tail_density_errors(zeta):
    with pytest.raises(ValueError):
        tail_density(zeta, 0.0)
    degree_zero = build_descriptor(
        name="degenerate",
        gamma_factors=[],
        q_scale=1.0,
        polar_order=0,
        real_coefficients=True,
        siegel_zero_count=0,
    )
    with pytest.raises(UnsupportedOperationError):
        tail_density(degree_zero, 10.0)


def test_offline_set_requires_mirror_closure():
    with pytest.raises(TableError):
        OffLineZeroSet([OffLineZero(0.75, 20.0, 1)])
    ok = OffLineZeroSet([OffLineZero(0.75, 20.0, 1), OffLineZero(0.25, 20.0, 1)])
    assert len(ok.zeros) == 2
    centered = OffLineZeroSet([OffLineZero(0.5, 20.0, 2)])
    assert centered.zeros[0].multiplicity == 2


def test_offline_set_validates_strip():
    with pytest.raises(TableError):
        OffLineZeroSet([OffLineZero(1.5, 20.0, 1), OffLineZero(-0.5, 20.0, 1)])
    with pytest.raises(TableError):
        OffLineZeroSet([OffLineZero(0.5, 20.0, 0)])
