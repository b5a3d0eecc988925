import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cointkit.critvals import (
    LEVELS,
    Deterministic,
    TestContext,
    _TABLE,
    critical_value,
    critical_values,
    grade,
    stars,
)
from cointkit.errors import ConfigurationError, UnsupportedSampleError

ROWS = sorted({(n, case) for n, case, _ in _TABLE})


def ctx(T, level=0.05, n=2, det="c"):
    return TestContext(n_variables=n, deterministic=det, level=level, effective_T=T)


def test_response_surface_oracle():
    # hand evaluation of the embedded coefficients
    assert critical_value(ctx(47)) == pytest.approx(-3.33613 - 6.1101 / 47 - 6.823 / 47**2, abs=1e-12)
    assert critical_value(ctx(47)) == pytest.approx(-3.469, abs=1e-3)
    assert critical_value(ctx(47, 0.01)) == pytest.approx(-4.145, abs=1e-3)
    assert critical_value(ctx(46, 0.01)) == pytest.approx(-4.1504, abs=1e-4)


def test_asymptotic_limit():
    assert critical_value(ctx(math.inf)) == -3.33613
    assert abs(critical_value(ctx(10**6)) - (-3.33613)) < 1e-4


@pytest.mark.parametrize("n, case", ROWS)
def test_rows_ordered_and_monotone(n, case):
    Ts = np.arange(20, 10001)
    curves = [np.array([critical_value(ctx(T, lv, n, case)) for T in Ts[::37]]) for lv in LEVELS]
    assert np.all(curves[0] < curves[1]) and np.all(curves[1] < curves[2])
    for lv in LEVELS:
        vals = np.array([critical_value(ctx(T, lv, n, case)) for T in Ts])
        d = np.diff(vals)
        assert np.all(d >= 0) or np.all(d <= 0)
        assert np.all(vals < 0)


def test_grades_from_published_tables():
    assert grade(-3.54, ctx(47)) == 0.05
    assert grade(-2.72, ctx(47)) is None
    assert grade(-3.34, ctx(47)) == 0.10
    assert grade(0.0, ctx(47)) is None
    assert stars(grade(-4.36, ctx(47, n=1))) == "***"
    assert stars(None) == ""


@given(st.floats(-10, 2), st.floats(-10, 2))
def test_grade_monotone(a, b):
    lo, hi = min(a, b), max(a, b)
    strength = {0.01: 3, 0.05: 2, 0.10: 1, None: 0}
    c = ctx(47)
    assert strength[grade(lo, c)] >= strength[grade(hi, c)]


def test_errors():
    with pytest.raises(UnsupportedSampleError):
        critical_value(ctx(19))
    with pytest.raises(ConfigurationError):
        critical_value(ctx(50, n=3))
    with pytest.raises(ConfigurationError):
        TestContext(level=0.02)
    assert TestContext(level="5%").level == 0.05
    assert set(critical_values(ctx(50))) == set(LEVELS)


def test_matches_statsmodels_table():
    adfvalues = pytest.importorskip("statsmodels.tsa.adfvalues")
    for (n, case, lv), surf in _TABLE.items():
        ref = adfvalues.tau_2010s[case][n - 1][LEVELS.index(lv)]
        np.testing.assert_allclose([surf.beta_inf, surf.beta_1, surf.beta_2, surf.beta_3], ref)
