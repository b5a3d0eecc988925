import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cointkit.critvals import Deterministic
from cointkit.errors import InsufficientObservationsError, InvalidInputError
from cointkit.montecarlo import box_muller, replication_streams
from cointkit.ols import DesignSpec, fit
from cointkit.series import TimeSeries
from cointkit.unitroot import UnitRootConfig, df_test

NONE = UnitRootConfig(0, Deterministic.NONE)


def test_hand_example():
    rep = df_test(TimeSeries("y", [1.0, 0, 1, 0, 1, 0]), NONE)
    assert rep.statistic == pytest.approx(-2.449, abs=1e-3)
    assert rep.nobs == 5


def test_identity_with_ols(rng):
    y = np.cumsum(rng.normal(size=40))
    direct = fit(np.diff(y), DesignSpec([("L.y", y[:-1])], intercept=False)).tstat("L.y")
    assert abs(df_test(y, NONE).statistic - direct) <= 1e-12


@pytest.mark.parametrize("T, lags", [(48, 0), (48, 12), (60, 3), (30, 5)])
@pytest.mark.parametrize("det", list(Deterministic))
def test_nobs_accounting(rng, T, lags, det):
    rep = df_test(np.cumsum(rng.normal(size=T)), UnitRootConfig(lags, det))
    assert rep.nobs == T - 1 - lags


def test_augmented_design_layout(rng):
    # lagged differences aligned with the regressand: row t uses dy[t-1..t-p]
    y = np.cumsum(rng.normal(size=13))
    reg = df_test(y, UnitRootConfig(2, Deterministic.CONSTANT)).regression
    dy = np.diff(y)
    X = np.column_stack([y[2:-1], dy[1:-1], dy[:-2], np.ones(10)])
    beta = np.linalg.lstsq(X, dy[2:], rcond=None)[0]
    np.testing.assert_allclose(reg.coefficients, beta, rtol=1e-9)


def test_matches_statsmodels(rng):
    stattools = pytest.importorskip("statsmodels.tsa.stattools")
    y = np.cumsum(rng.normal(size=48))
    for lags, det in [(0, "c"), (12, "c"), (12, "ct"), (4, "n")]:
        ref = stattools.adfuller(y, maxlag=lags, autolag=None, regression=det)
        rep = df_test(y, UnitRootConfig(lags, det))
        assert rep.statistic == pytest.approx(ref[0], abs=1e-9)
        assert rep.nobs == ref[3]


def test_grade_consistent(rng):
    rep = df_test(np.cumsum(rng.normal(size=48)), UnitRootConfig(0, "c"))
    strongest = next((lv for lv in (0.01, 0.05, 0.10) if rep.statistic < rep.critical_values[lv]), None)
    assert rep.grade == strongest
    assert rep.context.effective_T == 47 and rep.context.n_variables == 1


@settings(max_examples=30, deadline=None)
@given(st.floats(0.01, 1000), st.floats(-1e3, 1e3), st.integers(0, 2**32 - 1))
def test_scale_and_shift_invariance(c, shift, seed):
    y = np.cumsum(np.random.default_rng(seed).normal(size=40))
    for det in ("n", "c", "ct"):
        base = df_test(y, UnitRootConfig(2, det)).statistic
        assert df_test(c * y, UnitRootConfig(2, det)).statistic == pytest.approx(base, rel=1e-7, abs=1e-9)
    for det in ("c", "ct"):
        base = df_test(y, UnitRootConfig(2, det)).statistic
        assert df_test(y + shift, UnitRootConfig(2, det)).statistic == pytest.approx(base, rel=1e-6, abs=1e-8)


def test_insufficient_observations():
    with pytest.raises(InsufficientObservationsError) as exc:
        df_test(np.arange(10.0) ** 1.5, UnitRootConfig(8, "c"))
    assert exc.value.required > exc.value.available
    with pytest.raises(InvalidInputError):
        UnitRootConfig(-1)


@pytest.mark.slow
def test_size_on_random_walks():
    stats = []
    for rep in range(1000):
        g, _ = replication_streams(99, rep)
        y = np.cumsum(box_muller(g, 48))
        r = df_test(y, UnitRootConfig(0, "c"))
        stats.append(r.rejects(0.05))
    assert 0.03 <= np.mean(stats) <= 0.08
