import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cointkit.errors import InsufficientObservationsError, SingularDesignError
from cointkit.ols import DesignSpec, fit


def normal_equations(X, y):
    """Brute-force oracle: Gauss-Jordan on X'X b = X'y, in plain Python floats."""
    n, k = len(X), len(X[0])
    a = [[sum(X[t][i] * X[t][j] for t in range(n)) for j in range(k)] + [sum(X[t][i] * y[t] for t in range(n))] for i in range(k)]
    for c in range(k):
        p = max(range(c, k), key=lambda r: abs(a[r][c]))
        a[c], a[p] = a[p], a[c]
        for r in range(k):
            if r != c:
                f = a[r][c] / a[c][c]
                a[r] = [a[r][j] - f * a[c][j] for j in range(k + 1)]
    return [a[i][k] / a[i][i] for i in range(k)]


def random_design(rng):
    n = int(rng.integers(4, 13))
    k = int(rng.integers(1, 4))
    intercept = bool(rng.integers(0, 2)) and k > 1
    trend = bool(rng.integers(0, 2)) and k - intercept > 1
    ncols = k - intercept - trend
    cols = [(f"x{i}", rng.normal(size=n)) for i in range(ncols)]
    spec = DesignSpec(columns=cols, intercept=intercept, trend=trend)
    return spec, rng.normal(size=n), n


def test_exact_fit():
    res = fit([2.0, 4.0, 6.0], DesignSpec([("x", [1.0, 2.0, 3.0])], intercept=False))
    assert res.coef("x") == pytest.approx(2.0)
    np.testing.assert_allclose(res.residuals, 0.0, atol=1e-12)


def test_hand_computed_df_regression():
    # dY on lagged Y for Y = 1,0,1,0,1,0: pairs (1,-1),(0,1),(1,-1),(0,1),(1,-1)
    y = np.array([1.0, 0, 1, 0, 1, 0])
    res = fit(np.diff(y), DesignSpec([("L.y", y[:-1])], intercept=False))
    assert res.coef("L.y") == pytest.approx(-1.0)
    assert res.ssr == pytest.approx(2.0)
    assert res.sigma2 == pytest.approx(0.5)
    assert res.se("L.y") == pytest.approx(np.sqrt(0.5 / 3))
    assert res.tstat("L.y") == pytest.approx(-2.449, abs=1e-3)
    assert res.dof == 4 and res.nobs == 5


def test_matches_normal_equations_oracle():
    rng = np.random.default_rng(2024)
    for _ in range(100):
        spec, y, n = random_design(rng)
        res = fit(y, spec)
        X = spec.matrix(n)
        oracle = normal_equations(X.tolist(), y.tolist())
        np.testing.assert_allclose(res.coefficients, oracle, rtol=0, atol=1e-8)


def test_fit_invariants(rng):
    n = 30
    x = rng.normal(size=n)
    z = rng.normal(size=n)
    y = 1.0 + 2.0 * x - z + rng.normal(size=n)
    spec = DesignSpec([("x", x), ("z", z)], intercept=True, trend=True)
    res = fit(y, spec)
    X = spec.matrix(n)
    scale = np.abs(X).max() * np.abs(y).max() * n
    assert np.all(np.abs(X.T @ res.residuals) <= 1e-8 * scale)
    assert abs(res.residuals.sum()) <= 1e-8 * scale
    np.testing.assert_allclose(res.fitted + res.residuals, y, rtol=1e-10)
    np.testing.assert_allclose(res.t_statistics, res.coefficients / res.standard_errors)
    assert np.all((res.p_values >= 0) & (res.p_values <= 1))
    assert res.sigma2 == pytest.approx(res.ssr / (n - 4))


def test_student_t_pvalues(rng):
    from scipy import stats

    x = rng.normal(size=20)
    y = 0.3 * x + rng.normal(size=20)
    res = fit(y, DesignSpec([("x", x)]))
    assert res.pvalue("x") == pytest.approx(2 * stats.t.sf(abs(res.tstat("x")), 18))


def test_predictions_invariant_to_reparameterization(rng):
    n = 15
    x, z = rng.normal(size=n), rng.normal(size=n)
    y = rng.normal(size=n)
    a = fit(y, DesignSpec([("x", x), ("z", z)]))
    b = fit(y, DesignSpec([("u", x + 3.0 * z), ("v", 2.0 * z - 0.5)]))
    np.testing.assert_allclose(a.fitted, b.fitted, atol=1e-10)


@settings(max_examples=50, deadline=None)
@given(st.floats(0.01, 100.0) | st.floats(-100.0, -0.01), st.integers(0, 2**32 - 1))
def test_scaling_y(c, seed):
    rng = np.random.default_rng(seed)
    x = rng.normal(size=12)
    y = rng.normal(size=12)
    spec = DesignSpec([("x", x)])
    a, b = fit(y, spec), fit(c * y, spec)
    np.testing.assert_allclose(b.coefficients, c * a.coefficients, rtol=1e-8, atol=1e-12)
    np.testing.assert_allclose(b.standard_errors, abs(c) * a.standard_errors, rtol=1e-8)
    np.testing.assert_allclose(b.residuals, c * a.residuals, rtol=1e-8, atol=1e-10)
    np.testing.assert_allclose(b.t_statistics, np.sign(c) * a.t_statistics, rtol=1e-8)


def test_rank_deficient_raises():
    x = np.arange(10.0)
    with pytest.raises(SingularDesignError):
        fit(np.ones(10) + x, DesignSpec([("x", x), ("x2", 2 * x)]))
    with pytest.raises(SingularDesignError):
        fit(np.arange(10.0), DesignSpec([("c", np.full(10, 3.0))], intercept=True))


def test_too_few_observations():
    with pytest.raises(InsufficientObservationsError):
        fit([1.0, 2.0], DesignSpec([("x", [1.0, 3.0])], intercept=True))
