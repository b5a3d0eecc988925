"""Dickey-Fuller and augmented Dickey-Fuller tests."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import ols
from .critvals import LEVELS, Deterministic, TestContext, critical_values, grade
from .errors import InsufficientObservationsError, InvalidInputError, UnsupportedSampleError
from .series import TimeSeries

__all__ = ["UnitRootConfig", "UnitRootReport", "df_test", "adf_regression"]


@dataclass(frozen=True)
class UnitRootConfig:
    lags: int = 0
    deterministic: Deterministic = Deterministic.CONSTANT

    def __post_init__(self):
        if int(self.lags) != self.lags or self.lags < 0:
            raise InvalidInputError(f"lags must be a non-negative integer, got {self.lags!r}")
        object.__setattr__(self, "lags", int(self.lags))
        object.__setattr__(self, "deterministic", Deterministic(self.deterministic))

    @property
    def n_deterministic(self) -> int:
        return {"n": 0, "c": 1, "ct": 2}[self.deterministic.value]


@dataclass(frozen=True)
class UnitRootReport:
    statistic: float
    nobs: int
    config: UnitRootConfig
    context: TestContext
    critical_values: dict
    grade: Optional[float]
    regression: ols.RegressionFit = field(repr=False)

    @property
    def rho_minus_one(self) -> float:
        """Estimated coefficient on the lagged level."""
        return self.regression.coef("L.y")

    def rejects(self, level) -> bool:
        return self.statistic < self.critical_values[level]


def adf_regression(y, config: UnitRootConfig) -> ols.RegressionFit:
    """Regress ``dy_t`` on ``y_{t-1}``, ``dy_{t-1..t-lags}`` and the deterministic terms.

    The sample starts at ``t = lags + 2`` so ``nobs = T - 1 - lags``.
    """
    y = np.asarray(y, dtype=float)
    T, p = y.size, config.lags
    k = 1 + p + config.n_deterministic
    n = T - 1 - p
    if n < k + 2:
        raise InsufficientObservationsError(k + 3 + p, T, what=f"(A)DF regression with {p} lags")
    dy = np.diff(y)
    columns = [("L.y", y[p : T - 1])]
    columns += [(f"L{j}.dy", dy[p - j : T - 1 - j]) for j in range(1, p + 1)]
    design = ols.DesignSpec(
        columns=columns,
        intercept=config.deterministic != Deterministic.NONE,
        trend=config.deterministic == Deterministic.CONSTANT_TREND,
    )
    return ols.fit(dy[p:], design)


def df_test(
    s,
    config: UnitRootConfig = UnitRootConfig(),
    *,
    n_variables: int = 1,
    cv_deterministic: Optional[Deterministic] = None,
    cv_T: Optional[int] = None,
) -> UnitRootReport:
    """(Augmented) Dickey-Fuller t-test on the lagged level.

    A statistic close to zero is consistent with a unit root. Critical values
    default to the single-series table for ``config.deterministic`` at the
    regression sample size; residual-based callers override ``n_variables``,
    ``cv_deterministic`` and ``cv_T``.
    """
    values = s.values if isinstance(s, TimeSeries) else s
    reg = adf_regression(values, config)
    stat = reg.tstat("L.y")
    det = config.deterministic if cv_deterministic is None else Deterministic(cv_deterministic)
    if det == Deterministic.NONE and n_variables > 1:
        det = Deterministic.CONSTANT
    ctx = TestContext(
        n_variables=n_variables,
        deterministic=det,
        effective_T=reg.nobs if cv_T is None else cv_T,
    )
    try:
        cvs, grd = critical_values(ctx), grade(stat, ctx)
    except UnsupportedSampleError:
        # too short for the response surface; the statistic is still valid
        cvs, grd = {lv: math.nan for lv in LEVELS}, None
    return UnitRootReport(
        statistic=stat,
        nobs=reg.nobs,
        config=config,
        context=ctx,
        critical_values=cvs,
        grade=grd,
        regression=reg,
    )
