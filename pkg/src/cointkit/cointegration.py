"""Engle-Granger residual-based cointegration test and its first-difference misuse."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import ols
from .critvals import LEVELS, Deterministic
from .errors import InsufficientObservationsError, InvalidInputError
from .series import TimeSeries, first_difference
from .unitroot import UnitRootConfig, UnitRootReport, df_test

__all__ = ["Variant", "CointegrationReport", "engle_granger", "bahar_hausmann"]


class Variant(str, Enum):
    LEVELS = "levels"
    FIRST_DIFFERENCES = "first-differences"


@dataclass(frozen=True)
class CointegrationReport:
    y_name: str
    x_name: str
    first_stage: ols.RegressionFit = field(repr=False)
    second_stage: UnitRootReport = field(repr=False)
    decision: dict
    variant: Variant = Variant.LEVELS
    transform: str = "raw"
    trend: bool = False

    @property
    def statistic(self) -> float:
        return self.second_stage.statistic

    @property
    def nobs(self) -> int:
        return self.second_stage.nobs

    @property
    def grade(self):
        return self.second_stage.grade

    @property
    def critical_values(self) -> dict:
        return self.second_stage.critical_values

    @property
    def residuals(self) -> np.ndarray:
        """Cointegrating-regression residuals (the series tested for a unit root)."""
        return self.first_stage.residuals

    @property
    def test_residuals(self) -> np.ndarray:
        """Residuals of the second-stage unit-root regression."""
        return self.second_stage.regression.residuals


def _as_series(s, name):
    return s if isinstance(s, TimeSeries) else TimeSeries(name, np.asarray(s, dtype=float))


def engle_granger(
    y,
    x,
    lags: int = 0,
    trend: bool = False,
    *,
    intercept: bool = True,
    transform: str = "raw",
    variant: Variant = Variant.LEVELS,
) -> CointegrationReport:
    """Two-step Engle-Granger test of the null of no cointegration.

    Stage one regresses ``y`` on ``x`` (plus intercept, plus a linear trend
    when ``trend``); stage two runs a Dickey-Fuller regression with ``lags``
    augmentation terms and no deterministic terms on the stage-one residuals.
    Critical values come from the two-variable MacKinnon table (constant, or
    constant and trend), evaluated at the stage-one sample size.
    """
    y, x = _as_series(y, "y"), _as_series(x, "x")
    if len(y) != len(x):
        raise InvalidInputError(f"length mismatch: {y.name} has {len(y)}, {x.name} has {len(x)}")
    design = ols.DesignSpec(columns=[(x.name, x.values)], intercept=intercept, trend=trend)
    stage1 = ols.fit(y.values, design)
    stage2 = df_test(
        stage1.residuals,
        UnitRootConfig(lags=lags, deterministic=Deterministic.NONE),
        n_variables=2,
        cv_deterministic=Deterministic.CONSTANT_TREND if trend else Deterministic.CONSTANT,
        cv_T=stage1.nobs,
    )
    return CointegrationReport(
        y_name=y.name,
        x_name=x.name,
        first_stage=stage1,
        second_stage=stage2,
        decision={lv: bool(stage2.statistic < stage2.critical_values[lv]) for lv in LEVELS},
        variant=Variant(variant),
        transform=transform,
        trend=trend,
    )


def bahar_hausmann(y, x, *, transform: str = "raw") -> CointegrationReport:
    """Engle-Granger applied to first differences (no lags, no trend).

    This is a misspecified test: differences of I(1) series are stationary, so
    it rejects no-cointegration with probability tending to one.
    """
    y, x = _as_series(y, "y"), _as_series(x, "x")
    if min(len(y), len(x)) < 4:
        raise InsufficientObservationsError(4, min(len(y), len(x)), what="first-difference test")
    return engle_granger(
        first_difference(y),
        first_difference(x),
        0,
        False,
        transform=transform,
        variant=Variant.FIRST_DIFFERENCES,
    )
