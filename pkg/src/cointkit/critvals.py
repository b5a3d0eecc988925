"""MacKinnon response-surface critical values and significance grading."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

from .errors import ConfigurationError, UnsupportedSampleError

__all__ = [
    "Deterministic",
    "ResponseSurface",
    "TestContext",
    "LEVELS",
    "MIN_T",
    "critical_value",
    "critical_values",
    "grade",
    "stars",
]


class Deterministic(str, Enum):
    NONE = "n"
    CONSTANT = "c"
    CONSTANT_TREND = "ct"


LEVELS = (0.01, 0.05, 0.10)
MIN_T = 20


@dataclass(frozen=True)
class ResponseSurface:
    beta_inf: float
    beta_1: float
    beta_2: float
    beta_3: float = 0.0

    def __call__(self, T: float) -> float:
        if math.isinf(T):
            return self.beta_inf
        return self.beta_inf + self.beta_1 / T + self.beta_2 / T**2 + self.beta_3 / T**3


# MacKinnon, J. G. (2010), "Critical Values for Cointegration Tests",
# Queen's Economics Department Working Paper No. 1227, Table 1.
# Keyed by (N, case, level); N = number of I(1) variables in the test.
_TABLE = {
    (1, "n", 0.01): ResponseSurface(-2.56574, -2.2358, -3.627),
    (1, "n", 0.05): ResponseSurface(-1.94100, -0.2686, -3.365, 31.223),
    (1, "n", 0.10): ResponseSurface(-1.61682, 0.2656, -2.714, 25.364),
    (1, "c", 0.01): ResponseSurface(-3.43035, -6.5393, -16.786, -79.433),
    (1, "c", 0.05): ResponseSurface(-2.86154, -2.8903, -4.234, -40.040),
    (1, "c", 0.10): ResponseSurface(-2.56677, -1.5384, -2.809),
    (1, "ct", 0.01): ResponseSurface(-3.95877, -9.0531, -28.428, -134.155),
    (1, "ct", 0.05): ResponseSurface(-3.41049, -4.3904, -9.036, -45.374),
    (1, "ct", 0.10): ResponseSurface(-3.12705, -2.5856, -3.925, -22.380),
    (2, "c", 0.01): ResponseSurface(-3.89644, -10.9519, -33.527),
    (2, "c", 0.05): ResponseSurface(-3.33613, -6.1101, -6.823),
    (2, "c", 0.10): ResponseSurface(-3.04445, -4.2412, -2.720),
    (2, "ct", 0.01): ResponseSurface(-4.32762, -15.4387, -35.679),
    (2, "ct", 0.05): ResponseSurface(-3.78057, -9.5106, -12.074),
    (2, "ct", 0.10): ResponseSurface(-3.49631, -7.0815, -7.538, 21.892),
}


def _coerce_level(level) -> float:
    if isinstance(level, str):
        text = level.strip().rstrip("%")
        level = float(text) / 100.0
    for lv in LEVELS:
        if abs(level - lv) < 1e-12:
            return lv
    raise ConfigurationError(f"unsupported significance level {level!r}; use 1%, 5% or 10%")


@dataclass(frozen=True)
class TestContext:
    """Which response surface to evaluate, and at what sample size.

    ``effective_T`` may be ``math.inf`` to get the asymptotic value.
    """

    __test__ = False  # not a pytest class

    n_variables: int = 1
    deterministic: Deterministic = Deterministic.CONSTANT
    level: float = 0.05
    effective_T: float = math.inf

    def __post_init__(self):
        object.__setattr__(self, "deterministic", Deterministic(self.deterministic))
        object.__setattr__(self, "level", _coerce_level(self.level))

    def at(self, level) -> "TestContext":
        return replace(self, level=level)

    @property
    def surface(self) -> ResponseSurface:
        key = (self.n_variables, self.deterministic.value, self.level)
        try:
            return _TABLE[key]
        except KeyError:
            raise ConfigurationError(
                f"no critical-value table for N={self.n_variables}, "
                f"deterministic={self.deterministic.value!r}"
            ) from None


def critical_value(ctx: TestContext) -> float:
    if ctx.effective_T < MIN_T:
        raise UnsupportedSampleError(
            f"critical values are served for T >= {MIN_T}, got T={ctx.effective_T}"
        )
    return ctx.surface(ctx.effective_T)


def critical_values(ctx: TestContext) -> dict:
    """``{0.01: c1, 0.05: c5, 0.10: c10}`` for the context (its own level ignored)."""
    return {lv: critical_value(ctx.at(lv)) for lv in LEVELS}


def grade(statistic: float, ctx: TestContext):
    """Strongest level at which ``statistic`` rejects (``statistic < C(level)``), else ``None``."""
    cvs = critical_values(ctx)
    for lv in LEVELS:
        if statistic < cvs[lv]:
            return lv
    return None


def stars(level) -> str:
    return {0.01: "***", 0.05: "**", 0.10: "*"}.get(level, "")
