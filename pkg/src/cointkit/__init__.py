"""Unit-root and Engle-Granger cointegration tests, with a Monte Carlo harness
showing what goes wrong when the Engle-Granger test is run on first differences."""

from .cointegration import CointegrationReport, Variant, bahar_hausmann, engle_granger
from .critvals import Deterministic, TestContext, critical_value, critical_values, grade
from .dataio import Dataset, consistency_check, load_csv, render_table
from .diagnostics import BartlettReport, bartlett_test
from .errors import *  # noqa: F401,F403
from .montecarlo import McConfig, McSummary, proposition1_sweep, run_experiment, simulate_random_walk_pair
from .ols import DesignSpec, RegressionFit, fit
from .series import (
    Month,
    TimeSeries,
    first_difference,
    iterated_difference,
    log_transform,
    seasonal_difference,
)
from .unitroot import UnitRootConfig, UnitRootReport, df_test

__version__ = "0.1.0"
