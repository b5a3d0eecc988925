"""Published values the replication battery is checked against.

Every cell cites its table coordinates as (table, row block, column).
Statistics are compared at the tolerances in ``TOLERANCE``; observation
counts exactly; significance stars exactly for the unit-root and
Engle-Granger statistics. Bartlett stars are not compared: the published
starring of those values is not monotone in the statistic.
"""

TOLERANCE = {
    "statistic": 0.01,
    "table_a1": 0.005,
    "bartlett": 0.05,
}

# Table 1 acceptance bands: (target, half-width); rejection rates in [0, 1].
TABLE_1 = {
    "levels": {"mean": (-2.078, 0.10), "sd": (0.843, 0.08), "rejection_rate": (0.053, 0.025)},
    "first-differences": {"mean": (-6.956, 0.20), "sd": (1.055, 0.15), "rejection_min": 0.995},
}

# Table A.1: first stage D.encounters on D.oil_income (with intercept), second stage Z(t).
TABLE_A1 = {
    "coefficient": -1.790,  # (A.1, first stage, Coefficient)
    "standard_error": 10.901,  # (A.1, first stage, Standard error)
    "p_value": 0.87,  # (A.1, first stage, P-value)
    "statistic": -7.923,  # (A.1, second stage, Z(t))
    "critical_value_1pct": -4.145,  # (A.1, second stage, 1% critical value)
}

# Engle-Granger batteries: variant -> column -> (statistic, stars, nobs, bartlett)
_EG_LOG = {
    "Engle-Granger": {
        "oil_income": (-2.72, "", 47, 1.18),  # (2, EG, Log income)
        "oil_price": (-2.40, "", 47, 1.35),  # (2, EG, Log price)
        "oil_production": (-2.71, "", 47, 0.75),  # (2, EG, Log production)
    },
    "Aug. Engle-Granger (12 lags)": {
        "oil_income": (-1.83, "", 35, 0.41),  # (2, AEG 12, Log income)
        "oil_price": (-0.92, "", 35, 0.58),  # (2, AEG 12, Log price)
        "oil_production": (-1.46, "", 35, 0.39),  # (2, AEG 12, Log production)
    },
    "Aug. Engle-Granger (12 lags + trend)": {
        "oil_income": (-2.19, "", 35, 0.37),  # (2, AEG 12 + trend, Log income)
        "oil_price": (-2.32, "", 35, 0.36),  # (2, AEG 12 + trend, Log price)
        "oil_production": (-1.63, "", 35, 0.40),  # (2, AEG 12 + trend, Log production)
    },
}

_EG_RAW = {
    "Engle-Granger": {
        "oil_income": (-3.54, "**", 47, 0.76),  # (A.2, EG, Income)
        "oil_price": (-3.34, "*", 47, 0.75),  # (A.2, EG, Price)
        "oil_production": (-3.69, "**", 47, 0.73),  # (A.2, EG, Production)
    },
    "Aug. Engle-Granger (12 lags)": {
        "oil_income": (-1.59, "", 35, 0.35),  # (A.2, AEG 12, Income)
        "oil_price": (-1.40, "", 35, 0.33),  # (A.2, AEG 12, Price)
        "oil_production": (-1.51, "", 35, 0.25),  # (A.2, AEG 12, Production)
    },
    "Aug. Engle-Granger (12 lags + trend)": {
        "oil_income": (-1.90, "", 35, 0.28),  # (A.2, AEG 12 + trend, Income)
        "oil_price": (-1.95, "", 35, 0.30),  # (A.2, AEG 12 + trend, Price)
        "oil_production": (-1.90, "", 35, 0.25),  # (A.2, AEG 12 + trend, Production)
    },
}

# Unit-root batteries: variant -> column -> (statistic, stars, nobs)
_DF_LOG = {
    "Dickey-Fuller": {
        "encounters": (-3.14, "**", 47),  # (A.3, DF, Log encounters)
        "oil_income": (-4.36, "***", 47),  # (A.3, DF, Log income)
        "oil_price": (-3.51, "**", 47),  # (A.3, DF, Log price)
        "oil_production": (-2.85, "*", 47),  # (A.3, DF, Log production)
    },
    "ADF (12 lags)": {
        "encounters": (-1.72, "", 35),  # (A.3, ADF 12, Log encounters)
        "oil_income": (-2.80, "*", 35),  # (A.3, ADF 12, Log income)
        "oil_price": (-1.86, "", 35),  # (A.3, ADF 12, Log price)
        "oil_production": (-0.85, "", 35),  # (A.3, ADF 12, Log production)
    },
    "ADF with trend (12 lags)": {
        "encounters": (-2.12, "", 35),  # (A.3, ADF trend 12, Log encounters)
        "oil_income": (-2.73, "", 35),  # (A.3, ADF trend 12, Log income)
        "oil_price": (-2.06, "", 35),  # (A.3, ADF trend 12, Log price)
        "oil_production": (-3.86, "**", 35),  # (A.3, ADF trend 12, Log production)
    },
}

_DF_RAW = {
    "Dickey-Fuller": {
        "encounters": (-3.26, "**", 47),  # (A.4, DF, Encounters)
        "oil_income": (-2.50, "", 47),  # (A.4, DF, Income)
        "oil_price": (-2.62, "*", 47),  # (A.4, DF, Price)
        "oil_production": (-1.93, "", 47),  # (A.4, DF, Production)
    },
    "ADF (12 lags)": {
        "encounters": (-1.36, "", 35),  # (A.4, ADF 12, Encounters)
        "oil_income": (-2.83, "*", 35),  # (A.4, ADF 12, Income)
        "oil_price": (-1.89, "", 35),  # (A.4, ADF 12, Price)
        "oil_production": (-0.69, "", 35),  # (A.4, ADF 12, Production)
    },
    "ADF with trend (12 lags)": {
        "encounters": (-2.23, "", 35),  # (A.4, ADF trend 12, Encounters)
        "oil_income": (-2.60, "", 35),  # (A.4, ADF trend 12, Income)
        "oil_price": (-1.97, "", 35),  # (A.4, ADF trend 12, Price)
        "oil_production": (-3.14, "", 35),  # (A.4, ADF trend 12, Production)
    },
}

EXPECTED = {"2": _EG_LOG, "A2": _EG_RAW, "A3": _DF_LOG, "A4": _DF_RAW}
