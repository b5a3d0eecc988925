"""Test batteries laid out like the published tables, plus checks against the published values."""

from __future__ import annotations

from dataclasses import dataclass

from . import expected
from .cointegration import bahar_hausmann, engle_granger
from .critvals import Deterministic, stars
from .dataio import Cell, Dataset, Row, Table
from .diagnostics import bartlett_test
from .montecarlo import McConfig, McSummary, run_experiment
from .series import log_transform
from .unitroot import UnitRootConfig, df_test

__all__ = [
    "TABLE_IDS",
    "EG_VARIANTS",
    "DF_VARIANTS",
    "ARCHIVE_ID",
    "table_1",
    "table_sweep",
    "table_a1",
    "eg_table",
    "df_table",
    "build_table",
    "check_table",
    "CheckResult",
]

ARCHIVE_ID = "doi:10.7910/DVN/68B17U"
TABLE_IDS = ("1", "2", "A1", "A2", "A3", "A4")

# label -> (lags, trend in the cointegrating regression)
EG_VARIANTS = {
    "Engle-Granger": (0, False),
    "Aug. Engle-Granger (12 lags)": (12, False),
    "Aug. Engle-Granger (12 lags + trend)": (12, True),
}
# label -> unit-root configuration
DF_VARIANTS = {
    "Dickey-Fuller": UnitRootConfig(0, Deterministic.CONSTANT),
    "ADF (12 lags)": UnitRootConfig(12, Deterministic.CONSTANT),
    "ADF with trend (12 lags)": UnitRootConfig(12, Deterministic.CONSTANT_TREND),
}

_OIL = ("oil_income", "oil_price", "oil_production")
_HEADINGS = {
    "encounters": "Encounters",
    "oil_income": "Income",
    "oil_price": "Price",
    "oil_production": "Production",
}


def _heading(col: str, log: bool) -> str:
    h = _HEADINGS[col]
    return f"Log {h.lower()}" if log else h


def _prepare(d: Dataset, col: str, log: bool):
    s = d.series(col)
    return log_transform(s) if log else s


def table_1(summary: McSummary) -> Table:
    lv, df = summary.levels, summary.diffs
    level = summary.config.level
    return Table(
        table_id="1",
        title="Monte Carlo simulation results under no cointegration",
        columns=["Levels (undifferenced)", "First differences"],
        rows=[
            Row("Test statistic / Mean", [Cell(lv.mean, nobs=lv.n_valid), Cell(df.mean, nobs=df.n_valid)], ".3f"),
            Row("Test statistic / Standard deviation", [Cell(lv.sd), Cell(df.sd)], ".3f"),
            Row("Rejection rate", [Cell(lv.rejection_rate), Cell(df.rejection_rate)], ".1%"),
            Row(f"Critical value ({level:.0%}) / Value", [Cell(lv.critical_value), Cell(df.critical_value)], ".3f"),
            Row(f"Critical value ({level:.0%}) / Evaluated at T", [Cell(lv.effective_T), Cell(df.effective_T)], "d"),
            Row("Degenerate replications", [Cell(lv.n_degenerate), Cell(df.n_degenerate)], "d"),
        ],
        meta={
            "seed": summary.config.seed,
            "replications": summary.config.replications,
            "T": summary.config.T,
        },
    )


def table_sweep(summaries: list) -> Table:
    cols = [f"T={s.config.T}" for s in summaries]
    return Table(
        table_id="sweep",
        title="Rejection of no-cointegration as the sample grows",
        columns=cols,
        rows=[
            Row("First differences / Mean statistic", [Cell(s.diffs.mean) for s in summaries], ".3f"),
            Row("First differences / Rejection rate", [Cell(s.diffs.rejection_rate) for s in summaries], ".1%"),
            Row("Levels / Mean statistic", [Cell(s.levels.mean) for s in summaries], ".3f"),
            Row("Levels / Rejection rate", [Cell(s.levels.rejection_rate) for s in summaries], ".1%"),
        ],
        meta={
            "seed": summaries[0].config.seed if summaries else None,
            "replications": summaries[0].config.replications if summaries else None,
        },
    )


def table_a1(d: Dataset) -> Table:
    rep = bahar_hausmann(d.series("encounters"), d.series("oil_income"))
    fs = rep.first_stage
    x = fs.names[0]
    cv1 = rep.critical_values[0.01]
    return Table(
        table_id="A1",
        title="Engle-Granger test applied to first differences",
        columns=["Coefficient / statistic", "Standard error / 1% critical value", "P-value"],
        rows=[
            Row(
                "First stage (dependent: D.encounters) / D.oil_income",
                [Cell(fs.coef(x), nobs=fs.nobs), Cell(fs.se(x)), Cell(fs.pvalue(x))],
                ".3f",
            ),
            Row(
                "First stage (dependent: D.encounters) / Intercept",
                [Cell(fs.coef("const"), nobs=fs.nobs), Cell(fs.se("const")), Cell(fs.pvalue("const"))],
                ".3f",
            ),
            Row(
                "Second stage (dependent: D.residuals) / Z(t)",
                [Cell(rep.statistic, stars(rep.grade), rep.nobs), Cell(cv1), Cell(None)],
                ".3f",
            ),
        ],
        meta={"dataset_hash": d.hash},
    )


def eg_table(d: Dataset, log: bool) -> Table:
    rows = []
    for label, (lags, trend) in EG_VARIANTS.items():
        stat, nobs, bart = [], [], []
        for col in _OIL:
            rep = engle_granger(
                _prepare(d, "encounters", log),
                _prepare(d, col, log),
                lags,
                trend,
                transform="log" if log else "raw",
            )
            b = bartlett_test(rep.test_residuals)
            stat.append(Cell(rep.statistic, stars(rep.grade), rep.nobs))
            nobs.append(Cell(rep.nobs))
            bart.append(Cell(b.statistic, stars(b.grade), b.n))
        rows += [
            Row(f"{label} / Test statistic", stat),
            Row(f"{label} / Number of observations", nobs, "d"),
            Row(f"{label} / Bartlett white noise statistic", bart),
        ]
    return Table(
        table_id="2" if log else "A2",
        title="Engle-Granger tests for cointegration, " + ("logarithmic transform" if log else "untransformed series"),
        columns=[_heading(c, log) for c in _OIL],
        rows=rows,
        meta={"dataset_hash": d.hash, "dependent": "encounters"},
    )


def df_table(d: Dataset, log: bool) -> Table:
    cols = ("encounters",) + _OIL
    rows = []
    for label, cfg in DF_VARIANTS.items():
        reps = [df_test(_prepare(d, c, log), cfg) for c in cols]
        rows += [
            Row(f"{label} / Test statistic", [Cell(r.statistic, stars(r.grade), r.nobs) for r in reps]),
            Row(f"{label} / Number of observations", [Cell(r.nobs) for r in reps], "d"),
        ]
    return Table(
        table_id="A3" if log else "A4",
        title="Dickey-Fuller and augmented Dickey-Fuller tests, "
        + ("logarithmic transform" if log else "untransformed series"),
        columns=[_heading(c, log) for c in cols],
        rows=rows,
        meta={"dataset_hash": d.hash},
    )


def build_table(table_id: str, d: Dataset = None, *, mc_config: McConfig = None) -> Table:
    if table_id == "1":
        return table_1(run_experiment(mc_config or McConfig()))
    if d is None:
        raise ValueError(f"table {table_id} needs the dataset")
    return {
        "2": lambda: eg_table(d, log=True),
        "A2": lambda: eg_table(d, log=False),
        "A3": lambda: df_table(d, log=True),
        "A4": lambda: df_table(d, log=False),
        "A1": lambda: table_a1(d),
    }[table_id]()


@dataclass(frozen=True)
class CheckResult:
    label: str
    observed: object
    expected: object
    tolerance: float
    ok: bool

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tol = f" ±{self.tolerance:g}" if self.tolerance else ""
        return f"{status}  {self.label}: observed {self.observed}, expected {self.expected}{tol}"


def _close(label, obs, exp, tol):
    return CheckResult(label, round(obs, 4), exp, tol, abs(obs - exp) <= tol + 1e-12)


def _same(label, obs, exp):
    return CheckResult(label, obs, exp, 0, obs == exp)


def check_table(table: Table) -> list:
    """Compare a built table with the published values; one :class:`CheckResult` per cell/property."""
    tid = table.table_id
    out = []
    if tid == "1":
        for c, arm in enumerate(("levels", "first-differences")):
            bands = expected.TABLE_1[arm]
            mean = table.row("Test statistic / Mean").cells[c].value
            sd = table.row("Test statistic / Standard deviation").cells[c].value
            rate = table.row("Rejection rate").cells[c].value
            out.append(_close(f"{arm} mean", mean, *bands["mean"]))
            out.append(_close(f"{arm} sd", sd, *bands["sd"]))
            if "rejection_rate" in bands:
                out.append(_close(f"{arm} rejection rate", rate, *bands["rejection_rate"]))
            else:
                lo = bands["rejection_min"]
                out.append(CheckResult(f"{arm} rejection rate", rate, f">= {lo}", 0, rate >= lo))
        return out
    if tid == "A1":
        tol = expected.TOLERANCE["table_a1"]
        exp = expected.TABLE_A1
        first = table.rows[0].cells
        second = table.row("Second stage (dependent: D.residuals) / Z(t)").cells
        out.append(_close("first stage coefficient", first[0].value, exp["coefficient"], tol))
        out.append(_close("first stage standard error", first[1].value, exp["standard_error"], tol))
        out.append(_close("first stage p-value", first[2].value, exp["p_value"], tol))
        out.append(_close("Z(t)", second[0].value, exp["statistic"], tol))
        out.append(_close("1% critical value", second[1].value, exp["critical_value_1pct"], tol))
        return out

    battery = expected.EXPECTED[tid]
    cols = list(next(iter(battery.values())))
    for variant, per_col in battery.items():
        stat_row = table.row(f"{variant} / Test statistic")
        nobs_row = table.row(f"{variant} / Number of observations")
        for i, col in enumerate(cols):
            exp_cell = per_col[col]
            where = f"{variant} / {col}"
            got = stat_row.cells[i]
            out.append(_close(f"{where} statistic", got.value, exp_cell[0], expected.TOLERANCE["statistic"]))
            out.append(_same(f"{where} stars", got.stars, exp_cell[1]))
            out.append(_same(f"{where} nobs", int(nobs_row.cells[i].value), exp_cell[2]))
            if len(exp_cell) > 3:
                bart = table.row(f"{variant} / Bartlett white noise statistic").cells[i].value
                out.append(_close(f"{where} Bartlett", bart, exp_cell[3], expected.TOLERANCE["bartlett"]))
    return out
