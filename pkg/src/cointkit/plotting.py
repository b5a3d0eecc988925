"""Static figures written next to the tabular reports.

Figures are built on ``matplotlib.figure.Figure`` directly (no pyplot state),
so rendering works headless and repeated calls give identical files.
"""

from __future__ import annotations

import matplotlib as mpl
import numpy as np
from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

__all__ = ["STYLE", "save", "mc_histogram", "cumulative_periodogram", "sweep"]

STYLE = {
    "font.size": 9,
    "axes.labelsize": 9,
    "axes.titlesize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "figure.dpi": 100,
    "savefig.dpi": 150,
    "svg.hashsalt": "cointkit",
}

COLORS = {"levels": "#4c72b0", "first-differences": "#c44e52", "reference": "0.35"}


def _figure(width=6.0, height=3.6):
    fig = Figure(figsize=(width, height))
    FigureCanvasAgg(fig)
    return fig


def save(fig, path):
    # fixed metadata so repeated runs produce identical files
    fmt = str(path).rsplit(".", 1)[-1].lower()
    meta = {
        "png": {"Software": None},
        "svg": {"Creator": None, "Date": None},
        "pdf": {"Creator": None, "Producer": None, "CreationDate": None},
    }.get(fmt)
    with mpl.rc_context(STYLE):
        fig.savefig(path, metadata=meta, bbox_inches="tight")


def mc_histogram(summary, path=None):
    """Overlaid histograms of the levels and first-difference statistics, with each arm's critical value."""
    with mpl.rc_context(STYLE):
        fig = _figure()
        ax = fig.add_subplot()
        edges = summary.hist_edges
        width = np.diff(edges)
        for arm, label in (("levels", "Levels"), ("first-differences", "First differences")):
            ax.bar(
                edges[:-1],
                summary.hist_counts[arm],
                width=width,
                align="edge",
                alpha=0.6,
                color=COLORS[arm],
                edgecolor="white",
                linewidth=0.4,
                label=f"{label} (rejects {summary.arms[arm].rejection_rate:.1%})",
            )
        cv = summary.levels.critical_value
        ax.axvline(cv, color=COLORS["reference"], linestyle="--", linewidth=1)
        ax.annotate(
            f"{summary.config.level:.0%} critical value ({cv:.3f})",
            xy=(cv, ax.get_ylim()[1] * 0.92),
            xytext=(4, 0),
            textcoords="offset points",
            fontsize=8,
        )
        ax.set_xlabel("Engle-Granger test statistic")
        ax.set_ylabel("Replications")
        ax.set_title(f"No cointegration, T={summary.config.T}, {summary.config.replications} replications")
        ax.legend(loc="upper left", frameon=False)
    if path is not None:
        save(fig, path)
    return fig


def cumulative_periodogram(report, path=None, title=None):
    """Normalized cumulative periodogram against the white-noise diagonal and 5% band."""
    q = report.q
    j = np.arange(1, q + 1)
    band = 1.358 / np.sqrt(q)
    with mpl.rc_context(STYLE):
        fig = _figure(4.5, 4.0)
        ax = fig.add_subplot()
        ax.step(j / q, report.cumulative, where="post", color=COLORS["levels"], label="cumulative periodogram")
        ax.plot([0, 1], [0, 1], color=COLORS["reference"], linewidth=0.8)
        for sign in (-1, 1):
            ax.plot([0, 1], [sign * band, 1 + sign * band], color=COLORS["reference"], linestyle=":", linewidth=0.8)
        ax.set_xlim(0, 1)
        ax.set_ylim(0, 1)
        ax.set_xlabel("Fraction of harmonic frequencies")
        ax.set_ylabel("Cumulative share of variance")
        ax.set_title(title or f"Bartlett B = {report.statistic:.2f} (p = {report.p_value:.3f})")
    if path is not None:
        save(fig, path)
    return fig


def sweep(summaries, path=None):
    Ts = [s.config.T for s in summaries]
    with mpl.rc_context(STYLE):
        fig = _figure()
        ax = fig.add_subplot()
        ax.plot(Ts, [s.diffs.mean for s in summaries], "o-", color=COLORS["first-differences"], label="first differences")
        ax.plot(Ts, [s.levels.mean for s in summaries], "s-", color=COLORS["levels"], label="levels")
        ax.plot(Ts, [s.levels.critical_value for s in summaries], "--", color=COLORS["reference"], label="critical value")
        ax.set_xscale("log")
        ax.set_xlabel("Sample size T")
        ax.set_ylabel("Mean test statistic")
        ax.legend(frameon=False)
    if path is not None:
        save(fig, path)
    return fig
