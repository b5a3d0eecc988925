"""Command-line interface: ``cointkit simulate | test | replicate``.

Exit status: 0 success, 1 test-level failure (degenerate regression, too few
observations, ``--check`` mismatch), 2 usage or configuration error.
Tables and CSV/JSON go to stdout; everything else to stderr.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import os
import sys

from . import plotting
from .cointegration import Variant, engle_granger
from .critvals import stars
from .dataio import Cell, Row, Table, load_csv, render_table
from .diagnostics import bartlett_test
from .errors import (
    CointkitError,
    ConfigurationError,
    DataFormatError,
    InsufficientObservationsError,
    SingularDesignError,
)
from .montecarlo import McConfig, proposition1_sweep, run_experiment
from .replication import ARCHIVE_ID, TABLE_IDS, build_table, check_table, table_1, table_sweep
from .series import first_difference, log_transform, seasonal_difference

DATA_ENV = "COINTKIT_DATA"


class _UsageError(Exception):
    pass


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _nonneg_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def _sample_size(text):
    v = _positive_int(text)
    if v < 10:
        raise argparse.ArgumentTypeError(f"T must be >= 10, got {v}")
    return v


def _seed(text):
    v = _nonneg_int(text)
    if v >= 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return v


def _level(text):
    t = text.strip().rstrip("%")
    try:
        v = float(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad significance level {text!r}")
    if v >= 1:
        v /= 100.0
    for lv in (0.01, 0.05, 0.10):
        if abs(v - lv) < 1e-9:
            return lv
    raise argparse.ArgumentTypeError("level must be 1%, 5% or 10%")


def _t_list(text):
    try:
        values = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values or min(values) < 10:
        raise argparse.ArgumentTypeError("every T in --sweep must be >= 10")
    return values


def _mapping(items):
    out = {}
    for item in items or ():
        canon, sep, header = item.partition("=")
        if not sep:
            raise _UsageError(f"--map expects CANONICAL=HEADER, got {item!r}")
        out[canon.strip()] = header.strip()
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cointkit", description="Unit-root and cointegration testing toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("markdown", "csv", "json"), default="markdown")

    data = argparse.ArgumentParser(add_help=False)
    data.add_argument("--data", default=os.environ.get(DATA_ENV), help=f"CSV dataset (default: ${DATA_ENV})")
    data.add_argument("--map", action="append", metavar="CANONICAL=HEADER", help="column-name mapping")

    s = sub.add_parser("simulate", parents=[fmt], help="Monte Carlo study on independent random walks")
    s.add_argument("--reps", type=_positive_int, default=1000)
    s.add_argument("--T", type=_sample_size, default=48)
    s.add_argument("--seed", type=_seed, default=0)
    s.add_argument("--level", type=_level, default=0.05)
    s.add_argument("--workers", type=_positive_int, default=1)
    s.add_argument("--hist-out", metavar="PATH", help="write histogram CSV")
    s.add_argument("--fig-out", metavar="PATH", help="write histogram (or sweep) figure")
    s.add_argument("--sweep", type=_t_list, metavar="T1,T2,...", help="run one experiment per sample size")

    t = sub.add_parser("test", parents=[fmt, data], help="Engle-Granger test on two dataset columns")
    t.add_argument("--y", required=True)
    t.add_argument("--x", required=True)
    t.add_argument("--log", action="store_true")
    t.add_argument("--diff", choices=("none", "first", "seasonal12"), default="none")
    t.add_argument("--lags", type=_nonneg_int, default=0)
    t.add_argument("--trend", action="store_true")
    t.add_argument("--fig-out", metavar="PATH", help="write cumulative periodogram of test residuals")

    r = sub.add_parser("replicate", parents=[fmt, data], help="rebuild one of the published tables")
    r.add_argument("--table", choices=TABLE_IDS, required=True)
    r.add_argument("--seed", type=_seed, default=0)
    r.add_argument("--reps", type=_positive_int, default=1000)
    r.add_argument("--workers", type=_positive_int, default=1)
    r.add_argument("--check", action="store_true", help="compare with published values; exit 1 on mismatch")
    r.add_argument("--fig-out", metavar="PATH", help="table 1 only: write histogram figure")
    return p


def _load(args):
    if not args.data:
        raise _UsageError(
            f"--data is required (or set ${DATA_ENV}); the replication dataset is archived at {ARCHIVE_ID}"
        )
    try:
        return load_csv(args.data, _mapping(args.map))
    except OSError as exc:
        raise _UsageError(
            f"cannot read {args.data}: {exc.strerror or exc}; the replication dataset is archived at {ARCHIVE_ID}"
        ) from exc
    except CointkitError as exc:
        raise _UsageError(f"cannot load {args.data}: {exc}") from exc


def _write_histogram(summary, path):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["bin_lo", "bin_hi", "count_levels", "count_diffs"])
        for lo, hi, a, b in summary.histogram_rows():
            w.writerow([f"{lo:g}", f"{hi:g}", a, b])


def cmd_simulate(args, out, err) -> int:
    if args.sweep:
        if args.hist_out:
            raise _UsageError("--hist-out applies to a single experiment, not --sweep")
        summaries = proposition1_sweep(args.sweep, args.reps, args.seed, args.level, args.workers)
        out.write(render_table(table_sweep(summaries), args.format))
        if args.fig_out:
            plotting.sweep(summaries, args.fig_out)
            err.write(f"wrote {args.fig_out}\n")
        return 0
    cfg = McConfig(replications=args.reps, T=args.T, seed=args.seed, level=args.level, workers=args.workers)
    summary = run_experiment(cfg)
    out.write(render_table(table_1(summary), args.format))
    if args.hist_out:
        _write_histogram(summary, args.hist_out)
        err.write(f"wrote {args.hist_out}\n")
    if args.fig_out:
        plotting.mc_histogram(summary, args.fig_out)
        err.write(f"wrote {args.fig_out}\n")
    return 0


def _transform(s, args):
    if args.log:
        s = log_transform(s)
    if args.diff == "first":
        s = first_difference(s)
    elif args.diff == "seasonal12":
        s = seasonal_difference(s, 12)
    return s


def _report_table(rep, bart) -> Table:
    fs = rep.first_stage
    x = fs.names[0]
    cvs = rep.critical_values
    stage1 = f"First stage ({rep.y_name} on {rep.x_name})"
    stage2 = "Second stage (residual unit root)"
    rows = [
        Row(f"{stage1} / Coefficient", [Cell(fs.coef(x), nobs=fs.nobs)], ".3f"),
        Row(f"{stage1} / Standard error", [Cell(fs.se(x))], ".3f"),
        Row(f"{stage1} / P-value", [Cell(fs.pvalue(x))], ".3f"),
    ]
    if "const" in fs.names:
        rows.append(Row(f"{stage1} / Intercept", [Cell(fs.coef("const"))], ".3f"))
    rows += [
        Row(f"{stage2} / Test statistic", [Cell(rep.statistic, stars(rep.grade), rep.nobs)], ".3f"),
        Row(f"{stage2} / Number of observations", [Cell(rep.nobs)], "d"),
        Row(f"{stage2} / 1% critical value", [Cell(cvs[0.01])], ".3f"),
        Row(f"{stage2} / 5% critical value", [Cell(cvs[0.05])], ".3f"),
        Row(f"{stage2} / 10% critical value", [Cell(cvs[0.10])], ".3f"),
        Row(f"{stage2} / Bartlett white noise statistic", [Cell(bart.statistic, stars(bart.grade), bart.n)]),
        Row(f"{stage2} / Bartlett p-value", [Cell(bart.p_value)], ".3f"),
    ]
    return Table(
        table_id="test",
        title=f"Engle-Granger test ({rep.variant.value}, {rep.transform}, lags={rep.second_stage.config.lags}"
        + (", trend" if rep.trend else "")
        + ")",
        columns=["Value"],
        rows=rows,
    )


def cmd_test(args, out, err) -> int:
    d = _load(args)
    y, x = _transform(d.series(args.y), args), _transform(d.series(args.x), args)
    rep = engle_granger(
        y,
        x,
        args.lags,
        args.trend,
        transform="log" if args.log else "raw",
        variant=Variant.FIRST_DIFFERENCES if args.diff == "first" else Variant.LEVELS,
    )
    bart = bartlett_test(rep.test_residuals)
    table = _report_table(rep, bart)
    table.meta["dataset_hash"] = d.hash
    out.write(render_table(table, args.format))
    if args.fig_out:
        plotting.cumulative_periodogram(bart, args.fig_out)
        err.write(f"wrote {args.fig_out}\n")
    return 0


def cmd_replicate(args, out, err) -> int:
    if args.table == "1":
        cfg = McConfig(replications=args.reps, seed=args.seed, workers=args.workers)
        summary = run_experiment(cfg)
        table = table_1(summary)
        if args.fig_out:
            plotting.mc_histogram(summary, args.fig_out)
            err.write(f"wrote {args.fig_out}\n")
    else:
        if args.fig_out:
            raise _UsageError("--fig-out is only available for table 1")
        table = build_table(args.table, _load(args))
    out.write(render_table(table, args.format))
    if not args.check:
        return 0
    results = check_table(table)
    for res in results:
        err.write(res.line() + "\n")
    failed = sum(not r.ok for r in results)
    err.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return 1 if failed else 0


_COMMANDS = {"simulate": cmd_simulate, "test": cmd_test, "replicate": cmd_replicate}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args, out, err)
    except (_UsageError, ConfigurationError, DataFormatError, OSError) as exc:
        err.write(f"cointkit {args.command}: error: {exc}\n")
        return 2
    except (SingularDesignError, InsufficientObservationsError) as exc:
        err.write(f"cointkit {args.command}: degenerate test: {exc}\n")
        return 1
    except CointkitError as exc:
        err.write(f"cointkit {args.command}: {exc}\n")
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
