"""Monthly dataset ingestion and text rendering of result tables."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
import os
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import ConfigurationError, ContinuityError, DomainError, ParseError, SchemaError
from .series import Month, TimeSeries

__all__ = [
    "COLUMNS",
    "Dataset",
    "load_csv",
    "dataset_to_csv",
    "consistency_check",
    "ConsistencyReport",
    "Cell",
    "Row",
    "Table",
    "render_table",
    "table_from_json",
]

COLUMNS = ("date", "encounters", "oil_income", "oil_price", "oil_production")
SERIES_COLUMNS = COLUMNS[1:]


@dataclass(frozen=True)
class Dataset:
    start: Month
    data: dict = field(repr=False)

    def __post_init__(self):
        lengths = {len(v) for v in self.data.values()}
        if len(lengths) != 1:
            raise SchemaError("all series must have the same length")
        frozen = {}
        for name in SERIES_COLUMNS:
            arr = np.array(self.data[name], dtype=float)
            arr.flags.writeable = False
            frozen[name] = arr
        object.__setattr__(self, "data", frozen)

    @property
    def T(self) -> int:
        return len(self.data["encounters"])

    def __len__(self) -> int:
        return self.T

    @property
    def months(self) -> list:
        return [self.start.shift(i) for i in range(self.T)]

    def series(self, name: str) -> TimeSeries:
        if name not in self.data:
            raise SchemaError(f"unknown column {name!r}; available: {', '.join(SERIES_COLUMNS)}", column=name)
        return TimeSeries(name, self.data[name], self.start)

    def __getitem__(self, name: str) -> TimeSeries:
        return self.series(name)

    @property
    def hash(self) -> str:
        return hashlib.sha256(dataset_to_csv(self).encode()).hexdigest()


def _open_text(source):
    if isinstance(source, (str, os.PathLike)):
        with open(source, newline="", encoding="utf-8-sig") as fh:
            return fh.read()
    if isinstance(source, (bytes, bytearray)):
        return bytes(source).decode("utf-8-sig")
    raw = source.read()
    return raw.decode("utf-8-sig") if isinstance(raw, bytes) else raw


def load_csv(source, column_map: Optional[dict] = None) -> Dataset:
    """Read ``date,encounters,oil_income,oil_price,oil_production`` (dates ``YYYY-MM``).

    ``source`` is a path, bytes, or a readable file object. ``column_map``
    maps canonical column names to the headers actually used in the file.
    Rows are sorted chronologically; gaps, duplicates, unparseable cells and
    nonpositive values raise with their location.
    """
    column_map = dict(column_map or {})
    unknown = set(column_map) - set(COLUMNS)
    if unknown:
        raise ConfigurationError(f"column map has unknown canonical names: {sorted(unknown)}")
    header_for = {c: column_map.get(c, c) for c in COLUMNS}

    reader = csv.DictReader(io.StringIO(_open_text(source)))
    fields = [f.strip() for f in (reader.fieldnames or [])]
    reader.fieldnames = fields
    for canon, header in header_for.items():
        if header not in fields:
            raise SchemaError(f"missing column {header!r}", column=header)

    records = []
    for lineno, rec in enumerate(reader, start=2):
        date_text = (rec.get(header_for["date"]) or "").strip()
        try:
            month = Month.parse(date_text)
        except ValueError as exc:
            raise ParseError(f"line {lineno}, column {header_for['date']!r}: {exc}", row=lineno, column="date") from None
        values = {}
        for canon in SERIES_COLUMNS:
            header = header_for[canon]
            cell = (rec.get(header) or "").strip()
            try:
                v = float(cell)
            except ValueError:
                raise ParseError(
                    f"line {lineno}, column {header!r}: cannot parse {cell!r} as a number",
                    row=lineno,
                    column=canon,
                ) from None
            if not math.isfinite(v):
                raise ParseError(f"line {lineno}, column {header!r}: non-finite value", row=lineno, column=canon)
            if v <= 0:
                raise DomainError(f"line {lineno}, column {header!r}: value {v!r} is not positive")
            values[canon] = v
        records.append((month, lineno, values))

    if not records:
        raise SchemaError("no data rows")
    records.sort(key=lambda r: r[0])
    for (m0, _, _), (m1, line1, _) in zip(records, records[1:]):
        if m1 == m0:
            raise ContinuityError(f"duplicate month {m1} (line {line1})", row=line1, column="date")
        if m1 != m0.shift(1):
            missing = m0.shift(1)
            raise ContinuityError(f"gap in months: {missing} is missing between {m0} and {m1}", row=line1, column="date")

    data = {c: [r[2][c] for r in records] for c in SERIES_COLUMNS}
    return Dataset(start=records[0][0], data=data)


def dataset_to_csv(d: Dataset) -> str:
    """Canonical CSV rendering; ``repr`` floats so :func:`load_csv` recovers them exactly."""
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(COLUMNS)
    for i, m in enumerate(d.months):
        w.writerow([str(m)] + [repr(float(d.data[c][i])) for c in SERIES_COLUMNS])
    return out.getvalue()


@dataclass(frozen=True)
class ConsistencyReport:
    tolerance: float
    flagged: list  # (month, relative deviation) pairs
    ratios: np.ndarray = field(repr=False)

    @property
    def common_ratio(self) -> float:
        """Median of income / (price * production)."""
        return float(np.median(self.ratios))

    @property
    def ratio_spread(self) -> float:
        r = self.ratios
        return float((r.max() - r.min()) / abs(np.median(r)))


def consistency_check(d: Dataset, tolerance: float = 1e-6) -> ConsistencyReport:
    """Flag rows where income differs from price times production by more than ``tolerance`` (relative)."""
    income = d.data["oil_income"]
    product = d.data["oil_price"] * d.data["oil_production"]
    rel = np.abs(income - product) / income
    flagged = [(m, float(r)) for m, r in zip(d.months, rel) if r > tolerance]
    return ConsistencyReport(tolerance=tolerance, flagged=flagged, ratios=income / product)


# ---------------------------------------------------------------------------
# tables


@dataclass
class Cell:
    value: Optional[float] = None
    stars: str = ""
    nobs: Optional[int] = None


@dataclass
class Row:
    label: str
    cells: list
    fmt: str = ".2f"


@dataclass
class Table:
    table_id: str
    title: str = ""
    columns: list = field(default_factory=list)
    rows: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def row(self, label: str) -> Row:
        for r in self.rows:
            if r.label == label:
                return r
        raise KeyError(label)


def _fmt_cell(cell: Cell, fmt: str) -> str:
    if cell.value is None:
        return ""
    if isinstance(cell.value, float) and not math.isfinite(cell.value):
        return "n/a"
    if fmt == "d":
        text = str(int(cell.value))
    else:
        text = format(cell.value, fmt)
    if text.startswith("-") and all(ch in "-0.%" for ch in text):
        text = text[1:]  # no negative zero
    return text + cell.stars


def _split(label: str):
    group, sep, rest = label.partition(" / ")
    return (group, rest) if sep else ("", label)


def _markdown(table: Table) -> str:
    lines = []
    if table.title:
        lines += [f"**{table.title}**", ""]
    lines.append("| " + " | ".join(["", ""] + list(table.columns)) + " |")
    lines.append("|" + "|".join(["---", "---"] + ["---:"] * len(table.columns)) + "|")
    prev_group = None
    for row in table.rows:
        group, label = _split(row.label)
        shown = group if group != prev_group else ""
        prev_group = group
        cells = [_fmt_cell(c, row.fmt) for c in row.cells]
        lines.append("| " + " | ".join([shown, label] + cells) + " |")
    notes = table.meta.get("notes")
    if notes:
        lines += ["", notes]
    return "\n".join(lines) + "\n"


def _csv(table: Table) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["group", "label"] + list(table.columns))
    for row in table.rows:
        w.writerow(list(_split(row.label)) + [_fmt_cell(c, row.fmt) for c in row.cells])
    return out.getvalue()


def _jsonable(v):
    if isinstance(v, (np.floating, float)):
        v = float(v)
        return v if math.isfinite(v) else None
    if isinstance(v, (np.integer,)):
        return int(v)
    return v


def _to_json(table: Table) -> str:
    meta = {"title": table.title, "columns": list(table.columns)}
    meta.update(table.meta)
    doc = {
        "table_id": table.table_id,
        "rows": [
            {
                "label": r.label,
                "fmt": r.fmt,
                "cells": [
                    {"value": _jsonable(c.value), "stars": c.stars, "nobs": c.nobs} for c in r.cells
                ],
            }
            for r in table.rows
        ],
        "meta": meta,
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def table_from_json(text: str) -> Table:
    doc = json.loads(text)
    meta = dict(doc.get("meta", {}))
    title = meta.pop("title", "")
    columns = meta.pop("columns", [])
    rows = [
        Row(
            label=r["label"],
            fmt=r.get("fmt", ".2f"),
            cells=[Cell(c.get("value"), c.get("stars", ""), c.get("nobs")) for c in r["cells"]],
        )
        for r in doc.get("rows", [])
    ]
    return Table(table_id=doc["table_id"], title=title, columns=columns, rows=rows, meta=meta)


_RENDERERS = {"markdown": _markdown, "csv": _csv, "json": _to_json}


def render_table(table: Table, fmt: str = "markdown") -> str:
    try:
        return _RENDERERS[fmt](table)
    except KeyError:
        raise ConfigurationError(f"unsupported format {fmt!r}; use markdown, csv or json") from None
