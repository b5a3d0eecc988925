"""Monthly time-series container and the differencing/log transforms applied before testing."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .errors import DomainError, InvalidInputError

__all__ = [
    "Month",
    "TimeSeries",
    "first_difference",
    "seasonal_difference",
    "iterated_difference",
    "log_transform",
]


class Month(NamedTuple):
    year: int
    month: int

    def shift(self, k: int) -> "Month":
        idx = self.year * 12 + (self.month - 1) + k
        return Month(idx // 12, idx % 12 + 1)

    def __str__(self) -> str:
        return f"{self.year:04d}-{self.month:02d}"

    @classmethod
    def parse(cls, text: str) -> "Month":
        """Parse ``YYYY-MM``."""
        parts = text.strip().split("-")
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ValueError(f"expected YYYY-MM, got {text!r}")
        year, month = int(parts[0]), int(parts[1])
        if not 1 <= month <= 12:
            raise ValueError(f"month out of range in {text!r}")
        return cls(year, month)


@dataclass(frozen=True)
class TimeSeries:
    """An immutable, optionally month-indexed sequence of finite observations.

    ``start`` is ``None`` for abstract (unindexed) series such as simulated
    random walks.
    """

    name: str
    values: np.ndarray
    start: Optional[Month] = None

    def __post_init__(self):
        arr = np.array(self.values, dtype=float, copy=True).ravel()
        if arr.size < 1:
            raise InvalidInputError(f"series {self.name!r} is empty")
        bad = np.flatnonzero(~np.isfinite(arr))
        if bad.size:
            raise InvalidInputError(
                f"series {self.name!r} has a non-finite value at index {bad[0]}"
            )
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)
        if self.start is not None and not isinstance(self.start, Month):
            object.__setattr__(self, "start", Month(*self.start))

    def __len__(self) -> int:
        return self.values.size

    def __eq__(self, other):
        if not isinstance(other, TimeSeries):
            return NotImplemented
        return (
            self.name == other.name
            and self.start == other.start
            and np.array_equal(self.values, other.values)
        )

    __hash__ = None

    @property
    def end(self) -> Optional[Month]:
        return None if self.start is None else self.start.shift(len(self) - 1)

    def months(self) -> list:
        if self.start is None:
            return []
        return [self.start.shift(i) for i in range(len(self))]

    def _derived(self, name: str, values, consumed: int) -> "TimeSeries":
        start = None if self.start is None else self.start.shift(consumed)
        return TimeSeries(name, values, start)

    @classmethod
    def from_values(cls, values: Sequence[float], name: str = "x", start=None) -> "TimeSeries":
        return cls(name, np.asarray(values, dtype=float), start)


def first_difference(s: TimeSeries) -> TimeSeries:
    """``out[t] = s[t+1] - s[t]``; the start moves forward one month."""
    if len(s) < 2:
        raise InvalidInputError("first difference needs at least 2 observations")
    return s._derived(f"D.{s.name}", np.diff(s.values), 1)


def seasonal_difference(s: TimeSeries, period: int = 12) -> TimeSeries:
    """Year-over-year style difference ``x_t - x_{t-period}``."""
    if period < 1:
        raise InvalidInputError("period must be a positive integer")
    if len(s) <= period:
        raise InvalidInputError(
            f"seasonal difference with period {period} needs more than {period} observations"
        )
    v = s.values
    return s._derived(f"S{period}.{s.name}", v[period:] - v[:-period], period)


def iterated_difference(s: TimeSeries, order: int) -> TimeSeries:
    """Apply the first difference ``order`` times.

    Not the same thing as ``seasonal_difference(s, order)``: a twelfth
    difference of a period-12 pattern does not vanish.
    """
    if order < 1:
        raise InvalidInputError("order must be a positive integer")
    if len(s) <= order:
        raise InvalidInputError(
            f"difference of order {order} needs more than {order} observations"
        )
    return s._derived(f"D{order}.{s.name}", np.diff(s.values, n=order), order)


def log_transform(s: TimeSeries) -> TimeSeries:
    bad = np.flatnonzero(s.values <= 0)
    if bad.size:
        i = int(bad[0])
        raise DomainError(
            f"log of nonpositive value {s.values[i]!r} at index {i} of {s.name!r}", index=i
        )
    return s._derived(f"ln.{s.name}", np.log(s.values), 0)
