"""Bartlett cumulative-periodogram test for white noise."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import InsufficientObservationsError, InvalidInputError

__all__ = ["BartlettReport", "bartlett_test", "periodogram", "kolmogorov_sf"]

MIN_N = 8


@dataclass(frozen=True)
class BartlettReport:
    statistic: float
    p_value: float
    n: int
    q: int
    cumulative: np.ndarray = field(repr=False)

    @property
    def grade(self):
        for lv in (0.01, 0.05, 0.10):
            if self.p_value < lv:
                return lv
        return None


def kolmogorov_sf(b: float, tol: float = 1e-17) -> float:
    """``2 * sum_{k>=1} (-1)^(k-1) exp(-2 k^2 b^2)``, clamped to [0, 1].

    Terms after the first are summed until one falls below ``tol``. For ``b < 1`` the
    equivalent form ``1 - sqrt(2 pi)/b * sum exp(-(2k-1)^2 pi^2 / (8 b^2))``
    is used instead; the alternating series converges slowly there.
    """
    if b <= 0:
        return 1.0
    if b < 1.0:
        c = -math.pi**2 / (8.0 * b * b)
        cdf, k = 0.0, 1
        while True:
            term = math.exp(c * (2 * k - 1) ** 2)
            cdf += term
            if term < tol:
                break
            k += 1
        return min(1.0, max(0.0, 1.0 - math.sqrt(2.0 * math.pi) / b * cdf))
    total, k = 0.0, 1
    while True:
        term = math.exp(-2.0 * k * k * b * b)
        if term < tol and k > 1:
            break
        total += term if k % 2 else -term
        k += 1
    return min(1.0, max(0.0, 2.0 * total))


def periodogram(x, q: int) -> np.ndarray:
    """``|sum_t x_t exp(-i w_j t)|^2 / n`` at ``w_j = 2 pi j / n`` for ``j = 1..q``, summed directly."""
    x = np.asarray(x, dtype=float)
    cos, sin = _basis(x.size, q)
    re = cos @ x
    im = sin @ x
    return (re * re + im * im) / x.size


@lru_cache(maxsize=8)
def _basis(n: int, q: int):
    arg = 2.0 * np.pi * np.outer(np.arange(1, q + 1), np.arange(n)) / n
    return np.cos(arg), np.sin(arg)


def bartlett_test(s) -> BartlettReport:
    x = np.asarray(getattr(s, "values", s), dtype=float)
    n = x.size
    if n < MIN_N:
        raise InsufficientObservationsError(MIN_N, n, what="Bartlett test")
    q = (n - 1) // 2
    pgram = periodogram(x - x.mean(), q)
    total = pgram.sum()
    if np.ptp(x) == 0.0 or not total > 0.0:
        raise InvalidInputError("Bartlett test is undefined for a zero-variance series")
    cum = np.cumsum(pgram) / total
    cum[-1] = 1.0
    dev = np.abs(cum - np.arange(1, q + 1) / q)
    b = math.sqrt(q) * float(dev.max())
    return BartlettReport(statistic=b, p_value=kolmogorov_sf(b), n=n, q=q, cumulative=cum)
