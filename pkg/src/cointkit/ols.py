"""Ordinary least squares via a Householder QR decomposition."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy import stats

from .errors import InsufficientObservationsError, InvalidInputError, SingularDesignError

__all__ = ["DesignSpec", "RegressionFit", "fit", "RANK_TOL"]

# |R_ii| below this fraction of max |R_jj| counts as rank deficient
RANK_TOL = 1e-10


@dataclass(frozen=True)
class DesignSpec:
    """Regressor set: named columns, then an optional trend (1..n), then an optional intercept."""

    columns: Sequence[tuple] = ()
    intercept: bool = True
    trend: bool = False

    @property
    def names(self) -> list:
        names = [name for name, _ in self.columns]
        if self.trend:
            names.append("trend")
        if self.intercept:
            names.append("const")
        return names

    @property
    def k(self) -> int:
        return len(self.columns) + int(self.intercept) + int(self.trend)

    def matrix(self, n: int) -> np.ndarray:
        cols = []
        for name, values in self.columns:
            col = np.asarray(values, dtype=float)
            if col.shape != (n,):
                raise InvalidInputError(
                    f"column {name!r} has length {col.size}, expected {n}"
                )
            if not np.all(np.isfinite(col)):
                raise InvalidInputError(f"column {name!r} has non-finite values")
            cols.append(col)
        if self.trend:
            cols.append(np.arange(1.0, n + 1.0))
        if self.intercept:
            cols.append(np.ones(n))
        if not cols:
            raise InvalidInputError("design has no regressors")
        return np.column_stack(cols)


@dataclass(frozen=True)
class RegressionFit:
    names: list
    coefficients: np.ndarray
    standard_errors: np.ndarray
    t_statistics: np.ndarray
    p_values: np.ndarray
    residuals: np.ndarray
    fitted: np.ndarray
    nobs: int
    dof: int
    sigma2: float
    cov: np.ndarray = field(repr=False)

    @property
    def ssr(self) -> float:
        return float(self.residuals @ self.residuals)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(name) from None

    def coef(self, name: str) -> float:
        return float(self.coefficients[self.index(name)])

    def se(self, name: str) -> float:
        return float(self.standard_errors[self.index(name)])

    def tstat(self, name: str) -> float:
        return float(self.t_statistics[self.index(name)])

    def pvalue(self, name: str) -> float:
        return float(self.p_values[self.index(name)])


def fit(y, design: DesignSpec) -> RegressionFit:
    """Regress ``y`` on ``design``.

    The residual variance uses the ``n - k`` divisor, and p-values are two-sided
    Student-t with ``n - k`` degrees of freedom. Raises
    :class:`SingularDesignError` on rank deficiency and
    :class:`InsufficientObservationsError` when ``n <= k``.
    """
    y = np.asarray(y, dtype=float)
    if y.ndim != 1:
        raise InvalidInputError("y must be one-dimensional")
    if not np.all(np.isfinite(y)):
        raise InvalidInputError("y has non-finite values")
    n, k = y.size, design.k
    if n <= k:
        raise InsufficientObservationsError(k + 1, n)
    X = design.matrix(n)

    q, r = np.linalg.qr(X, mode="reduced")
    diag = np.abs(np.diag(r))
    weak = diag <= RANK_TOL * diag.max()
    if weak.any():
        bad = ", ".join(design.names[i] for i in np.flatnonzero(weak))
        raise SingularDesignError(f"design matrix is rank deficient (check {bad})")

    beta = np.linalg.solve(r, q.T @ y)
    fitted = X @ beta
    resid = y - fitted
    dof = n - k
    sigma2 = float(resid @ resid) / dof
    rinv = np.linalg.solve(r, np.eye(k))
    cov = sigma2 * (rinv @ rinv.T)
    se = np.sqrt(np.diag(cov))
    with np.errstate(divide="ignore", invalid="ignore"):
        tvals = np.where(se > 0, beta / se, np.copysign(np.inf, beta))
    pvals = np.clip(2.0 * stats.t.sf(np.abs(tvals), dof), 0.0, 1.0)

    return RegressionFit(
        names=design.names,
        coefficients=beta,
        standard_errors=se,
        t_statistics=tvals,
        p_values=pvals,
        residuals=resid,
        fitted=fitted,
        nobs=n,
        dof=dof,
        sigma2=sigma2,
        cov=cov,
    )
