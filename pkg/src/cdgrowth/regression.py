"""Closed-form simple linear regression (one regressor plus intercept) with
goodness-of-fit diagnostics.

Everything in scope is a simple regression, so slope and intercept come from
the exact centered-moment formulas; no iterative solver is involved and
repeated runs are bit-identical.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegeneracyError


@dataclass(frozen=True)
class OlsFit:
    """One fitted line and its diagnostics.

    ``r_squared`` / ``adjusted_r_squared`` are None when the response is
    constant: with zero total variance the variance-explained ratio is
    undefined, and None flags that instead of letting NaN propagate.
    """

    slope: float
    intercept: float
    n: int
    residuals: np.ndarray
    sse: float
    r_squared: float | None
    adjusted_r_squared: float | None

    def predicted(self, x) -> np.ndarray:
        return self.intercept + self.slope * np.asarray(x, dtype=float)


def ols_fit(t, y) -> OlsFit:
    """Least-squares fit of ``y = intercept + slope * t``.

    Parameters
    ----------
    t, y : array-like, same length n >= 3
        Regressor and response.  ``t`` must not be constant.

    Returns
    -------
    OlsFit
        slope = sum((t-mean t)(y-mean y)) / sum((t-mean t)^2),
        intercept = mean(y) - slope * mean(t), plus residuals, SSE,
        R^2 = 1 - SSE/SST and the single-regressor adjusted
        R^2 = 1 - (1-R^2)(n-1)/(n-2).

    Raises
    ------
    DegeneracyError
        Constant regressor (zero variance in t).
    ValueError
        Length mismatch or fewer than 3 points.
    """
    t = np.asarray(t, dtype=float)
    y = np.asarray(y, dtype=float)
    if t.ndim != 1 or y.ndim != 1:
        raise ValueError("t and y must be one-dimensional")
    if t.shape != y.shape:
        raise ValueError(f"length mismatch: t has {t.size} points, y has {y.size}")
    n = int(t.size)
    if n < 3:
        raise ValueError(f"need at least 3 points, got {n}")
    if np.ptp(t) == 0:
        raise DegeneracyError("degenerate regressor: t has zero variance")

    t_centered = t - t.mean()
    slope = float(t_centered @ (y - y.mean()) / (t_centered @ t_centered))
    intercept = float(y.mean() - slope * t.mean())
    residuals = y - (intercept + slope * t)
    sse = float(residuals @ residuals)

    if np.ptp(y) == 0:
        r_squared = adjusted = None
    else:
        sst = float(np.sum((y - y.mean()) ** 2))
        r_squared = 1.0 - sse / sst
        adjusted = 1.0 - (1.0 - r_squared) * (n - 1) / (n - 2)

    return OlsFit(slope, intercept, n, residuals, sse, r_squared, adjusted)


def observed_vs_estimated_fit(observed, estimated) -> OlsFit:
    """Regress an observed series on its model estimate.

    A perfect model gives slope 1, intercept 0, R^2 = 1; the adjusted R^2 of
    this regression is the headline goodness-of-fit number for a series.
    """
    return ols_fit(estimated, observed)
