"""Exponential growth model for the three series.

Each series is assumed to follow x(t) = c * exp(b t); taking logs gives
ln x = C + b t with C = ln c, fitted by one simple regression per column.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dataset import SeriesTable, time_index
from .regression import OlsFit, ols_fit


@dataclass(frozen=True)
class GrowthParams:
    """Fitted growth rates b and log intercepts c for labor, capital, output."""

    b_labor: float
    c_labor: float
    b_capital: float
    c_capital: float
    b_output: float
    c_output: float

    def __post_init__(self) -> None:
        for name in ("b_labor", "c_labor", "b_capital", "c_capital", "b_output", "c_output"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")

    @property
    def rates(self) -> tuple[float, float, float]:
        """(b_labor, b_capital, b_output) in the model's canonical order."""
        return (self.b_labor, self.b_capital, self.b_output)

    @property
    def ordering_ok(self) -> bool:
        """Whether capital outgrows output, which outgrows labor (strictly)."""
        return self.b_capital > self.b_output > self.b_labor


@dataclass(frozen=True)
class GrowthFit:
    """GrowthParams plus the per-series regression diagnostics."""

    params: GrowthParams
    labor: OlsFit
    capital: OlsFit
    output: OlsFit

    @property
    def per_series(self) -> dict[str, OlsFit]:
        return {"labor": self.labor, "capital": self.capital, "output": self.output}


@dataclass(frozen=True)
class FittedSeries:
    """Fitted log trajectories and their level-scale counterparts."""

    years: np.ndarray
    ln_labor: np.ndarray
    ln_capital: np.ndarray
    ln_output: np.ndarray

    @property
    def labor(self) -> np.ndarray:
        return np.exp(self.ln_labor)

    @property
    def capital(self) -> np.ndarray:
        return np.exp(self.ln_capital)

    @property
    def output(self) -> np.ndarray:
        return np.exp(self.ln_output)


@dataclass(frozen=True)
class OrderingCheck:
    holds: bool
    violations: tuple[str, ...]


def fit_growth(table: SeriesTable, origin: int = 0) -> GrowthFit:
    """Fit ln x = C + b t independently to labor, capital and output.

    ``origin`` selects the time convention passed to :func:`time_index`;
    slopes do not depend on it, intercepts do.
    """
    t = time_index(table, origin)
    labor = ols_fit(t, table.ln_labor)
    capital = ols_fit(t, table.ln_capital)
    output = ols_fit(t, table.ln_output)
    params = GrowthParams(
        b_labor=labor.slope,
        c_labor=labor.intercept,
        b_capital=capital.slope,
        c_capital=capital.intercept,
        b_output=output.slope,
        c_output=output.intercept,
    )
    return GrowthFit(params, labor, capital, output)


def estimate_series(params: GrowthParams, table: SeriesTable, origin: int = 0) -> FittedSeries:
    """Evaluate the fitted growth curves at the table's own years.

    Returns log-scale estimates ln x(t_j) = C + b t_j; level-scale values
    exp(C + b t_j) are exposed as properties for observed-vs-estimated plots.
    """
    t = time_index(table, origin)
    return FittedSeries(
        years=table.years,
        ln_labor=params.c_labor + params.b_labor * t,
        ln_capital=params.c_capital + params.b_capital * t,
        ln_output=params.c_output + params.b_output * t,
    )


def check_ordering(params: GrowthParams) -> OrderingCheck:
    """Check the strict rate ordering b_capital > b_output > b_labor.

    Both derived elasticities are positive exactly when this ordering (or
    its full reversal) holds, so a violation means the production-function
    exponents lose their economic interpretation.
    """
    violations = []
    if not params.b_capital > params.b_output:
        violations.append(
            f"b_capital > b_output fails ({params.b_capital:.8g} <= {params.b_output:.8g})"
        )
    if not params.b_output > params.b_labor:
        violations.append(
            f"b_output > b_labor fails ({params.b_output:.8g} <= {params.b_labor:.8g})"
        )
    return OrderingCheck(holds=not violations, violations=tuple(violations))
