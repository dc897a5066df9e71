"""Assembly and evaluation of the constant-returns Cobb-Douglas model
Y = A * L^exp_labor * K^exp_capital, plus the classic single-exponent
cross-check fit."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dataset import SeriesTable
from .errors import DegeneracyError
from .hamiltonian import Elasticities
from .regression import OlsFit, ols_fit


@dataclass(frozen=True)
class CobbDouglasModel:
    """Total factor productivity plus the two exponents; exponents sum to 1."""

    tfp: float
    exp_labor: float
    exp_capital: float

    def __post_init__(self) -> None:
        if not self.tfp > 0:
            raise ValueError(f"total factor productivity must be positive, got {self.tfp!r}")
        tol = 1e-12 * max(1.0, abs(self.exp_labor), abs(self.exp_capital))
        if not abs(self.exp_labor + self.exp_capital - 1.0) <= tol:
            raise ValueError(
                "exponents must sum to 1 (constant returns to scale), got "
                f"{self.exp_labor + self.exp_capital!r}"
            )


@dataclass(frozen=True)
class ConstrainedFit:
    """Single-exponent fit Y = A * L^k * K^(1-k) and its regression diagnostics."""

    k: float
    tfp: float
    fit: OlsFit


@dataclass(frozen=True)
class ResidualReport:
    """Per-year observed vs predicted log output under a given model."""

    rows: tuple[tuple[int, float, float, float], ...]
    sse: float
    max_abs_residual: float


def build_model(elasticities: Elasticities, tfp: float) -> CobbDouglasModel:
    """Assemble the production function from elasticities and TFP.

    beta goes on labor and alpha on capital: on the reference data
    beta is approximately 3/4, matching the classic benchmark that puts the
    3/4 exponent on labor.
    """
    return CobbDouglasModel(tfp=tfp, exp_labor=elasticities.beta, exp_capital=elasticities.alpha)


def predict_log_output(model: CobbDouglasModel, ln_labor, ln_capital):
    """ln Y = ln A + exp_labor * ln L + exp_capital * ln K (scalar or array)."""
    return math.log(model.tfp) + model.exp_labor * ln_labor + model.exp_capital * ln_capital


def predict_output(model: CobbDouglasModel, labor, capital):
    """Level-scale prediction A * L^exp_labor * K^exp_capital."""
    labor = np.asarray(labor, dtype=float)
    capital = np.asarray(capital, dtype=float)
    if np.any(labor <= 0) or np.any(capital <= 0):
        raise ValueError("labor and capital must be positive")
    result = model.tfp * labor**model.exp_labor * capital**model.exp_capital
    return float(result) if result.ndim == 0 else result


def constrained_cd_fit(table: SeriesTable) -> ConstrainedFit:
    """Classic constrained regression with exponents (k, 1-k).

    Taking logs of Y = A L^k K^(1-k) gives the exact linearization
    ln Y - ln K = ln A + k (ln L - ln K), a simple regression whose slope is
    k and whose exponentiated intercept is A.
    """
    regressor = table.ln_labor - table.ln_capital
    if np.ptp(regressor) == 0:
        raise DegeneracyError(
            "labor and capital are proportional in every year; the exponent k is unidentifiable"
        )
    fit = ols_fit(regressor, table.ln_output - table.ln_capital)
    return ConstrainedFit(k=fit.slope, tfp=math.exp(fit.intercept), fit=fit)


def residual_report(model: CobbDouglasModel, table: SeriesTable) -> ResidualReport:
    """Observed vs predicted log output for every year of the table."""
    predicted = predict_log_output(model, table.ln_labor, table.ln_capital)
    residuals = table.ln_output - predicted
    rows = tuple(
        (int(year), float(obs), float(pred), float(res))
        for year, obs, pred, res in zip(table.years, table.ln_output, predicted, residuals)
    )
    return ResidualReport(
        rows=rows,
        sse=float(residuals @ residuals),
        max_abs_residual=float(np.max(np.abs(residuals))),
    )
