"""Scikit-learn compatible estimator wrapping the full pipeline, so the model
composes with sklearn tooling (clone, pipelines, scoring)."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .dataset import Observation, SeriesTable
from .production import predict_log_output
from .report import run_pipeline


class CobbDouglasGrowthRegressor(BaseEstimator, RegressorMixin):
    """Constant-returns Cobb-Douglas production model fitted from growth structure.

    ``fit`` takes consecutive annual observations: ``X`` of shape (n, 2) with
    columns ``[labor, capital]`` and ``y`` of shape (n,) with output, rows in
    year order.  Growth rates are estimated by per-series log-linear least
    squares; the conserved-quantity construction turns them into elasticities
    and total factor productivity.  ``predict`` evaluates the resulting
    production function on new ``(labor, capital)`` pairs.

    Parameters
    ----------
    values_are_logs : bool, default=False
        When False, inputs are positive index levels and predictions are
        levels.  When True, inputs and predictions are natural logs.
    time_origin : int, default=0
        Time value assigned to the first observation in the growth fits.

    Attributes
    ----------
    growth_ : GrowthParams
        Fitted growth rates and log intercepts.
    solution_ : BiHamiltonianSolution
        Solved conservation-condition pair (a, b).
    elasticities_ : Elasticities
        Output elasticities (alpha on capital, beta on labor).
    model_ : CobbDouglasModel
        The assembled production function used by ``predict``.
    report_ : PipelineReport
        Full pipeline output, including diagnostics and warnings.
    warnings_ : tuple of str
        Structural warnings raised during fitting (e.g. rate-ordering
        violations).
    """

    def __init__(self, values_are_logs: bool = False, time_origin: int = 0):
        self.values_are_logs = values_are_logs
        self.time_origin = time_origin

    def _split_logs(self, X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        if X.shape[1] != 2:
            raise ValueError(f"X must have exactly 2 columns [labor, capital], got {X.shape[1]}")
        labor, capital = X[:, 0], X[:, 1]
        if self.values_are_logs:
            return labor, capital
        if np.any(labor <= 0) or np.any(capital <= 0):
            raise ValueError("labor and capital levels must be positive (or pass logs with values_are_logs=True)")
        return np.log(labor), np.log(capital)

    def fit(self, X, y):
        X = check_array(X, dtype=float, ensure_2d=True)
        y = check_array(y, dtype=float, ensure_2d=False)
        if y.ndim != 1 or y.shape[0] != X.shape[0]:
            raise ValueError("y must be one output value per row of X")
        ln_labor, ln_capital = self._split_logs(X)
        if self.values_are_logs:
            ln_output = y
        else:
            if np.any(y <= 0):
                raise ValueError("output levels must be positive (or pass logs with values_are_logs=True)")
            ln_output = np.log(y)

        table = SeriesTable(
            tuple(
                Observation(year, float(o), float(k), float(l))
                for year, o, k, l in zip(range(X.shape[0]), ln_output, ln_capital, ln_labor)
            )
        )
        report = run_pipeline(table, time_origin=self.time_origin)

        self.report_ = report
        self.growth_ = report.growth.params
        self.solution_ = report.solution
        self.elasticities_ = report.elasticities
        self.h3_ = report.h3
        self.model_ = report.model
        self.warnings_ = report.warnings
        self.n_features_in_ = 2
        return self

    def predict(self, X):
        check_is_fitted(self, "model_")
        X = check_array(X, dtype=float, ensure_2d=True)
        ln_labor, ln_capital = self._split_logs(X)
        ln_output = predict_log_output(self.model_, ln_labor, ln_capital)
        return ln_output if self.values_are_logs else np.exp(ln_output)
