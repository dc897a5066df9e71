"""Cobb-Douglas production functions from exponential growth structure.

Fits per-series exponential growth models by least squares, derives the
production-function elasticities and total factor productivity through the
conserved-quantity construction, verifies the Hamiltonian structure
numerically, and reports goodness of fit.  Ships the classic 1899-1922 US
manufacturing series as a bundled reference dataset.
"""

from .dataset import Observation, SeriesTable, parse_csv, reference_series, time_index
from .errors import DegeneracyError, InconsistentSystemError, InputError
from .estimator import CobbDouglasGrowthRegressor
from .export import export_report
from .growth import (
    FittedSeries,
    GrowthFit,
    GrowthParams,
    OrderingCheck,
    check_ordering,
    estimate_series,
    fit_growth,
)
from .hamiltonian import (
    SKEW_MATRIX,
    BiHamiltonianSolution,
    Elasticities,
    H3Stats,
    HamiltonianCVector,
    conservation_check,
    elasticities_from_ab,
    elasticities_from_rates,
    h3_series,
    hamiltonian_field_check,
    hamiltonian_vector_field,
    single_hamiltonian_c,
    solve_ab,
    tfp,
)
from .production import (
    CobbDouglasModel,
    ConstrainedFit,
    ResidualReport,
    build_model,
    constrained_cd_fit,
    predict_log_output,
    predict_output,
    residual_report,
)
from .report import PipelineReport, report_to_dict, run_pipeline, to_json, to_text

__version__ = "0.1.0"

__all__ = [
    "BiHamiltonianSolution",
    "CobbDouglasGrowthRegressor",
    "CobbDouglasModel",
    "ConstrainedFit",
    "DegeneracyError",
    "Elasticities",
    "FittedSeries",
    "GrowthFit",
    "GrowthParams",
    "H3Stats",
    "HamiltonianCVector",
    "InconsistentSystemError",
    "InputError",
    "Observation",
    "OrderingCheck",
    "PipelineReport",
    "ResidualReport",
    "SKEW_MATRIX",
    "SeriesTable",
    "build_model",
    "check_ordering",
    "conservation_check",
    "constrained_cd_fit",
    "elasticities_from_ab",
    "elasticities_from_rates",
    "estimate_series",
    "export_report",
    "fit_growth",
    "h3_series",
    "hamiltonian_field_check",
    "hamiltonian_vector_field",
    "parse_csv",
    "predict_log_output",
    "predict_output",
    "reference_series",
    "report_to_dict",
    "residual_report",
    "run_pipeline",
    "single_hamiltonian_c",
    "solve_ab",
    "tfp",
    "time_index",
    "to_json",
    "to_text",
]
