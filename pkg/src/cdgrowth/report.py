"""Full estimation pipeline and report serialization.

Chains the modules end to end: growth-curve fits -> two-Hamiltonian solve ->
elasticities -> first-integral statistics -> TFP -> assembled model, plus the
classic constrained fit as a cross-check.  Reports serialize to a stable JSON
schema or a human-readable text summary.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .dataset import SeriesTable
from .errors import InconsistentSystemError
from .growth import GrowthFit, OrderingCheck, check_ordering, fit_growth
from .hamiltonian import (
    BiHamiltonianSolution,
    Elasticities,
    H3Stats,
    elasticities_from_ab,
    h3_series,
    single_hamiltonian_c,
    solve_ab,
    tfp,
)
from .production import CobbDouglasModel, ConstrainedFit, build_model, constrained_cd_fit
from .regression import OlsFit

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class PipelineReport:
    """Everything one pipeline run produces.

    ``warnings`` is non-empty whenever a structural gate failed: the rate
    ordering needed for positive elasticities, or the single-Hamiltonian
    solvability condition (which measured data is expected to violate).
    """

    growth: GrowthFit
    ordering: OrderingCheck
    solution: BiHamiltonianSolution
    elasticities: Elasticities
    h3: H3Stats
    model: CobbDouglasModel
    crosscheck: ConstrainedFit
    warnings: tuple[str, ...]
    time_origin: int


def run_pipeline(table: SeriesTable, time_origin: int = 0) -> PipelineReport:
    """Run the full estimation chain on a validated series table."""
    growth = fit_growth(table, origin=time_origin)
    b1, b2, b3 = growth.params.rates

    warnings: list[str] = []
    ordering = check_ordering(growth.params)
    if not ordering.holds:
        warnings.append(
            "growth-rate ordering violated: " + "; ".join(ordering.violations)
            + "; derived elasticities are not both positive"
        )
    try:
        single_hamiltonian_c(b1, b2, b3)
    except InconsistentSystemError as exc:
        warnings.append(f"single-Hamiltonian route unavailable: {exc}")

    solution = solve_ab(b1, b2, b3)
    elasticities = elasticities_from_ab(solution)
    h3 = h3_series(table, solution)
    model = build_model(elasticities, tfp(h3.mean, solution))
    crosscheck = constrained_cd_fit(table)

    return PipelineReport(
        growth=growth,
        ordering=ordering,
        solution=solution,
        elasticities=elasticities,
        h3=h3,
        model=model,
        crosscheck=crosscheck,
        warnings=tuple(warnings),
        time_origin=time_origin,
    )


def _sig12(value: float | None) -> float | None:
    # 12 significant digits: enough to carry 10-digit parameter values
    # through JSON exactly, short enough to round-trip byte-identically.
    if value is None:
        return None
    return float(f"{value:.12g}")


def _fit_dict(fit: OlsFit) -> dict:
    return {
        "slope": _sig12(fit.slope),
        "intercept": _sig12(fit.intercept),
        "n": fit.n,
        "sse": _sig12(fit.sse),
        "r_squared": _sig12(fit.r_squared),
        "adjusted_r_squared": _sig12(fit.adjusted_r_squared),
    }


def report_to_dict(report: PipelineReport) -> dict:
    """Plain-dict form of the report with all floats at 12 significant digits."""
    params = report.growth.params
    r1, r2 = (
        report.solution.b * params.b_labor + params.b_capital + report.solution.a * params.b_output,
        params.b_labor + report.solution.a * params.b_capital + report.solution.b * params.b_output,
    )
    return {
        "schema_version": SCHEMA_VERSION,
        "growth": {
            "b_labor": _sig12(params.b_labor),
            "c_labor": _sig12(params.c_labor),
            "b_capital": _sig12(params.b_capital),
            "c_capital": _sig12(params.c_capital),
            "b_output": _sig12(params.b_output),
            "c_output": _sig12(params.c_output),
            "time_origin": report.time_origin,
            "series": {name: _fit_dict(fit) for name, fit in report.growth.per_series.items()},
            "ordering": {
                "holds": report.ordering.holds,
                "violations": list(report.ordering.violations),
            },
        },
        "solution": {
            "a": _sig12(report.solution.a),
            "b": _sig12(report.solution.b),
            "det": _sig12(report.solution.det),
            "a_minus_b": _sig12(report.solution.a_minus_b),
            "conservation_residuals": [_sig12(r1), _sig12(r2)],
        },
        "elasticities": {
            "alpha": _sig12(report.elasticities.alpha),
            "beta": _sig12(report.elasticities.beta),
        },
        "h3": {
            "coefficients": [_sig12(c) for c in report.h3.coefficients],
            "mean": _sig12(report.h3.mean),
            "variance": _sig12(report.h3.variance),
            "variance_population": _sig12(report.h3.variance_population),
            "per_year": [[year, _sig12(value)] for year, value in report.h3.per_year],
        },
        "model": {
            "tfp": _sig12(report.model.tfp),
            "exp_labor": _sig12(report.model.exp_labor),
            "exp_capital": _sig12(report.model.exp_capital),
        },
        "crosscheck": {
            "k": _sig12(report.crosscheck.k),
            "tfp": _sig12(report.crosscheck.tfp),
            "r_squared": _sig12(report.crosscheck.fit.r_squared),
        },
        "warnings": list(report.warnings),
    }


def to_json(report: PipelineReport) -> str:
    """Deterministic JSON serialization; identical runs give identical bytes."""
    return json.dumps(report_to_dict(report), indent=2) + "\n"


def to_text(report: PipelineReport) -> str:
    """Human-readable summary in estimation order."""
    p = report.growth.params
    lines = [
        f"growth model ln x = C + b t  (t origin {report.time_origin})",
    ]
    for name, b, c in [
        ("labor", p.b_labor, p.c_labor),
        ("capital", p.b_capital, p.c_capital),
        ("output", p.b_output, p.c_output),
    ]:
        fit = report.growth.per_series[name]
        adj = "undefined" if fit.adjusted_r_squared is None else f"{fit.adjusted_r_squared:.6f}"
        lines.append(
            f"  {name:<8} b = {b:.10f}   C = {c:.10f}   sse = {fit.sse:.6f}   adj R^2 = {adj}"
        )
    verdict = "holds" if report.ordering.holds else "violated"
    lines.append(f"b_capital > b_output > b_labor: {verdict}")
    s = report.solution
    lines.append(f"two-Hamiltonian solution: a = {s.a:.10f}   b = {s.b:.10f}   det = {s.det:.6e}")
    e = report.elasticities
    lines.append(f"elasticities: alpha = {e.alpha:.10f}   beta = {e.beta:.10f}")
    h = report.h3
    lines.append(
        f"first integral H3: mean = {h.mean:.7f}   sample variance = {h.variance:.7f}"
        f"   population variance = {h.variance_population:.7f}"
    )
    m = report.model
    lines.append(f"total factor productivity: A = {m.tfp:.11f}")
    lines.append(
        f"production function: Y = {m.tfp:.6f} * L^{m.exp_labor:.6f} * K^{m.exp_capital:.6f}"
    )
    c = report.crosscheck
    lines.append(f"constrained cross-check Y = A L^k K^(1-k): k = {c.k:.6f}   A = {c.tfp:.6f}")
    if report.warnings:
        lines.append("warnings:")
        lines.extend(f"  - {w}" for w in report.warnings)
    else:
        lines.append("warnings: none")
    return "\n".join(lines) + "\n"
